#include "asreg/oracle.hpp"

#include <algorithm>

#include "asreg/errors.hpp"

namespace asreg {

namespace {

ProjPoint pt(int x, int y, int z) { return ProjPoint(FieldElem(x), FieldElem(y), FieldElem(z)); }

// pi(a:b) = (a^2 b : a b^2 : -a^3 - b^3) via the shared normalization map.
ProjPoint nodal_pt(int a, int b) { return nc_parametrize(FieldElem(a), FieldElem(b)); }

Tensor2 tensor_from(const Vec9& v) {
    Tensor2 t;
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) t.at(j, k) = v[static_cast<size_t>(3 * j + k)];
    }
    return t;
}

const FieldElem& require_kappa(const GeometricPair& g) {
    if (!g.kappa || g.kappa->is_zero()) {
        throw InvalidParameters("LineConic2 pair needs a nonzero kappa");
    }
    return *g.kappa;
}

}  // namespace

bool pair_contains(const GeometricPair& g, const ProjPoint& p) {
    switch (g.family) {
        case Family::P2:
            return true;
        case Family::Triangle:
            return (p[0] * p[1] * p[2]).is_zero();
        case Family::LineConic2: {
            const FieldElem& kappa = require_kappa(g);
            return (p[0] * (kappa * p[0] * p[0] - p[1] * p[2])).is_zero();
        }
        case Family::LineConic1:
            return (p[1] * (p[0] * p[0] - p[1] * p[2])).is_zero();
        case Family::ThreeLinesConcurrent:
            return (p[0] * p[1] * (p[0] - p[1])).is_zero();
        case Family::NodalCubic:
            return (p[0].pow(3) + p[1].pow(3) + p[0] * p[1] * p[2]).is_zero();
        case Family::HesseCubic:
            return std::get<AutElem>(g.sigma).curve().contains(p);
    }
    throw InvalidParameters("unknown family");
}

ProjPoint pair_sigma(const GeometricPair& g, const ProjPoint& p) {
    if (const Mat3* m = std::get_if<Mat3>(&g.sigma)) return apply(*m, p);
    if (const AutElem* a = std::get_if<AutElem>(&g.sigma)) {
        return aut_apply(*a, CurvePoint(a->curve(), p)).point();
    }
    if (const TriangleSigma* t = std::get_if<TriangleSigma>(&g.sigma)) {
        FieldElem zero(0);
        if (p[0].is_zero()) return ProjPoint(zero, p[1], t->alpha * p[2]);
        if (p[1].is_zero()) return ProjPoint(t->beta * p[0], zero, p[2]);
        if (p[2].is_zero()) return ProjPoint(p[0], t->gamma * p[1], zero);
        throw InvalidParameters("triangle sigma needs a point with a zero coordinate");
    }
    if (const NodalSigma* s = std::get_if<NodalSigma>(&g.sigma)) {
        return nc_sigma(s->variant, s->param, p);
    }
    const NullvectorSigma& s = std::get<NullvectorSigma>(g.sigma);
    Mat3 m = left_matrix_at(s.relations, p);
    auto v = rank2_nullvector(m);
    if (!v) {
        throw WrongDimension("nullvector sigma undefined at " + p.str() + ": rank " +
                             std::to_string(m.rank()));
    }
    return *v;
}

std::vector<ProjPoint> sample_points(const GeometricPair& g, int n) {
    if (n < 1) throw InvalidParameters("sample count must be >= 1");
    std::vector<ProjPoint> out;
    out.reserve(static_cast<size_t>(n));
    auto push = [&](const ProjPoint& p) {
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        return static_cast<int>(out.size()) >= n;
    };

    switch (g.family) {
        case Family::P2: {
            if (push(pt(1, 0, 0)) || push(pt(0, 1, 0)) || push(pt(0, 0, 1)) || push(pt(1, 1, 1))) {
                return out;
            }
            for (int t = 1;; ++t) {
                if (push(pt(1, t, t * t + 1))) return out;
            }
        }
        case Family::Triangle: {
            for (int t = 2;; t += 3) {
                if (push(pt(0, 1, t)) || push(pt(1, 0, t + 1)) || push(pt(1, t + 2, 0))) {
                    return out;
                }
            }
        }
        case Family::LineConic2: {
            FieldElem kappa = require_kappa(g);
            for (int t = 1;; ++t) {
                FieldElem ft(t);
                if (push(pt(0, 1, t)) ||
                    push(ProjPoint(ft, FieldElem(1), kappa * ft * ft))) {
                    return out;
                }
            }
        }
        case Family::LineConic1: {
            for (int t = 0;; ++t) {
                if (push(pt(1, 0, t)) || push(pt(t + 1, 1, (t + 1) * (t + 1)))) return out;
            }
        }
        case Family::ThreeLinesConcurrent: {
            for (int t = 2;; t += 3) {
                if (push(pt(0, 1, t)) || push(pt(1, 0, t + 1)) || push(pt(1, 1, t + 2))) {
                    return out;
                }
            }
        }
        case Family::NodalCubic: {
            if (push(nodal_pt(1, 1))) return out;
            for (int h = 2;; ++h) {
                if (push(nodal_pt(1, h)) || push(nodal_pt(h, 1))) return out;
            }
        }
        case Family::HesseCubic: {
            const AutElem& a = std::get<AutElem>(g.sigma);
            const HesseCurve& e = a.curve();
            const CurvePoint& seed = a.translation();
            std::vector<ProjPoint> multiples;
            CurvePoint mp = seed;
            while (true) {
                if (std::find(multiples.begin(), multiples.end(), mp.point()) !=
                    multiples.end()) {
                    throw SamplingExhausted("seed generates only " +
                                            std::to_string(out.size()) +
                                            " distinct points, needed " + std::to_string(n));
                }
                multiples.push_back(mp.point());
                for (const ProjPoint& r : torsion3()) {
                    if (push(add(mp, CurvePoint(e, r)).point())) return out;
                }
                mp = add(mp, seed);
            }
        }
    }
    throw InvalidParameters("unknown family");
}

RelationSet g2_relations(const GeometricPair& g, int n) {
    std::vector<ProjPoint> pts = sample_points(g, n);
    std::vector<Vec9> rows;
    rows.reserve(pts.size());
    for (const ProjPoint& p : pts) {
        ProjPoint q = pair_sigma(g, p);
        if (!pair_contains(g, q)) {
            throw NotOnCurve("sigma image " + q.str() + " of " + p.str() +
                             " leaves the variety");
        }
        Vec9 row;
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) row[static_cast<size_t>(3 * j + k)] = p[j] * q[k];
        }
        rows.push_back(row);
    }
    std::vector<Vec9> basis = nullspace(rows);
    if (basis.size() != 3) {
        throw WrongDimension("(G2) relation space has dimension " +
                             std::to_string(basis.size()) + ", expected 3");
    }
    return RelationSet(tensor_from(basis[0]), tensor_from(basis[1]), tensor_from(basis[2]));
}

std::vector<G1Entry> g1_check(const RelationSet& rel, const GeometricPair& g, int n) {
    std::vector<G1Entry> report;
    for (const ProjPoint& p : sample_points(g, n)) {
        ProjPoint q = pair_sigma(g, p);

        std::string bad;
        for (int k = 0; k < 3; ++k) {
            if (!evaluate(rel[k], p, q).is_zero()) {
                if (!bad.empty()) bad += "; ";
                bad += "relation " + std::to_string(k) + " nonzero at (" + p.str() + ", " +
                       q.str() + ")";
            }
        }
        report.push_back({p, "vanishing", bad.empty(), bad});

        Mat3 m = left_matrix_at(rel, p);
        int r = m.rank();
        std::string rank_detail;
        if (r <= 1) {
            rank_detail = "NotG1: rank " + std::to_string(r);
        } else if (r == 3) {
            rank_detail = "rank 3: no point of the scheme over " + p.str();
        }
        report.push_back({p, "rank", r == 2, rank_detail});

        if (r == 2) {
            auto v = rank2_nullvector(m);
            bool ok = v.has_value() && *v == q;
            report.push_back({p, "nullvector", ok,
                              ok ? std::string()
                                 : "kernel " + v->str() + " differs from sigma image " +
                                       q.str()});
        } else {
            report.push_back({p, "nullvector", false, "rank is not 2: kernel not a point"});
        }
    }
    return report;
}

GeometricPair pair_for_row(const TypedAlgebra& t) {
    t.validate();
    auto nullvec = [&]() -> SigmaData { return NullvectorSigma{construct(t)}; };
    switch (t.tag) {
        case AlgebraTag::P1:
        case AlgebraTag::P2:
        case AlgebraTag::P3:
            return {Family::P2, nullvec(), std::nullopt};
        case AlgebraTag::S1:
            return {Family::Triangle, TriangleSigma{t.params[0], t.params[1], t.params[2]},
                    std::nullopt};
        case AlgebraTag::S2:
        case AlgebraTag::S3:
            return {Family::Triangle, nullvec(), std::nullopt};
        case AlgebraTag::S1p: {
            // The conic component of bx^3 + (1-ab^2)xyz is kappa x^2 = yz
            // with kappa = -b/(1-ab^2).
            const FieldElem &a = t.params[0], &b = t.params[1];
            FieldElem kappa = -b / (FieldElem(1) - a * b * b);
            return {Family::LineConic2, nullvec(), kappa};
        }
        case AlgebraTag::S2p:
            return {Family::LineConic2, nullvec(), FieldElem(Rational(-1, 2))};
        case AlgebraTag::T1:
        case AlgebraTag::T2:
        case AlgebraTag::T3:
            return {Family::ThreeLinesConcurrent, nullvec(), std::nullopt};
        case AlgebraTag::Tp:
            return {Family::LineConic1, nullvec(), std::nullopt};
        case AlgebraTag::NC1:
            return {Family::NodalCubic, NodalSigma{1, t.params[0]}, std::nullopt};
        case AlgebraTag::NC2:
            return {Family::NodalCubic, NodalSigma{2, FieldElem(-1)}, std::nullopt};
        default:
            throw InvalidParameters("no geometric pair implemented for type " +
                                    tag_name(t.tag));
    }
}

GeometricPair pair_for_ec(const EcDescriptor& d) {
    return {Family::HesseCubic, AutElem(d.point(), d.exponent()), std::nullopt};
}

}  // namespace asreg
