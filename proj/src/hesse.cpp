#include "asreg/hesse.hpp"

#include <array>

namespace asreg {

namespace {

FieldElem curve_form(const FieldElem& lambda, const ProjPoint& p) {
    const FieldElem &a = p[0], &b = p[1], &c = p[2];
    return a.pow(3) + b.pow(3) + c.pow(3) - FieldElem(3) * lambda * a * b * c;
}

std::array<FieldElem, 3> gradient(const FieldElem& lambda, const ProjPoint& p) {
    const FieldElem &a = p[0], &b = p[1], &c = p[2];
    const FieldElem three(3);
    return {three * a * a - three * lambda * b * c,
            three * b * b - three * lambda * a * c,
            three * c * c - three * lambda * a * b};
}

FieldElem dot3(const std::array<FieldElem, 3>& v, const ProjPoint& p) {
    return v[0] * p[0] + v[1] * p[1] + v[2] * p[2];
}

ProjPoint combine(const FieldElem& s, const ProjPoint& p, const FieldElem& t,
                  const ProjPoint& q) {
    return ProjPoint(s * p[0] + t * q[0], s * p[1] + t * q[1], s * p[2] + t * q[2]);
}

// Restricting the cubic to the line {s p + t q} with F(p) = 0 gives
// B s^2 t + C s t^2 + D t^3, B = grad F(p).q, C = grad F(q).p, D = F(q).

// Third intersection of the chord through distinct on-curve points p, q
// (D = 0, so the residual quadratic is s (B s + C t); its root beyond q is
// (C : -B), which degenerates correctly to p when the chord is tangent at p).
ProjPoint third_on_chord(const FieldElem& lambda, const ProjPoint& p, const ProjPoint& q) {
    FieldElem B = dot3(gradient(lambda, p), q);
    FieldElem C = dot3(gradient(lambda, q), p);
    return combine(C, p, -B, q);
}

// Third intersection of the tangent line at p, written {s p + t v} with
// direction v satisfying grad F(p).v = 0 (so B = 0): the residual quadratic is
// t (C s + D t), and the root beyond the double contact at p is (D : -C).
ProjPoint third_on_tangent(const FieldElem& lambda, const ProjPoint& p, const ProjPoint& v) {
    FieldElem C = dot3(gradient(lambda, v), p);
    FieldElem D = curve_form(lambda, v);
    return combine(D, p, -C, v);
}

ProjPoint neg_pt(const ProjPoint& p) {
    return ProjPoint(p[1], p[0], p[2]);
}

ProjPoint add_pts(const FieldElem& lambda, const ProjPoint& p, const ProjPoint& q) {
    if (p == q) {
        const FieldElem &a = p[0], &b = p[1], &c = p[2];
        FieldElem r0 = b * (a.pow(3) - c.pow(3));
        FieldElem r1 = a * (c.pow(3) - b.pow(3));
        FieldElem r2 = c * (b.pow(3) - a.pow(3));
        if (!r0.is_zero() || !r1.is_zero() || !r2.is_zero()) return ProjPoint(r0, r1, r2);
        // Tangent fallback: a direction v with grad F(p).v = 0 and v not
        // proportional to p.
        auto g = gradient(lambda, p);
        const std::array<std::array<FieldElem, 3>, 3> cands = {{
            {-g[1], g[0], FieldElem(0)},
            {-g[2], FieldElem(0), g[0]},
            {FieldElem(0), -g[2], g[1]},
        }};
        for (const auto& vc : cands) {
            if (vc[0].is_zero() && vc[1].is_zero() && vc[2].is_zero()) continue;
            FieldElem cr0 = vc[1] * p[2] - vc[2] * p[1];
            FieldElem cr1 = vc[2] * p[0] - vc[0] * p[2];
            FieldElem cr2 = vc[0] * p[1] - vc[1] * p[0];
            if (cr0.is_zero() && cr1.is_zero() && cr2.is_zero()) continue;
            ProjPoint v(vc[0], vc[1], vc[2]);
            return neg_pt(third_on_tangent(lambda, p, v));
        }
        throw InvalidParameters("no tangent direction at " + p.str());
    }
    const FieldElem &a = p[0], &b = p[1], &c = p[2];
    const FieldElem &al = q[0], &be = q[1], &ga = q[2];
    FieldElem r0 = a * c * be * be - b * b * al * ga;
    FieldElem r1 = b * c * al * al - a * a * be * ga;
    FieldElem r2 = a * b * ga * ga - c * c * al * be;
    if (!r0.is_zero() || !r1.is_zero() || !r2.is_zero()) return ProjPoint(r0, r1, r2);
    return neg_pt(third_on_chord(lambda, p, q));
}

}  // namespace

FieldElem j_invariant(const FieldElem& lambda) {
    FieldElem l3 = lambda.pow(3);
    FieldElem den = (l3 - FieldElem(1)).pow(3);
    if (den.is_zero()) throw SingularHesse("lambda^3 = 1 does not define an elliptic curve");
    return FieldElem(27) * l3 * (l3 + FieldElem(8)).pow(3) / den;
}

FieldElem lambda_of(const ProjPoint& p) {
    FieldElem abc = p[0] * p[1] * p[2];
    if (abc.is_zero()) throw TorsionPoint("lambda is undetermined on the torsion locus abc = 0");
    FieldElem lambda = (p[0].pow(3) + p[1].pow(3) + p[2].pow(3)) / (FieldElem(3) * abc);
    if (lambda.pow(3) == FieldElem(1)) {
        throw SingularHesse("point lies on the singular locus lambda^3 = 1");
    }
    return lambda;
}

int group_order_d(const FieldElem& lambda) {
    FieldElem j = j_invariant(lambda);
    if (j.is_zero()) return 6;
    if (j == FieldElem(1728)) return 4;
    return 2;
}

Mat3 tau_matrix(const FieldElem& lambda) {
    FieldElem j = j_invariant(lambda);
    const FieldElem one(1), zero(0), e = FieldElem::eps();
    if (j.is_zero()) {
        if (!lambda.is_zero()) {
            throw CanonicalFormRequired(
                "generator known only for the canonical j=0 representative lambda = 0");
        }
        return Mat3{zero, one, zero, one, zero, zero, zero, zero, e};
    }
    if (j == FieldElem(1728)) {
        if (lambda != FieldElem(1) + FieldElem::sqrt3()) {
            throw CanonicalFormRequired(
                "generator known only for the canonical j=1728 representative lambda = 1+sqrt3");
        }
        return Mat3{e * e, e, one, e, e * e, one, one, one, one};
    }
    return Mat3{zero, one, zero, one, zero, zero, zero, zero, one};
}

const std::vector<ProjPoint>& torsion3() {
    static const std::vector<ProjPoint> pts = [] {
        const FieldElem one(1), zero(0), e = FieldElem::eps();
        std::vector<ProjPoint> v;
        v.emplace_back(one, -one, zero);
        v.emplace_back(one, -e, zero);
        v.emplace_back(one, -(e * e), zero);
        v.emplace_back(one, zero, -one);
        v.emplace_back(one, zero, -e);
        v.emplace_back(one, zero, -(e * e));
        v.emplace_back(zero, one, -one);
        v.emplace_back(zero, one, -e);
        v.emplace_back(zero, one, -(e * e));
        return v;
    }();
    return pts;
}

HesseCurve::HesseCurve(FieldElem lambda) : lambda_(std::move(lambda)) {
    if (lambda_.pow(3) == FieldElem(1)) {
        throw SingularHesse("lambda^3 = 1 does not define an elliptic curve");
    }
}

bool HesseCurve::contains(const ProjPoint& p) const {
    return curve_form(lambda_, p).is_zero();
}

CurvePoint::CurvePoint(HesseCurve curve, ProjPoint point)
    : curve_(std::move(curve)), point_(std::move(point)) {
    if (!curve_.contains(point_)) {
        throw NotOnCurve(point_.str() + " does not lie on the curve with lambda = " +
                         curve_.lambda().str());
    }
}

CurvePoint CurvePoint::origin(const HesseCurve& curve) {
    return CurvePoint(curve, ProjPoint(FieldElem(1), FieldElem(-1), FieldElem(0)));
}

CurvePoint add(const CurvePoint& p, const CurvePoint& q) {
    if (p.curve() != q.curve()) throw CurveMismatch("addition of points on different curves");
    return CurvePoint(p.curve(), add_pts(p.curve().lambda(), p.point(), q.point()));
}

CurvePoint neg(const CurvePoint& p) {
    return CurvePoint(p.curve(), neg_pt(p.point()));
}

CurvePoint sub(const CurvePoint& p, const CurvePoint& q) {
    return add(p, neg(q));
}

CurvePoint smul(long n, const CurvePoint& p) {
    if (n < 0) return neg(smul(-n, p));
    CurvePoint acc = CurvePoint::origin(p.curve());
    CurvePoint base = p;
    while (n > 0) {
        if (n & 1) acc = add(acc, base);
        n >>= 1;
        if (n) base = add(base, base);
    }
    return acc;
}

bool is_torsion3(const CurvePoint& p) {
    for (const auto& t : torsion3()) {
        if (p.point() == t) return true;
    }
    return false;
}

std::vector<ProjPoint> f_set(const FieldElem& lambda, int i) {
    HesseCurve curve(lambda);
    Mat3 ti = tau_matrix(lambda).pow(i);
    std::vector<ProjPoint> out;
    for (const auto& pl : torsion3()) {
        CurvePoint p(curve, pl);
        CurvePoint image(curve, apply(ti, pl));
        ProjPoint diff = sub(p, image).point();
        bool seen = false;
        for (const auto& existing : out) {
            if (existing == diff) { seen = true; break; }
        }
        if (!seen) out.push_back(diff);
    }
    return out;
}

AutElem::AutElem(CurvePoint translation, long exponent)
    : translation_(std::move(translation)),
      exponent_(static_cast<int>(((exponent % translation_.curve().d()) +
                                  translation_.curve().d()) %
                                 translation_.curve().d())) {}

AutElem AutElem::identity(const HesseCurve& curve) {
    return AutElem(CurvePoint::origin(curve), 0);
}

CurvePoint aut_apply(const AutElem& g, const CurvePoint& q) {
    if (g.curve() != q.curve()) throw CurveMismatch("automorphism applied across curves");
    Mat3 ti = g.curve().tau().pow(g.exponent());
    CurvePoint image(q.curve(), apply(ti, q.point()));
    return add(g.translation(), image);
}

AutElem aut_compose(const AutElem& g, const AutElem& h) {
    if (g.curve() != h.curve()) throw CurveMismatch("automorphism composition across curves");
    Mat3 tj = g.curve().tau().pow(g.exponent());
    CurvePoint moved(h.curve(), apply(tj, h.translation().point()));
    return AutElem(add(g.translation(), moved), g.exponent() + h.exponent());
}

AutElem aut_inverse(const AutElem& g) {
    Mat3 tmi = g.curve().tau().pow(-g.exponent());
    CurvePoint moved(g.curve(), apply(tmi, g.translation().point()));
    return AutElem(neg(moved), -g.exponent());
}

}  // namespace asreg
