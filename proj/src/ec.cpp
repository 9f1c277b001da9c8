#include "asreg/ec.hpp"

#include <algorithm>

#include "asreg/errors.hpp"

namespace asreg {

RelationSet sklyanin(const ProjPoint& p) {
    const FieldElem &a = p[0], &b = p[1], &c = p[2];
    if ((a * b * c).is_zero()) {
        throw TorsionPoint("sklyanin point " + p.str() + " has a zero coordinate");
    }
    return RelationSet(tensor_of({{"yz", a}, {"zy", b}, {"xx", c}}),
                       tensor_of({{"zx", a}, {"xz", b}, {"yy", c}}),
                       tensor_of({{"xy", a}, {"yx", b}, {"zz", c}}));
}

EcDescriptor::EcDescriptor(const ProjPoint& p, long exponent)
    : point_(HesseCurve(lambda_of(p)), p) {
    const HesseCurve& e = point_.curve();
    e.tau();  // canonical-representative check for j in {0, 1728}
    int d = e.d();
    exponent_ = static_cast<int>(((exponent % d) + d) % d);
}

RelationSet construct_ec(const EcDescriptor& d) {
    return twist(sklyanin(d.point().point()), d.curve().tau().pow(d.exponent()));
}

namespace {

void require_same_curve(const EcDescriptor& a, const EcDescriptor& b) {
    if (a.curve() != b.curve()) {
        throw CurveMismatch("descriptors live on different curves (lambda " +
                            a.curve().lambda().str() + " vs " + b.curve().lambda().str() + ")");
    }
}

// tau^l(p) + r for all l in Z_d and r in the given translation set.
std::vector<ProjPoint> orbit_points(const EcDescriptor& d,
                                    const std::vector<ProjPoint>& translations) {
    const HesseCurve& e = d.curve();
    Mat3 tau = e.tau();
    std::vector<ProjPoint> out;
    for (int l = 0; l < e.d(); ++l) {
        CurvePoint moved(e, apply(tau.pow(l), d.point().point()));
        for (const ProjPoint& r : translations) {
            ProjPoint cand = add(moved, CurvePoint(e, r)).point();
            if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
        }
    }
    return out;
}

}  // namespace

std::optional<IsoWitness> iso_ec(const EcDescriptor& a, const EcDescriptor& b) {
    require_same_curve(a, b);
    if (a.exponent() != b.exponent()) return std::nullopt;
    const HesseCurve& e = a.curve();
    Mat3 tau = e.tau();
    for (int l = 0; l < e.d(); ++l) {
        CurvePoint moved(e, apply(tau.pow(l), a.point().point()));
        for (const ProjPoint& r : f_set(e.lambda(), a.exponent())) {
            if (add(moved, CurvePoint(e, r)) == b.point()) return IsoWitness{l, r};
        }
    }
    return std::nullopt;
}

bool morita_ec(const EcDescriptor& a, const EcDescriptor& b) {
    require_same_curve(a, b);
    const HesseCurve& e = a.curve();
    int shift = ((b.exponent() - a.exponent()) % e.d() + e.d()) % e.d();
    CurvePoint shifted(e, apply(e.tau().pow(shift), a.point().point()));
    if (!is_torsion3(sub(a.point(), shifted))) return false;
    Mat3 tau = e.tau();
    for (int l = 0; l < e.d(); ++l) {
        CurvePoint moved(e, apply(tau.pow(l), a.point().point()));
        for (const ProjPoint& r : torsion3()) {
            if (add(moved, CurvePoint(e, r)) == b.point()) return true;
        }
    }
    return false;
}

bool is_type_ec(const CurvePoint& p) { return !is_torsion3(p); }

std::vector<ProjPoint> ec_orbit(const EcDescriptor& d, bool morita) {
    return orbit_points(d, morita ? torsion3() : f_set(d.curve().lambda(), d.exponent()));
}

}  // namespace asreg
