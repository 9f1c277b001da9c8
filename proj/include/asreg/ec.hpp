#pragma once

#include <optional>
#include <vector>

#include "asreg/hesse.hpp"
#include "asreg/qalg.hpp"

namespace asreg {

// The relation set attached to a point (a:b:c) with abc != 0:
//   a yz + b zy + c x^2,  a zx + b xz + c y^2,  a xy + b yx + c z^2.
// Throws TorsionPoint when a coordinate vanishes.
RelationSet sklyanin(const ProjPoint& p);

// A Type-EC presentation datum: the point p = (a:b:c), which determines its
// curve E_lambda via lambda = (a^3+b^3+c^3)/(3abc), and a twisting exponent
// reduced mod d. Construction validates abc != 0, lambda^3 != 1, and (for
// j in {0, 1728}) that lambda is one of the canonical representatives
// carrying a generator matrix.
class EcDescriptor {
public:
    EcDescriptor(const ProjPoint& p, long exponent);

    const CurvePoint& point() const { return point_; }
    int exponent() const { return exponent_; }
    const HesseCurve& curve() const { return point_.curve(); }

private:
    CurvePoint point_;
    int exponent_;
};

// twist(sklyanin(p), tau^i): the algebra attached to sigma_p tau^i.
RelationSet construct_ec(const EcDescriptor& d);

// Certificate for a positive iso_ec answer: q = tau^l(p) + r.
struct IsoWitness {
    int l;
    ProjPoint r;
};

// Graded-isomorphism test for descriptors on the same curve: exponents must
// agree and q must lie in the finite orbit {tau^l(p) + r : l in Z_d,
// r in F_{lambda,i}}. Throws CurveMismatch when the curves differ.
std::optional<IsoWitness> iso_ec(const EcDescriptor& a, const EcDescriptor& b);

// Morita test: p - tau^(j-i)(p) must be 3-torsion and q must lie in
// {tau^l(p) + r : l in Z_d, r in E[3]}. Throws CurveMismatch.
bool morita_ec(const EcDescriptor& a, const EcDescriptor& b);

// A point scheme supported on the whole curve needs p outside E[3].
bool is_type_ec(const CurvePoint& p);

// The orbit {tau^l(p) + r} searched by the decision procedures, with r
// running over F_{lambda,i} (morita = false) or all of E[3] (morita = true);
// deduplicated, in order of first occurrence (l outer, r inner).
std::vector<ProjPoint> ec_orbit(const EcDescriptor& d, bool morita);

}  // namespace asreg
