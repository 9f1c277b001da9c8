#pragma once

#include <vector>

#include "asreg/plinalg.hpp"

namespace asreg {

// j(E_lambda) = 27 lambda^3 (lambda^3+8)^3 / (lambda^3-1)^3. Throws
// SingularHesse when lambda^3 = 1.
FieldElem j_invariant(const FieldElem& lambda);

// Recovers lambda = (a^3+b^3+c^3)/(3abc) from a point with abc != 0; the point
// then lies on E_lambda. Throws TorsionPoint when abc = 0 and SingularHesse
// when the resulting lambda has lambda^3 = 1.
FieldElem lambda_of(const ProjPoint& p);

// Order d of the cyclic generator group: 2 generically, 6 at j=0, 4 at j=1728.
int group_order_d(const FieldElem& lambda);

// Generator matrix tau of G_lambda. Only the canonical representatives
// lambda = 0 (j=0) and lambda = 1+sqrt3 (j=1728) carry the special
// generators; other lambda with those j-values raise CanonicalFormRequired.
Mat3 tau_matrix(const FieldElem& lambda);

// The nine 3-torsion points p_0..p_8, in the fixed labeling order
// (1:-1:0), (1:-eps:0), (1:-eps^2:0), (1:0:-1), ..., (0:1:-eps^2).
// They lie on E_lambda for every lambda.
const std::vector<ProjPoint>& torsion3();

class HesseCurve {
public:
    explicit HesseCurve(FieldElem lambda);  // throws SingularHesse if lambda^3 = 1

    const FieldElem& lambda() const { return lambda_; }
    bool contains(const ProjPoint& p) const;
    FieldElem j() const { return j_invariant(lambda_); }
    int d() const { return group_order_d(lambda_); }
    Mat3 tau() const { return tau_matrix(lambda_); }

    friend bool operator==(const HesseCurve& a, const HesseCurve& b) {
        return a.lambda_ == b.lambda_;
    }
    friend bool operator!=(const HesseCurve& a, const HesseCurve& b) { return !(a == b); }

private:
    FieldElem lambda_;
};

class CurvePoint {
public:
    CurvePoint(HesseCurve curve, ProjPoint point);  // throws NotOnCurve

    static CurvePoint origin(const HesseCurve& curve);  // o = (1:-1:0)

    const HesseCurve& curve() const { return curve_; }
    const ProjPoint& point() const { return point_; }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        return a.curve_ == b.curve_ && a.point_ == b.point_;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }

private:
    HesseCurve curve_;
    ProjPoint point_;
};

// Group law on E_lambda with identity o = (1:-1:0) and -(a:b:c) = (b:a:c).
// The closed chord/duplication formulas produce the sum directly; when they
// degenerate to the zero vector the implementation falls back to an exact
// chord-and-tangent construction (third intersection, then negation).
CurvePoint add(const CurvePoint& p, const CurvePoint& q);  // throws CurveMismatch
CurvePoint neg(const CurvePoint& p);
CurvePoint sub(const CurvePoint& p, const CurvePoint& q);
CurvePoint smul(long n, const CurvePoint& p);

bool is_torsion3(const CurvePoint& p);

// F_{lambda,i} = {p - tau^i(p) : p in E[3]}, duplicates removed, in order of
// first occurrence as p runs through torsion3().
std::vector<ProjPoint> f_set(const FieldElem& lambda, int i);

// Automorphism sigma_p tau^i of E_lambda: q |-> p + tau^i(q). The exponent is
// stored reduced mod d.
class AutElem {
public:
    AutElem(CurvePoint translation, long exponent);

    static AutElem identity(const HesseCurve& curve);

    const CurvePoint& translation() const { return translation_; }
    int exponent() const { return exponent_; }
    const HesseCurve& curve() const { return translation_.curve(); }

    friend bool operator==(const AutElem& a, const AutElem& b) {
        return a.translation_ == b.translation_ && a.exponent_ == b.exponent_;
    }
    friend bool operator!=(const AutElem& a, const AutElem& b) { return !(a == b); }

private:
    CurvePoint translation_;
    int exponent_;
};

CurvePoint aut_apply(const AutElem& g, const CurvePoint& q);
// (sigma_q tau^j)(sigma_p tau^i) = sigma_{q + tau^j(p)} tau^{j+i}.
AutElem aut_compose(const AutElem& g, const AutElem& h);  // throws CurveMismatch
AutElem aut_inverse(const AutElem& g);

}  // namespace asreg
