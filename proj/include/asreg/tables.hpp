#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "asreg/qalg.hpp"

namespace asreg {

// The 22 non-EC rows of the classification table, in table order.
enum class AlgebraTag {
    P1, P2, P3,
    S1, S2, S3,
    S1p, S2p,
    T1, T2, T3,
    Tp,
    CC,
    NC1, NC2,
    WL1, WL2, WL3,
    TL1, TL2, TL3, TL4,
};

// The 9 classes of the Morita-level table (primed types written with 'p').
enum class CoarseType { P, S, Sp, T, Tp, CC, NC, WL, TL };

CoarseType coarse_of(AlgebraTag tag);
int param_count(AlgebraTag tag);

std::string tag_name(AlgebraTag tag);           // "S1p", "Tp", ...
AlgebraTag tag_from_string(std::string_view s); // accepts "S1p", "S'1", "S1'", "T'", ...
std::string coarse_name(CoarseType c);

const std::vector<AlgebraTag>& all_tags();

// A table row with its parameters filled in.
struct TypedAlgebra {
    AlgebraTag tag;
    std::vector<FieldElem> params;

    // Checks arity and the row's column-(I) constraint; throws
    // InvalidParameters naming what is violated.
    void validate() const;
};

RelationSet construct(const TypedAlgebra& t);

// Column (II) of the classification table: graded-isomorphism test. Different
// tags are never isomorphic.
bool iso_decide(const TypedAlgebra& a, const TypedAlgebra& b);

// Column (III) of the Morita table: same coarse type required; within coarse
// S, S', NC the product invariant must match up to inversion; the remaining
// coarse types each form a single class.
bool morita_decide(const TypedAlgebra& a, const TypedAlgebra& b);

// The product invariant driving the coarse S / S' / NC decisions. The primed
// subtype-2 rows carry the fixed value -1: their sigma is not linear but its
// square is, which pins the class (see the Morita normal forms below).
FieldElem morita_invariant(const TypedAlgebra& t);

// A representative of the input's Morita class, expressed as a table row
// instance of the coarse normal form.
TypedAlgebra morita_normal_form(const TypedAlgebra& t);

// Normalization P^1 -> V(x^3+y^3+xyz), (a:b) |-> (a^2 b : a b^2 : -a^3-b^3).
ProjPoint nc_parametrize(const FieldElem& a, const FieldElem& b);

// The two nodal-cubic automorphisms:
//   sigma_1(x:y:z) = (a xy : a^2 y^2 : (a^3-1) x^2 + a^3 yz)
//   sigma_2(x:y:z) = (b y^2 : b^2 xy : (1-b^3) x^2 + yz)
// Both formulas degenerate only at the node (0:0:1), which is fixed.
ProjPoint nc_sigma(int variant, const FieldElem& param, const ProjPoint& p);

}  // namespace asreg
