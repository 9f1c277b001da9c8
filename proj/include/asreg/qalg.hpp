#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "asreg/plinalg.hpp"

namespace asreg {

// Builds a tensor from quadratic monomials in x,y,z, e.g.
// tensor_of({{"yz", a}, {"zy", -b}}) = a y(x)z - b z(x)y.
Tensor2 tensor_of(std::initializer_list<std::pair<std::string_view, FieldElem>> terms);

// A quadratic algebra T(V)/(R) presented by its 3-dimensional relation space
// R in V(x)V, held as three linearly independent tensors.
class RelationSet {
public:
    RelationSet(Tensor2 f1, Tensor2 f2, Tensor2 f3);  // throws InvalidParameters

    const Tensor2& operator[](int k) const { return f_[static_cast<size_t>(k)]; }

private:
    std::array<Tensor2, 3> f_;
};

// (m (x) id) on every relation: the Zhang-twist move on presentations.
RelationSet twist(const RelationSet& r, const Mat3& m);  // throws SingularMatrix
// (m (x) m) on every relation: change of generators by an isomorphism.
RelationSet apply_iso(const RelationSet& r, const Mat3& m);  // throws SingularMatrix
// Same subspace of V(x)V: the stacked 6x9 matrix still has rank 3.
bool relations_equal(const RelationSet& a, const RelationSet& b);

// Linear form c0 x + c1 y + c2 z.
using LinForm = std::array<FieldElem, 3>;
using LeftMatrix = std::array<std::array<LinForm, 3>, 3>;

// Multilinearization: f_i = sum_k M_ik(x,y,z) (x) x_k, so the column index is
// the second tensor slot and, for fixed p, the points q with f_i(p,q) = 0 for
// all i form the nullspace of the scalar matrix M(p).
LeftMatrix left_matrix(const RelationSet& r);
Mat3 left_matrix_at(const RelationSet& r, const ProjPoint& p);

// Ternary cubic with 10 coefficients in deg-lex monomial order
// x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
class CubicForm {
public:
    CubicForm() : c_{} {}
    explicit CubicForm(std::array<FieldElem, 10> coeffs) : c_(std::move(coeffs)) {}

    static int monomial_index(int ex, int ey, int ez);
    static const char* monomial_name(int index);  // e.g. "x^2*y"

    const FieldElem& coeff(int index) const { return c_[static_cast<size_t>(index)]; }
    FieldElem& coeff(int index) { return c_[static_cast<size_t>(index)]; }

    bool is_zero() const;
    // Equality up to a global nonzero scalar (both identically zero also
    // compare equal).
    bool same_divisor(const CubicForm& o) const;

    FieldElem evaluate(const ProjPoint& p) const;
    std::string str() const;

private:
    std::array<FieldElem, 10> c_;
};

// det of left_matrix, expanded exactly. Identically zero means the point
// scheme is all of P^2; otherwise its support is the cubic divisor.
CubicForm point_scheme_det(const RelationSet& r);

}  // namespace asreg
