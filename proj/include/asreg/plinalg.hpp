#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "asreg/field.hpp"

namespace asreg {

// Point of P^2 in canonical form: first nonzero coordinate scaled to 1, so
// equality and set membership are plain coordinate comparisons.
class ProjPoint {
public:
    ProjPoint(FieldElem x, FieldElem y, FieldElem z);

    const FieldElem& operator[](int k) const { return c_[static_cast<size_t>(k)]; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.c_ < b.c_; }

    std::string str() const;  // "(a : b : c)" with canonical coordinates

private:
    std::array<FieldElem, 3> c_;
};

class Mat3 {
public:
    Mat3() : e_{} {}  // zero matrix
    Mat3(std::initializer_list<FieldElem> entries);  // row-major, 9 entries

    static Mat3 identity();
    static Mat3 diag(FieldElem a, FieldElem b, FieldElem c);

    FieldElem& at(int r, int c) { return e_[static_cast<size_t>(3 * r + c)]; }
    const FieldElem& at(int r, int c) const { return e_[static_cast<size_t>(3 * r + c)]; }

    Mat3 operator*(const Mat3& o) const;
    Mat3 operator*(const FieldElem& s) const;
    Mat3 operator+(const Mat3& o) const;

    Mat3 transpose() const;
    FieldElem det() const;
    Mat3 adjugate() const;  // M . adjugate() = det(M) . I
    Mat3 inverse() const;  // throws SingularMatrix
    Mat3 pow(long n) const;  // negative n inverts first
    int rank() const;  // 0..3

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Mat3& a, const Mat3& b) { return !(a == b); }

    // Projective comparison: equal up to a global nonzero scalar.
    bool proportional_to(const Mat3& o) const;

private:
    std::array<FieldElem, 9> e_;
};

// Element sum t_{jk} x_j (x) x_k of V(x)V, row index = first slot.
class Tensor2 {
public:
    Tensor2() : t_{} {}
    Tensor2(std::initializer_list<FieldElem> entries);  // row-major, 9 entries

    FieldElem& at(int j, int k) { return t_[static_cast<size_t>(3 * j + k)]; }
    const FieldElem& at(int j, int k) const { return t_[static_cast<size_t>(3 * j + k)]; }

    const std::array<FieldElem, 9>& flat() const { return t_; }

    Tensor2 operator+(const Tensor2& o) const;
    Tensor2 operator-(const Tensor2& o) const;
    Tensor2 operator*(const FieldElem& s) const;

    friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Tensor2& a, const Tensor2& b) { return !(a == b); }

    bool is_zero() const;
    bool proportional_to(const Tensor2& o) const;

private:
    std::array<FieldElem, 9> t_;
};

// m acts on point coordinates as a column vector: result = m . p.
ProjPoint apply(const Mat3& m, const ProjPoint& p);

// g(p, q) = p^T T q where T is the coefficient matrix of g. The value is only
// meaningful up to scalar (points are projective); callers test zero/nonzero.
FieldElem evaluate(const Tensor2& g, const ProjPoint& p, const ProjPoint& q);

// (m (x) id)(g): substitutes the first tensor slot, coefficient matrix m . T.
Tensor2 tensor_left(const Mat3& m, const Tensor2& g);
// (m (x) m)(g): coefficient matrix m . T . m^T.
Tensor2 tensor_both(const Mat3& m, const Tensor2& g);

using Vec9 = std::array<FieldElem, 9>;

// Basis of the right nullspace of the given row set, by fraction-free
// (Bareiss) Gaussian elimination followed by exact back-substitution.
std::vector<Vec9> nullspace(const std::vector<Vec9>& rows);

// Rank of a list of 9-vectors (same elimination engine as nullspace).
int rank9(const std::vector<Vec9>& rows);

// Kernel of a 3x3 matrix of rank exactly 2, as a projective point (any
// nonzero adjugate column). nullopt when the rank is not 2.
std::optional<ProjPoint> rank2_nullvector(const Mat3& m);

}  // namespace asreg
