#include "asreg/plinalg.hpp"

#include <algorithm>
#include <sstream>

namespace asreg {

ProjPoint::ProjPoint(FieldElem x, FieldElem y, FieldElem z)
    : c_{std::move(x), std::move(y), std::move(z)} {
    for (auto& c : c_) {
        if (!c.is_zero()) {
            FieldElem s = c.inv();
            for (auto& d : c_) d *= s;
            return;
        }
    }
    throw InvalidParameters("projective point (0:0:0)");
}

std::string ProjPoint::str() const {
    std::ostringstream out;
    out << '(' << c_[0].str() << " : " << c_[1].str() << " : " << c_[2].str() << ')';
    return out.str();
}

Mat3::Mat3(std::initializer_list<FieldElem> entries) : e_{} {
    if (entries.size() != 9) throw InvalidParameters("Mat3 needs 9 entries");
    std::copy(entries.begin(), entries.end(), e_.begin());
}

Mat3 Mat3::identity() {
    return diag(1, 1, 1);
}

Mat3 Mat3::diag(FieldElem a, FieldElem b, FieldElem c) {
    Mat3 m;
    m.at(0, 0) = std::move(a);
    m.at(1, 1) = std::move(b);
    m.at(2, 2) = std::move(c);
    return m;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r.at(i, j) += at(i, k) * o.at(k, j);
    return r;
}

Mat3 Mat3::operator*(const FieldElem& s) const {
    Mat3 r = *this;
    for (auto& e : r.e_) e *= s;
    return r;
}

Mat3 Mat3::operator+(const Mat3& o) const {
    Mat3 r = *this;
    for (size_t k = 0; k < 9; ++k) r.e_[k] += o.e_[k];
    return r;
}

Mat3 Mat3::transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
    return r;
}

FieldElem Mat3::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Mat3 Mat3::adjugate() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            // Cofactor expansion with cyclic indices, which absorbs the
            // (-1)^{i+j} sign: r[j][i] = cofactor(i,j).
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            r.at(j, i) = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
        }
    }
    return r;
}

Mat3 Mat3::inverse() const {
    FieldElem d = det();
    if (d.is_zero()) throw SingularMatrix("matrix is not invertible");
    return adjugate() * d.inv();
}

int Mat3::rank() const {
    if (!det().is_zero()) return 3;
    if (adjugate() != Mat3()) return 2;
    return *this != Mat3() ? 1 : 0;
}

Mat3 Mat3::pow(long n) const {
    Mat3 base = *this;
    if (n < 0) {
        base = base.inverse();
        n = -n;
    }
    Mat3 acc = identity();
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool Mat3::proportional_to(const Mat3& o) const {
    const FieldElem* s = nullptr;
    FieldElem scale;
    for (size_t k = 0; k < 9; ++k) {
        bool za = e_[k].is_zero(), zb = o.e_[k].is_zero();
        if (za != zb) return false;
        if (za) continue;
        if (!s) {
            scale = e_[k] / o.e_[k];
            s = &scale;
        } else if (e_[k] != scale * o.e_[k]) {
            return false;
        }
    }
    return s != nullptr;  // both zero matrices are not projective objects
}

Tensor2::Tensor2(std::initializer_list<FieldElem> entries) : t_{} {
    if (entries.size() != 9) throw InvalidParameters("Tensor2 needs 9 entries");
    std::copy(entries.begin(), entries.end(), t_.begin());
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
    Tensor2 r = *this;
    for (size_t k = 0; k < 9; ++k) r.t_[k] += o.t_[k];
    return r;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
    Tensor2 r = *this;
    for (size_t k = 0; k < 9; ++k) r.t_[k] -= o.t_[k];
    return r;
}

Tensor2 Tensor2::operator*(const FieldElem& s) const {
    Tensor2 r = *this;
    for (auto& e : r.t_) e *= s;
    return r;
}

bool Tensor2::is_zero() const {
    return std::all_of(t_.begin(), t_.end(), [](const FieldElem& e) { return e.is_zero(); });
}

bool Tensor2::proportional_to(const Tensor2& o) const {
    const FieldElem* s = nullptr;
    FieldElem scale;
    for (size_t k = 0; k < 9; ++k) {
        bool za = t_[k].is_zero(), zb = o.t_[k].is_zero();
        if (za != zb) return false;
        if (za) continue;
        if (!s) {
            scale = t_[k] / o.t_[k];
            s = &scale;
        } else if (t_[k] != scale * o.t_[k]) {
            return false;
        }
    }
    return s != nullptr;
}

ProjPoint apply(const Mat3& m, const ProjPoint& p) {
    if (m.det().is_zero()) throw SingularMatrix("projective action needs an invertible matrix");
    FieldElem out[3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += m.at(i, j) * p[j];
    return ProjPoint(out[0], out[1], out[2]);
}

FieldElem evaluate(const Tensor2& g, const ProjPoint& p, const ProjPoint& q) {
    FieldElem acc;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) acc += g.at(j, k) * p[j] * q[k];
    return acc;
}

Tensor2 tensor_left(const Mat3& m, const Tensor2& g) {
    // phi(x_j) = sum_i m_ij x_i, so the coefficient matrix transforms T -> m T.
    Tensor2 r;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) r.at(i, k) += m.at(i, j) * g.at(j, k);
    return r;
}

Tensor2 tensor_both(const Mat3& m, const Tensor2& g) {
    Tensor2 r = tensor_left(m, g);
    // Second slot: T -> T m^T.
    Tensor2 out;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) out.at(j, i) += r.at(j, k) * m.at(i, k);
    return out;
}

namespace {

// Row echelon form over K by fraction-free (Bareiss) elimination. Returns the
// echelon rows (nonzero ones), pivot column per row in increasing order.
struct Echelon {
    std::vector<Vec9> rows;
    std::vector<int> pivots;
};

Echelon echelonize(std::vector<Vec9> m) {
    Echelon ech;
    FieldElem prev_pivot(1);
    size_t r = 0;
    for (int col = 0; col < 9 && r < m.size(); ++col) {
        size_t piv = r;
        while (piv < m.size() && m[piv][static_cast<size_t>(col)].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        const FieldElem p = m[r][static_cast<size_t>(col)];
        for (size_t row = r + 1; row < m.size(); ++row) {
            const FieldElem f = m[row][static_cast<size_t>(col)];
            for (int k = 0; k < 9; ++k) {
                auto& cell = m[row][static_cast<size_t>(k)];
                cell = (p * cell - f * m[r][static_cast<size_t>(k)]) / prev_pivot;
            }
        }
        ech.pivots.push_back(col);
        prev_pivot = p;
        ++r;
    }
    m.resize(r);
    ech.rows = std::move(m);
    return ech;
}

}  // namespace

std::vector<Vec9> nullspace(const std::vector<Vec9>& rows) {
    Echelon ech = echelonize(rows);
    const int rank = static_cast<int>(ech.pivots.size());

    std::array<bool, 9> is_pivot{};
    for (int c : ech.pivots) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<Vec9> basis;
    for (int free_col = 0; free_col < 9; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        Vec9 v{};
        v[static_cast<size_t>(free_col)] = FieldElem(1);
        // Back-substitute through the echelon rows, bottom up.
        for (int r = rank - 1; r >= 0; --r) {
            const int pc = ech.pivots[static_cast<size_t>(r)];
            FieldElem s;
            for (int c = pc + 1; c < 9; ++c)
                s += ech.rows[static_cast<size_t>(r)][static_cast<size_t>(c)] * v[static_cast<size_t>(c)];
            v[static_cast<size_t>(pc)] = -s / ech.rows[static_cast<size_t>(r)][static_cast<size_t>(pc)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank9(const std::vector<Vec9>& rows) {
    return static_cast<int>(echelonize(rows).pivots.size());
}

std::optional<ProjPoint> rank2_nullvector(const Mat3& m) {
    if (!m.det().is_zero()) return std::nullopt;
    Mat3 adj = m.adjugate();
    for (int c = 0; c < 3; ++c) {
        if (!adj.at(0, c).is_zero() || !adj.at(1, c).is_zero() || !adj.at(2, c).is_zero()) {
            return ProjPoint(adj.at(0, c), adj.at(1, c), adj.at(2, c));
        }
    }
    return std::nullopt;  // rank <= 1, kernel is not a single point
}

}  // namespace asreg
