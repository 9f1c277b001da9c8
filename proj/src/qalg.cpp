#include "asreg/qalg.hpp"

#include <sstream>

namespace asreg {

namespace {

int var_index(char v) {
    switch (v) {
        case 'x': return 0;
        case 'y': return 1;
        case 'z': return 2;
        default: throw InvalidParameters(std::string("unknown variable '") + v + "'");
    }
}

std::vector<Vec9> as_rows(const RelationSet& r) {
    std::vector<Vec9> rows;
    for (int i = 0; i < 3; ++i) rows.push_back(r[i].flat());
    return rows;
}

}  // namespace

Tensor2 tensor_of(std::initializer_list<std::pair<std::string_view, FieldElem>> terms) {
    Tensor2 t;
    for (const auto& [mon, c] : terms) {
        if (mon.size() != 2) throw InvalidParameters("quadratic monomial must have two letters");
        t.at(var_index(mon[0]), var_index(mon[1])) += c;
    }
    return t;
}

RelationSet::RelationSet(Tensor2 f1, Tensor2 f2, Tensor2 f3)
    : f_{std::move(f1), std::move(f2), std::move(f3)} {
    if (rank9({f_[0].flat(), f_[1].flat(), f_[2].flat()}) != 3) {
        throw InvalidParameters("relation tensors are linearly dependent");
    }
}

RelationSet twist(const RelationSet& r, const Mat3& m) {
    if (m.det().is_zero()) throw SingularMatrix("twist by a singular matrix");
    return RelationSet(tensor_left(m, r[0]), tensor_left(m, r[1]), tensor_left(m, r[2]));
}

RelationSet apply_iso(const RelationSet& r, const Mat3& m) {
    if (m.det().is_zero()) throw SingularMatrix("isomorphism by a singular matrix");
    return RelationSet(tensor_both(m, r[0]), tensor_both(m, r[1]), tensor_both(m, r[2]));
}

bool relations_equal(const RelationSet& a, const RelationSet& b) {
    std::vector<Vec9> rows = as_rows(a);
    for (const auto& row : as_rows(b)) rows.push_back(row);
    return rank9(rows) == 3;
}

LeftMatrix left_matrix(const RelationSet& r) {
    LeftMatrix m{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(k)][static_cast<size_t>(j)] =
                    r[i].at(j, k);
    return m;
}

Mat3 left_matrix_at(const RelationSet& r, const ProjPoint& p) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) m.at(i, k) += r[i].at(j, k) * p[j];
    return m;
}

int CubicForm::monomial_index(int ex, int ey, int ez) {
    static constexpr int kExps[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                                         {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
    for (int k = 0; k < 10; ++k) {
        if (kExps[k][0] == ex && kExps[k][1] == ey && kExps[k][2] == ez) return k;
    }
    throw InvalidParameters("exponents do not form a cubic monomial");
}

const char* CubicForm::monomial_name(int index) {
    static constexpr const char* kNames[10] = {"x^3", "x^2*y", "x^2*z", "x*y^2", "x*y*z",
                                               "x*z^2", "y^3",  "y^2*z", "y*z^2", "z^3"};
    return kNames[index];
}

bool CubicForm::is_zero() const {
    for (const auto& c : c_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool CubicForm::same_divisor(const CubicForm& o) const {
    const FieldElem* s = nullptr;
    FieldElem scale;
    for (size_t k = 0; k < 10; ++k) {
        bool za = c_[k].is_zero(), zb = o.c_[k].is_zero();
        if (za != zb) return false;
        if (za) continue;
        if (!s) {
            scale = c_[k] / o.c_[k];
            s = &scale;
        } else if (c_[k] != scale * o.c_[k]) {
            return false;
        }
    }
    return true;  // includes both identically zero
}

FieldElem CubicForm::evaluate(const ProjPoint& p) const {
    static constexpr int kExps[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                                         {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
    FieldElem acc;
    for (int k = 0; k < 10; ++k) {
        if (c_[static_cast<size_t>(k)].is_zero()) continue;
        acc += c_[static_cast<size_t>(k)] * p[0].pow(kExps[k][0]) * p[1].pow(kExps[k][1]) *
               p[2].pow(kExps[k][2]);
    }
    return acc;
}

std::string CubicForm::str() const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < 10; ++k) {
        const FieldElem& c = c_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool compound = cs.find(' ') != std::string::npos;
        bool negative = !compound && cs[0] == '-';
        if (first) {
            first = false;
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string mag = negative ? (-c).str() : cs;
        if (compound) {
            out << '(' << mag << ")*" << monomial_name(k);
        } else if (mag == "1") {
            out << monomial_name(k);
        } else {
            out << mag << '*' << monomial_name(k);
        }
    }
    if (first) return "0";
    return out.str();
}

CubicForm point_scheme_det(const RelationSet& r) {
    LeftMatrix m = left_matrix(r);
    static constexpr int kPerm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                        {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    static constexpr int kSign[6] = {1, 1, 1, -1, -1, -1};
    std::array<FieldElem, 10> out{};
    for (int s = 0; s < 6; ++s) {
        const LinForm& a = m[0][static_cast<size_t>(kPerm[s][0])];
        const LinForm& b = m[1][static_cast<size_t>(kPerm[s][1])];
        const LinForm& c = m[2][static_cast<size_t>(kPerm[s][2])];
        for (int va = 0; va < 3; ++va) {
            if (a[static_cast<size_t>(va)].is_zero()) continue;
            for (int vb = 0; vb < 3; ++vb) {
                if (b[static_cast<size_t>(vb)].is_zero()) continue;
                for (int vc = 0; vc < 3; ++vc) {
                    if (c[static_cast<size_t>(vc)].is_zero()) continue;
                    int e[3] = {0, 0, 0};
                    ++e[va];
                    ++e[vb];
                    ++e[vc];
                    FieldElem term = a[static_cast<size_t>(va)] * b[static_cast<size_t>(vb)] *
                                     c[static_cast<size_t>(vc)];
                    if (kSign[s] < 0) term = -term;
                    out[static_cast<size_t>(CubicForm::monomial_index(e[0], e[1], e[2]))] += term;
                }
            }
        }
    }
    return CubicForm(out);
}

}  // namespace asreg
