#include "asreg/tables.hpp"

#include <algorithm>
#include <cctype>

namespace asreg {

namespace {

struct TagInfo {
    AlgebraTag tag;
    const char* name;
    CoarseType coarse;
    int params;
};

constexpr TagInfo kTags[] = {
    {AlgebraTag::P1, "P1", CoarseType::P, 3},
    {AlgebraTag::P2, "P2", CoarseType::P, 1},
    {AlgebraTag::P3, "P3", CoarseType::P, 0},
    {AlgebraTag::S1, "S1", CoarseType::S, 3},
    {AlgebraTag::S2, "S2", CoarseType::S, 2},
    {AlgebraTag::S3, "S3", CoarseType::S, 3},
    {AlgebraTag::S1p, "S1p", CoarseType::Sp, 2},
    {AlgebraTag::S2p, "S2p", CoarseType::Sp, 0},
    {AlgebraTag::T1, "T1", CoarseType::T, 3},
    {AlgebraTag::T2, "T2", CoarseType::T, 3},
    {AlgebraTag::T3, "T3", CoarseType::T, 0},
    {AlgebraTag::Tp, "Tp", CoarseType::Tp, 2},
    {AlgebraTag::CC, "CC", CoarseType::CC, 0},
    {AlgebraTag::NC1, "NC1", CoarseType::NC, 1},
    {AlgebraTag::NC2, "NC2", CoarseType::NC, 0},
    {AlgebraTag::WL1, "WL1", CoarseType::WL, 2},
    {AlgebraTag::WL2, "WL2", CoarseType::WL, 1},
    {AlgebraTag::WL3, "WL3", CoarseType::WL, 1},
    {AlgebraTag::TL1, "TL1", CoarseType::TL, 1},
    {AlgebraTag::TL2, "TL2", CoarseType::TL, 1},
    {AlgebraTag::TL3, "TL3", CoarseType::TL, 0},
    {AlgebraTag::TL4, "TL4", CoarseType::TL, 0},
};

const TagInfo& info(AlgebraTag tag) {
    for (const auto& t : kTags) {
        if (t.tag == tag) return t;
    }
    throw InvalidParameters("unknown algebra tag");
}

[[noreturn]] void violated(const TypedAlgebra& t, const std::string& constraint) {
    throw InvalidParameters("type " + tag_name(t.tag) + " requires " + constraint);
}

// Projective equality of parameter pairs/triples (never both/all zero here).
bool p1_equal(const FieldElem& a0, const FieldElem& a1, const FieldElem& b0,
              const FieldElem& b1) {
    return a0 * b1 == a1 * b0;
}

bool p2_equal(const std::array<FieldElem, 3>& a, const std::array<FieldElem, 3>& b) {
    return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] &&
           a[1] * b[2] == a[2] * b[1];
}

bool p2_permutation_equal(const std::array<FieldElem, 3>& a, const std::array<FieldElem, 3>& b) {
    std::array<int, 3> idx = {0, 1, 2};
    do {
        if (p2_equal({a[static_cast<size_t>(idx[0])], a[static_cast<size_t>(idx[1])],
                      a[static_cast<size_t>(idx[2])]},
                     b)) {
            return true;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

const FieldElem& pget(const TypedAlgebra& t, int k) {
    return t.params[static_cast<size_t>(k)];
}

}  // namespace

CoarseType coarse_of(AlgebraTag tag) { return info(tag).coarse; }

int param_count(AlgebraTag tag) { return info(tag).params; }

std::string tag_name(AlgebraTag tag) { return info(tag).name; }

AlgebraTag tag_from_string(std::string_view s) {
    // Accept primed spellings: S'1 / S1' for S1p, T' for Tp, and likewise S2p.
    std::string norm;
    for (char c : s) {
        if (c == '\'') {
            norm += 'p';
        } else {
            norm += c;
        }
    }
    // S'1 -> Sp1: move a 'p' that landed before the digit to the end.
    if (norm.size() == 3 && norm[1] == 'p' && std::isdigit(static_cast<unsigned char>(norm[2]))) {
        std::swap(norm[1], norm[2]);
    }
    for (const auto& t : kTags) {
        if (norm == t.name) return t.tag;
    }
    throw InvalidParameters("unknown algebra type \"" + std::string(s) + "\"");
}

std::string coarse_name(CoarseType c) {
    switch (c) {
        case CoarseType::P: return "P";
        case CoarseType::S: return "S";
        case CoarseType::Sp: return "Sp";
        case CoarseType::T: return "T";
        case CoarseType::Tp: return "Tp";
        case CoarseType::CC: return "CC";
        case CoarseType::NC: return "NC";
        case CoarseType::WL: return "WL";
        case CoarseType::TL: return "TL";
    }
    throw InvalidParameters("unknown coarse type");
}

const std::vector<AlgebraTag>& all_tags() {
    static const std::vector<AlgebraTag> tags = [] {
        std::vector<AlgebraTag> v;
        for (const auto& t : kTags) v.push_back(t.tag);
        return v;
    }();
    return tags;
}

void TypedAlgebra::validate() const {
    const TagInfo& ti = info(tag);
    if (static_cast<int>(params.size()) != ti.params) {
        throw InvalidParameters("type " + std::string(ti.name) + " takes " +
                                std::to_string(ti.params) + " parameter(s), got " +
                                std::to_string(params.size()));
    }
    const FieldElem one(1);
    switch (tag) {
        case AlgebraTag::P1:
            if ((pget(*this, 0) * pget(*this, 1) * pget(*this, 2)).is_zero())
                violated(*this, "alpha*beta*gamma != 0");
            break;
        case AlgebraTag::P2:
            if (pget(*this, 0).is_zero()) violated(*this, "alpha != 0");
            break;
        case AlgebraTag::S1:
        case AlgebraTag::S3: {
            FieldElem prod = pget(*this, 0) * pget(*this, 1) * pget(*this, 2);
            if (prod.is_zero() || prod == one) violated(*this, "alpha*beta*gamma != 0, 1");
            break;
        }
        case AlgebraTag::S2:
            if ((pget(*this, 0) * pget(*this, 1)).is_zero()) violated(*this, "alpha*beta != 0");
            break;
        case AlgebraTag::S1p: {
            FieldElem prod = pget(*this, 0) * pget(*this, 1) * pget(*this, 1);
            if (prod.is_zero() || prod == one) violated(*this, "alpha*beta^2 != 0, 1");
            break;
        }
        case AlgebraTag::T1:
        case AlgebraTag::T2:
            if ((pget(*this, 0) + pget(*this, 1) + pget(*this, 2)).is_zero())
                violated(*this, "alpha+beta+gamma != 0");
            break;
        case AlgebraTag::Tp:
            if ((pget(*this, 0) + FieldElem(2) * pget(*this, 1)).is_zero())
                violated(*this, "alpha+2*beta != 0");
            break;
        case AlgebraTag::NC1: {
            const FieldElem& al = pget(*this, 0);
            if (al.is_zero() || al.pow(3) == one) violated(*this, "alpha*(alpha^3-1) != 0");
            break;
        }
        case AlgebraTag::WL1: {
            const FieldElem& al = pget(*this, 0);
            if (al.is_zero() || al == one) violated(*this, "alpha != 0, 1");
            break;
        }
        case AlgebraTag::TL1:
            if (pget(*this, 0).is_zero()) violated(*this, "alpha != 0");
            break;
        default:
            break;  // remaining rows are unconstrained
    }
}

RelationSet construct(const TypedAlgebra& t) {
    t.validate();
    const FieldElem one(1), two(2);
    switch (t.tag) {
        case AlgebraTag::P1: {
            const FieldElem &al = pget(t, 0), &be = pget(t, 1), &ga = pget(t, 2);
            return RelationSet(tensor_of({{"xy", al}, {"yx", -be}}),
                               tensor_of({{"yz", be}, {"zy", -ga}}),
                               tensor_of({{"zx", ga}, {"xz", -al}}));
        }
        case AlgebraTag::P2: {
            const FieldElem& al = pget(t, 0);
            return RelationSet(tensor_of({{"xy", one}, {"yx", -one}, {"yy", one}}),
                               tensor_of({{"xz", one}, {"zx", -al}, {"zy", al}}),
                               tensor_of({{"yz", one}, {"zy", -al}}));
        }
        case AlgebraTag::P3:
            return RelationSet(
                tensor_of({{"xy", one}, {"yx", -one}, {"yy", one}, {"zx", -one}}),
                tensor_of({{"xz", one}, {"yz", one}, {"zx", -one}}),
                tensor_of({{"zy", one}, {"yz", -one}, {"zz", -one}}));
        case AlgebraTag::S1: {
            const FieldElem &al = pget(t, 0), &be = pget(t, 1), &ga = pget(t, 2);
            return RelationSet(tensor_of({{"yz", one}, {"zy", -al}}),
                               tensor_of({{"zx", one}, {"xz", -be}}),
                               tensor_of({{"xy", one}, {"yx", -ga}}));
        }
        case AlgebraTag::S2: {
            const FieldElem &al = pget(t, 0), &be = pget(t, 1);
            return RelationSet(tensor_of({{"zx", one}, {"yz", -al}}),
                               tensor_of({{"xz", one}, {"zy", -be}}),
                               tensor_of({{"xx", one}, {"yy", al * be}}));
        }
        case AlgebraTag::S3: {
            const FieldElem &al = pget(t, 0), &be = pget(t, 1), &ga = pget(t, 2);
            return RelationSet(tensor_of({{"yx", one}, {"zz", -al}}),
                               tensor_of({{"zy", one}, {"xx", -be}}),
                               tensor_of({{"xz", one}, {"yy", -ga}}));
        }
        case AlgebraTag::S1p: {
            const FieldElem &al = pget(t, 0), &be = pget(t, 1);
            return RelationSet(tensor_of({{"xy", one}, {"yx", -be}}),
                               tensor_of({{"xx", one}, {"yz", one}, {"zy", -al}}),
                               tensor_of({{"zx", one}, {"xz", -be}}));
        }
        case AlgebraTag::S2p:
            return RelationSet(tensor_of({{"xy", one}, {"zx", -one}}),
                               tensor_of({{"yx", one}, {"xz", -one}}),
                               tensor_of({{"xx", one}, {"yy", one}, {"zz", one}}));
        case AlgebraTag::T1: {
            const FieldElem &al = pget(t, 0), &be = pget(t, 1), &ga = pget(t, 2);
            return RelationSet(
                tensor_of({{"xy", one}, {"yx", -one}}),
                tensor_of({{"xz", one}, {"zx", -one}, {"xx", -be}, {"yx", be + ga}}),
                tensor_of({{"yz", one}, {"zy", -one}, {"yy", -al}, {"xy", al + ga}}));
        }
        case AlgebraTag::T2: {
            const FieldElem &al = pget(t, 0), &be = pget(t, 1), &ga = pget(t, 2);
            return RelationSet(
                tensor_of({{"xx", one}, {"yy", -one}}),
                tensor_of({{"xz", one}, {"zy", -one}, {"xy", -be}, {"yy", be + ga}}),
                tensor_of({{"yz", one}, {"zx", -one}, {"yx", -al}, {"xx", al + ga}}));
        }
        case AlgebraTag::T3:
            return RelationSet(
                tensor_of({{"xx", one}, {"xy", -one}, {"yy", one}}),
                tensor_of({{"xz", one}, {"zy", one}}),
                tensor_of({{"yx", one}, {"yz", -one}, {"zx", one}, {"zy", -one}}));
        case AlgebraTag::Tp: {
            const FieldElem &al = pget(t, 0), &be = pget(t, 1);
            return RelationSet(
                tensor_of({{"xx", al},
                           {"xy", be * (al + be)},
                           {"xz", -one},
                           {"zx", one},
                           {"zy", -(al + be)}}),
                tensor_of({{"xy", one}, {"yx", -one}, {"yy", -be}}),
                tensor_of({{"xy", two * be}, {"yy", -be * be}, {"yz", one}, {"zy", -one}}));
        }
        case AlgebraTag::CC:
            return RelationSet(
                tensor_of({{"xx", FieldElem(-3)},
                           {"xy", -two},
                           {"xz", one},
                           {"zx", -one},
                           {"zy", two}}),
                tensor_of({{"xy", -one}, {"yx", one}, {"yy", one}}),
                tensor_of({{"xx", FieldElem(3)}, {"yy", one}, {"yz", one}, {"zy", -one}}));
        case AlgebraTag::NC1: {
            const FieldElem& al = pget(t, 0);
            FieldElem q = (al.pow(3) - one) / al;
            return RelationSet(tensor_of({{"xy", one}, {"yx", -al}}),
                               tensor_of({{"xx", q}, {"zy", al}, {"yz", -one}}),
                               tensor_of({{"yy", q}, {"xz", al}, {"zx", -one}}));
        }
        case AlgebraTag::NC2:
            return RelationSet(tensor_of({{"xz", one}, {"yx", -two}, {"zy", one}}),
                               tensor_of({{"zx", one}, {"xy", -two}, {"yz", one}}),
                               tensor_of({{"yy", one}, {"xx", one}}));
        case AlgebraTag::WL1: {
            const FieldElem &al = pget(t, 0), &ga = pget(t, 1);
            return RelationSet(
                tensor_of({{"xy", al}, {"yx", -one}}),
                tensor_of({{"xz", al}, {"yx", -ga}, {"zx", -one}}),
                tensor_of({{"zy", one}, {"yz", -one}, {"yy", one + ga}}));
        }
        case AlgebraTag::WL2: {
            const FieldElem& ga = pget(t, 0);
            return RelationSet(
                tensor_of({{"xy", one}, {"yx", -one}}),
                tensor_of({{"xz", one}, {"yx", -ga}, {"zx", -one}}),
                tensor_of({{"zy", one}, {"yz", -one}, {"yy", one + ga}}));
        }
        case AlgebraTag::WL3: {
            const FieldElem& ga = pget(t, 0);
            return RelationSet(
                tensor_of({{"xy", one}, {"yx", -one}}),
                tensor_of({{"xz", one}, {"xx", -one}, {"yx", -ga}, {"zx", -one}}),
                tensor_of({{"xy", one}, {"zy", one}, {"yz", -one}, {"yy", one + ga}}));
        }
        case AlgebraTag::TL1: {
            const FieldElem& al = pget(t, 0);
            FieldElem ai = al.inv();
            return RelationSet(tensor_of({{"xy", one}, {"yx", -al}}),
                               tensor_of({{"xz", one}, {"zx", -ai}}),
                               tensor_of({{"zy", ai}, {"yz", -al}, {"xx", one}}));
        }
        case AlgebraTag::TL2: {
            const FieldElem& be = pget(t, 0);
            return RelationSet(
                tensor_of({{"xy", one}, {"yx", -one}, {"xx", -be}}),
                tensor_of({{"xz", one}, {"zx", -one}, {"yx", -one}}),
                tensor_of({{"zy", one}, {"yz", -one}, {"xz", -be}, {"xx", one}, {"yy", one}}));
        }
        case AlgebraTag::TL3:
            return RelationSet(
                tensor_of({{"xy", one}, {"yx", one}}),
                tensor_of({{"xz", one}, {"zx", one}, {"yx", -one}}),
                tensor_of({{"zy", one}, {"yz", -one}, {"xx", -one}, {"yy", -one}}));
        case AlgebraTag::TL4:
            return RelationSet(
                tensor_of({{"xy", one}, {"yx", one}}),
                tensor_of({{"xz", one}, {"zx", -one}, {"xx", -one}}),
                tensor_of({{"zy", one}, {"yz", -one}, {"xy", one}, {"xx", one}}));
    }
    throw InvalidParameters("unknown algebra tag");
}

bool iso_decide(const TypedAlgebra& a, const TypedAlgebra& b) {
    a.validate();
    b.validate();
    if (a.tag != b.tag) return false;
    switch (a.tag) {
        case AlgebraTag::P1:
        case AlgebraTag::T1:
            return p2_permutation_equal({pget(a, 0), pget(a, 1), pget(a, 2)},
                                        {pget(b, 0), pget(b, 1), pget(b, 2)});
        case AlgebraTag::P2:
            return pget(a, 0) == pget(b, 0);
        case AlgebraTag::S1: {
            const FieldElem &al = pget(a, 0), &be = pget(a, 1), &ga = pget(a, 2);
            FieldElem ai = al.inv(), bi = be.inv(), gi = ga.inv();
            const std::array<std::array<FieldElem, 3>, 6> orbit = {{
                {al, be, ga},
                {be, ga, al},
                {ga, al, be},
                {ai, gi, bi},
                {bi, ai, gi},
                {gi, bi, ai},
            }};
            for (const auto& cand : orbit) {
                if (pget(b, 0) == cand[0] && pget(b, 1) == cand[1] && pget(b, 2) == cand[2]) {
                    return true;
                }
            }
            return false;
        }
        case AlgebraTag::S2:
            return p1_equal(pget(a, 0), pget(a, 1), pget(b, 0), pget(b, 1));
        case AlgebraTag::S3:
            return pget(a, 0) * pget(a, 1) * pget(a, 2) == pget(b, 0) * pget(b, 1) * pget(b, 2);
        case AlgebraTag::S1p: {
            bool straight = pget(a, 0) == pget(b, 0) && pget(a, 1) == pget(b, 1);
            bool inverted =
                pget(a, 0).inv() == pget(b, 0) && pget(a, 1).inv() == pget(b, 1);
            return straight || inverted;
        }
        case AlgebraTag::T2:
            return p1_equal(pget(a, 0) + pget(a, 1), pget(a, 2), pget(b, 0) + pget(b, 1),
                            pget(b, 2));
        case AlgebraTag::Tp:
            return p1_equal(pget(a, 0), pget(a, 1), pget(b, 0), pget(b, 1));
        case AlgebraTag::NC1:
        case AlgebraTag::TL1:
            return pget(b, 0) == pget(a, 0) || pget(b, 0) == pget(a, 0).inv();
        case AlgebraTag::WL1:
            return pget(a, 0) == pget(b, 0) && pget(a, 1) == pget(b, 1);
        case AlgebraTag::WL2:
        case AlgebraTag::WL3:
            return pget(a, 0) == pget(b, 0);
        case AlgebraTag::TL2:
            return pget(b, 0) == pget(a, 0) || pget(b, 0) == -pget(a, 0);
        default:
            return true;  // parameterless rows: same tag suffices
    }
}

FieldElem morita_invariant(const TypedAlgebra& t) {
    t.validate();
    switch (t.tag) {
        case AlgebraTag::S1:
        case AlgebraTag::S3:
            return pget(t, 0) * pget(t, 1) * pget(t, 2);
        case AlgebraTag::S2:
        case AlgebraTag::S2p:
        case AlgebraTag::NC2:
            return FieldElem(-1);
        case AlgebraTag::S1p:
            return pget(t, 0) * pget(t, 1) * pget(t, 1);
        case AlgebraTag::NC1:
            return pget(t, 0).pow(3);
        default:
            throw InvalidParameters("type " + tag_name(t.tag) +
                                    " carries no Morita product invariant");
    }
}

bool morita_decide(const TypedAlgebra& a, const TypedAlgebra& b) {
    a.validate();
    b.validate();
    CoarseType ca = coarse_of(a.tag), cb = coarse_of(b.tag);
    if (ca != cb) return false;
    switch (ca) {
        case CoarseType::S:
        case CoarseType::Sp:
        case CoarseType::NC: {
            FieldElem ia = morita_invariant(a);
            FieldElem ib = morita_invariant(b);
            return ib == ia || ib == ia.inv();
        }
        default:
            return true;  // P, T, T', CC, WL, TL: one class each
    }
}

TypedAlgebra morita_normal_form(const TypedAlgebra& t) {
    t.validate();
    const FieldElem one(1);
    switch (coarse_of(t.tag)) {
        case CoarseType::P:
            return {AlgebraTag::P1, {one, one, one}};
        case CoarseType::S:
            return {AlgebraTag::S1, {morita_invariant(t), one, one}};
        case CoarseType::Sp:
            return {AlgebraTag::S1p, {morita_invariant(t), one}};
        case CoarseType::T:
            return {AlgebraTag::T1, {one, one, FieldElem(-1)}};
        case CoarseType::Tp:
            return {AlgebraTag::Tp, {one, FieldElem(0)}};
        case CoarseType::CC:
            return {AlgebraTag::CC, {}};
        case CoarseType::NC:
            return {AlgebraTag::NC1,
                    {t.tag == AlgebraTag::NC1 ? pget(t, 0) : FieldElem(-1)}};
        case CoarseType::WL:
            return {AlgebraTag::WL1, {FieldElem(-1), FieldElem(0)}};
        case CoarseType::TL:
            return {AlgebraTag::TL1, {one}};
    }
    throw InvalidParameters("unknown coarse type");
}

ProjPoint nc_parametrize(const FieldElem& a, const FieldElem& b) {
    if (a.is_zero() && b.is_zero()) throw InvalidParameters("(0:0) is not a point of P^1");
    return ProjPoint(a * a * b, a * b * b, -a.pow(3) - b.pow(3));
}

ProjPoint nc_sigma(int variant, const FieldElem& param, const ProjPoint& p) {
    if (variant != 1 && variant != 2) {
        throw InvalidParameters("nc_sigma variant must be 1 or 2");
    }
    if (param.is_zero() || param.pow(3) == FieldElem(1)) {
        throw InvalidParameters("nc_sigma parameter requires param^3 != 0, 1");
    }
    const FieldElem &x = p[0], &y = p[1], &z = p[2];
    if (!(x.pow(3) + y.pow(3) + x * y * z).is_zero()) {
        throw NotOnCurve(p.str() + " does not lie on the nodal cubic x^3+y^3+xyz");
    }
    ProjPoint node(FieldElem(0), FieldElem(0), FieldElem(1));
    if (p == node) return node;  // both quadric formulas vanish there; sigma fixes the node
    if (variant == 1) {
        const FieldElem& al = param;
        return ProjPoint(al * x * y, al * al * y * y,
                         (al.pow(3) - FieldElem(1)) * x * x + al.pow(3) * y * z);
    }
    const FieldElem& be = param;
    return ProjPoint(be * y * y, be * be * x * y,
                     (FieldElem(1) - be.pow(3)) * x * x + y * z);
}

}  // namespace asreg
