#include "asreg/field.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

namespace asreg {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InvalidParameters("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw InvalidParameters("bad rational literal: " + s);
    }
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

bool FieldElem::is_zero() const {
    for (const auto& c : c_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

FieldElem FieldElem::operator-() const {
    FieldElem r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    // Convolve to degree 6, then fold down with z^4 = z^2 - 1 (hence
    // z^5 = z^3 - z, z^6 = z^4 - z^2 = -1).
    std::array<Rational, 7> t{};
    for (int a = 0; a < 4; ++a) {
        if (sgn(c_[a]) == 0) continue;
        for (int b = 0; b < 4; ++b) {
            if (sgn(o.c_[b]) == 0) continue;
            t[a + b] += c_[a] * o.c_[b];
        }
    }
    std::array<Rational, 4> r{};
    r[0] = t[0] - t[4] - t[6];
    r[1] = t[1] - t[5];
    r[2] = t[2] + t[4];
    r[3] = t[3] + t[5];
    c_ = std::move(r);
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
    return *this *= o.inv();
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    // Solve (this) * x = 1 as a 4x4 rational linear system: column j of A is
    // the coefficient vector of this * z^j.
    Rational A[4][5] = {};
    for (int j = 0; j < 4; ++j) {
        FieldElem zj;
        zj.c_[j] = 1;
        FieldElem col = *this * zj;
        for (int i = 0; i < 4; ++i) A[i][j] = col.c_[i];
    }
    A[0][4] = 1;

    // Gauss-Jordan with exact pivoting (any nonzero pivot works over Q).
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int row = col; row < 4; ++row) {
            if (sgn(A[row][col]) != 0) { piv = row; break; }
        }
        if (piv < 0) throw DivisionByZero("singular multiplication matrix");  // unreachable for field
        if (piv != col) {
            for (int k = 0; k < 5; ++k) swap(A[piv][k], A[col][k]);
        }
        Rational d = A[col][col];
        for (int k = 0; k < 5; ++k) A[col][k] /= d;
        for (int row = 0; row < 4; ++row) {
            if (row == col || sgn(A[row][col]) == 0) continue;
            Rational f = A[row][col];
            for (int k = 0; k < 5; ++k) A[row][k] -= f * A[col][k];
        }
    }
    return FieldElem(A[0][4], A[1][4], A[2][4], A[3][4]);
}

FieldElem FieldElem::pow(long n) const {
    FieldElem base = *this;
    if (n < 0) {
        base = base.inv();
        n = -n;
    }
    FieldElem acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string FieldElem::str() const {
    static const char* names[4] = {"", "z", "z^2", "z^3"};
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        const Rational& c = c_[k];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << '-';
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit_mag = (mag == 1);
        if (k == 0) {
            out << mag.get_str();
        } else if (unit_mag) {
            out << names[k];
        } else {
            out << mag.get_str() << '*' << names[k];
        }
    }
    if (first) return "0";
    return out.str();
}

namespace {

// Recursive-descent parser over + - * / ^ ( ) with atoms: rational literals,
// z, eps, sqrt3, i. '^' takes an integer literal exponent and binds tighter
// than '*'; unary minus applies to a whole term.
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    FieldElem parse() {
        FieldElem v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    std::string_view s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw InvalidParameters("field parse error at offset " + std::to_string(pos_) +
                                ": " + why + " in \"" + std::string(s_) + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    FieldElem expr() {
        bool neg = false;
        skip_ws();
        if (eat('+')) {
        } else if (eat('-')) {
            neg = true;
        }
        FieldElem acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else break;
        }
        return acc;
    }

    FieldElem term() {
        FieldElem acc = factor();
        for (;;) {
            if (eat('*')) acc *= factor();
            else if (eat('/')) acc /= factor();
            else break;
        }
        return acc;
    }

    FieldElem factor() {
        FieldElem base = atom();
        if (eat('^')) {
            long e = int_literal();
            base = base.pow(e);
        }
        return base;
    }

    long int_literal() {
        skip_ws();
        bool neg = eat('-');
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer exponent");
        long v = std::stol(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }

    FieldElem atom() {
        skip_ws();
        if (eat('(')) {
            FieldElem v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            // Allow "n/d" as a single literal only when followed by digits;
            // otherwise leave '/' for term() so "1/z" still parses.
            if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            return FieldElem(parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])))) {
                ++pos_;
            }
            std::string name(s_.substr(start, pos_ - start));
            if (name == "z" || name == "zeta") return FieldElem::zeta();
            if (name == "eps") return FieldElem::eps();
            if (name == "sqrt3") return FieldElem::sqrt3();
            if (name == "i") return FieldElem::i();
            fail("unknown symbol \"" + name + "\"");
        }
        fail("expected atom");
    }
};

}  // namespace

FieldElem FieldElem::parse(std::string_view text) {
    return Parser(text).parse();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& v) {
    return os << v.str();
}

}  // namespace asreg
