#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "asreg/errors.hpp"

namespace asreg {

// Exact rationals. mpq_class keeps gcd-reduced, positive-denominator canonical
// form as long as values are built through arithmetic; raw string construction
// goes through parse_rational which canonicalizes explicitly.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& r);

// Element of K = Q(zeta), zeta a primitive 12th root of unity with minimal
// polynomial x^4 - x^2 + 1. Stored on the power basis {1, z, z^2, z^3};
// reduction uses z^4 = z^2 - 1. The interesting constants all live here:
//   eps   = z^2 - 1   (primitive cube root of unity)
//   sqrt3 = 2z - z^3
//   i     = z^3
class FieldElem {
public:
    FieldElem() : c_{} {}
    FieldElem(int n) : c_{} { c_[0] = n; }                 // NOLINT(google-explicit-constructor)
    FieldElem(long n) : c_{} { c_[0] = static_cast<long>(n); }  // NOLINT
    FieldElem(Rational r) : c_{} { c_[0] = std::move(r); } // NOLINT
    FieldElem(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static FieldElem zeta() { return FieldElem(0, 1, 0, 0); }
    static FieldElem eps() { return FieldElem(-1, 0, 1, 0); }
    static FieldElem sqrt3() { return FieldElem(0, 2, 0, -1); }
    static FieldElem i() { return FieldElem(0, 0, 0, 1); }

    const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
    bool is_zero() const;
    bool is_one() const { return *this == FieldElem(1); }

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

    friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.c_ == b.c_; }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
    // Lexicographic order on coefficients; no arithmetic meaning, just a total
    // order so elements can key std::map/std::set deterministically.
    friend bool operator<(const FieldElem& a, const FieldElem& b) { return a.c_ < b.c_; }

    FieldElem inv() const;          // throws DivisionByZero
    FieldElem pow(long n) const;    // negative n inverts first

    // Canonical text form, e.g. "1/2 - z + 2*z^3"; parse() accepts this plus
    // the shorthands eps, sqrt3, i and arbitrary +-*/^() expressions.
    std::string str() const;
    static FieldElem parse(std::string_view text);

private:
    std::array<Rational, 4> c_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& v);

}  // namespace asreg
