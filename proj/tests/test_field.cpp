#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "asreg/field.hpp"

using asreg::FieldElem;
using asreg::Rational;

namespace {

FieldElem random_elem(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    Rational c[4];
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return FieldElem(c[0], c[1], c[2], c[3]);
}

// Numeric embedding z -> exp(i*pi/6), used only here as an independent
// cross-check on the exact arithmetic.
std::complex<double> embed(const FieldElem& v) {
    const std::complex<double> z = std::polar(1.0, M_PI / 6.0);
    std::complex<double> acc = 0.0;
    std::complex<double> zp = 1.0;
    for (int k = 0; k < 4; ++k) {
        acc += v.coeff(k).get_d() * zp;
        zp *= z;
    }
    return acc;
}

}  // namespace

TEST_CASE("constants satisfy their defining identities") {
    const FieldElem z = FieldElem::zeta();
    const FieldElem eps = FieldElem::eps();
    const FieldElem s3 = FieldElem::sqrt3();
    const FieldElem iu = FieldElem::i();

    CHECK(z.pow(4) == z * z - FieldElem(1));
    CHECK(z.pow(12) == FieldElem(1));
    CHECK(z.pow(6) == FieldElem(-1));
    CHECK(eps == z * z - FieldElem(1));
    CHECK(eps.pow(3) == FieldElem(1));
    CHECK(FieldElem(1) + eps + eps * eps == FieldElem(0));
    CHECK(s3 * s3 == FieldElem(3));
    CHECK(iu * iu == FieldElem(-1));
    CHECK(s3 == z + z - z.pow(3));
    CHECK(iu == z.pow(3));
}

TEST_CASE("inverses") {
    CHECK(FieldElem::eps().inv() == FieldElem::eps().pow(2));
    CHECK(FieldElem(2).inv() == FieldElem(Rational(1, 2)));
    CHECK(FieldElem::i().inv() == -FieldElem::i());
    CHECK(FieldElem::zeta().inv() * FieldElem::zeta() == FieldElem(1));
    CHECK_THROWS_AS(FieldElem(0).inv(), asreg::DivisionByZero);
    CHECK(FieldElem::sqrt3().pow(-2) == FieldElem(Rational(1, 3)));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(20260814);
    for (int trial = 0; trial < 1000; ++trial) {
        FieldElem a = random_elem(rng);
        FieldElem b = random_elem(rng);
        FieldElem c = random_elem(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == FieldElem(0));
        if (!a.is_zero()) {
            CHECK(a * a.inv() == FieldElem(1));
            CHECK((a / a) == FieldElem(1));
        }
    }
}

TEST_CASE("numeric embedding agrees with exact products") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        FieldElem a = random_elem(rng);
        FieldElem b = random_elem(rng);
        auto lhs = embed(a * b);
        auto rhs = embed(a) * embed(b);
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
    CHECK(std::abs(embed(FieldElem::sqrt3()) - std::complex<double>(std::sqrt(3.0), 0)) < 1e-12);
    CHECK(std::abs(embed(FieldElem::i()) - std::complex<double>(0, 1)) < 1e-12);
    CHECK(std::abs(embed(FieldElem::eps()) -
                   std::complex<double>(-0.5, std::sqrt(3.0) / 2)) < 1e-12);
}

TEST_CASE("canonical printing") {
    CHECK(FieldElem(0).str() == "0");
    CHECK(FieldElem(1).str() == "1");
    CHECK(FieldElem(-1).str() == "-1");
    CHECK(FieldElem(Rational(1, 2)).str() == "1/2");
    CHECK(FieldElem::zeta().str() == "z");
    CHECK((-FieldElem::zeta()).str() == "-z");
    CHECK(FieldElem::eps().str() == "-1 + z^2");
    CHECK(FieldElem::sqrt3().str() == "2*z - z^3");
    CHECK((FieldElem(1) + FieldElem::sqrt3()).str() == "1 + 2*z - z^3");
    CHECK((FieldElem(Rational(-3, 2)) * FieldElem::zeta().pow(2)).str() == "-3/2*z^2");
}

TEST_CASE("parser round-trips and expressions") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        FieldElem a = random_elem(rng);
        CHECK(FieldElem::parse(a.str()) == a);
    }
    CHECK(FieldElem::parse("eps") == FieldElem::eps());
    CHECK(FieldElem::parse("sqrt3") == FieldElem::sqrt3());
    CHECK(FieldElem::parse("i") == FieldElem::i());
    CHECK(FieldElem::parse("z^4") == FieldElem::zeta().pow(4));
    CHECK(FieldElem::parse("(1+sqrt3)^2") == FieldElem(4) + FieldElem(2) * FieldElem::sqrt3());
    CHECK(FieldElem::parse("1/2 - z + 2*z^3") ==
          FieldElem(Rational(1, 2), Rational(-1), Rational(0), Rational(2)));
    CHECK(FieldElem::parse("eps^-1") == FieldElem::eps().pow(2));
    CHECK(FieldElem::parse("2/4") == FieldElem(Rational(1, 2)));
    CHECK(FieldElem::parse("1/z^3") == FieldElem::i().inv());
    CHECK(FieldElem::parse(" - 3 * ( z - i ) ") ==
          FieldElem(-3) * (FieldElem::zeta() - FieldElem::i()));
    CHECK_THROWS_AS(FieldElem::parse("foo"), asreg::InvalidParameters);
    CHECK_THROWS_AS(FieldElem::parse("1 +"), asreg::InvalidParameters);
    CHECK_THROWS_AS(FieldElem::parse("(1"), asreg::InvalidParameters);
}
