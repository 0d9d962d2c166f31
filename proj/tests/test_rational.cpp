#include "griesskit/rational.hpp"

#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <stdexcept>

using griesskit::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(22, 8).str() == "11/4");
    CHECK(Rational(-22, 8).str() == "-11/4");
    CHECK(Rational(22, -8).str() == "-11/4");
    CHECK(Rational(-22, -8).str() == "11/4");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational().str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts p/q and p, rejects junk") {
    CHECK(Rational::parse("7/10") == Rational(7, 10));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-4/6").str() == "-2/3");
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("str round trips through parse") {
    const Rational values[] = {Rational(0), Rational(5), Rational(-5), Rational(3, 7),
                               Rational(-22, 8), Rational(1000000007L, 998244353L)};
    for (const Rational& v : values) CHECK(Rational::parse(v.str()) == v);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 4) == Rational(-3, 4));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    // no float drift: (1/3)*3 is exactly 1
    CHECK(Rational(1, 3) * Rational(3) == Rational(1));
}

TEST_CASE("comparisons follow the rational order") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7, 10) >= Rational(7, 10));
    CHECK(Rational(3, 2) > Rational(1));
    CHECK(Rational(1, 2) != Rational(1, 3));
}

TEST_CASE("sign and is_zero") {
    CHECK(Rational(0).is_zero());
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(3, 7).sign() == 1);
    CHECK_FALSE(Rational(1, 1000000).is_zero());
}

TEST_CASE("pow handles positive, zero and negative exponents") {
    CHECK(griesskit::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(griesskit::pow(Rational(5, 7), 0) == Rational(1));
    CHECK(griesskit::pow(Rational(1, 2), -2) == Rational(4));
    CHECK(griesskit::pow(Rational(0), 4) == Rational(0));
    CHECK_THROWS_AS(griesskit::pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("stream output matches str") {
    std::ostringstream os;
    os << Rational(-7, 2);
    CHECK(os.str() == "-7/2");
}

namespace {

// small deterministic generator for spot checks
struct Lcg {
    std::uint64_t state = 0x2545F4914F6CDD1DULL;
    long next(long lo, long hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<long>((state >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational next_rational() {
        long den = next(1, 40);
        return Rational(next(-50, 50), den);
    }
};

}  // namespace

TEST_CASE("field axioms on sampled triples") {
    Lcg gen;
    for (int trial = 0; trial < 60; ++trial) {
        const Rational a = gen.next_rational();
        const Rational b = gen.next_rational();
        const Rational c = gen.next_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!c.is_zero()) CHECK((a / c) * c == a);
    }
}
