#include "griesskit/matrix.hpp"

#include <doctest.h>

#include <cstdint>
#include <stdexcept>

using griesskit::Rational;
using griesskit::RationalMatrix;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows, long den = 1) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j], den);
    return m;
}

// reference determinant by cofactor expansion, for cross-checking
Rational cofactor_det(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        RationalMatrix sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const Rational term = m.at(0, j) * cofactor_det(sub);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

struct Lcg {
    std::uint64_t state = 0x9E3779B97F4A7C15ULL;
    long next(long lo, long hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<long>((state >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace

TEST_CASE("identity and product") {
    const RationalMatrix id = RationalMatrix::identity(3);
    const RationalMatrix a = from_rows({{1, 2, 3}, {0, 1, 4}, {5, 6, 0}});
    CHECK(a * id == a);
    CHECK(id * a == a);
    const RationalMatrix b = from_rows({{1, 0}, {2, 1}, {0, 3}});
    const RationalMatrix ab = a * b;
    CHECK(ab.rows() == 3);
    CHECK(ab.cols() == 2);
    CHECK(ab.at(0, 0) == Rational(5));
    CHECK(ab.at(2, 1) == Rational(6));
    CHECK_THROWS_AS(b * a, std::invalid_argument);
}

TEST_CASE("apply multiplies by a column vector") {
    const RationalMatrix a = from_rows({{2, 0}, {1, 3}});
    const std::vector<Rational> x = {Rational(1, 2), Rational(2)};
    const std::vector<Rational> y = a.apply(x);
    CHECK(y[0] == Rational(1));
    CHECK(y[1] == Rational(13, 2));
    CHECK_THROWS_AS(a.apply({Rational(1)}), std::invalid_argument);
}

TEST_CASE("determinant on fixed cases") {
    CHECK(from_rows({{3}}).determinant() == Rational(3));
    CHECK(from_rows({{1, 2}, {3, 4}}).determinant() == Rational(-2));
    CHECK(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).determinant() == Rational(0));
    CHECK(from_rows({{0, 1}, {1, 0}}).determinant() == Rational(-1));
    // rational entries
    CHECK(from_rows({{1, 2}, {3, 4}}, 2).determinant() == Rational(-1, 2));
    CHECK_THROWS_AS(from_rows({{1, 2, 3}, {4, 5, 6}}).determinant(), std::invalid_argument);
}

TEST_CASE("determinant agrees with cofactor expansion on sampled matrices") {
    Lcg gen;
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.next(1, 5));
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = Rational(gen.next(-6, 6), gen.next(1, 4));
        CHECK(m.determinant() == cofactor_det(m));
    }
}

TEST_CASE("rank detects dependent rows") {
    CHECK(from_rows({{1, 2}, {2, 4}}).rank() == 1);
    CHECK(from_rows({{1, 2}, {3, 4}}).rank() == 2);
    CHECK(from_rows({{0, 0}, {0, 0}}).rank() == 0);
    CHECK(from_rows({{1, 0, 2}, {0, 1, 1}, {1, 1, 3}}).rank() == 2);
    CHECK(RationalMatrix::identity(4).rank() == 4);
}

TEST_CASE("leading principal minors, including a zero pivot") {
    const RationalMatrix a = from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    const auto minors = a.leading_principal_minors();
    CHECK(minors.size() == 3);
    CHECK(minors[0] == Rational(2));
    CHECK(minors[1] == Rational(5));
    CHECK(minors[2] == a.determinant());

    const RationalMatrix z = from_rows({{0, 1}, {1, 0}});
    const auto zm = z.leading_principal_minors();
    CHECK(zm[0] == Rational(0));
    CHECK(zm[1] == Rational(-1));
}

TEST_CASE("minors match cofactor determinants on sampled matrices") {
    Lcg gen;
    for (int trial = 0; trial < 10; ++trial) {
        RationalMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Rational(gen.next(-3, 3));
        const auto minors = m.leading_principal_minors();
        for (std::size_t k = 1; k <= 4; ++k) {
            RationalMatrix lead(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
            CHECK(minors[k - 1] == cofactor_det(lead));
        }
    }
}

TEST_CASE("solve_exact on consistent and inconsistent systems") {
    const RationalMatrix a = from_rows({{1, 1}, {1, -1}, {2, 0}});
    const auto sol = solve_exact(a, {Rational(3), Rational(1), Rational(4)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rational(2));
    CHECK((*sol)[1] == Rational(1));

    const auto none = solve_exact(a, {Rational(3), Rational(1), Rational(5)});
    CHECK_FALSE(none.has_value());

    CHECK_THROWS_AS(solve_exact(a, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("symmetry and transpose") {
    const RationalMatrix s = from_rows({{1, 2}, {2, 5}});
    CHECK(s.is_symmetric());
    const RationalMatrix a = from_rows({{1, 2}, {3, 5}});
    CHECK_FALSE(a.is_symmetric());
    CHECK(a.transposed().at(0, 1) == Rational(3));
    CHECK((a + a.transposed()).is_symmetric());
    CHECK((a - a).is_zero());
    CHECK(a.scaled(Rational(2)).at(1, 1) == Rational(10));
}

TEST_CASE("vector helpers") {
    const std::vector<Rational> u = {Rational(1), Rational(2)};
    const std::vector<Rational> v = {Rational(3), Rational(-1)};
    CHECK(griesskit::add(u, v)[0] == Rational(4));
    CHECK(griesskit::sub(u, v)[1] == Rational(3));
    CHECK(griesskit::scaled(u, Rational(1, 2))[1] == Rational(1));
    CHECK_THROWS_AS(griesskit::add(u, {Rational(1)}), std::invalid_argument);
}
