#include "griesskit/lattice.hpp"

#include "griesskit/griess.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace griesskit;
using namespace griesskit::lattice;

namespace {

LatticeVector lat(std::vector<int> coords) { return {std::move(coords)}; }

VOAState creation(const Direction& h, int mode, const VOAState& v) {
    return heisenberg_apply(h, -mode, v);
}

// (1/4) sum of alpha_i(-1)^2 |0>, the conformal vector of the full rank-n space
VOAState full_conformal(int n) {
    const VOAState vac = VOAState::vacuum(n);
    VOAState s;
    for (int i = 0; i < n; ++i) {
        const Direction d = coordinate_direction(n, i);
        s += creation(d, 1, creation(d, 1, vac));
    }
    return s.scaled(Rational(1, 4));
}

std::size_t count_name(const RelationReport& report, const std::string& name) {
    std::size_t c = 0;
    for (const auto& check : report.checks)
        if (check.name == name) ++c;
    return c;
}

}  // namespace

TEST_CASE("lattice vectors and pairings") {
    CHECK(pairing(lat({1, -1}), lat({1, -1})) == 4);
    CHECK(pairing(lat({1, 0}), lat({0, 1})) == 0);
    CHECK(pairing(lat({1, -1}), lat({-1, 1})) == -4);
    CHECK(lat({1, 2}) + lat({3, -1}) == lat({4, 1}));
    CHECK(-lat({1, -2}) == lat({-1, 2}));
    CHECK_THROWS_AS(pairing(lat({1}), lat({1, 2})), std::invalid_argument);
    const Direction g = to_direction(lat({1, -1}));
    CHECK(pairing(g, lat({1, 0})) == Rational(2));
    CHECK(pairing(coordinate_direction(2, 0), coordinate_direction(2, 0)) == Rational(2));
    CHECK_THROWS_AS(coordinate_direction(2, 2), std::invalid_argument);
}

TEST_CASE("fock monomials stay canonical") {
    const FockMonomial m = FockMonomial{}.with_factor(1, 1).with_factor(0, 2).with_factor(0, 1);
    REQUIRE(m.factors.size() == 3);
    CHECK(m.factors[0] == FockFactor{0, 2});
    CHECK(m.factors[1] == FockFactor{0, 1});
    CHECK(m.factors[2] == FockFactor{1, 1});
    CHECK(m.degree() == 4);
    CHECK(m.without_factor(0).degree() == 2);
    CHECK_THROWS_AS(m.with_factor(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(m.without_factor(3), std::invalid_argument);
    CHECK(weight({m, lat({1, -1})}) == 6);
    CHECK(weight({FockMonomial{}, lat({1, -1})}) == 2);
}

TEST_CASE("state arithmetic") {
    const VOAState vac = VOAState::vacuum(2);
    const VOAState e = VOAState::lattice_point(lat({1, -1}));
    CHECK((e - e).is_zero());
    CHECK(e.scaled(Rational(0)).is_zero());
    CHECK((e + e) == e.scaled(Rational(2)));
    CHECK(e.rank() == 2);
    CHECK(vac.max_weight() == 0);
    CHECK(e.max_weight() == 2);
    CHECK(e.is_homogeneous_of_weight(2));
    const VOAState mixed = vac + e;
    CHECK_FALSE(mixed.is_homogeneous_of_weight(2));
    CHECK(mixed.weight_component(2) == e);
    CHECK(mixed.weight_component(0) == vac);
    CHECK(mixed.truncated({1}) == vac);
    CHECK(mixed.truncated({2}) == mixed);
    VOAState bad = e;
    CHECK_THROWS_AS(bad.add({FockMonomial{}, zero_vector(3)}, Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("heisenberg modes") {
    const VOAState vac = VOAState::vacuum(2);
    const Direction a1 = coordinate_direction(2, 0);
    const Direction a2 = coordinate_direction(2, 1);

    // h(k) h(-k) |0> = 2k |0>
    CHECK(heisenberg_apply(a1, 1, creation(a1, 1, vac)) == vac.scaled(Rational(2)));
    CHECK(heisenberg_apply(a1, 2, creation(a1, 2, vac)) == vac.scaled(Rational(4)));
    CHECK(heisenberg_apply(a2, 1, creation(a1, 1, vac)).is_zero());
    // two matching factors contract one at a time
    CHECK(heisenberg_apply(a1, 1, creation(a1, 1, creation(a1, 1, vac))) ==
          creation(a1, 1, vac).scaled(Rational(4)));
    // mismatched mode passes through to zero
    CHECK(heisenberg_apply(a1, 2, creation(a1, 1, vac)).is_zero());
    CHECK_THROWS_AS(heisenberg_apply(a1, 0, vac), std::invalid_argument);

    // composite directions expand on creation
    const Direction g = to_direction(lat({1, -1}));
    CHECK(creation(g, 1, vac) == creation(a1, 1, vac) - creation(a2, 1, vac));
    CHECK(heisenberg_apply(g, 1, creation(g, 1, vac)) == vac.scaled(Rational(4)));
}

TEST_CASE("zero mode multiplies by the pairing") {
    const VOAState e = VOAState::lattice_point(lat({1, -1}));
    CHECK(zero_mode(coordinate_direction(2, 0), e) == e.scaled(Rational(2)));
    CHECK(zero_mode(to_direction(lat({1, -1})), e) == e.scaled(Rational(4)));
    CHECK(zero_mode(coordinate_direction(2, 0), VOAState::vacuum(2)).is_zero());
}

TEST_CASE("vertex modes of a pure lattice state") {
    const WeightCap cap{6};
    const LatticeVector g = lat({1, -1});
    const Direction gdir = to_direction(g);
    const VOAState vac = VOAState::vacuum(2);
    const VOAState eminus = VOAState::lattice_point(-g);
    const VOAState eplus = VOAState::lattice_point(g);

    CHECK(exp_vertex_mode(g, 3, eminus, cap) == vac);
    CHECK(exp_vertex_mode(g, 2, eminus, cap) == creation(gdir, 1, vac));
    CHECK(exp_vertex_mode(g, 1, eminus, cap) ==
          (creation(gdir, 1, creation(gdir, 1, vac)) + creation(gdir, 2, vac))
              .scaled(Rational(1, 2)));
    CHECK(exp_vertex_mode(g, 4, eminus, cap).is_zero());

    for (int p = -4; p <= 2; ++p) CHECK(exp_vertex_mode(g, p, eplus, cap).is_zero());
    CHECK(exp_vertex_mode(g, -5, eplus, {8}) == VOAState::lattice_point(lat({2, -2})));

    // grading: the mode shifts weight by 1 - p for a weight-2 left factor
    for (int p = -1; p <= 3; ++p) {
        const VOAState out = exp_vertex_mode(g, p, eminus, cap);
        if (!out.is_zero()) CHECK(out.is_homogeneous_of_weight(3 - p));
    }
}

TEST_CASE("quadratic modes") {
    const VOAState vac = VOAState::vacuum(2);
    const Direction a1 = coordinate_direction(2, 0);
    const Direction a2 = coordinate_direction(2, 1);
    const VOAState u = creation(a1, 1, creation(a2, 1, vac));

    CHECK(quadratic_mode(a1, a2, 3, u) == vac.scaled(Rational(4)));
    CHECK(quadratic_mode(a1, a2, 0, vac).is_zero());
    CHECK(quadratic_mode(a1, a2, -1, vac) == u);
    CHECK(quadratic_mode(a1, a2, -2, vac) ==
          creation(a1, 1, creation(a2, 2, vac)) + creation(a1, 2, creation(a2, 1, vac)));
    CHECK(quadratic_mode(a1, a1, 1, creation(a1, 1, vac)) ==
          creation(a1, 1, vac).scaled(Rational(4)));
    CHECK_THROWS_AS(quadratic_mode(a1, Direction(3), 0, vac), std::invalid_argument);
}

TEST_CASE("full conformal vector generates the grading") {
    const WeightCap cap{6};
    const VOAState omega = full_conformal(3);
    const VOAState vac = VOAState::vacuum(3);
    const LatticeVector g = lat({1, -1, 0});
    const VOAState eg = VOAState::lattice_point(g);

    // L_0 eigenvalues
    CHECK(mode_product(omega, 1, eg, cap) == eg.scaled(Rational(2)));
    const VOAState w3 = creation(coordinate_direction(3, 0), 2,
                                 creation(coordinate_direction(3, 1), 1, vac));
    CHECK(mode_product(omega, 1, w3, cap) == w3.scaled(Rational(3)));
    const VOAState u12 = ising_vector(3, 1, 2);
    CHECK(mode_product(omega, 1, u12, cap) == u12.scaled(Rational(2)));
    // L_1 kills the primary, L_{-1} is the lattice translation derivative
    CHECK(mode_product(omega, 2, eg, cap).is_zero());
    CHECK(mode_product(omega, 0, eg, cap) == creation(to_direction(g), 1, eg));
    // central term: omega_3 omega = (rank/2) |0>
    CHECK(mode_product(omega, 3, omega, cap) == vac.scaled(Rational(3, 2)));
    CHECK(mode_product(omega, 2, omega, cap).is_zero());
}

TEST_CASE("mode_product rejects unsupported left factors") {
    const VOAState vac = VOAState::vacuum(2);
    const Direction a1 = coordinate_direction(2, 0);
    CHECK_THROWS_AS(mode_product(creation(a1, 1, vac), 0, vac, {4}), std::domain_error);
    CHECK_THROWS_AS(mode_product(creation(a1, 2, vac), 0, vac, {4}), std::domain_error);
    CHECK_THROWS_AS(
        mode_product(creation(a1, 1, VOAState::lattice_point(lat({1, 0}))), 0, vac, {4}),
        std::domain_error);
    CHECK_THROWS_AS(
        mode_product(creation(a1, 1, creation(a1, 2, vac)), 0, vac, {4}),
        std::domain_error);
}

TEST_CASE("generator values") {
    const VOAState u = ising_vector(3, 1, 2);
    CHECK(u.is_homogeneous_of_weight(2));
    CHECK(u.terms().size() == 5);
    CHECK(ising_vector(3, 2, 1) == u);
    CHECK_THROWS_AS(ising_vector(9, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(ising_vector(3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(ising_vector(3, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(tilde_vector(1, 4), std::invalid_argument);

    CHECK(ma2_conformal() ==
          (ising_vector(3, 1, 2) + ising_vector(3, 1, 3) + ising_vector(3, 2, 3))
              .scaled(Rational(4, 5)));
    CHECK(tilde_vector(1, 2) == ma2_conformal() - ising_vector(3, 1, 2));
    CHECK(ising_family(4).size() == 6);
    CHECK(tilde_family().size() == 3);
    CHECK_THROWS_AS(ising_family(2), std::invalid_argument);
    CHECK_THROWS_AS(ising_family(9), std::invalid_argument);
}

TEST_CASE("generator products hit the series constants") {
    const WeightCap cap{4};
    const VOAState vac = VOAState::vacuum(3);
    const VOAState u12 = ising_vector(3, 1, 2);
    const VOAState u13 = ising_vector(3, 1, 3);
    const VOAState u23 = ising_vector(3, 2, 3);

    CHECK(mode_product(u12, 1, u12, cap) == u12.scaled(Rational(2)));
    CHECK(mode_product(u12, 2, u12, cap).is_zero());
    CHECK(mode_product(u12, 3, u12, cap) == vac.scaled(Rational(1, 4)));
    CHECK(mode_product(u12, 1, u13, cap) ==
          (u12 + u13 - u23).scaled(Rational(1, 4)));
    CHECK(mode_product(u12, 3, u13, cap) == vac.scaled(Rational(1, 32)));

    const VOAState w = ma2_conformal();
    CHECK(mode_product(w, 1, w, cap) == w.scaled(Rational(2)));
    CHECK(mode_product(w, 3, w, cap) == vac.scaled(Rational(3, 5)));

    const VOAState t12 = tilde_vector(1, 2);
    const VOAState t13 = tilde_vector(1, 3);
    const VOAState t23 = tilde_vector(2, 3);
    CHECK(mode_product(w, 1, t12, cap) == t12.scaled(Rational(2)));
    CHECK(mode_product(t12, 1, t12, cap) == t12.scaled(Rational(2)));
    CHECK(mode_product(t12, 3, t12, cap) == vac.scaled(Rational(7, 20)));
    CHECK(mode_product(t12, 1, t23, cap) ==
          (t12 + t23 - t13).scaled(Rational(3, 4)));
    CHECK(mode_product(t12, 3, t23, cap) == vac.scaled(Rational(21, 160)));
}

TEST_CASE("mode symmetries between weight-two states") {
    const WeightCap cap{4};
    for (const auto& [u, w] : {std::pair{ising_vector(3, 1, 2), ising_vector(3, 1, 3)},
                               std::pair{tilde_vector(1, 2), tilde_vector(2, 3)},
                               std::pair{ising_vector(4, 1, 2), ising_vector(4, 3, 4)}}) {
        CHECK(mode_product(u, 1, w, cap) == mode_product(w, 1, u, cap));
        CHECK(mode_product(u, 3, w, cap) == mode_product(w, 3, u, cap));
        // skew symmetry at mode 2: the translation corrections vanish
        CHECK(mode_product(u, 2, w, cap) == mode_product(w, 2, u, cap).scaled(Rational(-1)));
    }
}

TEST_CASE("verify_relations on the lattice families") {
    const RelationReport r31 = verify_relations(ising_family(3), 1);
    CHECK(r31.all_pass());
    CHECK(r31.n == 3);
    CHECK(r31.m == 1);
    CHECK(r31.checks.size() == 27);
    CHECK(count_name(r31, "self_mode1_eigen") == 3);
    CHECK(count_name(r31, "self_mode2_zero") == 3);
    CHECK(count_name(r31, "self_mode3_norm") == 3);
    CHECK(count_name(r31, "adjacent_mode1_product") == 6);
    CHECK(count_name(r31, "adjacent_mode3_form") == 6);
    CHECK(count_name(r31, "difference_mode1_eigen") == 3);
    CHECK(count_name(r31, "difference_mode2_zero") == 3);

    const RelationReport r41 = verify_relations(ising_family(4), 1);
    CHECK(r41.all_pass());
    CHECK(r41.checks.size() == 114);
    CHECK(count_name(r41, "adjacent_mode1_product") == 24);
    CHECK(count_name(r41, "disjoint_mode0_zero") == 6);
    CHECK(count_name(r41, "disjoint_mode3_zero") == 6);
    CHECK(count_name(r41, "difference_mode1_eigen") == 12);

    const RelationReport r32 = verify_relations(tilde_family(), 2);
    CHECK(r32.all_pass());
    CHECK(r32.checks.size() == 27);

    // the tilde family satisfies the m = 1 constants nowhere
    const RelationReport wrong = verify_relations(tilde_family(), 1);
    CHECK_FALSE(wrong.all_pass());
}

TEST_CASE("verify_relations validates its input") {
    VectorFamily family = ising_family(3);
    family.erase({1, 3});
    CHECK_THROWS_AS(verify_relations(family, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_relations(VectorFamily{}, 1), std::invalid_argument);
    VectorFamily zeroed = ising_family(3);
    zeroed[{1, 2}] = VOAState{};
    CHECK_THROWS_AS(verify_relations(zeroed, 1), std::invalid_argument);
}

TEST_CASE("express_in_span recovers product coefficients") {
    const VectorFamily family = ising_family(3);
    const VOAState prod = mode_product(family.at({1, 2}), 1, family.at({2, 3}), {4});
    const auto coeffs = express_in_span(prod, family);
    REQUIRE(coeffs.has_value());
    CHECK(coeffs->at({1, 2}) == Rational(1, 4));
    CHECK(coeffs->at({2, 3}) == Rational(1, 4));
    CHECK(coeffs->at({1, 3}) == Rational(-1, 4));

    CHECK_FALSE(express_in_span(VOAState::vacuum(3), family).has_value());
    CHECK_THROWS_AS(express_in_span(prod, VectorFamily{}), std::invalid_argument);
    const auto zero = express_in_span(VOAState{}, family);
    REQUIRE(zero.has_value());
    for (const auto& [key, c] : *zero) CHECK(c == Rational(0));
}

TEST_CASE("lattice products match the abstract structure constants") {
    struct Cell {
        VectorFamily family;
        int n;
        int m;
    };
    const std::vector<Cell> cells = {{ising_family(3), 3, 1},
                                     {ising_family(4), 4, 1},
                                     {tilde_family(), 3, 2}};
    for (const auto& cell : cells) {
        const GriessAlgebra algebra = GriessAlgebra::build(cell.n, cell.m);
        const VOAState unit = VOAState::vacuum(cell.family.begin()->second.rank());
        for (const auto& [pk, u] : cell.family)
            for (const auto& [qk, w] : cell.family) {
                const PairIndex pp{pk.first, pk.second};
                const PairIndex qq{qk.first, qk.second};
                const auto coeffs = express_in_span(mode_product(u, 1, w, {4}), cell.family);
                REQUIRE(coeffs.has_value());
                GriessElement extracted(algebra.dim());
                for (const auto& [key, c] : *coeffs)
                    extracted[algebra.index_of({key.first, key.second})] = c;
                GriessElement expected(algebra.dim());
                for (const auto& term : algebra.basis_product(pp, qq))
                    expected[term.index] += term.coeff;
                CHECK(extracted == expected);
                CHECK(mode_product(u, 3, w, {4}) ==
                      unit.scaled(algebra.basis_form(pp, qq)));
            }
    }
}

TEST_CASE("results are stable under a larger weight cap") {
    const LatticeVector g = lat({1, -1});
    const VOAState eminus = VOAState::lattice_point(-g);
    for (int p = -2; p <= 3; ++p) {
        const VOAState tight = exp_vertex_mode(g, p, eminus, {4});
        const VOAState wide = exp_vertex_mode(g, p, eminus, {7});
        CHECK(tight == wide.truncated({4}));
    }
    const VOAState u12 = ising_vector(3, 1, 2);
    const VOAState u13 = ising_vector(3, 1, 3);
    for (int p = 0; p <= 3; ++p)
        CHECK(mode_product(u12, p, u13, {4}) ==
              mode_product(u12, p, u13, {6}).truncated({4}));
    const RelationReport wide = verify_relations(tilde_family(), 2, {6});
    CHECK(wide.all_pass());
    CHECK(wide.weight_cap == 6);
}
