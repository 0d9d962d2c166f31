#pragma once

#include "griesskit/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace griesskit::lattice {

/** Point of the rank-n lattice whose bilinear form is twice the dot product,
 *  so every vector has even norm and all cocycle signs are trivial. */
struct LatticeVector {
    std::vector<int> coords;

    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

LatticeVector zero_vector(int n);
LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);
int pairing(const LatticeVector& a, const LatticeVector& b);

/// Rational direction in the ambient space; pairings use the same form.
using Direction = std::vector<Rational>;

Direction to_direction(const LatticeVector& g);
Direction coordinate_direction(int rank, int axis);  // 0-based axis
Rational pairing(const Direction& a, const Direction& b);
Rational pairing(const Direction& a, const LatticeVector& b);

/// One creation factor h_direction(-mode) with mode >= 1, direction a 0-based
/// coordinate axis (composite directions are expanded before storage).
struct FockFactor {
    int direction = 0;
    int mode = 1;

    friend auto operator<=>(const FockFactor&, const FockFactor&) = default;
};

/** Product of creation factors in canonical order: mode descending, then
 *  direction ascending. */
struct FockMonomial {
    std::vector<FockFactor> factors;

    int degree() const;  // sum of modes
    FockMonomial with_factor(int direction, int mode) const;
    FockMonomial without_factor(std::size_t position) const;

    friend auto operator<=>(const FockMonomial&, const FockMonomial&) = default;
};

struct BasisKey {
    FockMonomial fock;
    LatticeVector lattice;

    friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// Conformal weight of a basis state: Fock degree plus half the lattice norm.
int weight(const BasisKey& key);

struct WeightCap {
    int max_weight = 4;
};

/** Finite rational combination of basis states of the lattice Fock space.
 *  Zero coefficients are never stored. */
class VOAState {
public:
    VOAState() = default;

    static VOAState vacuum(int rank, const Rational& coeff = Rational(1));
    static VOAState lattice_point(const LatticeVector& g, const Rational& coeff = Rational(1));

    void add(const BasisKey& key, const Rational& coeff);
    const std::map<BasisKey, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Rank of the underlying lattice; 0 for the zero state.
    int rank() const;
    int max_fock_mode() const;

    VOAState& operator+=(const VOAState& o);
    VOAState& operator-=(const VOAState& o);
    friend VOAState operator+(VOAState a, const VOAState& b) { return a += b; }
    friend VOAState operator-(VOAState a, const VOAState& b) { return a -= b; }
    VOAState scaled(const Rational& c) const;

    VOAState truncated(WeightCap cap) const;
    VOAState weight_component(int w) const;
    /// Largest basis weight present (0 for the zero state).
    int max_weight() const;
    bool is_homogeneous_of_weight(int w) const;

    friend bool operator==(const VOAState&, const VOAState&) = default;

private:
    std::map<BasisKey, Rational> terms_;
};

/// h(k) for k != 0: creation for k < 0, contraction against matching
/// creation factors for k > 0 (the lattice label is untouched).
VOAState heisenberg_apply(const Direction& h, int k, const VOAState& v);

/// h(0): multiplies each term by pairing(h, lattice label).
VOAState zero_mode(const Direction& h, const VOAState& v);

/** Mode u_p of the vertex operator attached to the pure lattice state e_gamma:
 *  coefficient of z^{-p-1} in the product of the creation exponential, the
 *  annihilation exponential, the translation by gamma, and z^{pairing}. */
VOAState exp_vertex_mode(const LatticeVector& gamma, int p, const VOAState& v, WeightCap cap);

/// Mode u_p of the operator attached to h(-1)h'(-1)|0>, normal ordered.
VOAState quadratic_mode(const Direction& h, const Direction& hp, int p, const VOAState& v);

/** Mode u_p of Y(u, z) applied to v, for u a combination of pure lattice
 *  states and degree-two mode-one Fock states (the shapes the toolkit needs).
 *  Any other left factor raises std::domain_error. */
VOAState mode_product(const VOAState& u, int p, const VOAState& v, WeightCap cap);

/** The weight-two idempotent-type generator attached to the axis pair (i, j)
 *  inside the rank-n lattice space, 1-based indices. */
VOAState ising_vector(int n, int i, int j);

/// Conformal vector of the rank-3 commutant model: (4/5) of the generator sum.
VOAState ma2_conformal();

/// Complement generator: ma2_conformal() minus ising_vector(3, i, j).
VOAState tilde_vector(int i, int j);

using PairKey = std::pair<int, int>;
using VectorFamily = std::map<PairKey, VOAState>;

VectorFamily ising_family(int n);
VectorFamily tilde_family();

struct RelationCheck {
    std::string name;
    std::vector<PairKey> pairs;
    int mode = 0;
    bool pass = false;
};

struct RelationReport {
    int n = 0;
    int m = 0;
    int weight_cap = 0;
    std::vector<RelationCheck> checks;

    bool all_pass() const;
};

/** Runs every structure-constant identity the family must satisfy at series
 *  parameter m: self products (modes 1..3), one-overlap products (modes 1, 3),
 *  eigenvector differences (modes 1, 2), and disjoint products (modes 0..3). */
RelationReport verify_relations(const VectorFamily& vectors, int m, WeightCap cap = {});

/** Coefficients expressing x in the linear span of the family, or nullopt
 *  when x is outside the span. */
std::optional<std::map<PairKey, Rational>> express_in_span(const VOAState& x,
                                                           const VectorFamily& family);

}  // namespace griesskit::lattice
