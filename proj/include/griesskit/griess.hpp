#pragma once

#include "griesskit/matrix.hpp"
#include "griesskit/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace griesskit {

/// Unordered pair {i, j} of 1-based point indices, stored with i < j.
struct PairIndex {
    int i = 1;
    int j = 2;

    static PairIndex of(int a, int b);  // sorts; throws when a == b or a < 1

    friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

struct GriessParams {
    int n = 3;
    Rational alpha;
    Rational beta;
    std::optional<int> m;  // set when built from the unitary series
};

/// Coefficient vector over the pair basis, length C(n, 2).
using GriessElement = std::vector<Rational>;

/** Commutative algebra with invariant form on the pair basis omega_{ij}.
 *  Structure constants depend on two scalars alpha (the overlap eigenvalue)
 *  and beta (the generator norm parameter). */
class GriessAlgebra {
public:
    /// Parameters from the unitary series: alpha = m(m+1)/4, beta = c(m).
    static GriessAlgebra build(int n, int m);

    /// Free choice of parameters; alpha in {0, 2} collapses the spectrum
    /// and is rejected with std::domain_error.
    static GriessAlgebra build_general(int n, const Rational& alpha, const Rational& beta);

    const GriessParams& params() const { return params_; }
    int rank() const { return params_.n; }
    std::size_t dim() const { return pairs_.size(); }

    std::size_t index_of(const PairIndex& p) const;
    const PairIndex& pair_at(std::size_t idx) const;
    GriessElement basis_vector(const PairIndex& p) const;

    struct SparseTerm {
        std::size_t index;
        Rational coeff;
    };
    /// omega_p . omega_q as a short list of basis terms (at most three).
    std::vector<SparseTerm> basis_product(const PairIndex& p, const PairIndex& q) const;
    Rational basis_form(const PairIndex& p, const PairIndex& q) const;

    GriessElement product(const GriessElement& a, const GriessElement& b) const;
    Rational form(const GriessElement& a, const GriessElement& b) const;

    /// (2 / ((n-2) alpha + 2)) * sum of all basis vectors; acts as 2*id.
    GriessElement conformal_vector() const;

    /// (2 / (alpha + 2)) (omega_ij + omega_jl + omega_il) for distinct i, j, l.
    GriessElement omega_triple(int i, int j, int l) const;

    RationalMatrix ad_matrix(const PairIndex& p) const;

    /// Eigenvalue/multiplicity list of ad(omega_p): always
    /// {(2, 1), (alpha, n-2), (0, C(n,2)-n+1)}; anything else throws.
    std::vector<std::pair<Rational, std::size_t>> spectrum(const PairIndex& p) const;

    /// Involution fixing omega_p and every disjoint basis vector, swapping
    /// omega_{ik} with omega_{jk} for p = {i, j}.
    RationalMatrix miyamoto(const PairIndex& p) const;

    bool is_automorphism(const RationalMatrix& f) const;

    /// Order of the group generated by the listed Miyamoto involutions.
    std::uint64_t generated_group_order(const std::vector<PairIndex>& generators) const;

private:
    GriessAlgebra(int n, const Rational& alpha, const Rational& beta, std::optional<int> m);

    GriessParams params_;
    std::vector<PairIndex> pairs_;
};

/** Closure order of a matrix-generated group by breadth-first search.
 *  Fallback path for endomorphisms that do not permute the basis; throws
 *  std::length_error when the closure exceeds the limit. */
std::uint64_t matrix_group_order(const std::vector<RationalMatrix>& generators,
                                 std::uint64_t limit = 1000000);

}  // namespace griesskit
