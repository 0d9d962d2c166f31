#pragma once

#include "griesskit/matrix.hpp"
#include "griesskit/rational.hpp"

#include <utility>
#include <vector>

namespace griesskit {

/// Everything the positivity analysis produces for one (n, m) cell.
struct GramReport {
    int n = 3;
    int m = 1;
    RationalMatrix gram;
    std::vector<Rational> leading_minors;
    bool positive_definite = false;
    // determinant families indexed by s = 3..n
    std::vector<Rational> det_b_closed;
    std::vector<Rational> det_b_direct;
    std::vector<Rational> det_c_closed;
    std::vector<Rational> det_c_direct;
};

/// Gram matrix of the invariant form on the pair basis at parameters (n, m).
RationalMatrix gram_matrix(int n, int m);

/// Sylvester test by exact leading principal minors; input must be symmetric.
bool is_positive_definite(const RationalMatrix& m);

/** Gram matrix of the difference vectors omega_{1k} - omega_{2k}, k = 3..s,
 *  built from the closed-form entries and cross-checked against the form. */
RationalMatrix b_matrix(int s, int m);

/** Gram matrix of the vectors omega_{1k} + omega_{2k} - (alpha/2) omega_{12},
 *  k = 3..s, built the same way. */
RationalMatrix c_matrix(int s, int m);

Rational det_b_closed(int s, int m);
Rational det_c_closed(int s, int m);

/// Positive-definiteness verdicts for m = 1..m_max at fixed n.
std::vector<std::pair<int, bool>> classify(int n, int m_max);

/** Verdict through the block decomposition: the rank-3 Gram matrix is
 *  positive definite and every det B_s, det C_s for 3 <= s <= n is positive. */
bool positive_definite_by_blocks(int n, int m);

GramReport gram_report(int n, int m);

}  // namespace griesskit
