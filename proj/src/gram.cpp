#include "griesskit/gram.hpp"

#include "griesskit/griess.hpp"
#include "griesskit/minimal_model.hpp"

#include <stdexcept>
#include <string>

namespace griesskit {

RationalMatrix gram_matrix(int n, int m) {
    const GriessAlgebra algebra = GriessAlgebra::build(n, m);
    RationalMatrix g(algebra.dim(), algebra.dim());
    for (std::size_t p = 0; p < algebra.dim(); ++p)
        for (std::size_t q = 0; q < algebra.dim(); ++q)
            g.at(p, q) = algebra.basis_form(algebra.pair_at(p), algebra.pair_at(q));
    return g;
}

bool is_positive_definite(const RationalMatrix& m) {
    if (!m.is_symmetric())
        throw std::invalid_argument("is_positive_definite: matrix is not symmetric");
    for (const Rational& minor : m.leading_principal_minors())
        if (minor.sign() <= 0) return false;
    return true;
}

namespace {

void check_block_range(const char* who, int s, int m) {
    if (s < 3) throw std::invalid_argument(std::string(who) + ": s must be >= 3");
    if (m < 1) throw std::invalid_argument(std::string(who) + ": m must be >= 1");
}

// The two block families live inside the rank-s algebra: rows and columns are
// indexed by k = 3..s. Entries come from the closed forms below; each matrix
// is cross-checked against the invariant form before being returned.
RationalMatrix block_from_vectors(const GriessAlgebra& algebra,
                                  const std::vector<GriessElement>& vectors) {
    RationalMatrix g(vectors.size(), vectors.size());
    for (std::size_t a = 0; a < vectors.size(); ++a)
        for (std::size_t b = 0; b < vectors.size(); ++b)
            g.at(a, b) = algebra.form(vectors[a], vectors[b]);
    return g;
}

}  // namespace

RationalMatrix b_matrix(int s, int m) {
    check_block_range("b_matrix", s, m);
    const GriessAlgebra algebra = GriessAlgebra::build(s, m);
    const Rational alpha = algebra.params().alpha;
    const Rational beta = algebra.params().beta;
    const Rational diag = beta * (Rational(1) - alpha / 4);
    const Rational off = alpha * beta / 4;
    const std::size_t size = static_cast<std::size_t>(s - 2);
    RationalMatrix g(size, size);
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b) g.at(a, b) = (a == b) ? diag : off;

    std::vector<GriessElement> vectors;
    for (int k = 3; k <= s; ++k)
        vectors.push_back(sub(algebra.basis_vector(PairIndex::of(1, k)),
                              algebra.basis_vector(PairIndex::of(2, k))));
    if (g != block_from_vectors(algebra, vectors))
        throw std::logic_error("b_matrix: closed-form entries disagree with the form");
    return g;
}

RationalMatrix c_matrix(int s, int m) {
    check_block_range("c_matrix", s, m);
    const GriessAlgebra algebra = GriessAlgebra::build(s, m);
    const Rational alpha = algebra.params().alpha;
    const Rational beta = algebra.params().beta;
    const Rational off = (alpha * beta / 4) * (Rational(1) - alpha / 2);
    const Rational diag = beta + off;
    const std::size_t size = static_cast<std::size_t>(s - 2);
    RationalMatrix g(size, size);
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b) g.at(a, b) = (a == b) ? diag : off;

    std::vector<GriessElement> vectors;
    const GriessElement omega12 = algebra.basis_vector(PairIndex::of(1, 2));
    for (int k = 3; k <= s; ++k)
        vectors.push_back(sub(add(algebra.basis_vector(PairIndex::of(1, k)),
                                  algebra.basis_vector(PairIndex::of(2, k))),
                              scaled(omega12, alpha / 2)));
    if (g != block_from_vectors(algebra, vectors))
        throw std::logic_error("c_matrix: closed-form entries disagree with the form");
    return g;
}

Rational det_b_closed(int s, int m) {
    check_block_range("det_b_closed", s, m);
    const long mm1 = static_cast<long>(m) * (m + 1);
    const Rational f = Rational(static_cast<long>(m) * (m + 5),
                                static_cast<long>(m + 2) * (m + 3));
    return pow(f, s - 2) * pow(Rational(1) - Rational(mm1, 8), s - 3) *
           (Rational(1) + Rational(static_cast<long>(s - 4) * mm1, 16));
}

Rational det_c_closed(int s, int m) {
    check_block_range("det_c_closed", s, m);
    const long mm1 = static_cast<long>(m) * (m + 1);
    const Rational f = Rational(static_cast<long>(m) * (m + 5),
                                static_cast<long>(m + 2) * (m + 3));
    const Rational g = Rational(static_cast<long>(m) * m * (m + 1) * (m + 5),
                                16L * (m + 2) * (m + 3));
    return pow(f, s - 3) *
           (f + Rational(s - 2) * g * (Rational(1) - Rational(mm1, 8)));
}

std::vector<std::pair<int, bool>> classify(int n, int m_max) {
    if (n < 3) throw std::invalid_argument("classify: n must be >= 3");
    if (m_max < 1) throw std::invalid_argument("classify: m_max must be >= 1");
    std::vector<std::pair<int, bool>> rows;
    for (int m = 1; m <= m_max; ++m) rows.push_back({m, is_positive_definite(gram_matrix(n, m))});
    return rows;
}

bool positive_definite_by_blocks(int n, int m) {
    if (n < 3) throw std::invalid_argument("positive_definite_by_blocks: n must be >= 3");
    if (m < 1) throw std::invalid_argument("positive_definite_by_blocks: m must be >= 1");
    if (!is_positive_definite(gram_matrix(3, m))) return false;
    for (int s = 3; s <= n; ++s) {
        if (b_matrix(s, m).determinant().sign() <= 0) return false;
        if (c_matrix(s, m).determinant().sign() <= 0) return false;
    }
    return true;
}

GramReport gram_report(int n, int m) {
    GramReport report;
    report.n = n;
    report.m = m;
    report.gram = gram_matrix(n, m);
    report.leading_minors = report.gram.leading_principal_minors();
    report.positive_definite = true;
    for (const Rational& minor : report.leading_minors)
        if (minor.sign() <= 0) report.positive_definite = false;
    for (int s = 3; s <= n; ++s) {
        report.det_b_closed.push_back(det_b_closed(s, m));
        report.det_b_direct.push_back(b_matrix(s, m).determinant());
        report.det_c_closed.push_back(det_c_closed(s, m));
        report.det_c_direct.push_back(c_matrix(s, m).determinant());
    }
    return report;
}

}  // namespace griesskit
