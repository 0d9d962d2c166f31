#include "griesskit/griess.hpp"

#include "griesskit/minimal_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace griesskit {

PairIndex PairIndex::of(int a, int b) {
    if (a == b) throw std::invalid_argument("PairIndex: indices must be distinct");
    if (a > b) std::swap(a, b);
    if (a < 1) throw std::invalid_argument("PairIndex: indices are 1-based");
    return {a, b};
}

GriessAlgebra::GriessAlgebra(int n, const Rational& alpha, const Rational& beta,
                             std::optional<int> m) {
    params_ = {n, alpha, beta, m};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs_.push_back({i, j});
}

GriessAlgebra GriessAlgebra::build(int n, int m) {
    if (n < 3) throw std::invalid_argument("GriessAlgebra::build: n must be >= 3");
    if (m < 1) throw std::invalid_argument("GriessAlgebra::build: m must be >= 1");
    const Rational alpha = conformal_weight({m, m + 1, 1});
    return GriessAlgebra(n, alpha, central_charge(m), m);
}

GriessAlgebra GriessAlgebra::build_general(int n, const Rational& alpha, const Rational& beta) {
    if (n < 3) throw std::invalid_argument("GriessAlgebra::build_general: n must be >= 3");
    if (alpha == Rational(0) || alpha == Rational(2))
        throw std::domain_error("GriessAlgebra::build_general: alpha in {0, 2} degenerates the spectrum");
    return GriessAlgebra(n, alpha, beta, std::nullopt);
}

std::size_t GriessAlgebra::index_of(const PairIndex& p) const {
    const int n = params_.n;
    if (p.i < 1 || p.i >= p.j || p.j > n)
        throw std::invalid_argument("GriessAlgebra: pair index out of range");
    // pairs in lexicographic order: offset of row i, then column gap
    const std::size_t row = static_cast<std::size_t>(p.i - 1);
    return row * n - row * (row + 1) / 2 + static_cast<std::size_t>(p.j - p.i - 1);
}

const PairIndex& GriessAlgebra::pair_at(std::size_t idx) const {
    if (idx >= pairs_.size()) throw std::invalid_argument("GriessAlgebra: basis index out of range");
    return pairs_[idx];
}

GriessElement GriessAlgebra::basis_vector(const PairIndex& p) const {
    GriessElement e(dim());
    e[index_of(p)] = Rational(1);
    return e;
}

namespace {

int shared_point(const PairIndex& p, const PairIndex& q) {
    if (p.i == q.i || p.i == q.j) return p.i;
    if (p.j == q.i || p.j == q.j) return p.j;
    return 0;
}

PairIndex symmetric_difference(const PairIndex& p, const PairIndex& q, int shared) {
    const int a = (p.i == shared) ? p.j : p.i;
    const int b = (q.i == shared) ? q.j : q.i;
    return PairIndex::of(a, b);
}

}  // namespace

std::vector<GriessAlgebra::SparseTerm> GriessAlgebra::basis_product(const PairIndex& p,
                                                                    const PairIndex& q) const {
    if (p == q) return {{index_of(p), Rational(2)}};
    const int shared = shared_point(p, q);
    if (shared == 0) {
        index_of(p);  // still validate the arguments
        index_of(q);
        return {};
    }
    const Rational half_alpha = params_.alpha / 2;
    const PairIndex third = symmetric_difference(p, q, shared);
    return {{index_of(p), half_alpha}, {index_of(q), half_alpha}, {index_of(third), -half_alpha}};
}

Rational GriessAlgebra::basis_form(const PairIndex& p, const PairIndex& q) const {
    index_of(p);
    index_of(q);
    if (p == q) return params_.beta / 2;
    if (shared_point(p, q) != 0) return params_.alpha * params_.beta / 8;
    return Rational(0);
}

GriessElement GriessAlgebra::product(const GriessElement& a, const GriessElement& b) const {
    if (a.size() != dim() || b.size() != dim())
        throw std::invalid_argument("GriessAlgebra::product: dimension mismatch");
    GriessElement out(dim());
    for (std::size_t p = 0; p < dim(); ++p) {
        if (a[p].is_zero()) continue;
        for (std::size_t q = 0; q < dim(); ++q) {
            if (b[q].is_zero()) continue;
            const Rational c = a[p] * b[q];
            for (const auto& term : basis_product(pairs_[p], pairs_[q]))
                out[term.index] += c * term.coeff;
        }
    }
    return out;
}

Rational GriessAlgebra::form(const GriessElement& a, const GriessElement& b) const {
    if (a.size() != dim() || b.size() != dim())
        throw std::invalid_argument("GriessAlgebra::form: dimension mismatch");
    Rational out;
    for (std::size_t p = 0; p < dim(); ++p) {
        if (a[p].is_zero()) continue;
        for (std::size_t q = 0; q < dim(); ++q)
            if (!b[q].is_zero()) out += a[p] * b[q] * basis_form(pairs_[p], pairs_[q]);
    }
    return out;
}

GriessElement GriessAlgebra::conformal_vector() const {
    const Rational denom = Rational(params_.n - 2) * params_.alpha + 2;
    if (denom.is_zero())
        throw std::domain_error("GriessAlgebra::conformal_vector: parameters give a zero denominator");
    const Rational coeff = Rational(2) / denom;
    GriessElement out(dim(), coeff);
    return out;
}

GriessElement GriessAlgebra::omega_triple(int i, int j, int l) const {
    if (i == j || j == l || i == l)
        throw std::invalid_argument("GriessAlgebra::omega_triple: indices must be distinct");
    const Rational denom = params_.alpha + 2;
    if (denom.is_zero())
        throw std::domain_error("GriessAlgebra::omega_triple: alpha = -2 gives a zero denominator");
    const Rational coeff = Rational(2) / denom;
    GriessElement out(dim());
    out[index_of(PairIndex::of(i, j))] = coeff;
    out[index_of(PairIndex::of(j, l))] = coeff;
    out[index_of(PairIndex::of(i, l))] = coeff;
    return out;
}

RationalMatrix GriessAlgebra::ad_matrix(const PairIndex& p) const {
    RationalMatrix m(dim(), dim());
    for (std::size_t q = 0; q < dim(); ++q)
        for (const auto& term : basis_product(p, pairs_[q])) m.at(term.index, q) = term.coeff;
    return m;
}

std::vector<std::pair<Rational, std::size_t>> GriessAlgebra::spectrum(const PairIndex& p) const {
    const RationalMatrix m = ad_matrix(p);
    const std::vector<Rational> eigenvalues = {Rational(2), params_.alpha, Rational(0)};
    std::vector<std::pair<Rational, std::size_t>> out;
    std::size_t total = 0;
    for (const Rational& lambda : eigenvalues) {
        const RationalMatrix shifted = m - RationalMatrix::identity(dim()).scaled(lambda);
        const std::size_t mult = dim() - shifted.rank();
        out.push_back({lambda, mult});
        total += mult;
    }
    const RationalMatrix id = RationalMatrix::identity(dim());
    const RationalMatrix minpoly =
        m * (m - id.scaled(params_.alpha)) * (m - id.scaled(Rational(2)));
    if (total != dim() || !minpoly.is_zero())
        throw std::logic_error("GriessAlgebra::spectrum: adjoint action is not semisimple on {0, alpha, 2}");
    return out;
}

RationalMatrix GriessAlgebra::miyamoto(const PairIndex& p) const {
    index_of(p);
    RationalMatrix m(dim(), dim());
    for (std::size_t q = 0; q < dim(); ++q) {
        const PairIndex& src = pairs_[q];
        const auto relabel = [&](int x) {
            if (x == p.i) return p.j;
            if (x == p.j) return p.i;
            return x;
        };
        const PairIndex dst = PairIndex::of(relabel(src.i), relabel(src.j));
        m.at(index_of(dst), q) = Rational(1);
    }
    return m;
}

bool GriessAlgebra::is_automorphism(const RationalMatrix& f) const {
    if (f.rows() != dim() || f.cols() != dim())
        throw std::invalid_argument("GriessAlgebra::is_automorphism: dimension mismatch");
    std::vector<GriessElement> image(dim(), GriessElement(dim()));
    for (std::size_t q = 0; q < dim(); ++q)
        for (std::size_t r = 0; r < dim(); ++r) image[q][r] = f.at(r, q);
    for (std::size_t p = 0; p < dim(); ++p)
        for (std::size_t q = p; q < dim(); ++q) {
            GriessElement mapped(dim());
            for (const auto& term : basis_product(pairs_[p], pairs_[q]))
                mapped = add(mapped, scaled(image[term.index], term.coeff));
            if (product(image[p], image[q]) != mapped) return false;
            if (form(image[p], image[q]) != basis_form(pairs_[p], pairs_[q])) return false;
        }
    const GriessElement omega = conformal_vector();
    return f.apply(omega) == omega;
}

namespace {

using Permutation = std::vector<int>;

// A permutation matrix column by column; nullopt when any column is not a
// single unit entry.
std::optional<Permutation> as_permutation(const RationalMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    Permutation perm(m.cols(), -1);
    std::vector<bool> hit(m.rows(), false);
    for (std::size_t q = 0; q < m.cols(); ++q) {
        int target = -1;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (m.at(r, q).is_zero()) continue;
            if (target >= 0 || m.at(r, q) != Rational(1)) return std::nullopt;
            target = static_cast<int>(r);
        }
        if (target < 0 || hit[target]) return std::nullopt;
        perm[q] = target;
        hit[target] = true;
    }
    return perm;
}

std::uint64_t permutation_group_order(const std::vector<Permutation>& generators) {
    if (generators.empty()) return 1;
    std::set<Permutation> seen;
    std::vector<Permutation> frontier;
    Permutation id(generators.front().size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const Permutation& g : frontier)
            for (const Permutation& gen : generators) {
                Permutation h(g.size());
                for (std::size_t x = 0; x < g.size(); ++x)
                    h[x] = gen[static_cast<std::size_t>(g[x])];
                if (seen.insert(h).second) next.push_back(std::move(h));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace

std::uint64_t GriessAlgebra::generated_group_order(const std::vector<PairIndex>& generators) const {
    if (params_.n > 8)
        throw std::length_error("GriessAlgebra::generated_group_order: closure limited to n <= 8");
    std::vector<Permutation> perms;
    std::vector<RationalMatrix> mats;
    bool all_permutations = true;
    for (const PairIndex& p : generators) {
        const RationalMatrix m = miyamoto(p);
        mats.push_back(m);
        if (auto perm = as_permutation(m); perm && all_permutations)
            perms.push_back(*perm);
        else
            all_permutations = false;
    }
    if (all_permutations) return permutation_group_order(perms);
    return matrix_group_order(mats);
}

std::uint64_t matrix_group_order(const std::vector<RationalMatrix>& generators,
                                 std::uint64_t limit) {
    if (generators.empty()) return 1;
    const std::size_t n = generators.front().rows();
    for (const auto& g : generators)
        if (g.rows() != n || g.cols() != n)
            throw std::invalid_argument("matrix_group_order: generators of mixed size");
    const auto key = [n](const RationalMatrix& m) {
        std::string k;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                k += m.at(i, j).str();
                k += '|';
            }
        return k;
    };
    std::map<std::string, RationalMatrix> seen;
    const RationalMatrix id = RationalMatrix::identity(n);
    seen.emplace(key(id), id);
    std::vector<RationalMatrix> frontier = {id};
    while (!frontier.empty()) {
        std::vector<RationalMatrix> next;
        for (const RationalMatrix& g : frontier)
            for (const RationalMatrix& gen : generators) {
                RationalMatrix h = gen * g;
                if (seen.emplace(key(h), h).second) {
                    if (seen.size() > limit)
                        throw std::length_error("matrix_group_order: closure exceeded limit");
                    next.push_back(std::move(h));
                }
            }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace griesskit
