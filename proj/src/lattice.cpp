#include "griesskit/lattice.hpp"

#include "griesskit/matrix.hpp"
#include "griesskit/minimal_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace griesskit::lattice {

LatticeVector zero_vector(int n) {
    if (n < 1) throw std::invalid_argument("zero_vector: rank must be >= 1");
    return {std::vector<int>(static_cast<std::size_t>(n), 0)};
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    if (a.coords.size() != b.coords.size())
        throw std::invalid_argument("LatticeVector: rank mismatch in sum");
    LatticeVector out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

LatticeVector operator-(const LatticeVector& a) {
    LatticeVector out = a;
    for (int& x : out.coords) x = -x;
    return out;
}

int pairing(const LatticeVector& a, const LatticeVector& b) {
    if (a.coords.size() != b.coords.size())
        throw std::invalid_argument("pairing: rank mismatch");
    int dot = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) dot += a.coords[i] * b.coords[i];
    return 2 * dot;
}

Direction to_direction(const LatticeVector& g) {
    Direction d(g.coords.size());
    for (std::size_t i = 0; i < g.coords.size(); ++i) d[i] = Rational(g.coords[i]);
    return d;
}

Direction coordinate_direction(int rank, int axis) {
    if (axis < 0 || axis >= rank) throw std::invalid_argument("coordinate_direction: axis out of range");
    Direction d(static_cast<std::size_t>(rank));
    d[static_cast<std::size_t>(axis)] = Rational(1);
    return d;
}

Rational pairing(const Direction& a, const Direction& b) {
    if (a.size() != b.size()) throw std::invalid_argument("pairing: rank mismatch");
    Rational dot;
    for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    return Rational(2) * dot;
}

Rational pairing(const Direction& a, const LatticeVector& b) {
    return pairing(a, to_direction(b));
}

namespace {

bool canonical_before(const FockFactor& x, const FockFactor& y) {
    if (x.mode != y.mode) return x.mode > y.mode;
    return x.direction < y.direction;
}

}  // namespace

int FockMonomial::degree() const {
    int d = 0;
    for (const FockFactor& f : factors) d += f.mode;
    return d;
}

FockMonomial FockMonomial::with_factor(int direction, int mode) const {
    if (mode < 1) throw std::invalid_argument("FockMonomial: creation mode must be >= 1");
    FockMonomial out = *this;
    out.factors.push_back({direction, mode});
    std::sort(out.factors.begin(), out.factors.end(), canonical_before);
    return out;
}

FockMonomial FockMonomial::without_factor(std::size_t position) const {
    if (position >= factors.size()) throw std::invalid_argument("FockMonomial: factor out of range");
    FockMonomial out = *this;
    out.factors.erase(out.factors.begin() + static_cast<std::ptrdiff_t>(position));
    return out;
}

int weight(const BasisKey& key) {
    int norm_half = 0;
    for (int x : key.lattice.coords) norm_half += x * x;
    return key.fock.degree() + norm_half;
}

VOAState VOAState::vacuum(int rank, const Rational& coeff) {
    VOAState s;
    s.add({FockMonomial{}, zero_vector(rank)}, coeff);
    return s;
}

VOAState VOAState::lattice_point(const LatticeVector& g, const Rational& coeff) {
    VOAState s;
    s.add({FockMonomial{}, g}, coeff);
    return s;
}

void VOAState::add(const BasisKey& key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    if (!terms_.empty() && key.lattice.coords.size() != terms_.begin()->first.lattice.coords.size())
        throw std::invalid_argument("VOAState: rank mismatch between terms");
    auto [it, fresh] = terms_.emplace(key, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int VOAState::rank() const {
    return terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.lattice.coords.size());
}

int VOAState::max_fock_mode() const {
    int m = 0;
    for (const auto& [key, coeff] : terms_)
        for (const FockFactor& f : key.fock.factors) m = std::max(m, f.mode);
    return m;
}

VOAState& VOAState::operator+=(const VOAState& o) {
    for (const auto& [key, coeff] : o.terms_) add(key, coeff);
    return *this;
}

VOAState& VOAState::operator-=(const VOAState& o) {
    for (const auto& [key, coeff] : o.terms_) add(key, -coeff);
    return *this;
}

VOAState VOAState::scaled(const Rational& c) const {
    VOAState out;
    if (c.is_zero()) return out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
    return out;
}

VOAState VOAState::truncated(WeightCap cap) const {
    VOAState out;
    for (const auto& [key, coeff] : terms_)
        if (weight(key) <= cap.max_weight) out.terms_.emplace(key, coeff);
    return out;
}

VOAState VOAState::weight_component(int w) const {
    VOAState out;
    for (const auto& [key, coeff] : terms_)
        if (weight(key) == w) out.terms_.emplace(key, coeff);
    return out;
}

int VOAState::max_weight() const {
    int w = 0;
    for (const auto& [key, coeff] : terms_) w = std::max(w, weight(key));
    return w;
}

bool VOAState::is_homogeneous_of_weight(int w) const {
    for (const auto& [key, coeff] : terms_)
        if (weight(key) != w) return false;
    return true;
}

VOAState heisenberg_apply(const Direction& h, int k, const VOAState& v) {
    if (k == 0) throw std::invalid_argument("heisenberg_apply: use zero_mode for k = 0");
    VOAState out;
    for (const auto& [key, coeff] : v.terms()) {
        if (h.size() != key.lattice.coords.size())
            throw std::invalid_argument("heisenberg_apply: rank mismatch");
        if (k < 0) {
            for (std::size_t axis = 0; axis < h.size(); ++axis) {
                if (h[axis].is_zero()) continue;
                out.add({key.fock.with_factor(static_cast<int>(axis), -k), key.lattice},
                        coeff * h[axis]);
            }
        } else {
            // contract against each creation factor of matching mode;
            // [h(k), g(-k)] = k * pairing(h, g)
            for (std::size_t pos = 0; pos < key.fock.factors.size(); ++pos) {
                const FockFactor& f = key.fock.factors[pos];
                if (f.mode != k) continue;
                const Rational& hcomp = h[static_cast<std::size_t>(f.direction)];
                if (hcomp.is_zero()) continue;
                out.add({key.fock.without_factor(pos), key.lattice},
                        coeff * Rational(2L * k) * hcomp);
            }
        }
    }
    return out;
}

VOAState zero_mode(const Direction& h, const VOAState& v) {
    VOAState out;
    for (const auto& [key, coeff] : v.terms()) {
        const Rational scale = pairing(h, key.lattice);
        if (!scale.is_zero()) out.add(key, coeff * scale);
    }
    return out;
}

namespace {

// U_t = (coefficient of y^t in exp(sum_{k>=1} gamma(-k) y^k / k)) applied to
// base; the recursion t*U_t = sum_k gamma(-k) U_{t-k} follows by
// differentiating the exponential. Terms beyond the cap only gain weight
// later, so they are dropped as they appear.
VOAState creation_tower(const Direction& gamma, int t, const VOAState& base, WeightCap cap) {
    std::vector<VOAState> tower;
    tower.push_back(base.truncated(cap));
    for (int e = 1; e <= t; ++e) {
        VOAState u;
        for (int k = 1; k <= e; ++k)
            u += heisenberg_apply(gamma, -k, tower[static_cast<std::size_t>(e - k)]);
        tower.push_back(u.scaled(Rational(1, e)).truncated(cap));
    }
    return tower[static_cast<std::size_t>(t)];
}

}  // namespace

VOAState exp_vertex_mode(const LatticeVector& gamma, int p, const VOAState& v, WeightCap cap) {
    const Direction gdir = to_direction(gamma);
    VOAState result;
    for (const auto& [key, coeff] : v.terms()) {
        if (gamma.coords.size() != key.lattice.coords.size())
            throw std::invalid_argument("exp_vertex_mode: rank mismatch");
        const int d0 = pairing(gamma, key.lattice);
        VOAState base;
        base.add({key.fock, key.lattice + gamma}, coeff);

        // expand the annihilation exponential, tracking the z-degree of each
        // piece: an application of gamma(k) contributes z^{-k}
        std::map<int, VOAState> poly;
        poly[d0] = base;
        std::map<int, VOAState> cur = poly;
        for (int j = 1; !cur.empty(); ++j) {
            std::map<int, VOAState> next;
            for (const auto& [deg, state] : cur) {
                const int top = state.max_fock_mode();
                for (int k = 1; k <= top; ++k) {
                    VOAState y = heisenberg_apply(gdir, k, state).scaled(Rational(-1, static_cast<long>(j) * k));
                    if (!y.is_zero()) next[deg - k] += y;
                }
            }
            for (auto it = next.begin(); it != next.end();) {
                if (it->second.is_zero())
                    it = next.erase(it);
                else
                    ++it;
            }
            for (const auto& [deg, state] : next) poly[deg] += state;
            cur = std::move(next);
        }

        // the creation exponential supplies z^t; land on total degree -p-1
        for (const auto& [deg, state] : poly) {
            const int t = -p - 1 - deg;
            if (t < 0 || state.is_zero()) continue;
            result += creation_tower(gdir, t, state, cap);
        }
    }
    return result.truncated(cap);
}

VOAState quadratic_mode(const Direction& h, const Direction& hp, int p, const VOAState& v) {
    if (h.size() != hp.size()) throw std::invalid_argument("quadratic_mode: rank mismatch");
    if (v.is_zero()) return {};
    const auto apply = [](const Direction& d, int q, const VOAState& x) {
        return q == 0 ? zero_mode(d, x) : heisenberg_apply(d, q, x);
    };
    const int top = std::max(v.max_fock_mode(), 0);
    VOAState out;
    // creation factors of the left slot act after the right slot
    for (int k = -1; k >= p - 1 - top; --k) {
        VOAState w = apply(hp, p - 1 - k, v);
        if (!w.is_zero()) out += heisenberg_apply(h, k, w);
    }
    // annihilation and zero modes of the left slot act first
    for (int k = 0; k <= top; ++k) {
        VOAState w = apply(h, k, v);
        if (!w.is_zero()) out += apply(hp, p - 1 - k, w);
    }
    return out;
}

namespace {

bool is_zero_lattice(const LatticeVector& g) {
    for (int x : g.coords)
        if (x != 0) return false;
    return true;
}

}  // namespace

VOAState mode_product(const VOAState& u, int p, const VOAState& v, WeightCap cap) {
    VOAState out;
    for (const auto& [key, coeff] : u.terms()) {
        if (key.fock.factors.empty()) {
            out += exp_vertex_mode(key.lattice, p, v, cap).scaled(coeff);
            continue;
        }
        const bool quadratic = is_zero_lattice(key.lattice) && key.fock.factors.size() == 2 &&
                               key.fock.factors[0].mode == 1 && key.fock.factors[1].mode == 1;
        if (!quadratic)
            throw std::domain_error("mode_product: unsupported left-factor shape");
        const int rank = static_cast<int>(key.lattice.coords.size());
        out += quadratic_mode(coordinate_direction(rank, key.fock.factors[0].direction),
                              coordinate_direction(rank, key.fock.factors[1].direction), p, v)
                   .scaled(coeff);
    }
    return out.truncated(cap);
}

VOAState ising_vector(int n, int i, int j) {
    if (n < 2 || n > 8) throw std::invalid_argument("ising_vector: rank out of range");
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("ising_vector: indices must be distinct and within rank");
    if (i > j) std::swap(i, j);
    LatticeVector gamma = zero_vector(n);
    gamma.coords[static_cast<std::size_t>(i - 1)] = 1;
    gamma.coords[static_cast<std::size_t>(j - 1)] = -1;
    const FockMonomial none;
    VOAState s;
    const Rational sixteenth(1, 16);
    s.add({none.with_factor(i - 1, 1).with_factor(i - 1, 1), zero_vector(n)}, sixteenth);
    s.add({none.with_factor(i - 1, 1).with_factor(j - 1, 1), zero_vector(n)}, Rational(-1, 8));
    s.add({none.with_factor(j - 1, 1).with_factor(j - 1, 1), zero_vector(n)}, sixteenth);
    s.add({none, gamma}, Rational(-1, 4));
    s.add({none, -gamma}, Rational(-1, 4));
    return s;
}

VOAState ma2_conformal() {
    VOAState s;
    s += ising_vector(3, 1, 2);
    s += ising_vector(3, 1, 3);
    s += ising_vector(3, 2, 3);
    return s.scaled(Rational(4, 5));
}

VOAState tilde_vector(int i, int j) {
    if (i == j || i < 1 || j < 1 || i > 3 || j > 3)
        throw std::invalid_argument("tilde_vector: indices must be distinct and within {1,2,3}");
    return ma2_conformal() - ising_vector(3, i, j);
}

VectorFamily ising_family(int n) {
    if (n < 3 || n > 8) throw std::invalid_argument("ising_family: rank out of range");
    VectorFamily family;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) family[{i, j}] = ising_vector(n, i, j);
    return family;
}

VectorFamily tilde_family() {
    VectorFamily family;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) family[{i, j}] = tilde_vector(i, j);
    return family;
}

bool RelationReport::all_pass() const {
    for (const RelationCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

std::string pair_text(const PairKey& p) {
    return std::to_string(p.first) + "," + std::to_string(p.second);
}

}  // namespace

RelationReport verify_relations(const VectorFamily& vectors, int m, WeightCap cap) {
    if (vectors.empty()) throw std::invalid_argument("verify_relations: empty family");
    int n = 0;
    for (const auto& [key, state] : vectors) {
        if (key.first < 1 || key.first >= key.second)
            throw std::invalid_argument("verify_relations: malformed pair key " + pair_text(key));
        n = std::max(n, key.second);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!vectors.count({i, j}))
                throw std::invalid_argument("verify_relations: family is missing pair " +
                                            pair_text({i, j}));
    const int rank = vectors.begin()->second.rank();
    for (const auto& [key, state] : vectors)
        if (state.is_zero() || state.rank() != rank)
            throw std::invalid_argument("verify_relations: inconsistent family ranks");

    const Rational alpha = top_weight(m);
    const Rational beta = central_charge(m);
    const VOAState unit = VOAState::vacuum(rank);

    RelationReport report;
    report.n = n;
    report.m = m;
    report.weight_cap = cap.max_weight;

    const auto at = [&](int i, int j) -> const VOAState& {
        return vectors.at({std::min(i, j), std::max(i, j)});
    };
    const auto record = [&](std::string name, std::vector<PairKey> pairs, int mode, bool pass) {
        report.checks.push_back({std::move(name), std::move(pairs), mode, pass});
    };

    for (const auto& [key, u] : vectors) {
        record("self_mode1_eigen", {key}, 1, mode_product(u, 1, u, cap) == u.scaled(Rational(2)));
        record("self_mode2_zero", {key}, 2, mode_product(u, 2, u, cap).is_zero());
        record("self_mode3_norm", {key}, 3,
               mode_product(u, 3, u, cap) == unit.scaled(beta / 2));
    }

    for (const auto& [pkey, u] : vectors)
        for (const auto& [qkey, w] : vectors) {
            if (pkey == qkey) continue;
            const bool disjoint = pkey.first != qkey.first && pkey.first != qkey.second &&
                                  pkey.second != qkey.first && pkey.second != qkey.second;
            if (disjoint) {
                for (int p = 0; p <= 3; ++p)
                    record("disjoint_mode" + std::to_string(p) + "_zero", {pkey, qkey}, p,
                           mode_product(u, p, w, cap).is_zero());
                continue;
            }
            const int shared = (pkey.first == qkey.first || pkey.first == qkey.second)
                                   ? pkey.first
                                   : pkey.second;
            const int a = pkey.first == shared ? pkey.second : pkey.first;
            const int b = qkey.first == shared ? qkey.second : qkey.first;
            const VOAState rhs =
                (u + w - at(a, b)).scaled(alpha / 2);
            record("adjacent_mode1_product", {pkey, qkey}, 1,
                   mode_product(u, 1, w, cap) == rhs);
            record("adjacent_mode3_form", {pkey, qkey}, 3,
                   mode_product(u, 3, w, cap) == unit.scaled(alpha * beta / 8));
        }

    // ad-eigenvector statement: with P = {i,j}, the difference of the two
    // generators overlapping P in one point is an alpha-eigenvector at mode 1
    // and is annihilated from mode 2 up
    for (const auto& [pkey, u] : vectors)
        for (int l = 1; l <= n; ++l) {
            if (l == pkey.first || l == pkey.second) continue;
            const PairKey qkey{std::min(pkey.second, l), std::max(pkey.second, l)};
            const PairKey rkey{std::min(pkey.first, l), std::max(pkey.first, l)};
            const VOAState diff = at(qkey.first, qkey.second) - at(rkey.first, rkey.second);
            record("difference_mode1_eigen", {pkey, qkey, rkey}, 1,
                   mode_product(u, 1, diff, cap) == diff.scaled(alpha));
            record("difference_mode2_zero", {pkey, qkey, rkey}, 2,
                   mode_product(u, 2, diff, cap).is_zero());
        }

    return report;
}

std::optional<std::map<PairKey, Rational>> express_in_span(const VOAState& x,
                                                           const VectorFamily& family) {
    if (family.empty()) throw std::invalid_argument("express_in_span: empty family");
    std::map<BasisKey, std::size_t> row_of;
    for (const auto& [pkey, state] : family)
        for (const auto& [key, coeff] : state.terms()) row_of.emplace(key, 0);
    for (const auto& [key, coeff] : x.terms()) row_of.emplace(key, 0);
    std::size_t r = 0;
    for (auto& [key, row] : row_of) row = r++;

    RationalMatrix A(row_of.size(), family.size());
    std::size_t col = 0;
    for (const auto& [pkey, state] : family) {
        for (const auto& [key, coeff] : state.terms()) A.at(row_of.at(key), col) = coeff;
        ++col;
    }
    std::vector<Rational> b(row_of.size());
    for (const auto& [key, coeff] : x.terms()) b[row_of.at(key)] = coeff;

    const auto solution = solve_exact(A, b);
    if (!solution) return std::nullopt;
    std::map<PairKey, Rational> out;
    col = 0;
    for (const auto& [pkey, state] : family) out[pkey] = (*solution)[col++];
    return out;
}

}  // namespace griesskit::lattice
