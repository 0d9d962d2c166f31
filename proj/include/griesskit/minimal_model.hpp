#pragma once

#include "griesskit/rational.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace griesskit {

/** Kac label (r, s) of the unitary series member with parameter m >= 1.
 *  Valid range: 1 <= r <= m+1, 1 <= s <= m+2. */
struct KacLabel {
    int m = 1;
    int r = 1;
    int s = 1;

    friend auto operator<=>(const KacLabel&, const KacLabel&) = default;
};

bool is_valid(const KacLabel& label);
void validate(const KacLabel& label);  // std::invalid_argument when out of range

/// c(m) = 1 - 6 / ((m+2)(m+3)).
Rational central_charge(int m);

/// h_{r,s} = ([r(m+3) - s(m+2)]^2 - 1) / (4 (m+2)(m+3)).
Rational conformal_weight(const KacLabel& label);

/// Largest weight in the table: h_{m+1,1} = m(m+1)/4.
Rational top_weight(int m);

/// The label (m+2-r, m+3-s), which carries the same conformal weight.
KacLabel kac_reflection(const KacLabel& label);

/** Isomorphism class of an irreducible module: a Kac label up to reflection.
 *  Stored as the lexicographically smaller of the two representatives. */
class ModuleClass {
public:
    explicit ModuleClass(const KacLabel& label);

    const KacLabel& canonical() const { return canonical_; }
    Rational weight() const { return conformal_weight(canonical_); }

    friend auto operator<=>(const ModuleClass&, const ModuleClass&) = default;

private:
    KacLabel canonical_;
};

/** Every module class at parameter m with its conformal weight, ordered by
 *  canonical label. Asserts that the weights are pairwise distinct. */
std::vector<std::pair<ModuleClass, Rational>> kac_table(int m);

/// An (r, s) pair without the attached parameter, for admissibility queries.
struct RsPair {
    int r = 1;
    int s = 1;
};

/** The arithmetic fusion condition on a triple of labels at parameter m:
 *  range bounds, odd coordinate sums with ceilings 2m+3 and 2m+5, and strict
 *  triangle inequalities in both coordinates. */
bool is_admissible(const RsPair& a, const RsPair& b, const RsPair& c, int m);

/** Fusion multiplicity of a triple of module classes (0 or 1): the maximum of
 *  the admissibility indicator over the reflection representatives. */
int fusion_dim(const ModuleClass& a, const ModuleClass& b, const ModuleClass& c);

}  // namespace griesskit
