#include "griesskit/minimal_model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace griesskit {

bool is_valid(const KacLabel& label) {
    return label.m >= 1 && label.r >= 1 && label.r <= label.m + 1 && label.s >= 1 &&
           label.s <= label.m + 2;
}

void validate(const KacLabel& label) {
    if (!is_valid(label))
        throw std::invalid_argument("KacLabel out of range: m=" + std::to_string(label.m) +
                                    " r=" + std::to_string(label.r) +
                                    " s=" + std::to_string(label.s));
}

Rational central_charge(int m) {
    if (m < 1) throw std::invalid_argument("central_charge: m must be >= 1");
    return Rational(1) - Rational(6, static_cast<long>(m + 2) * (m + 3));
}

Rational conformal_weight(const KacLabel& label) {
    validate(label);
    const long t = static_cast<long>(label.r) * (label.m + 3) -
                   static_cast<long>(label.s) * (label.m + 2);
    return Rational(t * t - 1, 4L * (label.m + 2) * (label.m + 3));
}

Rational top_weight(int m) {
    if (m < 1) throw std::invalid_argument("top_weight: m must be >= 1");
    return conformal_weight({m, m + 1, 1});
}

KacLabel kac_reflection(const KacLabel& label) {
    validate(label);
    return {label.m, label.m + 2 - label.r, label.m + 3 - label.s};
}

ModuleClass::ModuleClass(const KacLabel& label) {
    validate(label);
    const KacLabel mirror = kac_reflection(label);
    canonical_ = std::min(label, mirror);
}

std::vector<std::pair<ModuleClass, Rational>> kac_table(int m) {
    if (m < 1) throw std::invalid_argument("kac_table: m must be >= 1");
    std::map<ModuleClass, Rational> classes;
    for (int r = 1; r <= m + 1; ++r)
        for (int s = 1; s <= m + 2; ++s) {
            const ModuleClass cls(KacLabel{m, r, s});
            classes.emplace(cls, cls.weight());
        }
    std::vector<std::pair<ModuleClass, Rational>> table(classes.begin(), classes.end());
    std::vector<Rational> weights;
    weights.reserve(table.size());
    for (const auto& entry : table) weights.push_back(entry.second);
    std::sort(weights.begin(), weights.end());
    for (std::size_t i = 0; i + 1 < weights.size(); ++i)
        if (weights[i] == weights[i + 1])
            throw std::logic_error("kac_table: repeated conformal weight at m=" + std::to_string(m));
    return table;
}

bool is_admissible(const RsPair& a, const RsPair& b, const RsPair& c, int m) {
    if (m < 1) throw std::invalid_argument("is_admissible: m must be >= 1");
    for (const RsPair& t : {a, b, c}) {
        if (t.r < 1 || t.r > m + 1 || t.s < 1 || t.s > m + 2)
            throw std::invalid_argument("is_admissible: label out of range: r=" +
                                        std::to_string(t.r) + " s=" + std::to_string(t.s));
    }
    const int rsum = a.r + b.r + c.r;
    const int ssum = a.s + b.s + c.s;
    if (rsum > 2 * m + 3 || rsum % 2 == 0) return false;
    if (ssum > 2 * m + 5 || ssum % 2 == 0) return false;
    const auto triangle = [](int x, int y, int z) {
        return x < y + z && y < x + z && z < x + y;
    };
    return triangle(a.r, b.r, c.r) && triangle(a.s, b.s, c.s);
}

int fusion_dim(const ModuleClass& a, const ModuleClass& b, const ModuleClass& c) {
    const int m = a.canonical().m;
    if (b.canonical().m != m || c.canonical().m != m)
        throw std::invalid_argument("fusion_dim: mixed parameters");
    const auto reps = [](const ModuleClass& cls) {
        return std::pair<KacLabel, KacLabel>{cls.canonical(), kac_reflection(cls.canonical())};
    };
    const auto [a1, a2] = reps(a);
    const auto [b1, b2] = reps(b);
    const auto [c1, c2] = reps(c);
    for (const KacLabel& la : {a1, a2})
        for (const KacLabel& lb : {b1, b2})
            for (const KacLabel& lc : {c1, c2})
                if (is_admissible({la.r, la.s}, {lb.r, lb.s}, {lc.r, lc.s}, m)) return 1;
    return 0;
}

}  // namespace griesskit
