#include "griesskit/json_io.hpp"

#include <string>

namespace griesskit {

Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json element_to_json(const GriessAlgebra& algebra, const GriessElement& e) {
    Json out = Json::array();
    for (std::size_t idx = 0; idx < e.size(); ++idx) {
        if (e[idx].is_zero()) continue;
        const PairIndex& p = algebra.pair_at(idx);
        out.push_back({{"pair", std::to_string(p.i) + "," + std::to_string(p.j)},
                       {"coeff", e[idx].str()}});
    }
    return out;
}

Json gram_report_to_json(const GramReport& report) {
    const auto rationals = [](const std::vector<Rational>& xs) {
        Json out = Json::array();
        for (const Rational& x : xs) out.push_back(x.str());
        return out;
    };
    Json out;
    out["n"] = report.n;
    out["m"] = report.m;
    out["positive_definite"] = report.positive_definite;
    out["gram"] = matrix_to_json(report.gram);
    out["leading_minors"] = rationals(report.leading_minors);
    out["det_b_closed"] = rationals(report.det_b_closed);
    out["det_b_direct"] = rationals(report.det_b_direct);
    out["det_c_closed"] = rationals(report.det_c_closed);
    out["det_c_direct"] = rationals(report.det_c_direct);
    return out;
}

Json voa_state_to_json(const lattice::VOAState& state) {
    Json out = Json::array();
    for (const auto& [key, coeff] : state.terms()) {
        Json monomial = Json::array();
        for (const lattice::FockFactor& f : key.fock.factors)
            monomial.push_back(Json::array({f.direction, f.mode}));
        Json term;
        term["monomial"] = std::move(monomial);
        term["lattice"] = key.lattice.coords;
        term["coeff"] = coeff.str();
        out.push_back(std::move(term));
    }
    return out;
}

Json relation_report_to_json(const lattice::RelationReport& report) {
    Json out;
    out["n"] = report.n;
    out["m"] = report.m;
    out["weight_cap"] = report.weight_cap;
    out["all_pass"] = report.all_pass();
    Json checks = Json::array();
    for (const lattice::RelationCheck& c : report.checks) {
        Json pairs = Json::array();
        for (const auto& [i, j] : c.pairs) pairs.push_back(Json::array({i, j}));
        Json entry;
        entry["check"] = c.name;
        entry["pairs"] = std::move(pairs);
        entry["mode"] = c.mode;
        entry["pass"] = c.pass;
        checks.push_back(std::move(entry));
    }
    out["checks"] = std::move(checks);
    return out;
}

}  // namespace griesskit
