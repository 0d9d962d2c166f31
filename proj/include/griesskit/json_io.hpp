#pragma once

#include "griesskit/gram.hpp"
#include "griesskit/griess.hpp"
#include "griesskit/lattice.hpp"
#include "griesskit/matrix.hpp"
#include "griesskit/rational.hpp"

#include <json.hpp>

namespace griesskit {

using Json = nlohmann::ordered_json;

/// Row-major list of "p/q" strings.
Json matrix_to_json(const RationalMatrix& m);

/// Sparse list of {"pair": "i,j", "coeff": "p/q"}, nonzero entries only.
Json element_to_json(const GriessAlgebra& algebra, const GriessElement& e);

Json gram_report_to_json(const GramReport& report);

/// List of {"monomial": [[direction, mode], ...], "lattice": [...], "coeff": "p/q"}.
Json voa_state_to_json(const lattice::VOAState& state);

Json relation_report_to_json(const lattice::RelationReport& report);

}  // namespace griesskit
