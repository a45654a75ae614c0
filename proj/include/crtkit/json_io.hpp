#pragma once

/// JSON wire formats. Integers travel as decimal strings (they exceed
/// machine words); polynomials as {"p": "5", "terms": [[exp, "coeff"], ...]}
/// with strictly increasing exponents.

#include <optional>
#include <vector>

#include <json.hpp>

#include "crtkit/equiv.hpp"
#include "crtkit/integer.hpp"
#include "crtkit/polynomial.hpp"
#include "crtkit/residue_ring.hpp"

namespace crtkit {

using Json = nlohmann::json;

Int int_from_json(const Json& j);
Json int_to_json(const Int& v);

SparsePoly poly_from_json(const Json& j);
Json poly_to_json(const SparsePoly& q);
Json poly_to_json(const DensePoly& p);

/// Congruence-system input document:
///   {"moduli": [str|poly], "residues": [str|poly], "range_start": str?}
struct SystemDocument {
    std::vector<Json> moduli;
    std::vector<Json> residues;
    std::optional<Int> range_start;
};

/// Throws Error(bad_input) on malformed documents.
SystemDocument system_from_json(const Json& j);

Json iso_report_to_json(const IsoReport& r);
Json theorem5_report_to_json(const Theorem5Report& r);

}  // namespace crtkit
