#pragma once

#include <string>

#include <json.hpp>

#include "multigrade/chain.hpp"
#include "multigrade/search.hpp"

namespace multigrade {

// Chain interchange schema: {"j": int, "k": int, "s": int, "sets": [[int,..],..]}
// with sets in canonical order. Serialization canonicalizes, so a dump/parse
// round trip is byte-identical.
nlohmann::json chain_to_json(const Chain& c);

// Strict parse against the schema; throws std::invalid_argument on anything
// malformed (missing keys, ragged sets, duplicates within a set, bad types).
Chain chain_from_json(const nlohmann::json& j);

// Power sums are emitted as decimal strings: they are exact 128-bit values
// and would not survive a trip through a 64-bit JSON number.
nlohmann::json report_to_json(const VerificationReport& rep);

// {"j":.., "k":.., "found_N":..|null, "witness":{chain}|null, "nodes_explored":..}
nlohmann::json search_result_to_json(const SearchResult& res, int j, int k);

std::string dump_json(const nlohmann::json& j);

} // namespace multigrade
