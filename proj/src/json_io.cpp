#include "multigrade/json_io.hpp"

namespace multigrade {

using nlohmann::json;

json chain_to_json(const Chain& c) {
    Chain canon = canonicalize(c);
    json out;
    out["j"] = canon.j;
    out["k"] = canon.k;
    out["s"] = canon.s;
    out["sets"] = canon.sets;
    return out;
}

Chain chain_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("chain JSON must be an object");
    for (const char* key : {"j", "k", "s", "sets"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("chain JSON missing key \"") +
                                        key + "\"");
    if (!j["j"].is_number_integer() || !j["k"].is_number_integer() ||
        !j["s"].is_number_integer())
        throw std::invalid_argument("chain JSON: j, k, s must be integers");
    if (!j["sets"].is_array())
        throw std::invalid_argument("chain JSON: sets must be an array");

    const int jj = j["j"].get<int>();
    const int kk = j["k"].get<int>();
    const int ss = j["s"].get<int>();

    std::vector<std::vector<Elem>> sets;
    sets.reserve(j["sets"].size());
    for (const auto& row : j["sets"]) {
        if (!row.is_array())
            throw std::invalid_argument("chain JSON: each set must be an array");
        std::vector<Elem> set;
        set.reserve(row.size());
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw std::invalid_argument("chain JSON: entries must be integers");
            set.push_back(v.get<Elem>());
        }
        sets.push_back(std::move(set));
    }

    Chain c;
    try {
        c = make_chain(kk, std::move(sets));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("chain JSON: ") + e.what());
    }
    if (c.j != jj)
        throw std::invalid_argument("chain JSON: j does not match sets");
    if (c.s != ss)
        throw std::invalid_argument("chain JSON: s does not match sets");
    return c;
}

json report_to_json(const VerificationReport& rep) {
    json out;
    out["j"] = rep.j;
    out["k_max"] = rep.k_max;
    json table = json::array();
    for (const auto& row : rep.power_sums) {
        json jr = json::array();
        for (const auto& v : row) jr.push_back(v.str());
        table.push_back(std::move(jr));
    }
    out["power_sums"] = std::move(table);
    out["equal_up_to"] = rep.equal_up_to;
    out["covers_1_to_N"] = rep.covers_1_to_n;
    out["N"] = rep.n;
    return out;
}

json search_result_to_json(const SearchResult& res, int j, int k) {
    json out;
    out["j"] = j;
    out["k"] = k;
    if (res.found_n)
        out["found_N"] = *res.found_n;
    else
        out["found_N"] = nullptr;
    if (res.witness)
        out["witness"] = chain_to_json(*res.witness);
    else
        out["witness"] = nullptr;
    out["nodes_explored"] = res.nodes_explored;
    return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

} // namespace multigrade
