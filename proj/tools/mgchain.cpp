// mgchain: construct, enumerate, verify, count and search multigrade chains
// (equal-size splits of 1..N with matching power sums for r = 1..k).
//
// Subcommands: construct | enumerate | verify | search | count | examples
// Exit codes:  0 success/pass, 1 not-found/fail, 2 usage, 3 arithmetic width.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "multigrade/chain.hpp"
#include "multigrade/construct.hpp"
#include "multigrade/fixtures.hpp"
#include "multigrade/json_io.hpp"
#include "multigrade/search.hpp"

namespace {

using namespace multigrade;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWidth = 3;

enum class Format { text, json, csv };

struct Global {
    Format format = Format::text;
    bool quiet = false;
};

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw std::invalid_argument("unknown format: " + s);
}

// "1, 5, 9, 12, 14, 16  =2=  2, 6, 7, 10, 15, 17  =2=  ..."
std::string chain_line(const Chain& c) {
    std::ostringstream out;
    const std::string sep = "  =" + std::to_string(c.k) + "=  ";
    for (int v = 0; v < c.j; ++v) {
        if (v > 0) out << sep;
        for (int u = 0; u < c.s; ++u) {
            if (u > 0) out << ", ";
            out << c.sets[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        }
    }
    return out.str();
}

void print_report_text(const VerificationReport& rep, bool quiet) {
    if (!quiet) {
        for (int r = 1; r <= rep.k_max; ++r) {
            std::cout << "r=" << r << ":";
            for (int v = 0; v < rep.j; ++v)
                std::cout << (v ? " = " : " ")
                          << rep.power_sums[static_cast<std::size_t>(v)]
                                           [static_cast<std::size_t>(r - 1)]
                                               .str();
            std::cout << "\n";
        }
    }
    std::cout << "equal up to r=" << rep.equal_up_to << "; covers 1.." << rep.n
              << ": " << (rep.covers_1_to_n ? "yes" : "no") << "\n";
}

void chain_csv_rows(std::ostream& out, const Chain& c, const std::string& prefix) {
    for (int v = 0; v < c.j; ++v)
        for (int u = 0; u < c.s; ++u)
            out << prefix << v + 1 << ","
                << c.sets[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]
                << "\n";
}

ConstructionForm make_form(const std::string& kind, int j, int k, std::int64_t m,
                           bool m_given) {
    if (kind == "2jk") {
        if (m_given) throw std::invalid_argument("-m only applies to --form 2mjk");
        return ConstructionForm::two_jk(j, k);
    }
    if (kind == "2mjk") return ConstructionForm::two_mjk(m, j, k);
    if (kind == "jk1") {
        if (m_given) throw std::invalid_argument("-m only applies to --form 2mjk");
        return ConstructionForm::jk1(j, k);
    }
    throw std::invalid_argument("unknown form: " + kind + " (use 2jk, 2mjk or jk1)");
}

PermutationSchedule parse_schedule(int j, int k, const std::string& text) {
    if (text.empty()) return PermutationSchedule::identity(j, k);
    std::vector<std::vector<int>> steps;
    std::stringstream ss(text);
    std::string step_text;
    while (std::getline(ss, step_text, ';')) {
        std::vector<int> step;
        std::stringstream es(step_text);
        std::string entry;
        while (std::getline(es, entry, ',')) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(entry, &pos);
                if (pos != entry.size()) throw std::invalid_argument(entry);
                step.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("schedule entry is not an integer: " +
                                            entry);
            }
        }
        steps.push_back(std::move(step));
    }
    if (steps.size() != static_cast<std::size_t>(k - 1))
        throw std::invalid_argument("schedule must list exactly k-1 permutations");
    return PermutationSchedule::from_steps(j, std::move(steps));
}

int cmd_construct(const Global& g, const ConstructionForm& form,
                  const std::string& schedule_text) {
    PermutationSchedule schedule = parse_schedule(form.j, form.k, schedule_text);
    Chain chain = construct(form, schedule);
    VerificationReport rep = verify(chain, form.k);
    switch (g.format) {
    case Format::json:
        std::cout << dump_json(chain_to_json(chain));
        break;
    case Format::csv:
        std::cout << "set,element\n";
        chain_csv_rows(std::cout, chain, "");
        break;
    case Format::text:
        std::cout << chain_line(chain) << "\n";
        if (!g.quiet)
            std::cout << "form " << form.kind_name() << ": j=" << form.j
                      << " k=" << form.k << " s=" << chain.s << " N=" << form.n()
                      << "\n";
        print_report_text(rep, g.quiet);
        break;
    }
    return rep.equal_up_to >= form.k ? kExitPass : kExitFail;
}

int cmd_enumerate(const Global& g, const ConstructionForm& form, std::uint64_t cap,
                  bool all_perms) {
    EnumerateOptions opts;
    opts.cap = cap;
    opts.all_permutations = all_perms;
    EnumerationResult result = enumerate_chains(form, opts);
    switch (g.format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& c : result.chains) arr.push_back(chain_to_json(c));
        std::cout << dump_json(arr);
        break;
    }
    case Format::csv:
        std::cout << "chain,set,element\n";
        for (std::size_t i = 0; i < result.chains.size(); ++i)
            chain_csv_rows(std::cout, result.chains[i],
                           std::to_string(i + 1) + ",");
        break;
    case Format::text:
        for (const auto& c : result.chains)
            std::cout << chain_line(c) << "\n";
        if (!g.quiet)
            std::cout << "schedules: " << result.schedule_count
                      << ", distinct canonical chains: " << result.chains.size()
                      << ", collisions: " << result.collisions << "\n";
        break;
    }
    return kExitPass;
}

int cmd_verify(const Global& g, const std::string& input, int k_flag) {
    json parsed;
    try {
        if (input.empty() || input == "-") {
            parsed = json::parse(std::cin);
        } else {
            std::ifstream in(input);
            if (!in)
                throw std::invalid_argument("cannot open: " + input);
            parsed = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") +
                                    e.what());
    }
    Chain chain = chain_from_json(parsed);
    const int k = k_flag > 0 ? k_flag : std::max(chain.k, 1);
    VerificationReport rep = verify(chain, k);
    const bool pass = rep.equal_up_to >= k && rep.covers_1_to_n;
    switch (g.format) {
    case Format::json:
        std::cout << dump_json(report_to_json(rep));
        break;
    case Format::csv:
        std::cout << "set,exponent,power_sum\n";
        for (int v = 0; v < rep.j; ++v)
            for (int r = 1; r <= rep.k_max; ++r)
                std::cout << v + 1 << "," << r << ","
                          << rep.power_sums[static_cast<std::size_t>(v)]
                                           [static_cast<std::size_t>(r - 1)]
                                               .str()
                          << "\n";
        break;
    case Format::text:
        if (!g.quiet) std::cout << chain_line(chain) << "\n";
        print_report_text(rep, g.quiet);
        std::cout << (pass ? "PASS" : "FAIL") << " at k=" << k << "\n";
        break;
    }
    return pass ? kExitPass : kExitFail;
}

int cmd_search(const Global& g, const SearchConfig& config) {
    SearchResult result = search_min_n(config);
    switch (g.format) {
    case Format::json:
        std::cout << dump_json(search_result_to_json(result, config.j, config.k));
        break;
    case Format::csv:
        std::cout << "j,k,found_n,nodes_explored,candidates_filtered\n"
                  << config.j << "," << config.k << ","
                  << (result.found_n ? std::to_string(*result.found_n) : "")
                  << "," << result.nodes_explored << ","
                  << result.candidates_filtered << "\n";
        break;
    case Format::text: {
        if (result.status == SearchStatus::found) {
            std::cout << "least N for j=" << config.j << " k=" << config.k
                      << ": " << *result.found_n << "\n";
            std::cout << "witness: " << chain_line(*result.witness) << "\n";
        } else if (result.status == SearchStatus::budget_exhausted) {
            std::cout << "node budget exhausted; no chain found for multiples of "
                      << config.j << " up to " << result.last_n_completed << "\n";
        } else {
            std::cout << "no chain found for any multiple of " << config.j
                      << " up to " << config.n_max << "\n";
        }
        if (!g.quiet)
            std::cout << "nodes explored: " << result.nodes_explored
                      << ", candidates filtered: " << result.candidates_filtered
                      << "\n";
        // how the outcome relates to the conjectured minimum 2*j^k
        try {
            std::int64_t bound =
                (Int128(2) * checked_pow(Int128(config.j), config.k)).to_int64();
            if (result.found_n) {
                if (*result.found_n == bound)
                    std::cout << "consistent with the conjectured minimum 2*j^k = "
                              << bound << "\n";
                else if (*result.found_n < bound)
                    std::cout << "COUNTEREXAMPLE: N = " << *result.found_n
                              << " is below the conjectured minimum 2*j^k = "
                              << bound << "\n";
                else
                    std::cout << "INCONSISTENT: N = " << *result.found_n
                              << " exceeds the guaranteed bound 2*j^k = " << bound
                              << "\n";
            } else if (result.status == SearchStatus::not_found &&
                       config.n_max < bound) {
                std::cout << "conjectured minimum 2*j^k = " << bound
                          << " lies beyond --n-max\n";
            } else if (result.status == SearchStatus::not_found) {
                std::cout << "COUNTEREXAMPLE: no chain up to " << config.n_max
                          << " although 2*j^k = " << bound
                          << " is within range\n";
            }
        } catch (const OverflowError&) {
            std::cout << "conjectured minimum 2*j^k exceeds 64 bits\n";
        }
        break;
    }
    }
    return result.status == SearchStatus::found ? kExitPass : kExitFail;
}

int cmd_count(const Global& g, std::int64_t n, int j, int k,
              const SearchOptions& opts) {
    CountResult result = count_chains(n, j, k, opts);
    switch (g.format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& c : result.chains) arr.push_back(chain_to_json(c));
        std::cout << dump_json(arr);
        break;
    }
    case Format::csv:
        std::cout << "chain,set,element\n";
        for (std::size_t i = 0; i < result.chains.size(); ++i)
            chain_csv_rows(std::cout, result.chains[i],
                           std::to_string(i + 1) + ",");
        break;
    case Format::text:
        for (const auto& c : result.chains)
            std::cout << chain_line(c) << "\n";
        std::cout << "chains on 1.." << n << " with j=" << j << " k=" << k << ": "
                  << result.count
                  << (result.budget_exhausted ? " (budget exhausted, partial)"
                                              : "")
                  << "\n";
        if (!g.quiet)
            std::cout << "nodes explored: " << result.nodes_explored << "\n";
        break;
    }
    return result.budget_exhausted ? kExitFail : kExitPass;
}

int cmd_examples(const Global& g) {
    const auto& fixtures = builtin_fixtures();
    bool all_pass = true;
    std::vector<VerificationReport> reports;
    reports.reserve(fixtures.size());
    for (const auto& f : fixtures) {
        reports.push_back(verify(f.chain, 2));
        const auto& rep = reports.back();
        all_pass = all_pass && rep.equal_up_to >= 2 && rep.covers_1_to_n;
    }
    switch (g.format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& f : fixtures) arr.push_back(chain_to_json(f.chain));
        std::cout << dump_json(arr);
        break;
    }
    case Format::csv:
        std::cout << "fixture,set,element\n";
        for (const auto& f : fixtures)
            chain_csv_rows(std::cout, f.chain, std::string(f.id) + ",");
        break;
    case Format::text:
        for (std::size_t i = 0; i < fixtures.size(); ++i) {
            const auto& rep = reports[i];
            const bool pass = rep.equal_up_to >= 2 && rep.covers_1_to_n;
            std::cout << (pass ? "PASS" : "FAIL") << "  " << fixtures[i].id
                      << "  " << chain_line(fixtures[i].chain) << "\n";
            if (!g.quiet)
                std::cout << "      " << fixtures[i].note << "\n";
        }
        break;
    }
    return all_pass ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multigrade chains: equal power-sum splits of 1..N"};
    app.require_subcommand(1);

    std::string format_text = "text";
    bool quiet = false;
    app.add_option("--format", format_text, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--quiet", quiet, "suppress informational output");

    // construct
    auto* construct_cmd =
        app.add_subcommand("construct", "build one chain from a closed form");
    construct_cmd->fallthrough();
    std::string form_kind;
    int j = 2, k = 1;
    std::int64_t m = 1;
    std::string schedule_text;
    construct_cmd->add_option("--form", form_kind, "2jk | 2mjk | jk1")->required();
    construct_cmd->add_option("-j", j, "number of sets")->required();
    construct_cmd->add_option("-k", k, "degree")->required();
    auto* m_opt = construct_cmd->add_option("-m", m, "block length (2mjk)");
    construct_cmd->add_option("--schedule", schedule_text,
                              "k-1 permutations, e.g. \"1,3,2;1,2,3\"");

    // enumerate
    auto* enum_cmd =
        app.add_subcommand("enumerate", "all chains of a form over its schedules");
    enum_cmd->fallthrough();
    std::string enum_form_kind;
    int ej = 2, ek = 1;
    std::int64_t em = 1;
    std::uint64_t cap = 10000;
    bool all_perms = false;
    enum_cmd->add_option("--form", enum_form_kind, "2jk | 2mjk | jk1")->required();
    enum_cmd->add_option("-j", ej, "number of sets")->required();
    enum_cmd->add_option("-k", ek, "degree")->required();
    auto* em_opt = enum_cmd->add_option("-m", em, "block length (2mjk)");
    enum_cmd->add_option("--cap", cap, "largest schedule count to accept");
    enum_cmd->add_flag("--all-permutations", all_perms,
                       "do not fix 1 first (repeats the same chains)");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "check a chain given as JSON (file or stdin)");
    verify_cmd->fallthrough();
    std::string input;
    int vk = 0;
    verify_cmd->add_option("input", input, "path to chain JSON, or - for stdin");
    verify_cmd->add_option("-k", vk, "degree to test (default: the chain's k)");

    // search
    auto* search_cmd =
        app.add_subcommand("search", "least N admitting a (j,k)-chain");
    search_cmd->fallthrough();
    SearchConfig config;
    std::uint64_t budget = 0;
    search_cmd->add_option("-j", config.j, "number of sets")->required();
    search_cmd->add_option("-k", config.k, "degree")->required();
    search_cmd->add_option("--n-max", config.n_max, "largest N to try")->required();
    auto* budget_opt =
        search_cmd->add_option("--budget", budget, "node budget (exact cap)");
    search_cmd->add_option("--parallel", config.parallel_width,
                           "concurrent top-level branches");

    // count
    auto* count_cmd =
        app.add_subcommand("count", "every chain on 1..N, exhaustively");
    count_cmd->fallthrough();
    std::int64_t cn = 0;
    int cj = 2, ck = 1;
    std::uint64_t cbudget = 0;
    SearchOptions copts;
    count_cmd->add_option("-N", cn, "upper end of 1..N")->required();
    count_cmd->add_option("-j", cj, "number of sets")->required();
    count_cmd->add_option("-k", ck, "degree")->required();
    auto* cbudget_opt =
        count_cmd->add_option("--budget", cbudget, "node budget (exact cap)");
    count_cmd->add_option("--parallel", copts.parallel_width,
                          "concurrent top-level branches");

    // examples
    auto* examples_cmd =
        app.add_subcommand("examples", "embedded historic chains, verified");
    examples_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    Global g;
    g.quiet = quiet;
    try {
        g.format = parse_format(format_text);
        if (construct_cmd->parsed())
            return cmd_construct(
                g, make_form(form_kind, j, k, m, m_opt->count() > 0),
                schedule_text);
        if (enum_cmd->parsed())
            return cmd_enumerate(
                g, make_form(enum_form_kind, ej, ek, em, em_opt->count() > 0),
                cap, all_perms);
        if (verify_cmd->parsed()) return cmd_verify(g, input, vk);
        if (search_cmd->parsed()) {
            if (budget_opt->count() > 0) config.node_budget = budget;
            return cmd_search(g, config);
        }
        if (count_cmd->parsed()) {
            if (cbudget_opt->count() > 0) copts.node_budget = cbudget;
            return cmd_count(g, cn, cj, ck, copts);
        }
        if (examples_cmd->parsed()) return cmd_examples(g);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const OverflowError& e) {
        std::cerr << "arithmetic width exceeded: " << e.what() << "\n";
        return kExitWidth;
    } catch (const EnumerationCapError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const DegenerateLiftError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
