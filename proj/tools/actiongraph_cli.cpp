// Command-line front end: analyze sequences, build full/condensed graphs,
// verify the defining axioms, compare builders, and export DOT.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "actiongraph/admissibility.hpp"
#include "actiongraph/builders.hpp"
#include "actiongraph/condensed.hpp"
#include "actiongraph/errors.hpp"
#include "actiongraph/graph.hpp"
#include "actiongraph/io.hpp"
#include "actiongraph/sequences.hpp"
#include "actiongraph/verification.hpp"

namespace {

using namespace actiongraph;

// Stable exit codes; every error class is distinguishable by scripts.
namespace exit_code {
constexpr int ok = 0;
constexpr int verification_failed = 1;
constexpr int usage = 2;
constexpr int unknown_sequence = 3;
constexpr int malformed_custom = 4;
constexpr int budget_exceeded = 5;
constexpr int integrality_violation = 6;
constexpr int inadmissible_sequence = 7;
constexpr int io_error = 8;
constexpr int internal = 9;
} // namespace exit_code

int fail(const char* kind, const std::string& what) {
    std::cerr << "error: " << kind << ": " << what << "\n";
    return exit_code::io_error;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw Error("failed writing '" + path + "'");
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw GraphFormatError("'" + path + "' is not valid JSON: " + e.what());
    }
    return doc;
}

std::string verdict_text(const ZResult& zr) {
    if (zr.verdict == Verdict::Admissible) {
        return "admissible (up to n = " + std::to_string(zr.admissible_upto) + ")";
    }
    std::string text = "rejected";
    if (zr.failure) {
        text += " at index " + std::to_string(zr.failure->index) + " (value " +
                zr.failure->value.str() + ", reason " + failure_reason_name(zr.failure->reason) +
                ")";
    }
    return text;
}

std::string analysis_text(const Sequence& s, const ZResult& zr,
                          const std::vector<LemmaCheck>& lemmas) {
    std::ostringstream out;
    out << "sequence: " << s.name;
    for (const auto& [key, value] : s.params) out << " " << key << "=" << value;
    out << "\n  s:";
    for (const BigInt& v : s.values) out << " " << v.str();
    out << "\n  z:";
    for (const BigInt& v : zr.z) out << " " << v.str();
    out << "\nverdict: " << verdict_text(zr) << "\n";
    for (const LemmaCheck& lc : lemmas) {
        out << "lemma " << lc.name << ": " << (lc.pass ? "pass" : "fail") << " (" << lc.detail
            << ")\n";
    }
    return out.str();
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    for (const CheckRecord& r : report.checks) {
        out << (r.passed() ? "pass" : "FAIL") << "  " << r.name << ' ';
        for (std::size_t i = r.name.size(); i < 22; ++i) out << ' ';
        out << "n=" << r.index << "  " << r.detail;
        if (r.vertex) out << " [vertex " << *r.vertex << "]";
        out << "\n";
    }
    out << "overall: " << (report.overall ? "pass" : "FAIL") << "\n";
    return out.str();
}

struct BuildSource {
    std::string rule_text;
    std::string sequence_text;
};

int run_analyze(const std::string& sequence_text, std::uint64_t n, bool as_json,
                const std::string& out_path) {
    const SequenceFamily family = parse_family(sequence_text);
    const Sequence s = sequence_prefix(family, n);
    const ZResult zr = compute_z(s);
    const std::vector<LemmaCheck> lemmas = lemma_prefilter(s);
    if (as_json) {
        write_output(out_path, dump(analysis_to_json(s, zr, lemmas)));
    } else {
        write_output(out_path, analysis_text(s, zr, lemmas));
    }
    return exit_code::ok;
}

int run_build(const BuildSource& source, std::uint64_t n, const std::string& form,
              const std::string& out_path, const std::string& dot_path,
              std::uint64_t budget) {
    ordered_json doc;
    std::string dot;
    const bool condensed_form = form == "condensed";
    if (!source.rule_text.empty()) {
        const GraphRule rule = parse_rule(source.rule_text);
        const RuleBuild rb = build_rule(rule, n, budget);
        const ActionGraph& g = rb.graphs.back();
        if (condensed_form) {
            const CondensedGraph c = condense(g);
            doc = condensed_to_json(c, budget);
            if (!dot_path.empty()) dot = condensed_to_dot(c, budget);
        } else {
            doc = graph_to_json(g);
            if (!dot_path.empty()) dot = graph_to_dot(g);
        }
    } else {
        const SequenceFamily family = parse_family(source.sequence_text);
        const ZResult zr = compute_z(sequence_prefix(family, n));
        if (condensed_form) {
            const CondensedGraph c = build_generic_condensed(zr, n);
            doc = condensed_to_json(c, budget);
            if (!dot_path.empty()) dot = condensed_to_dot(c, budget);
        } else {
            const std::vector<ActionGraph> graphs = build_generic(zr, n, budget);
            doc = graph_to_json(graphs.back());
            if (!dot_path.empty()) dot = graph_to_dot(graphs.back());
        }
    }
    write_output(out_path, dump(doc));
    if (!dot_path.empty()) write_output(dot_path, dot);
    return exit_code::ok;
}

int run_verify(const BuildSource& source, std::uint64_t n, const std::string& json_path,
               std::uint64_t budget) {
    VerifyTarget target = source.rule_text.empty()
                              ? VerifyTarget(parse_family(source.sequence_text))
                              : VerifyTarget(parse_rule(source.rule_text));
    const VerificationReport report = verify_family(target, n, budget);
    std::cout << report_text(report);
    if (!json_path.empty()) write_output(json_path, dump(report_to_json(report)));
    return report.overall ? exit_code::ok : exit_code::verification_failed;
}

int run_compare(const std::string& rule_text, std::uint64_t n, bool as_json,
                std::uint64_t budget) {
    const GraphRule rule = parse_rule(rule_text);
    const RuleBuild rb = build_rule(rule, n, budget);
    const ZResult zr = compute_z(sequence_prefix(rule.family(), n));
    const std::vector<ActionGraph> generic = build_generic(zr, n, budget);
    bool all = true;
    ordered_json results = ordered_json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i <= n; ++i) {
        const bool iso = is_isomorphic(rb.graphs[i], generic[i], false);
        all = all && iso;
        results.push_back(ordered_json{{"n", i}, {"isomorphic", iso}});
        text << "n=" << i << "  rule " << rule.display_name() << " vs generic: "
             << (iso ? "isomorphic" : "DIFFERENT") << "\n";
    }
    text << "all: " << (all ? "isomorphic" : "DIFFERENT") << "\n";
    if (as_json) {
        ordered_json doc;
        doc["rule"] = rule.display_name();
        doc["n"] = n;
        doc["results"] = std::move(results);
        doc["all_isomorphic"] = all;
        std::cout << dump(doc);
    } else {
        std::cout << text.str();
    }
    return all ? exit_code::ok : exit_code::verification_failed;
}

int run_export(const std::string& in_path, const std::string& out_path, std::uint64_t budget) {
    const ordered_json doc = read_json_file(in_path);
    std::string dot;
    if (looks_like_condensed_json(doc)) {
        dot = condensed_to_dot(condensed_from_json(doc), budget);
    } else {
        dot = graph_to_dot(graph_from_json(doc, budget));
    }
    write_output(out_path, dot);
    return exit_code::ok;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const UnknownSequenceError& e) {
        std::cerr << "error: unknown-sequence: " << e.what() << "\n";
        return exit_code::unknown_sequence;
    } catch (const MalformedCustomError& e) {
        std::cerr << "error: malformed-custom: " << e.what() << "\n";
        return exit_code::malformed_custom;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: budget-exceeded: " << e.what() << "\n";
        return exit_code::budget_exceeded;
    } catch (const IntegralityViolationError& e) {
        std::cerr << "error: integrality-violation: " << e.what() << "\n";
        return exit_code::integrality_violation;
    } catch (const InadmissibleSequenceError& e) {
        std::cerr << "error: inadmissible-sequence: " << e.what() << "\n";
        return exit_code::inadmissible_sequence;
    } catch (const GraphFormatError& e) {
        return fail("graph-format", e.what());
    } catch (const Error& e) {
        return fail("io", e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return exit_code::internal;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized action graph toolkit"};
    app.require_subcommand(1);

    std::string sequence_text;
    std::string rule_text;
    std::string form = "full";
    std::string out_path;
    std::string dot_path;
    std::string json_path;
    std::uint64_t n = 0;
    std::uint64_t budget = kDefaultVertexBudget;
    bool as_json = false;

    auto* analyze = app.add_subcommand(
        "analyze", "derive the z-sequence and an admissibility verdict");
    analyze->add_option("--sequence", sequence_text,
                        "catalan | fuss:<k> | super:<m> | custom:<v0,v1,...>")
        ->required();
    analyze->add_option("--n", n, "largest sequence index to analyze")->required();
    analyze->add_flag("--json", as_json, "emit the report as JSON");
    analyze->add_option("--out", out_path, "output path (default stdout)");

    auto* build = app.add_subcommand("build", "construct a graph and write it as JSON");
    auto* build_src = build->add_option_group("source");
    build_src->add_option("--rule", rule_text, "catalan | fuss:<k> | super");
    build_src->add_option("--sequence", sequence_text,
                          "sequence spec for the generic z-driven builder");
    build_src->require_option(1);
    build->add_option("--n", n, "generation to build")->required();
    build->add_option("--form", form, "full | condensed")
        ->check(CLI::IsMember({"full", "condensed"}));
    build->add_option("--out", out_path, "JSON output path (default stdout)");
    build->add_option("--dot", dot_path, "also write DOT to this path");
    build->add_option("--budget", budget, "full-form vertex budget");

    auto* verify = app.add_subcommand("verify", "run the axiom battery on a family");
    auto* verify_src = verify->add_option_group("source");
    verify_src->add_option("--rule", rule_text, "catalan | fuss:<k> | super");
    verify_src->add_option("--sequence", sequence_text, "sequence spec (generic builder)");
    verify_src->require_option(1);
    verify->add_option("--n", n, "deepest generation to verify")->required();
    verify->add_option("--json", json_path, "write the report JSON to this path");
    verify->add_option("--budget", budget, "full-form vertex budget");

    auto* compare = app.add_subcommand(
        "compare", "build by rule and by the generic construction, compare per n");
    compare->add_option("--rule", rule_text, "catalan | fuss:<k> | super")->required();
    compare->add_option("--n", n, "deepest generation to compare")->required();
    compare->add_flag("--json", as_json, "emit results as JSON");
    compare->add_option("--budget", budget, "full-form vertex budget");

    auto* exporter = app.add_subcommand("export", "convert stored graph JSON to DOT");
    exporter->add_option("--in", json_path, "graph or condensed JSON file")->required();
    exporter->add_option("--out", out_path, "DOT output path (default stdout)");
    exporter->add_option("--budget", budget, "document size budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    if (analyze->parsed()) {
        return guarded([&] { return run_analyze(sequence_text, n, as_json, out_path); });
    }
    if (build->parsed()) {
        return guarded([&] {
            return run_build({rule_text, sequence_text}, n, form, out_path, dot_path, budget);
        });
    }
    if (verify->parsed()) {
        return guarded(
            [&] { return run_verify({rule_text, sequence_text}, n, json_path, budget); });
    }
    if (compare->parsed()) {
        return guarded([&] { return run_compare(rule_text, n, as_json, budget); });
    }
    if (exporter->parsed()) {
        return guarded([&] { return run_export(json_path, out_path, budget); });
    }
    return exit_code::usage;
}
