#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "actiongraph/admissibility.hpp"
#include "actiongraph/builders.hpp"
#include "actiongraph/graph.hpp"
#include "actiongraph/sequences.hpp"

namespace actiongraph {

enum class CheckStatus { Pass, Fail };

struct CheckRecord {
    std::string name;
    std::size_t index = 0;  // generation n the check applies to
    CheckStatus status = CheckStatus::Fail;
    std::string detail;
    std::optional<VertexId> vertex;  // counterexample locator when one exists

    bool passed() const { return status == CheckStatus::Pass; }
};

struct VerificationReport {
    std::vector<CheckRecord> checks;
    bool overall = false;  // conjunction of all statuses
};

namespace detail {

inline CheckRecord pass_record(std::string name, std::size_t index, std::string detail) {
    return {std::move(name), index, CheckStatus::Pass, std::move(detail), std::nullopt};
}

inline CheckRecord fail_record(std::string name, std::size_t index, std::string detail,
                               std::optional<VertexId> vertex = std::nullopt) {
    return {std::move(name), index, CheckStatus::Fail, std::move(detail), vertex};
}

} // namespace detail

// Axiom 1: G_0 has s_0 vertices labeled 0 and no edges; G_n extends G_{n-1}
// by exactly s_n new vertices, all labeled n. Graphs are expected to share
// vertex ids with their predecessor (monotone containment).
inline std::vector<CheckRecord> verify_axiom1(std::span<const ActionGraph> graphs,
                                              const Sequence& s) {
    std::vector<CheckRecord> records;
    for (std::size_t n = 0; n < graphs.size(); ++n) {
        const ActionGraph& g = graphs[n];
        if (n > s.max_index()) {
            records.push_back(detail::fail_record("axiom1", n, "no sequence value s_" +
                                                                   std::to_string(n)));
            continue;
        }
        if (n == 0) {
            const bool count_ok = BigInt(g.vertex_count()) == s.at(0);
            const bool labels_ok = count_label(g, 0) == g.vertex_count();
            if (count_ok && labels_ok) {
                records.push_back(detail::pass_record("axiom1", 0,
                                                      "G_0 has " + s.at(0).str() +
                                                          " vertices labeled 0"));
            } else {
                records.push_back(detail::fail_record(
                    "axiom1", 0,
                    "G_0 has " + std::to_string(g.vertex_count()) + " vertices, expected s_0 = " +
                        s.at(0).str()));
            }
            continue;
        }
        const ActionGraph& prev = graphs[n - 1];
        // Shared prefix must be untouched; the first divergence locates the
        // mutation.
        std::optional<VertexId> bad;
        const std::size_t shared = std::min(prev.vertex_count(), g.vertex_count());
        for (VertexId v = 0; v < shared; ++v) {
            if (g.label(v) != prev.label(v)) {
                bad = v;
                break;
            }
        }
        if (bad) {
            records.push_back(detail::fail_record(
                "axiom1", n,
                "vertex " + std::to_string(*bad) + " changed label between G_" +
                    std::to_string(n - 1) + " and G_" + std::to_string(n),
                bad));
            continue;
        }
        const BigInt added = BigInt(g.vertex_count()) - BigInt(prev.vertex_count());
        if (added != s.at(n)) {
            records.push_back(detail::fail_record(
                "axiom1", n,
                "step adds " + added.str() + " vertices, expected s_" + std::to_string(n) +
                    " = " + s.at(n).str()));
            continue;
        }
        std::optional<VertexId> mislabeled;
        for (VertexId v = static_cast<VertexId>(prev.vertex_count()); v < g.vertex_count(); ++v) {
            if (g.label(v) != n) {
                mislabeled = v;
                break;
            }
        }
        if (mislabeled) {
            records.push_back(detail::fail_record(
                "axiom1", n,
                "new vertex " + std::to_string(*mislabeled) + " is labeled " +
                    std::to_string(g.label(*mislabeled)) + ", expected " + std::to_string(n),
                mislabeled));
            continue;
        }
        records.push_back(detail::pass_record(
            "axiom1", n, "added " + added.str() + " vertices labeled " + std::to_string(n)));
    }
    return records;
}

// The generation k <= family size whose graph the subtree rooted at v is
// isomorphic to, under label-shift normalization; nullopt when none matches.
inline std::optional<std::size_t> matching_generation(const ActionGraph& g, VertexId v,
                                                      std::span<const ActionGraph> family) {
    const std::string enc = subtree_encodings(g)[v];
    for (std::size_t k = 0; k < family.size(); ++k) {
        if (enc == canonical_form(family[k], true)) return k;
    }
    return std::nullopt;
}

// Axiom 2: every vertex of G_n roots a subtree isomorphic, up to a label
// shift, to some G_k with k <= n. Canonical forms of all graphs and of every
// subtree are each computed once.
inline std::vector<CheckRecord> verify_axiom2(std::span<const ActionGraph> graphs) {
    std::vector<CheckRecord> records;
    std::unordered_map<std::string, std::size_t> family_forms;
    for (std::size_t n = 0; n < graphs.size(); ++n) {
        // Later entries do not overwrite: the smallest matching k wins.
        family_forms.emplace(canonical_form(graphs[n], true), n);
        const std::vector<std::string> enc = subtree_encodings(graphs[n]);
        std::optional<VertexId> bad;
        std::size_t bad_total = 0;
        for (VertexId v = 0; v < graphs[n].vertex_count(); ++v) {
            if (family_forms.find(enc[v]) == family_forms.end()) {
                if (!bad) bad = v;
                ++bad_total;
            }
        }
        if (bad) {
            records.push_back(detail::fail_record(
                "axiom2", n,
                "subtree at vertex " + std::to_string(*bad) + " matches no G_k with k <= " +
                    std::to_string(n) +
                    (bad_total > 1 ? " (" + std::to_string(bad_total) + " such vertices)" : ""),
                bad));
        } else {
            records.push_back(detail::pass_record(
                "axiom2", n, "all subtrees match an earlier graph up to label shift"));
        }
    }
    return records;
}

// Axiom 3: all leaves of G_n carry label n.
inline CheckRecord verify_axiom3(const ActionGraph& g, std::size_t n) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_leaf(v) && g.label(v) != n) {
            return detail::fail_record("axiom3", n,
                                       "leaf " + std::to_string(v) + " is labeled " +
                                           std::to_string(g.label(v)) + ", expected " +
                                           std::to_string(n),
                                       v);
        }
    }
    return detail::pass_record("axiom3", n, "all leaves labeled " + std::to_string(n));
}

// z_i must equal the number of label-i vertices adjacent to the root, in
// every G_n with i <= n.
inline std::vector<CheckRecord> verify_root_z(std::span<const ActionGraph> graphs,
                                              const ZResult& zr) {
    std::vector<CheckRecord> records;
    for (std::size_t n = 0; n < graphs.size(); ++n) {
        std::string mismatch;
        for (std::size_t i = 1; i <= n && i <= zr.z_count(); ++i) {
            const BigInt actual = root_adjacent_count(graphs[n], static_cast<Label>(i));
            if (actual != zr.z_value(i)) {
                mismatch = "root-adjacent label-" + std::to_string(i) + " count is " +
                           actual.str() + ", expected z_" + std::to_string(i) + " = " +
                           zr.z_value(i).str();
                break;
            }
        }
        if (mismatch.empty()) {
            records.push_back(detail::pass_record("root_z", n,
                                                  "root adjacency equals z_1..z_" +
                                                      std::to_string(n)));
        } else {
            records.push_back(detail::fail_record("root_z", n, mismatch));
        }
    }
    return records;
}

// What verify_family builds and checks: a rule family or the generic
// construction of an arbitrary sequence family.
using VerifyTarget = std::variant<GraphRule, SequenceFamily>;

// The full battery: lemma prefilters, z admissibility, axioms 1-3, root
// adjacency, and per-step added counts, aggregated in a fixed and
// deterministic order.
inline VerificationReport verify_family(const VerifyTarget& target, std::size_t upto,
                                        std::uint64_t budget = kDefaultVertexBudget) {
    const SequenceFamily family = std::holds_alternative<GraphRule>(target)
                                      ? std::get<GraphRule>(target).family()
                                      : std::get<SequenceFamily>(target);
    const Sequence s = sequence_prefix(family, upto);
    const ZResult zr = compute_z(s);

    VerificationReport report;
    for (const LemmaCheck& lc : lemma_prefilter(s)) {
        report.checks.push_back({"lemma_" + lc.name, lc.name == "s0_is_one" ? 0u : 2u,
                                 lc.pass ? CheckStatus::Pass : CheckStatus::Fail, lc.detail,
                                 std::nullopt});
    }

    const bool buildable =
        zr.admissible_upto >= upto && !(zr.failure &&
                                        zr.failure->reason == FailureReason::S0NotOne);
    if (zr.verdict == Verdict::Admissible) {
        report.checks.push_back(detail::pass_record("admissible", upto,
                                                    "z_1..z_" + std::to_string(zr.z_count()) +
                                                        " all positive"));
    } else {
        std::string why = "sequence rejected";
        if (zr.failure) {
            why += ": index " + std::to_string(zr.failure->index) + ", value " +
                   zr.failure->value.str() + ", reason " +
                   failure_reason_name(zr.failure->reason);
        }
        report.checks.push_back(detail::fail_record("admissible", upto, why));
    }

    if (buildable) {
        std::vector<ActionGraph> graphs;
        if (std::holds_alternative<GraphRule>(target)) {
            graphs = build_rule(std::get<GraphRule>(target), upto, budget).graphs;
        } else {
            graphs = build_generic(zr, upto, budget);
        }
        for (CheckRecord& r : verify_axiom1(graphs, s)) report.checks.push_back(std::move(r));
        for (CheckRecord& r : verify_axiom2(graphs)) report.checks.push_back(std::move(r));
        for (std::size_t n = 0; n < graphs.size(); ++n) {
            report.checks.push_back(verify_axiom3(graphs[n], n));
        }
        for (CheckRecord& r : verify_root_z(graphs, zr)) report.checks.push_back(std::move(r));
        for (std::size_t n = 1; n < graphs.size(); ++n) {
            const BigInt added =
                BigInt(graphs[n].vertex_count()) - BigInt(graphs[n - 1].vertex_count());
            if (added == s.at(n)) {
                report.checks.push_back(detail::pass_record(
                    "added_count", n, "step added " + added.str() + " = s_" + std::to_string(n)));
            } else {
                report.checks.push_back(detail::fail_record(
                    "added_count", n,
                    "step added " + added.str() + ", expected s_" + std::to_string(n) + " = " +
                        s.at(n).str()));
            }
        }
    }

    report.overall = true;
    for (const CheckRecord& r : report.checks) report.overall = report.overall && r.passed();
    return report;
}

} // namespace actiongraph
