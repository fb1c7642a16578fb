#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "actiongraph/admissibility.hpp"
#include "actiongraph/bigint.hpp"
#include "actiongraph/errors.hpp"
#include "actiongraph/graph.hpp"
#include "actiongraph/sequences.hpp"

namespace actiongraph {

// Rule-based construction families. The growth rule "super" is defined for
// the m = 0 sequence only.
struct GraphRule {
    enum class Kind { Catalan, Fuss, Super };

    Kind kind = Kind::Catalan;
    std::uint64_t k = 0;  // Fuss parameter

    std::string display_name() const {
        switch (kind) {
            case Kind::Catalan: return "catalan";
            case Kind::Fuss: return "fuss:" + std::to_string(k);
            case Kind::Super: return "super";
        }
        return "?";
    }

    // The sequence family whose values this rule adds per step.
    SequenceFamily family() const {
        SequenceFamily f;
        switch (kind) {
            case Kind::Catalan: f.kind = SequenceFamily::Kind::Catalan; break;
            case Kind::Fuss:
                f.kind = SequenceFamily::Kind::Fuss;
                f.param = k;
                break;
            case Kind::Super:
                f.kind = SequenceFamily::Kind::Super;
                f.param = 0;
                break;
        }
        return f;
    }
};

inline GraphRule parse_rule(std::string_view text) {
    GraphRule rule;
    if (text == "catalan") {
        rule.kind = GraphRule::Kind::Catalan;
        return rule;
    }
    if (text.rfind("fuss:", 0) == 0) {
        rule.kind = GraphRule::Kind::Fuss;
        rule.k = detail::parse_small_uint(text.substr(5), "fuss rule");
        if (rule.k == 0) throw UnknownSequenceError("fuss rule requires k >= 1");
        return rule;
    }
    if (text == "super") {
        rule.kind = GraphRule::Kind::Super;
        return rule;
    }
    throw UnknownSequenceError("unknown rule '" + std::string(text) +
                               "' (expected catalan, fuss:<k>, or super)");
}

namespace detail {

// Appends adds[v] children labeled generation+1 under each vertex v, in
// vertex id order, after checking the vertex budget. Returns the new graph;
// the input keeps its ids (monotone containment).
inline ActionGraph apply_additions(const ActionGraph& g, const std::vector<BigInt>& adds,
                                   std::uint64_t budget, BigInt* added_out = nullptr) {
    BigInt total = 0;
    for (const BigInt& a : adds) total += a;
    if (BigInt(g.vertex_count()) + total > budget) {
        throw BudgetExceededError("stepping to generation " +
                                  std::to_string(g.generation() + 1) + " needs " +
                                  (BigInt(g.vertex_count()) + total).str() +
                                  " vertices, budget " + std::to_string(budget) +
                                  " (use condensed form or raise the budget)");
    }
    ActionGraph out = g;
    const Label next = g.generation() + 1;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const std::uint64_t n = adds[v].convert_to<std::uint64_t>();
        for (std::uint64_t i = 0; i < n; ++i) out.add_child(v, next);
    }
    out.set_generation(next);
    if (added_out) *added_out = total;
    return out;
}

} // namespace detail

// One child labeled n+1 under every leaf, and one under the source of every
// non-trivial path ending at a label-n vertex. Adds C_{n+1} vertices when g
// is the Catalan graph A_n.
inline ActionGraph step_catalan(const ActionGraph& g,
                                std::uint64_t budget = kDefaultVertexBudget) {
    validate(g);
    const PathProfile profile = path_profile(g);
    std::vector<BigInt> adds(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t paths = 0;
        for (std::size_t ell = 1; ell <= profile.max_length(v); ++ell) {
            paths += profile.at(v, ell);
        }
        adds[v] = BigInt(paths) + (g.is_leaf(v) ? 1 : 0);
    }
    return detail::apply_additions(g, adds, budget);
}

// binom(l+k-1, l) children labeled n+1 under v for every path of length l
// from v to a label-n vertex, the trivial path included. Adds C_{n+1,k}
// vertices when g is T_{n,k}.
inline ActionGraph step_fuss(const ActionGraph& g, std::uint64_t k,
                             std::uint64_t budget = kDefaultVertexBudget) {
    if (k == 0) throw UnknownSequenceError("fuss rule requires k >= 1");
    validate(g);
    const PathProfile profile = path_profile(g);
    std::vector<BigInt> adds(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        BigInt total = 0;
        for (std::size_t ell = 0; ell <= profile.max_length(v); ++ell) {
            const std::uint64_t paths = profile.at(v, ell);
            if (paths) total += BigInt(paths) * binomial(ell + k - 1, ell);
        }
        adds[v] = total;
    }
    return detail::apply_additions(g, adds, budget);
}

// p(v,l) * 2/2^l children labeled n+1 under v for each 0 <= l <= n, in exact
// arithmetic: 2*p(v,l) must be divisible by 2^l, otherwise the step refuses
// rather than rounds. Adds S(0, n+1) vertices when g is the m = 0 family's
// G_n.
inline ActionGraph step_super(const ActionGraph& g,
                              std::uint64_t budget = kDefaultVertexBudget) {
    validate(g);
    const PathProfile profile = path_profile(g);
    std::vector<BigInt> adds(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        BigInt total = 0;
        for (std::size_t ell = 0; ell <= profile.max_length(v); ++ell) {
            const std::uint64_t paths = profile.at(v, ell);
            if (paths == 0) continue;
            // amount = 2*p / 2^l = p >> (l-1) for l >= 1
            if (ell == 0) {
                total += BigInt(paths) * 2;
            } else {
                const std::size_t shift = ell - 1;
                if (shift >= 64 || (paths & ((std::uint64_t{1} << shift) - 1)) != 0) {
                    throw IntegralityViolationError(
                        "vertex " + std::to_string(v) + ", path length " +
                        std::to_string(ell) + ": " + std::to_string(paths) +
                        "*2/2^" + std::to_string(ell) + " is not an integer");
                }
                total += BigInt(paths >> shift);
            }
        }
        adds[v] = total;
    }
    return detail::apply_additions(g, adds, budget);
}

// G_0 through G_upto by the z-driven construction: building G_{k+1}, each
// vertex labeled m gains z_{k+1-m} children labeled k+1. Root-adjacent
// subtrees rooted at a label-t vertex thereby stay isomorphic to G_{k+1-t}
// shifted up by t, which is the inductive shape the recurrence encodes.
inline std::vector<ActionGraph> build_generic(const ZResult& zr, std::size_t upto,
                                              std::uint64_t budget = kDefaultVertexBudget) {
    if (zr.failure && zr.failure->reason == FailureReason::S0NotOne) {
        throw InadmissibleSequenceError("sequence rejected: s_0 = " + zr.failure->value.str() +
                                        " but generalized action graphs require s_0 = 1");
    }
    if (upto > zr.admissible_upto) {
        std::string msg = "sequence admits graphs only up to n = " +
                          std::to_string(zr.admissible_upto) + ", requested n = " +
                          std::to_string(upto);
        if (zr.failure) {
            msg += " (z_" + std::to_string(zr.failure->index) + " = " + zr.failure->value.str() +
                   ")";
        }
        throw InadmissibleSequenceError(msg);
    }
    const std::vector<BigInt> s = reconstruct_sequence(zr.z, upto);

    std::vector<ActionGraph> graphs;
    graphs.reserve(upto + 1);
    graphs.push_back(ActionGraph::single_vertex());
    for (std::size_t k = 0; k < upto; ++k) {
        const ActionGraph& g = graphs.back();
        std::vector<BigInt> adds(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            adds[v] = zr.z_value(k + 1 - g.label(v));
        }
        BigInt added;
        ActionGraph next = detail::apply_additions(g, adds, budget, &added);
        if (added != s[k + 1]) {
            throw Error("internal: generic step added " + added.str() + " vertices, expected " +
                        s[k + 1].str());
        }
        for (std::size_t i = 1; i <= k + 1; ++i) {
            if (BigInt(root_adjacent_count(next, static_cast<Label>(i))) != zr.z_value(i)) {
                throw Error("internal: root adjacency for label " + std::to_string(i) +
                            " disagrees with z");
            }
        }
        graphs.push_back(std::move(next));
    }
    return graphs;
}

struct RuleBuild {
    std::vector<ActionGraph> graphs;  // G_0..G_upto
    std::vector<BigInt> added;        // added[n] = vertices added at step n; added[0] = 1
};

// Iterates the chosen step rule from the single-vertex G_0.
inline RuleBuild build_rule(const GraphRule& rule, std::size_t upto,
                            std::uint64_t budget = kDefaultVertexBudget) {
    RuleBuild out;
    out.graphs.push_back(ActionGraph::single_vertex());
    out.added.push_back(1);
    for (std::size_t n = 0; n < upto; ++n) {
        const ActionGraph& g = out.graphs.back();
        ActionGraph next;
        switch (rule.kind) {
            case GraphRule::Kind::Catalan: next = step_catalan(g, budget); break;
            case GraphRule::Kind::Fuss: next = step_fuss(g, rule.k, budget); break;
            case GraphRule::Kind::Super: next = step_super(g, budget); break;
        }
        out.added.push_back(BigInt(next.vertex_count()) - BigInt(g.vertex_count()));
        out.graphs.push_back(std::move(next));
    }
    return out;
}

} // namespace actiongraph
