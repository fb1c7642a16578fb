#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "actiongraph/admissibility.hpp"
#include "actiongraph/bigint.hpp"
#include "actiongraph/errors.hpp"
#include "actiongraph/graph.hpp"

namespace actiongraph {

struct CondensedNode;
using CondensedNodeRef = std::shared_ptr<const CondensedNode>;

// An edge "x multiplier" standing for that many identical sibling subtrees.
// Labels are stored as deltas to the parent, so a subtree shifted to another
// label is the same node object; builders exploit that sharing.
struct CondensedEdge {
    BigInt multiplier;  // >= 1
    Label delta;        // child label - parent label, >= 1
    CondensedNodeRef child;
};

struct CondensedNode {
    std::vector<CondensedEdge> edges;
};

inline CondensedNodeRef make_condensed_node(std::vector<CondensedEdge> edges) {
    for (const CondensedEdge& e : edges) {
        if (e.multiplier < 1) throw GraphFormatError("condensed edge multiplier must be >= 1");
        if (e.delta < 1) throw GraphFormatError("condensed edge must increase the label");
        if (!e.child) throw GraphFormatError("condensed edge has no child node");
    }
    return std::make_shared<const CondensedNode>(CondensedNode{std::move(edges)});
}

// Rooted multiplier-edge tree. A node stands for (product of multipliers on
// its root path) vertices of the full form.
struct CondensedGraph {
    Label root_label = 0;
    CondensedNodeRef root;  // never null
};

namespace detail {

// Memoized post-order over the shared node DAG; explicit stack so document
// depth is not bounded by the call stack.
template <typename T, typename Fold>
T fold_condensed(const CondensedNodeRef& root, Fold&& fold) {
    std::unordered_map<const CondensedNode*, T> memo;
    std::vector<const CondensedNode*> stack{root.get()};
    while (!stack.empty()) {
        const CondensedNode* node = stack.back();
        if (memo.count(node)) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (const CondensedEdge& e : node->edges) {
            if (!memo.count(e.child.get())) {
                stack.push_back(e.child.get());
                ready = false;
            }
        }
        if (!ready) continue;
        memo.emplace(node, fold(*node, memo));
        stack.pop_back();
    }
    return memo.at(root.get());
}

// Assigns the same id to nodes that denote the same labeled tree, with
// multiplier groups merged. Ids are only meaningful within one interner, so
// cross-graph comparisons must share it. Linear in the number of distinct
// nodes, unlike a printed canonical form, whose size can be exponential for
// the shared builder output.
class CondensedInterner {
public:
    std::size_t id_of(const CondensedNodeRef& root) {
        std::vector<const CondensedNode*> stack{root.get()};
        while (!stack.empty()) {
            const CondensedNode* node = stack.back();
            if (memo_.count(node)) {
                stack.pop_back();
                continue;
            }
            bool ready = true;
            for (const CondensedEdge& e : node->edges) {
                if (!memo_.count(e.child.get())) {
                    stack.push_back(e.child.get());
                    ready = false;
                }
            }
            if (!ready) continue;
            std::map<std::pair<Label, std::size_t>, BigInt> groups;
            for (const CondensedEdge& e : node->edges) {
                groups[{e.delta, memo_.at(e.child.get())}] += e.multiplier;
            }
            if (groups.size() != node->edges.size()) saw_unmerged_ = true;
            Key key(groups.begin(), groups.end());
            const std::size_t next = table_.size();
            memo_.emplace(node, table_.emplace(std::move(key), next).first->second);
            stack.pop_back();
        }
        return memo_.at(root.get());
    }

    // Whether any interned node carried two edges to equal subtrees at the
    // same delta.
    bool saw_unmerged() const { return saw_unmerged_; }

private:
    using Key = std::vector<std::pair<std::pair<Label, std::size_t>, BigInt>>;
    std::map<Key, std::size_t> table_;
    std::unordered_map<const CondensedNode*, std::size_t> memo_;
    bool saw_unmerged_ = false;
};

} // namespace detail

// Order-insensitive encoding with sibling groups merged and sorted, so two
// condensed graphs encode equally iff they denote the same labeled tree.
// The string spells out the whole unshared document; for deep shared builds
// prefer condensed_equal, which stays linear.
inline std::string canonical_encoding(const CondensedNodeRef& root) {
    using Memo = std::unordered_map<const CondensedNode*, std::string>;
    return detail::fold_condensed<std::string>(
        root, [](const CondensedNode& node, const Memo& memo) {
            std::map<std::pair<Label, std::string>, BigInt> groups;
            for (const CondensedEdge& e : node.edges) {
                groups[{e.delta, memo.at(e.child.get())}] += e.multiplier;
            }
            std::string s = "(";
            for (const auto& [key, mult] : groups) {
                s += mult.str() + "x" + std::to_string(key.first) + key.second;
            }
            s += ")";
            return s;
        });
}

inline std::string canonical_form(const CondensedGraph& c) {
    return std::to_string(c.root_label) + canonical_encoding(c.root);
}

inline bool condensed_equal(const CondensedGraph& a, const CondensedGraph& b) {
    return canonical_form(a) == canonical_form(b);
}

// Maximal grouping: no node may carry two edges to equal subtrees at the
// same delta.
inline bool is_maximally_grouped(const CondensedGraph& c) {
    using Memo = std::unordered_map<const CondensedNode*, std::string>;
    bool maximal = true;
    detail::fold_condensed<std::string>(
        c.root, [&maximal](const CondensedNode& node, const Memo& memo) {
            std::map<std::pair<Label, std::string>, BigInt> groups;
            for (const CondensedEdge& e : node.edges) {
                groups[{e.delta, memo.at(e.child.get())}] += e.multiplier;
            }
            if (groups.size() != node.edges.size()) maximal = false;
            std::string s = "(";
            for (const auto& [key, mult] : groups) {
                s += mult.str() + "x" + std::to_string(key.first) + key.second;
            }
            s += ")";
            return s;
        });
    return maximal;
}

// Number of full-form vertices the condensed graph represents.
inline BigInt condensed_total_count(const CondensedGraph& c) {
    using Memo = std::unordered_map<const CondensedNode*, BigInt>;
    return detail::fold_condensed<BigInt>(c.root, [](const CondensedNode& node, const Memo& memo) {
        BigInt total = 1;
        for (const CondensedEdge& e : node.edges) {
            total += e.multiplier * memo.at(e.child.get());
        }
        return total;
    });
}

// Number of nodes in the unshared condensed document (JSON/DOT size).
inline BigInt condensed_node_count(const CondensedGraph& c) {
    using Memo = std::unordered_map<const CondensedNode*, BigInt>;
    return detail::fold_condensed<BigInt>(c.root, [](const CondensedNode& node, const Memo& memo) {
        BigInt total = 1;
        for (const CondensedEdge& e : node.edges) {
            total += memo.at(e.child.get());
        }
        return total;
    });
}

// Sum over nodes labeled j of the product of multipliers on their root path.
// Agrees with count_label on the expansion whenever that is feasible.
inline BigInt condensed_count_label(const CondensedGraph& c, Label j) {
    if (j < c.root_label) return 0;
    // count(node, r) = [r == 0] + sum over edges of mult * count(child, r - delta),
    // memoized on (node, remaining relative label) across the shared DAG.
    std::map<std::pair<const CondensedNode*, Label>, BigInt> memo;
    std::vector<std::pair<const CondensedNode*, Label>> stack{
        {c.root.get(), j - c.root_label}};
    while (!stack.empty()) {
        auto key = stack.back();
        if (memo.count(key)) {
            stack.pop_back();
            continue;
        }
        auto [node, r] = key;
        bool ready = true;
        for (const CondensedEdge& e : node->edges) {
            if (e.delta > r) continue;
            std::pair<const CondensedNode*, Label> sub{e.child.get(), r - e.delta};
            if (!memo.count(sub)) {
                stack.push_back(sub);
                ready = false;
            }
        }
        if (!ready) continue;
        BigInt count = r == 0 ? 1 : 0;
        for (const CondensedEdge& e : node->edges) {
            if (e.delta > r) continue;
            count += e.multiplier * memo.at({e.child.get(), r - e.delta});
        }
        memo.emplace(key, std::move(count));
        stack.pop_back();
    }
    return memo.at({c.root.get(), j - c.root_label});
}

// Collapse identical sibling subtrees (same labels, same shape) into
// multiplier edges, maximally and deterministically.
inline CondensedGraph condense(const ActionGraph& g) {
    validate(g);
    const std::vector<std::string> enc = subtree_encodings(g);
    std::vector<CondensedNodeRef> node_for(g.vertex_count());
    for (VertexId v = static_cast<VertexId>(g.vertex_count()); v-- > 0;) {
        // Group key: label delta plus the shift-invariant subtree encoding.
        // Under a common parent that is exactly labeled-subtree equality.
        std::map<std::pair<Label, std::string_view>, std::pair<BigInt, CondensedNodeRef>> groups;
        for (VertexId c : g.children(v)) {
            auto& slot = groups[{g.label(c) - g.label(v), std::string_view(enc[c])}];
            if (slot.first == 0) slot.second = node_for[c];
            slot.first += 1;
        }
        std::vector<CondensedEdge> edges;
        edges.reserve(groups.size());
        for (auto& [key, slot] : groups) {
            edges.push_back({slot.first, key.first, slot.second});
        }
        node_for[v] = make_condensed_node(std::move(edges));
    }
    return {g.label(g.root()), node_for[g.root()]};
}

// Materialize the full form. Refuses when the represented vertex total is
// over budget.
inline ActionGraph expand(const CondensedGraph& c, std::uint64_t budget = kDefaultVertexBudget) {
    const BigInt total = condensed_total_count(c);
    if (total > budget) {
        throw BudgetExceededError("expansion represents " + total.str() +
                                  " vertices, budget " + std::to_string(budget));
    }
    ActionGraph g = ActionGraph::single_vertex(c.root_label);
    Label max_label = c.root_label;
    // Preorder with explicit stack; edges pushed in reverse so copies appear
    // in stored edge order, multiplier copies contiguous.
    struct Item {
        const CondensedNode* node;
        VertexId at;
        Label label;
    };
    std::vector<Item> stack{{c.root.get(), 0, c.root_label}};
    std::vector<Item> pending;
    while (!stack.empty()) {
        Item item = stack.back();
        stack.pop_back();
        pending.clear();
        for (const CondensedEdge& e : item.node->edges) {
            const Label child_label = item.label + e.delta;
            if (child_label > max_label) max_label = child_label;
            const std::uint64_t copies = e.multiplier.convert_to<std::uint64_t>();
            for (std::uint64_t i = 0; i < copies; ++i) {
                VertexId id = g.add_child(item.at, child_label);
                pending.push_back({e.child.get(), id, child_label});
            }
        }
        for (auto it = pending.rbegin(); it != pending.rend(); ++it) stack.push_back(*it);
    }
    g.set_generation(max_label);
    return g;
}

// Condensed G_0..G_upto by the recursive law: the root of G_n carries, for
// each 1 <= i <= n, one multiplier-z_i edge to G_{n-i} shifted up by i.
// Shifts are free under the delta representation, so G_n costs O(n^2) edges
// and the full form is never materialized.
inline CondensedGraph build_generic_condensed(const ZResult& zr, std::size_t upto) {
    if (zr.failure && zr.failure->reason == FailureReason::S0NotOne) {
        throw InadmissibleSequenceError("sequence rejected: s_0 = " + zr.failure->value.str() +
                                        " but generalized action graphs require s_0 = 1");
    }
    if (upto > zr.admissible_upto) {
        throw InadmissibleSequenceError("sequence admits graphs only up to n = " +
                                        std::to_string(zr.admissible_upto) +
                                        ", requested n = " + std::to_string(upto));
    }
    std::vector<CondensedNodeRef> cg(upto + 1);
    cg[0] = make_condensed_node({});
    for (std::size_t n = 1; n <= upto; ++n) {
        std::vector<CondensedEdge> edges;
        edges.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) {
            edges.push_back({zr.z_value(i), static_cast<Label>(i), cg[n - i]});
        }
        cg[n] = make_condensed_node(std::move(edges));
    }
    return {0, cg[upto]};
}

} // namespace actiongraph
