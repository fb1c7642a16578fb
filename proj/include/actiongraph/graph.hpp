#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "actiongraph/errors.hpp"

namespace actiongraph {

using VertexId = std::uint32_t;
using Label = std::uint32_t;

// Full-form trees above this size are refused unless the caller raises the
// budget; condensed form is the intended representation past it.
constexpr std::uint64_t kDefaultVertexBudget = 1'000'000;

// Rooted directed labeled tree, one vertex per vertex. The root is always
// id 0 and every parent id is smaller than its children's ids, so descending
// id order is a valid bottom-up traversal.
class ActionGraph {
public:
    static ActionGraph single_vertex(Label root_label = 0) {
        ActionGraph g;
        g.labels_.push_back(root_label);
        g.parents_.push_back(0);
        g.children_.emplace_back();
        return g;
    }

    VertexId add_child(VertexId parent, Label label) {
        if (parent >= vertex_count()) {
            throw GraphFormatError("add_child: no such parent vertex");
        }
        VertexId id = static_cast<VertexId>(labels_.size());
        labels_.push_back(label);
        parents_.push_back(parent);
        children_.emplace_back();
        children_[parent].push_back(id);
        return id;
    }

    VertexId root() const { return 0; }
    std::size_t vertex_count() const { return labels_.size(); }
    Label label(VertexId v) const { return labels_.at(v); }
    VertexId parent(VertexId v) const { return parents_.at(v); }
    const std::vector<VertexId>& children(VertexId v) const { return children_.at(v); }
    bool is_leaf(VertexId v) const { return children_.at(v).empty(); }

    Label generation() const { return generation_; }
    void set_generation(Label n) { generation_ = n; }

    // Test-support mutation; breaks the well-formedness contract on purpose.
    void overwrite_label(VertexId v, Label label) { labels_.at(v) = label; }

private:
    std::vector<Label> labels_;
    std::vector<VertexId> parents_;
    std::vector<std::vector<VertexId>> children_;
    Label generation_ = 0;
};

// Throws unless g is a well-formed action graph: ids dense with root 0,
// parent ids smaller than child ids, and labels strictly increasing along
// every edge.
inline void validate(const ActionGraph& g) {
    if (g.vertex_count() == 0) throw GraphFormatError("graph has no vertices");
    for (VertexId v = 1; v < g.vertex_count(); ++v) {
        if (g.parent(v) >= v) {
            throw GraphFormatError("vertex " + std::to_string(v) +
                                   " has parent id >= its own id");
        }
        if (g.label(g.parent(v)) >= g.label(v)) {
            throw GraphFormatError("edge " + std::to_string(g.parent(v)) + " -> " +
                                   std::to_string(v) + " does not increase the label");
        }
    }
}

// Per-vertex counts of directed paths, by length, ending at a vertex that
// carries the graph's generation label. Length 0 is the trivial path.
struct PathProfile {
    std::vector<std::vector<std::uint64_t>> counts;

    std::uint64_t at(VertexId v, std::size_t ell) const {
        const auto& row = counts.at(v);
        return ell < row.size() ? row[ell] : 0;
    }
    std::size_t max_length(VertexId v) const { return counts.at(v).size() - 1; }
    std::uint64_t total(VertexId v) const {
        std::uint64_t sum = 0;
        for (std::uint64_t c : counts.at(v)) sum += c;
        return sum;
    }
};

// One bottom-up pass; in a tree a path is determined by its endpoint, so
// counts stay within the vertex count.
inline PathProfile path_profile(const ActionGraph& g) {
    PathProfile profile;
    profile.counts.resize(g.vertex_count());
    for (VertexId v = static_cast<VertexId>(g.vertex_count()); v-- > 0;) {
        auto& row = profile.counts[v];
        std::size_t width = 1;
        for (VertexId c : g.children(v)) {
            width = std::max(width, profile.counts[c].size() + 1);
        }
        row.assign(width, 0);
        row[0] = g.label(v) == g.generation() ? 1 : 0;
        for (VertexId c : g.children(v)) {
            const auto& child_row = profile.counts[c];
            for (std::size_t ell = 0; ell < child_row.size(); ++ell) {
                row[ell + 1] += child_row[ell];
            }
        }
        while (row.size() > 1 && row.back() == 0) row.pop_back();
    }
    return profile;
}

inline std::uint64_t count_label(const ActionGraph& g, Label j) {
    std::uint64_t count = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.label(v) == j) ++count;
    }
    return count;
}

inline std::uint64_t root_adjacent_count(const ActionGraph& g, Label j) {
    std::uint64_t count = 0;
    for (VertexId c : g.children(g.root())) {
        if (g.label(c) == j) ++count;
    }
    return count;
}

// Shift-invariant canonical encoding of every subtree, keyed by vertex id.
// A subtree is encoded as "(" + sorted child items + ")", where a child item
// is the label delta to its parent followed by the child's own encoding.
// Deltas make one bottom-up pass cover all subtree roots at once: the same
// string serves whichever vertex the subtree hangs from.
inline std::vector<std::string> subtree_encodings(const ActionGraph& g) {
    std::vector<std::string> enc(g.vertex_count());
    for (VertexId v = static_cast<VertexId>(g.vertex_count()); v-- > 0;) {
        std::vector<std::string> items;
        items.reserve(g.children(v).size());
        for (VertexId c : g.children(v)) {
            // Signed so malformed graphs (label <= parent's) still encode.
            const std::int64_t delta = static_cast<std::int64_t>(g.label(c)) -
                                       static_cast<std::int64_t>(g.label(v));
            items.push_back(std::to_string(delta) + enc[c]);
        }
        std::sort(items.begin(), items.end());
        std::string s = "(";
        for (const auto& item : items) s += item;
        s += ")";
        enc[v] = std::move(s);
    }
    return enc;
}

// Deterministic encoding, invariant under sibling reordering. With
// normalize_labels the labels are taken relative to the root, so
// label-shifted copies collide; otherwise the absolute root label is kept.
inline std::string canonical_form(const ActionGraph& g, bool normalize_labels) {
    std::string root_enc = subtree_encodings(g)[g.root()];
    if (normalize_labels) return root_enc;
    return std::to_string(g.label(g.root())) + root_enc;
}

inline bool is_isomorphic(const ActionGraph& a, const ActionGraph& b, bool allow_shift) {
    if (a.vertex_count() != b.vertex_count()) return false;
    return canonical_form(a, allow_shift) == canonical_form(b, allow_shift);
}

// Copy of the subtree rooted at v, as its own graph. Labels are kept as-is
// and the generation carries over.
inline ActionGraph subtree(const ActionGraph& g, VertexId v) {
    ActionGraph out = ActionGraph::single_vertex(g.label(v));
    out.set_generation(g.generation());
    // Explicit stack of (source vertex, copied parent id), children pushed in
    // reverse so they are visited in original order.
    std::vector<std::pair<VertexId, VertexId>> stack;
    stack.push_back({v, 0});
    bool first = true;
    while (!stack.empty()) {
        auto [src, dst] = stack.back();
        stack.pop_back();
        VertexId copied = dst;
        if (!first) copied = out.add_child(dst, g.label(src));
        first = false;
        const auto& kids = g.children(src);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            stack.push_back({*it, copied});
        }
    }
    return out;
}

} // namespace actiongraph
