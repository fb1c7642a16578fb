#pragma once

// Shared fixtures and generators for the test suites.

#include <algorithm>
#include <random>
#include <vector>

#include "actiongraph/builders.hpp"
#include "actiongraph/graph.hpp"
#include "actiongraph/sequences.hpp"

namespace test_util {

using namespace actiongraph;

// The 9-vertex Catalan graph A_3, transcribed vertex by vertex:
// root 0 with children 1, 2, 3, 3; the label-1 vertex with children 2, 3;
// each label-2 vertex with one label-3 child.
inline ActionGraph hand_built_a3() {
    ActionGraph g = ActionGraph::single_vertex(0);
    const VertexId v1 = g.add_child(0, 1);
    const VertexId v2 = g.add_child(v1, 2);
    const VertexId v3 = g.add_child(0, 2);
    g.add_child(v3, 3);
    g.add_child(v2, 3);
    g.add_child(v1, 3);
    g.add_child(0, 3);
    g.add_child(0, 3);
    g.set_generation(3);
    return g;
}

// The 5-vertex Fuss graph T_{2,2}: root with children 1, 2, 2; the label-1
// vertex with one label-2 child.
inline ActionGraph hand_built_t22() {
    ActionGraph g = ActionGraph::single_vertex(0);
    const VertexId v1 = g.add_child(0, 1);
    g.add_child(0, 2);
    g.add_child(0, 2);
    g.add_child(v1, 2);
    g.set_generation(2);
    return g;
}

// The 9-vertex doubling-rule graph G_2: root with children 1, 1, 2, 2; each
// label-1 vertex with two label-2 children.
inline ActionGraph hand_built_super_g2() {
    ActionGraph g = ActionGraph::single_vertex(0);
    const VertexId a = g.add_child(0, 1);
    const VertexId b = g.add_child(0, 1);
    g.add_child(a, 2);
    g.add_child(a, 2);
    g.add_child(b, 2);
    g.add_child(b, 2);
    g.add_child(0, 2);
    g.add_child(0, 2);
    g.set_generation(2);
    return g;
}

inline Sequence make_sequence(const char* spec_text, std::size_t upto) {
    return sequence_prefix(parse_family(spec_text), upto);
}

// Random labeled tree honoring the edge-increases-label invariant.
inline ActionGraph random_tree(std::mt19937& rng, std::size_t vertices) {
    ActionGraph g = ActionGraph::single_vertex(0);
    Label max_label = 0;
    for (std::size_t i = 1; i < vertices; ++i) {
        std::uniform_int_distribution<VertexId> pick_parent(0,
                                                            static_cast<VertexId>(i - 1));
        std::uniform_int_distribution<Label> bump(1, 3);
        const VertexId parent = pick_parent(rng);
        const Label label = g.label(parent) + bump(rng);
        g.add_child(parent, label);
        max_label = std::max(max_label, label);
    }
    g.set_generation(max_label);
    return g;
}

// Same tree, children visited in a random order per vertex; ids change, the
// labeled shape does not.
inline ActionGraph shuffle_siblings(const ActionGraph& g, std::mt19937& rng) {
    ActionGraph out = ActionGraph::single_vertex(g.label(g.root()));
    out.set_generation(g.generation());
    std::vector<std::pair<VertexId, VertexId>> stack{{g.root(), 0}};
    while (!stack.empty()) {
        auto [src, dst] = stack.back();
        stack.pop_back();
        std::vector<VertexId> kids = g.children(src);
        std::shuffle(kids.begin(), kids.end(), rng);
        for (VertexId c : kids) {
            stack.push_back({c, out.add_child(dst, g.label(c))});
        }
    }
    return out;
}

// Copy with every label raised by delta.
inline ActionGraph shift_labels(const ActionGraph& g, Label delta) {
    ActionGraph out = ActionGraph::single_vertex(g.label(g.root()) + delta);
    out.set_generation(g.generation() + delta);
    for (VertexId v = 1; v < g.vertex_count(); ++v) {
        out.add_child(g.parent(v), g.label(v) + delta);
    }
    return out;
}

// Copy without the given leaf.
inline ActionGraph drop_leaf(const ActionGraph& g, VertexId leaf) {
    ActionGraph out = ActionGraph::single_vertex(g.label(g.root()));
    out.set_generation(g.generation());
    std::vector<VertexId> dense(g.vertex_count());
    for (VertexId v = 1; v < g.vertex_count(); ++v) {
        if (v == leaf) continue;
        dense[v] = out.add_child(dense[g.parent(v)], g.label(v));
    }
    return out;
}

} // namespace test_util
