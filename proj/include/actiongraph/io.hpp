#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "actiongraph/admissibility.hpp"
#include "actiongraph/condensed.hpp"
#include "actiongraph/errors.hpp"
#include "actiongraph/graph.hpp"
#include "actiongraph/sequences.hpp"
#include "actiongraph/verification.hpp"

namespace actiongraph {

using ordered_json = nlohmann::ordered_json;

// Multiplication sign used for condensed multipliers in DOT output.
inline constexpr const char* kTimesSign = "\xC3\x97";

namespace detail {

inline std::uint64_t get_nonnegative(const ordered_json& j, const char* what) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer()) {
        const std::int64_t v = j.get<std::int64_t>();
        if (v >= 0) return static_cast<std::uint64_t>(v);
    }
    throw GraphFormatError(std::string(what) + " must be a non-negative integer");
}

inline Label get_label(const ordered_json& j, const char* what) {
    const std::uint64_t v = get_nonnegative(j, what);
    if (v > UINT32_MAX) throw GraphFormatError(std::string(what) + " is out of range");
    return static_cast<Label>(v);
}

} // namespace detail

// ---- full graph documents: {generation, vertices: [{id, label}], edges: [[parent, child]]}

inline ordered_json graph_to_json(const ActionGraph& g) {
    ordered_json doc;
    doc["generation"] = g.generation();
    ordered_json vertices = ordered_json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        vertices.push_back(ordered_json{{"id", v}, {"label", g.label(v)}});
    }
    doc["vertices"] = std::move(vertices);
    ordered_json edges = ordered_json::array();
    for (VertexId v = 1; v < g.vertex_count(); ++v) {
        edges.push_back(ordered_json::array({g.parent(v), v}));
    }
    doc["edges"] = std::move(edges);
    return doc;
}

// Accepts arbitrary vertex ids and remaps them densely. Labels must increase
// strictly along every edge and the edges must form one tree.
inline ActionGraph graph_from_json(const ordered_json& doc,
                                   std::uint64_t budget = kDefaultVertexBudget) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
        throw GraphFormatError("graph document needs 'vertices' and 'edges'");
    }
    std::map<std::uint64_t, Label> label_of;
    for (const auto& v : doc.at("vertices")) {
        if (!v.is_object() || !v.contains("id") || !v.contains("label")) {
            throw GraphFormatError("vertex entries need 'id' and 'label'");
        }
        const std::uint64_t id = detail::get_nonnegative(v.at("id"), "vertex id");
        if (!label_of.emplace(id, detail::get_label(v.at("label"), "vertex label")).second) {
            throw GraphFormatError("duplicate vertex id " + std::to_string(id));
        }
    }
    if (label_of.empty()) throw GraphFormatError("graph document has no vertices");
    if (label_of.size() > budget) {
        throw BudgetExceededError("graph document has " + std::to_string(label_of.size()) +
                                  " vertices, budget " + std::to_string(budget));
    }
    std::map<std::uint64_t, std::uint64_t> parent_of;
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw GraphFormatError("edge entries must be [parent, child] pairs");
        }
        const std::uint64_t p = detail::get_nonnegative(e.at(0), "edge parent");
        const std::uint64_t c = detail::get_nonnegative(e.at(1), "edge child");
        if (!label_of.count(p) || !label_of.count(c)) {
            throw GraphFormatError("edge references unknown vertex");
        }
        if (label_of.at(p) >= label_of.at(c)) {
            throw GraphFormatError("edge " + std::to_string(p) + " -> " + std::to_string(c) +
                                   " does not increase the label");
        }
        if (!parent_of.emplace(c, p).second) {
            throw GraphFormatError("vertex " + std::to_string(c) + " has two parents");
        }
    }
    if (parent_of.size() + 1 != label_of.size()) {
        throw GraphFormatError("graph document is not a single rooted tree");
    }
    // Sorting by (label, id) puts every parent before its children, because
    // labels increase along edges.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> order;  // (label, id)
    order.reserve(label_of.size());
    for (const auto& [id, label] : label_of) order.push_back({label, id});
    std::sort(order.begin(), order.end());
    if (parent_of.count(order.front().second)) {
        throw GraphFormatError("graph document has no root");
    }
    std::map<std::uint64_t, VertexId> dense;
    ActionGraph g = ActionGraph::single_vertex(static_cast<Label>(order.front().first));
    dense[order.front().second] = 0;
    for (std::size_t i = 1; i < order.size(); ++i) {
        const std::uint64_t id = order[i].second;
        auto it = parent_of.find(id);
        if (it == parent_of.end()) {
            throw GraphFormatError("graph document is a forest, not a tree");
        }
        dense[id] = g.add_child(dense.at(it->second), static_cast<Label>(order[i].first));
    }
    Label generation = 0;
    for (const auto& [label, id] : order) {
        (void)id;
        generation = std::max(generation, static_cast<Label>(label));
    }
    if (doc.contains("generation")) {
        generation = detail::get_label(doc.at("generation"), "generation");
    }
    g.set_generation(generation);
    validate(g);
    return g;
}

// ---- condensed documents: recursive {label, children: [{multiplier, node}]}
// Multipliers are decimal strings; they can exceed every native integer.

namespace detail {

inline ordered_json condensed_node_doc(const CondensedNode& node, Label absolute) {
    ordered_json doc;
    doc["label"] = absolute;
    ordered_json children = ordered_json::array();
    for (const CondensedEdge& e : node.edges) {
        children.push_back(ordered_json{
            {"multiplier", e.multiplier.str()},
            {"node", condensed_node_doc(*e.child, absolute + e.delta)}});
    }
    doc["children"] = std::move(children);
    return doc;
}

inline BigInt parse_multiplier(const ordered_json& j) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) {
        const std::int64_t v = j.get<std::int64_t>();
        if (v < 0) throw GraphFormatError("multiplier must be non-negative");
        return BigInt(v);
    }
    if (j.is_string()) {
        const std::string text = j.get<std::string>();
        if (text.empty() ||
            text.find_first_not_of("0123456789") != std::string::npos) {
            throw GraphFormatError("bad multiplier '" + text + "'");
        }
        return BigInt(text);
    }
    throw GraphFormatError("multiplier must be a non-negative integer or decimal string");
}

inline CondensedNodeRef condensed_node_from(const ordered_json& doc, Label& label_out) {
    if (!doc.is_object() || !doc.contains("label")) {
        throw GraphFormatError("condensed node needs a 'label'");
    }
    const Label label = detail::get_label(doc.at("label"), "condensed label");
    label_out = label;
    std::vector<CondensedEdge> edges;
    if (doc.contains("children")) {
        for (const auto& c : doc.at("children")) {
            if (!c.is_object() || !c.contains("multiplier") || !c.contains("node")) {
                throw GraphFormatError("condensed child needs 'multiplier' and 'node'");
            }
            Label child_label = 0;
            CondensedNodeRef child = condensed_node_from(c.at("node"), child_label);
            if (child_label <= label) {
                throw GraphFormatError("condensed edge does not increase the label");
            }
            edges.push_back({parse_multiplier(c.at("multiplier")), child_label - label,
                             std::move(child)});
        }
    }
    return make_condensed_node(std::move(edges));
}

} // namespace detail

inline ordered_json condensed_to_json(const CondensedGraph& c,
                                      std::uint64_t budget = kDefaultVertexBudget) {
    const BigInt nodes = condensed_node_count(c);
    if (nodes > budget) {
        throw BudgetExceededError("condensed document has " + nodes.str() + " nodes, budget " +
                                  std::to_string(budget));
    }
    return detail::condensed_node_doc(*c.root, c.root_label);
}

inline CondensedGraph condensed_from_json(const ordered_json& doc) {
    Label root_label = 0;
    CondensedNodeRef root = detail::condensed_node_from(doc, root_label);
    return {root_label, root};
}

inline bool looks_like_condensed_json(const ordered_json& doc) {
    return doc.is_object() && doc.contains("children") && !doc.contains("vertices");
}

// ---- DOT output

inline std::string graph_to_dot(const ActionGraph& g) {
    std::string out = "digraph action_graph {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(v) + " [label=\"" + std::to_string(g.label(v)) + "\"];\n";
    }
    for (VertexId v = 1; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(g.parent(v)) + " -> " + std::to_string(v) + ";\n";
    }
    out += "}\n";
    return out;
}

inline std::string condensed_to_dot(const CondensedGraph& c,
                                    std::uint64_t budget = kDefaultVertexBudget) {
    const BigInt nodes = condensed_node_count(c);
    if (nodes > budget) {
        throw BudgetExceededError("condensed document has " + nodes.str() + " nodes, budget " +
                                  std::to_string(budget));
    }
    std::string decls;
    std::string links;
    // Preorder ids, children in stored edge order.
    struct Item {
        const CondensedNode* node;
        std::uint64_t id;
        Label label;
    };
    std::uint64_t next_id = 0;
    std::vector<Item> stack{{c.root.get(), next_id++, c.root_label}};
    decls += "  0 [label=\"" + std::to_string(c.root_label) + "\"];\n";
    while (!stack.empty()) {
        Item item = stack.back();
        stack.pop_back();
        std::vector<Item> children;
        for (const CondensedEdge& e : item.node->edges) {
            const Label child_label = item.label + e.delta;
            const std::uint64_t child_id = next_id++;
            decls += "  " + std::to_string(child_id) + " [label=\"" +
                     std::to_string(child_label) + "\"];\n";
            links += "  " + std::to_string(item.id) + " -> " + std::to_string(child_id) +
                     " [label=\"" + kTimesSign + e.multiplier.str() + "\"];\n";
            children.push_back({e.child.get(), child_id, child_label});
        }
        for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
    }
    return "digraph condensed_action_graph {\n" + decls + links + "}\n";
}

// ---- reports

inline ordered_json sequence_to_json(const Sequence& s) {
    ordered_json doc;
    doc["name"] = s.name;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : s.params) params[key] = value;
    doc["params"] = std::move(params);
    ordered_json values = ordered_json::array();
    for (const BigInt& v : s.values) values.push_back(v.str());
    doc["values"] = std::move(values);
    return doc;
}

inline ordered_json analysis_to_json(const Sequence& s, const ZResult& zr,
                                     const std::vector<LemmaCheck>& lemmas) {
    ordered_json doc;
    doc["sequence"] = sequence_to_json(s);
    ordered_json z = ordered_json::array();
    for (const BigInt& v : zr.z) z.push_back(v.str());
    doc["z"] = std::move(z);
    doc["verdict"] = zr.verdict == Verdict::Admissible ? "admissible" : "rejected";
    doc["admissible_upto"] = zr.admissible_upto;
    if (zr.failure) {
        doc["failure"] = ordered_json{{"index", zr.failure->index},
                                      {"value", zr.failure->value.str()},
                                      {"reason", failure_reason_name(zr.failure->reason)}};
    } else {
        doc["failure"] = nullptr;
    }
    ordered_json checks = ordered_json::array();
    for (const LemmaCheck& lc : lemmas) {
        checks.push_back(ordered_json{{"name", lc.name}, {"pass", lc.pass},
                                      {"detail", lc.detail}});
    }
    doc["lemma_checks"] = std::move(checks);
    return doc;
}

inline ordered_json report_to_json(const VerificationReport& report) {
    ordered_json doc;
    doc["overall"] = report.overall;
    ordered_json checks = ordered_json::array();
    for (const CheckRecord& r : report.checks) {
        ordered_json c;
        c["name"] = r.name;
        c["index"] = r.index;
        c["status"] = r.passed() ? "pass" : "fail";
        if (r.vertex) {
            c["vertex"] = *r.vertex;
        } else {
            c["vertex"] = nullptr;
        }
        c["detail"] = r.detail;
        checks.push_back(std::move(c));
    }
    doc["checks"] = std::move(checks);
    return doc;
}

} // namespace actiongraph
