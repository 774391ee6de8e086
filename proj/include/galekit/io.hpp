#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "galekit/bounds.hpp"
#include "galekit/box_complex.hpp"
#include "galekit/gale.hpp"
#include "galekit/graph.hpp"
#include "galekit/hypergraph.hpp"

namespace galekit {

using nlohmann::json;

/// Hypergraph wire format:
///   {"vertices": ["1","2",...], "edges": [["1","3"], ...]}
/// The vertex order is significant; it defines the identity bijection.
inline json hypergraph_to_json(const Hypergraph& h) {
    json edges = json::array();
    for (Mask e : h.edges()) {
        json edge = json::array();
        for (int v : bits_of(e)) edge.push_back(h.vertex_names()[static_cast<std::size_t>(v)]);
        edges.push_back(edge);
    }
    return json{{"vertices", h.vertex_names()}, {"edges", edges}};
}

inline Hypergraph hypergraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw domain_error("hypergraph JSON needs 'vertices' and 'edges'");
    std::vector<std::string> names;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw domain_error("hypergraph vertices must be strings");
        names.push_back(v.get<std::string>());
    }
    Hypergraph skeleton(names, {});
    std::vector<Mask> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.empty()) throw domain_error("hypergraph edges must be nonempty arrays");
        Mask mask = 0;
        for (const auto& v : e) {
            int idx = skeleton.vertex_index(v.get<std::string>());
            if (idx < 0) throw domain_error("edge uses unknown vertex '" + v.get<std::string>() + "'");
            mask |= bit(idx);
        }
        edges.push_back(mask);
    }
    return Hypergraph(std::move(names), std::move(edges));
}

/// Graph wire format (adjacency lists by label):
///   {"vertices": ["a","b"], "adjacency": [["b"], ["a"]]}
inline json graph_to_json(const Graph& g) {
    json adjacency = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        json row = json::array();
        for (int u : g.neighbors(v)) row.push_back(g.labels()[static_cast<std::size_t>(u)]);
        adjacency.push_back(row);
    }
    return json{{"vertices", g.labels()}, {"adjacency", adjacency}};
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("adjacency"))
        throw domain_error("graph JSON needs 'vertices' and 'adjacency'");
    std::vector<std::string> labels;
    for (const auto& v : j.at("vertices")) labels.push_back(v.get<std::string>());
    Graph g(labels);
    const auto& adjacency = j.at("adjacency");
    if (adjacency.size() != labels.size())
        throw domain_error("adjacency list count must match vertex count");
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == name) return static_cast<int>(i);
        throw domain_error("adjacency uses unknown vertex '" + name + "'");
    };
    for (std::size_t v = 0; v < adjacency.size(); ++v)
        for (const auto& u : adjacency[v]) {
            int ui = index_of(u.get<std::string>());
            if (static_cast<int>(v) != ui && !g.adjacent(static_cast<int>(v), ui))
                g.add_edge(static_cast<int>(v), ui);
            else if (static_cast<int>(v) == ui)
                throw domain_error("graph JSON contains a loop");
        }
    return g;
}

inline json names_of(const std::vector<std::string>& names, Mask m) {
    json out = json::array();
    for (int v : bits_of(m)) out.push_back(names[static_cast<std::size_t>(v)]);
    return out;
}

/// Configuration export:
///   {"d": int, "points": [[...]], "identification": ["v1",...]}
inline json configuration_to_json(const GaleConfiguration& z) {
    json points = json::array();
    for (const auto& p : z.points) points.push_back(p);
    json ident = json::array();
    for (int pos = 0; pos < z.size(); ++pos) ident.push_back(z.identification(pos));
    return json{{"d", z.dim}, {"points", points}, {"identification", ident}};
}

inline json trace_to_json(const HemisphereTrace& t, const std::vector<std::string>& names) {
    return json{{"direction", t.direction},
                {"plus", names_of(names, t.plus)},
                {"minus", names_of(names, t.minus)},
                {"zero", names_of(names, t.zero)}};
}

inline json verification_to_json(const VerificationReport& r, const GaleConfiguration& z) {
    json out{{"ok", r.ok}, {"mode", r.mode}};
    out[r.mode == "exact" ? "cells_checked" : "trials"] = r.checked;
    out["counterexample"] =
        r.counterexample ? trace_to_json(*r.counterexample, z.vertex_names) : json(nullptr);
    return out;
}

inline json sigma_to_json(const Bijection& sigma) {
    json out = json::array();
    for (int v : sigma) out.push_back(v + 1);  // 1-based on the wire
    return out;
}

inline Bijection sigma_from_json(const json& j, int n) {
    Bijection sigma;
    for (const auto& v : j) sigma.push_back(v.get<int>() - 1);
    validate_bijection(sigma, n);
    return sigma;
}

/// BoundReport with explicit exactness flags per field.
inline json bound_report_to_json(const BoundReport& r) {
    json out;
    out["n"] = r.n;
    out["degenerate"] = r.degenerate;
    out["chi"] = r.chi ? json(*r.chi) : json(nullptr);
    out["cd"] = r.cd ? json(*r.cd) : json(nullptr);
    out["alt"] = json{{"value", r.alt_value}, {"sigma", sigma_to_json(r.alt_sigma)}};
    out["salt"] = json{{"value", r.salt_value}, {"sigma", sigma_to_json(r.salt_sigma)}};
    out["bounds"] = json{{"alt_bound", r.alt_bound()},
                         {"salt_bound", r.salt_bound()},
                         {"dim_lb", r.dim_lower()},
                         {"sdim_lb", r.sdim_lower()}};
    out["exact"] = json{{"chi", r.chi_exact},
                        {"cd", r.cd.has_value()},
                        {"alt", r.alt_exact},
                        {"salt", r.salt_exact}};
    json notes = json::object();
    if (!r.chi_note.empty()) notes["chi"] = r.chi_note;
    if (!r.cd_note.empty()) notes["cd"] = r.cd_note;
    if (!notes.empty()) out["notes"] = notes;
    return out;
}

inline json box_complex_to_json(const BoxComplex& c) {
    json maximal = json::array();
    for (const auto& [a, b] : c.maximal)
        maximal.push_back(json{{"plus", names_of(c.labels, a)}, {"minus", names_of(c.labels, b)}});
    return json{{"variant", to_string(c.variant)},
                {"n", c.n},
                {"f_vector", f_vector(c)},
                {"dimension", complex_dimension(c)},
                {"simplex_count", static_cast<long long>(c.simplices.size())},
                {"maximal_simplices", maximal}};
}

}  // namespace galekit
