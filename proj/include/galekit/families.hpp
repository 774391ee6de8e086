#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galekit/alternation.hpp"
#include "galekit/errors.hpp"
#include "galekit/graph.hpp"
#include "galekit/hypergraph.hpp"

namespace galekit {

/// Parameter families accepted on the command line:
///   kneser:n,k      complete k-uniform hypergraph on [n]
///   schrijver:n,k   2-stable k-subsets of [n]
///   sstable:n,k,s   s-stable k-subsets of [n]
struct FamilySpec {
    std::string kind;
    std::vector<int> params;
};

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, std::size_t expected,
                                       const std::string& what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (piece.empty()) throw domain_error(what + ": empty parameter");
        try {
            std::size_t used = 0;
            int v = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            out.push_back(v);
        } catch (const std::exception&) {
            throw domain_error(what + ": bad integer '" + piece + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != expected)
        throw domain_error(what + ": expected " + std::to_string(expected) + " parameters");
    return out;
}

}  // namespace detail

inline FamilySpec parse_family(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw domain_error("family spec needs kind:params, got '" + text + "'");
    FamilySpec spec;
    spec.kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (spec.kind == "kneser" || spec.kind == "schrijver")
        spec.params = detail::parse_int_list(rest, 2, text);
    else if (spec.kind == "sstable" || spec.kind == "pnks")
        spec.params = detail::parse_int_list(rest, 3, text);
    else
        throw domain_error("unknown family kind '" + spec.kind + "'");
    return spec;
}

inline Hypergraph family_hypergraph(const FamilySpec& spec) {
    if (spec.kind == "kneser") return complete_k_uniform(spec.params[0], spec.params[1]);
    if (spec.kind == "schrijver") return s_stable_k_uniform(spec.params[0], spec.params[1], 2);
    if (spec.kind == "sstable")
        return s_stable_k_uniform(spec.params[0], spec.params[1], spec.params[2]);
    throw domain_error("family '" + spec.kind + "' does not define a hypergraph");
}

/// Property plug-ins registered by name: p1 and p2 need a hypergraph;
/// pnks:n,k,s stands alone.
inline SignedIncreasingProperty named_property(const std::string& name,
                                               const std::optional<Hypergraph>& h) {
    if (name == "p1" || name == "p2") {
        if (!h) throw domain_error("property '" + name + "' needs a hypergraph input");
        return name == "p1" ? property_some_side_contains_edge(*h)
                            : property_both_sides_contain_edge(*h);
    }
    FamilySpec spec = parse_family(name);
    if (spec.kind != "pnks") throw domain_error("unknown property '" + name + "'");
    return property_disjoint_stable_packing(spec.params[0], spec.params[1], spec.params[2]);
}

/// Named graphs for the box-complex command: kN, cN, petersen, or a
/// hypergraph family spec interpreted through KG(-).
inline Graph named_graph(const std::string& text) {
    if (text == "petersen") return kneser_graph_nk(5, 2);
    if (text.size() >= 2 && (text[0] == 'k' || text[0] == 'c') &&
        text.find_first_not_of("0123456789", 1) == std::string::npos) {
        const int n = std::stoi(text.substr(1));
        return text[0] == 'k' ? complete_graph(n) : cycle_graph(n);
    }
    return kneser_graph(family_hypergraph(parse_family(text)));
}

}  // namespace galekit
