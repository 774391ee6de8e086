#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "galekit/bitops.hpp"
#include "galekit/errors.hpp"

namespace galekit {

/// A finite hypergraph: an ordered vertex list plus a set of distinct
/// nonempty edges. Vertices are addressed internally by their index in the
/// list (dense 0-based indices), edges are stored as bit masks over those
/// indices. The vertex order is significant: it defines the identity
/// bijection used by the alternation computations.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(std::vector<std::string> vertex_names, std::vector<Mask> edge_masks) {
        if (vertex_names.size() > static_cast<std::size_t>(kMaxGroundSet))
            throw capacity_error("hypergraph supports at most 64 vertices, got " +
                                 std::to_string(vertex_names.size()));
        names_ = std::move(vertex_names);
        for (std::size_t i = 0; i < names_.size(); ++i) {
            auto [it, inserted] = index_.emplace(names_[i], static_cast<int>(i));
            if (!inserted) throw domain_error("duplicate vertex identifier: " + names_[i]);
        }
        const Mask ground = full_mask(vertex_count());
        for (Mask e : edge_masks) {
            if (e == 0) throw domain_error("hypergraph edge must be nonempty");
            if ((e & ~ground) != 0) throw domain_error("hypergraph edge uses an unknown vertex");
        }
        edges_ = std::move(edge_masks);
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    /// Vertices named "1".."n".
    static Hypergraph numbered(int n, std::vector<Mask> edge_masks) {
        if (n < 0) throw domain_error("negative vertex count");
        std::vector<std::string> names;
        names.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
        return Hypergraph(std::move(names), std::move(edge_masks));
    }

    int vertex_count() const { return static_cast<int>(names_.size()); }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::vector<Mask>& edges() const { return edges_; }
    Mask ground_set() const { return full_mask(vertex_count()); }

    int vertex_index(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }

    bool has_edge(Mask e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    std::string subset_label(Mask m) const {
        std::string out = "{";
        bool first = true;
        for (int v : bits_of(m)) {
            if (!first) out += ",";
            out += names_[static_cast<std::size_t>(v)];
            first = false;
        }
        return out + "}";
    }

private:
    std::vector<std::string> names_;
    std::vector<Mask> edges_;
    std::unordered_map<std::string, int> index_;
};

/// Builds a vertex-subset mask from external names; unknown names are a
/// domain error.
inline Mask subset_from_names(const Hypergraph& h, const std::vector<std::string>& names) {
    Mask m = 0;
    for (const auto& name : names) {
        int idx = h.vertex_index(name);
        if (idx < 0) throw domain_error("unknown vertex identifier: " + name);
        m |= bit(idx);
    }
    return m;
}

/// Induced subhypergraph on the vertex subset u: keeps exactly the edges
/// contained in u, with vertices renumbered to the order they have in h.
inline Hypergraph induced_subhypergraph(const Hypergraph& h, Mask u) {
    if ((u & ~h.ground_set()) != 0)
        throw domain_error("subset contains a vertex outside the hypergraph");
    std::vector<int> kept = bits_of(u);
    std::vector<int> new_index(static_cast<std::size_t>(h.vertex_count()), -1);
    std::vector<std::string> names;
    names.reserve(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        new_index[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
        names.push_back(h.vertex_names()[static_cast<std::size_t>(kept[i])]);
    }
    std::vector<Mask> edges;
    for (Mask e : h.edges()) {
        if ((e & ~u) != 0) continue;
        Mask remapped = 0;
        for (int v : bits_of(e)) remapped |= bit(new_index[static_cast<std::size_t>(v)]);
        edges.push_back(remapped);
    }
    return Hypergraph(std::move(names), std::move(edges));
}

namespace detail {

/// Proper 2-coloring search restricted to edges inside `alive`; vertices
/// outside `alive` are ignored entirely. Backtracking with unit propagation
/// on edges that have a single uncolored vertex left and are monochromatic
/// so far.
inline bool two_color_search(const std::vector<Mask>& edges, Mask alive, int n,
                             std::vector<int>& colors_out) {
    std::vector<Mask> live_edges;
    for (Mask e : edges) {
        if ((e & ~alive) != 0) continue;
        if (popcount(e) == 1) return false;  // singleton edge is always monochromatic
        live_edges.push_back(e);
    }
    colors_out.assign(static_cast<std::size_t>(n), -1);
    if (live_edges.empty()) {
        for (int v : bits_of(alive)) colors_out[static_cast<std::size_t>(v)] = 0;
        return true;
    }

    Mask colored[2] = {0, 0};  // colored[c] = vertices currently holding color c
    std::vector<int> trail;

    auto assign = [&](int v, int c) {
        colored[c] |= bit(v);
        trail.push_back(v);
        colors_out[static_cast<std::size_t>(v)] = c;
    };
    auto undo_to = [&](std::size_t mark) {
        while (trail.size() > mark) {
            int v = trail.back();
            trail.pop_back();
            colored[0] &= ~bit(v);
            colored[1] &= ~bit(v);
            colors_out[static_cast<std::size_t>(v)] = -1;
        }
    };

    // Returns false on conflict; on success all forced assignments are on
    // the trail.
    auto propagate = [&]() -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Mask e : live_edges) {
                Mask un = e & ~(colored[0] | colored[1]);
                if (un == 0) {
                    if ((e & ~colored[0]) == 0 || (e & ~colored[1]) == 0) return false;
                    continue;
                }
                if (popcount(un) == 1) {
                    // all colored vertices of e share one color -> force the rest
                    if ((e & colored[1]) == 0 && (e & colored[0]) != 0) {
                        assign(lowest_bit(un), 1);
                        changed = true;
                    } else if ((e & colored[0]) == 0 && (e & colored[1]) != 0) {
                        assign(lowest_bit(un), 0);
                        changed = true;
                    }
                }
            }
        }
        return true;
    };

    Mask in_edges = 0;
    for (Mask e : live_edges) in_edges |= e;

    std::function<bool()> dfs = [&]() -> bool {
        std::size_t mark = trail.size();
        if (!propagate()) {
            undo_to(mark);
            return false;
        }
        Mask un = in_edges & ~(colored[0] | colored[1]);
        if (un == 0) return true;
        int v = lowest_bit(un);
        // colors are interchangeable until the first vertex is placed
        int limit = trail.empty() ? 1 : 2;
        for (int c = 0; c < limit; ++c) {
            std::size_t inner = trail.size();
            assign(v, c);
            if (dfs()) return true;
            undo_to(inner);
        }
        undo_to(mark);
        return false;
    };

    if (!dfs()) return false;
    // vertices in no live edge get an arbitrary color
    for (int v : bits_of(alive & ~(colored[0] | colored[1])))
        colors_out[static_cast<std::size_t>(v)] = 0;
    return true;
}

}  // namespace detail

/// Witness 2-coloring of h (no monochromatic edge), or nullopt. A
/// hypergraph without edges is 2-colorable.
inline std::optional<std::vector<int>> two_coloring(const Hypergraph& h) {
    std::vector<int> colors;
    if (detail::two_color_search(h.edges(), h.ground_set(), h.vertex_count(), colors))
        return colors;
    return std::nullopt;
}

inline bool is_two_colorable(const Hypergraph& h) { return two_coloring(h).has_value(); }

struct DefectResult {
    int defect = 0;
    Mask removed = 0;  // lexicographically least witness of minimum size
};

inline constexpr int kMaxDefectVertices = 20;

/// Colorability defect: the minimum number of vertices whose removal leaves
/// a 2-colorable induced subhypergraph. Exhaustive over deletion sets in
/// increasing size, so exponential in the worst case; intended for n <= 20.
inline DefectResult colorability_defect(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n > kMaxDefectVertices)
        throw capacity_error("colorability_defect is exhaustive; refusing n > " +
                             std::to_string(kMaxDefectVertices));
    std::vector<int> scratch;
    const Mask ground = h.ground_set();
    for (int d = 0; d <= n; ++d) {
        DefectResult found;
        bool ok = false;
        for_each_combination(n, d, [&](Mask removed) {
            if (ok) return;
            if (detail::two_color_search(h.edges(), ground & ~removed, n, scratch)) {
                found = DefectResult{d, removed};
                ok = true;
            }
        });
        if (ok) return found;
    }
    throw internal_error("colorability_defect: no deletion set found");  // unreachable
}

inline constexpr long long kMaxGeneratedEdges = 1'000'000;

/// K_n^k: vertex set [n], edges all k-subsets.
inline Hypergraph complete_k_uniform(int n, int k) {
    if (k < 1 || n < k) throw domain_error("complete_k_uniform requires n >= k >= 1");
    if (n > kMaxGroundSet) throw capacity_error("complete_k_uniform: n > 64");
    // C(n,k) with overflow-free early exit
    long long count = 1;
    for (int i = 1; i <= k; ++i) {
        count = count * (n - k + i) / i;
        if (count > kMaxGeneratedEdges)
            throw capacity_error("complete_k_uniform: edge family too large");
    }
    std::vector<Mask> edges;
    edges.reserve(static_cast<std::size_t>(count));
    for_each_combination(n, k, [&](Mask e) { edges.push_back(e); });
    return Hypergraph::numbered(n, std::move(edges));
}

/// s-stability of a subset of [n] under 1-based circular distance:
/// s <= |i-j| <= n-s for every two distinct members.
inline bool is_s_stable(Mask subset, int n, int s) {
    std::vector<int> elems = bits_of(subset);
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = a + 1; b < elems.size(); ++b) {
            int diff = elems[b] - elems[a];  // elements are 0-based, difference is the same
            if (diff < s || diff > n - s) return false;
        }
    return true;
}

/// Vertex set [n], edges all s-stable k-subsets. The edge family may be
/// empty (for example when n < s*k); downstream operations accept that.
inline Hypergraph s_stable_k_uniform(int n, int k, int s) {
    if (n < 1 || k < 1 || s < 1) throw domain_error("s_stable_k_uniform requires positive n, k, s");
    if (n > kMaxGroundSet) throw capacity_error("s_stable_k_uniform: n > 64");
    if (k > n) return Hypergraph::numbered(n, {});
    long long count = 1;
    for (int i = 1; i <= k; ++i) {
        count = count * (n - k + i) / i;
        if (count > kMaxGeneratedEdges)
            throw capacity_error("s_stable_k_uniform: edge family too large");
    }
    std::vector<Mask> edges;
    for_each_combination(n, k, [&](Mask e) {
        if (is_s_stable(e, n, s)) edges.push_back(e);
    });
    return Hypergraph::numbered(n, std::move(edges));
}

}  // namespace galekit
