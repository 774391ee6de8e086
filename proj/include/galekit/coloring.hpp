#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "galekit/errors.hpp"
#include "galekit/graph.hpp"

namespace galekit {

inline constexpr int kDefaultChromaticCap = 120;

/// Independent witness checker: every edge bichromatic, colors in [0, k).
inline bool is_valid_coloring(const Graph& g, const std::vector<int>& colors, int k) {
    const int n = g.vertex_count();
    if (static_cast<int>(colors.size()) != n) return false;
    for (int v = 0; v < n; ++v)
        if (colors[static_cast<std::size_t>(v)] < 0 || colors[static_cast<std::size_t>(v)] >= k)
            return false;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v && colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)])
                return false;
    return true;
}

/// Greedy clique from each seed vertex in degree order; returns the best
/// one found (vertex indices). Lower bound only.
inline std::vector<int> greedy_clique(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    std::vector<int> best;
    for (int seed : order) {
        std::vector<int> clique{seed};
        for (int cand : order) {
            if (cand == seed) continue;
            bool all = true;
            for (int c : clique)
                if (!g.adjacent(cand, c)) {
                    all = false;
                    break;
                }
            if (all) clique.push_back(cand);
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

/// DSATUR greedy coloring; returns (number of colors used, coloring).
inline std::pair<int, std::vector<int>> dsatur_coloring(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    if (n == 0) return {0, colors};
    std::vector<std::uint64_t> sat(static_cast<std::size_t>(n), 0);  // bitset of neighbor colors (<=64 tracked)
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colors[static_cast<std::size_t>(v)] != -1) continue;
            int s = std::popcount(sat[static_cast<std::size_t>(v)]);
            int d = g.degree(v);
            if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
                pick = v;
                pick_sat = s;
                pick_deg = d;
            }
        }
        int c = 0;
        while (true) {
            bool clash = false;
            for (int u : g.neighbors(pick))
                if (colors[static_cast<std::size_t>(u)] == c) {
                    clash = true;
                    break;
                }
            if (!clash) break;
            ++c;
        }
        colors[static_cast<std::size_t>(pick)] = c;
        used = std::max(used, c + 1);
        for (int u : g.neighbors(pick))
            if (c < 64) sat[static_cast<std::size_t>(u)] |= std::uint64_t{1} << c;
    }
    return {used, colors};
}

namespace detail {

/// Decision search: proper k-coloring extending the precolored clique.
/// DSATUR branching; colors beyond those already used are introduced in
/// canonical order to break color symmetry.
inline bool k_coloring_search(const Graph& g, int k, const std::vector<int>& clique,
                              std::vector<int>& colors_out) {
    const int n = g.vertex_count();
    if (static_cast<int>(clique.size()) > k) return false;
    if (k > 63) throw capacity_error("k-coloring search supports k <= 63");
    const std::uint64_t all_colors = (std::uint64_t{1} << k) - 1;

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        adj[static_cast<std::size_t>(v)] = g.neighbors(v);
        deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    }

    colors_out.assign(static_cast<std::size_t>(n), -1);
    std::vector<std::uint64_t> forbidden(static_cast<std::size_t>(n), 0);

    int max_used = -1;
    for (std::size_t i = 0; i < clique.size(); ++i) {
        int v = clique[i];
        colors_out[static_cast<std::size_t>(v)] = static_cast<int>(i);
        max_used = static_cast<int>(i);
        for (int u : adj[static_cast<std::size_t>(v)])
            forbidden[static_cast<std::size_t>(u)] |= std::uint64_t{1} << i;
    }
    for (int v = 0; v < n; ++v)
        if (colors_out[static_cast<std::size_t>(v)] == -1 &&
            (forbidden[static_cast<std::size_t>(v)] & all_colors) == all_colors)
            return false;

    int uncolored = 0;
    for (int v = 0; v < n; ++v)
        if (colors_out[static_cast<std::size_t>(v)] == -1) ++uncolored;

    std::vector<int> touched_stack;

    // DSATUR branching: most saturated vertex first, then highest degree.
    std::function<bool(int, int)> dfs = [&](int remaining, int used_hi) -> bool {
        if (remaining == 0) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colors_out[static_cast<std::size_t>(v)] != -1) continue;
            int s = std::popcount(forbidden[static_cast<std::size_t>(v)] & all_colors);
            int d = deg[static_cast<std::size_t>(v)];
            if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
                pick = v;
                pick_sat = s;
                pick_deg = d;
            }
        }
        const int color_limit = std::min(k - 1, used_hi + 1);
        for (int c = 0; c <= color_limit; ++c) {
            if ((forbidden[static_cast<std::size_t>(pick)] >> c) & 1) continue;
            colors_out[static_cast<std::size_t>(pick)] = c;
            const std::size_t mark = touched_stack.size();
            bool dead = false;
            for (int u : adj[static_cast<std::size_t>(pick)]) {
                if (colors_out[static_cast<std::size_t>(u)] != -1) continue;
                auto& f = forbidden[static_cast<std::size_t>(u)];
                if ((f >> c) & 1) continue;
                f |= std::uint64_t{1} << c;
                touched_stack.push_back(u);
                if ((f & all_colors) == all_colors) dead = true;
            }
            if (!dead && dfs(remaining - 1, std::max(used_hi, c))) return true;
            while (touched_stack.size() > mark) {
                forbidden[static_cast<std::size_t>(touched_stack.back())] &= ~(std::uint64_t{1} << c);
                touched_stack.pop_back();
            }
            colors_out[static_cast<std::size_t>(pick)] = -1;
        }
        return false;
    };
    return dfs(uncolored, max_used);
}

}  // namespace detail

struct ColoringResult {
    int chi = 0;
    std::vector<int> colors;
};

/// Exact chromatic number by branch and bound: greedy clique lower bound,
/// DSATUR upper bound, then k-colorability decisions from the bottom up.
/// Instances above vertex_cap are refused rather than answered heuristically.
inline ColoringResult chromatic_number(const Graph& g, int vertex_cap = kDefaultChromaticCap) {
    const int n = g.vertex_count();
    if (n > vertex_cap)
        throw capacity_error("exact chromatic number refused: " + std::to_string(n) +
                             " vertices exceeds cap " + std::to_string(vertex_cap));
    if (n == 0) return ColoringResult{0, {}};
    if (g.edge_count() == 0) return ColoringResult{1, std::vector<int>(static_cast<std::size_t>(n), 0)};

    std::vector<int> clique = greedy_clique(g);
    auto [ub, ub_colors] = dsatur_coloring(g);
    int lb = static_cast<int>(clique.size());

    for (int k = lb; k < ub; ++k) {
        std::vector<int> colors;
        if (detail::k_coloring_search(g, k, clique, colors)) {
            if (!is_valid_coloring(g, colors, k))
                throw internal_error("chromatic_number produced an invalid coloring");
            return ColoringResult{k, colors};
        }
    }
    if (!is_valid_coloring(g, ub_colors, ub))
        throw internal_error("chromatic_number produced an invalid coloring");
    return ColoringResult{ub, ub_colors};
}

}  // namespace galekit
