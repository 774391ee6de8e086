#pragma once

// Independent brute-force oracles. Everything here recomputes results by
// the most literal route available so the production implementations have
// something honest to disagree with. Nothing in this header may call the
// optimized code paths it is checking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "galekit/alternation.hpp"
#include "galekit/box_complex.hpp"
#include "galekit/graph.hpp"
#include "galekit/hypergraph.hpp"

namespace oracles {

using galekit::Bijection;
using galekit::Graph;
using galekit::Hypergraph;
using galekit::Mask;
using galekit::SignVector;

// Longest alternating subsequence by quadratic DP over all end positions.
inline int alt_dp(const SignVector& x) {
    const int n = static_cast<int>(x.size());
    int best = 0;
    std::vector<int> len(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0) continue;
        len[static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < i; ++j)
            if (x[static_cast<std::size_t>(j)] != 0 &&
                x[static_cast<std::size_t>(j)] != x[static_cast<std::size_t>(i)])
                len[static_cast<std::size_t>(i)] =
                    std::max(len[static_cast<std::size_t>(i)], len[static_cast<std::size_t>(j)] + 1);
        best = std::max(best, len[static_cast<std::size_t>(i)]);
    }
    return best;
}

inline SignVector sign_vector_from_counter(long long counter, int n) {
    SignVector x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int digit = static_cast<int>(counter % 3);
        x[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(digit == 2 ? -1 : digit);
        counter /= 3;
    }
    return x;
}

inline bool side_contains_edge(const Hypergraph& h, Mask side) {
    for (Mask e : h.edges())
        if ((e & ~side) == 0) return true;
    return false;
}

// alt/salt of one bijection by the flat 3^n loop and direct edge scans.
inline int alt_sigma_direct(const Hypergraph& h, const Bijection& sigma, galekit::AltMode mode) {
    const int n = h.vertex_count();
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    int best = -1;
    for (long long c = 0; c < total; ++c) {
        SignVector x = sign_vector_from_counter(c, n);
        Mask plus = 0, minus = 0;
        for (int i = 0; i < n; ++i) {
            if (x[static_cast<std::size_t>(i)] > 0) plus |= galekit::bit(sigma[static_cast<std::size_t>(i)]);
            if (x[static_cast<std::size_t>(i)] < 0) minus |= galekit::bit(sigma[static_cast<std::size_t>(i)]);
        }
        const bool p = side_contains_edge(h, plus);
        const bool m = side_contains_edge(h, minus);
        const bool qualifies = mode == galekit::AltMode::alt ? (!p && !m) : (!p || !m);
        if (qualifies) best = std::max(best, alt_dp(x));
    }
    return best;
}

struct AltMinOracle {
    int value;
    Bijection sigma;
};

inline AltMinOracle alt_min_bruteforce(const Hypergraph& h, galekit::AltMode mode) {
    const int n = h.vertex_count();
    Bijection sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    AltMinOracle best{n + 1, {}};
    do {
        const int v = alt_sigma_direct(h, sigma, mode);
        if (v < best.value) best = AltMinOracle{v, sigma};
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

inline galekit::AltValue alt_property_bruteforce(const galekit::SignedIncreasingProperty& p,
                                                 const Bijection& sigma) {
    const int n = p.ground_size;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    galekit::AltValue out;
    out.all_in_property = true;
    for (long long c = 0; c < total; ++c) {
        SignVector x = sign_vector_from_counter(c, n);
        Mask plus = 0, minus = 0;
        for (int i = 0; i < n; ++i) {
            if (x[static_cast<std::size_t>(i)] > 0) plus |= galekit::bit(sigma[static_cast<std::size_t>(i)]);
            if (x[static_cast<std::size_t>(i)] < 0) minus |= galekit::bit(sigma[static_cast<std::size_t>(i)]);
        }
        if (!p.member(plus, minus)) {
            out.all_in_property = false;
            out.value = std::max(out.value, alt_dp(x));
        }
    }
    return out;
}

inline bool two_colorable_bruteforce(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (h.edge_count() == 0) return true;
    for (Mask coloring = 0; coloring < (Mask{1} << n); ++coloring) {
        bool ok = true;
        for (Mask e : h.edges()) {
            const Mask inside = e & coloring;
            if (inside == e || inside == 0) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

inline int defect_bruteforce(const Hypergraph& h) {
    const int n = h.vertex_count();
    int best = n;
    for (Mask removed = 0; removed < (Mask{1} << n); ++removed) {
        if (galekit::popcount(removed) >= best) continue;
        if (two_colorable_bruteforce(galekit::induced_subhypergraph(h, h.ground_set() & ~removed)))
            best = galekit::popcount(removed);
    }
    return best;
}

// s-stability via circular gaps: sort the 1-based elements and require
// every cyclic gap (including the wraparound) to be at least s.
inline bool stable_by_circular_gaps(Mask subset, int n, int s) {
    std::vector<int> elems;
    for (int v : galekit::bits_of(subset)) elems.push_back(v + 1);
    if (elems.size() <= 1) return true;
    for (std::size_t i = 0; i + 1 < elems.size(); ++i)
        if (elems[i + 1] - elems[i] < s) return false;
    if ((elems.front() + n) - elems.back() < s) return false;
    return true;
}

// Plain k-coloring backtracking (no cliques, no symmetry breaking), then
// chi by trying k = 1, 2, ...
inline bool kcolor_plain(const Graph& g, int k, int v, std::vector<int>& colors) {
    if (v == g.vertex_count()) return true;
    for (int c = 0; c < k; ++c) {
        bool clash = false;
        for (int u : g.neighbors(v))
            if (u < v && colors[static_cast<std::size_t>(u)] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        colors[static_cast<std::size_t>(v)] = c;
        if (kcolor_plain(g, k, v + 1, colors)) return true;
    }
    colors[static_cast<std::size_t>(v)] = -1;
    return false;
}

inline int chromatic_bruteforce(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), -1);
        if (kcolor_plain(g, k, 0, colors)) return k;
    }
}

inline bool hom_plain(const Graph& g, const Graph& t, int v, std::vector<int>& map) {
    if (v == g.vertex_count()) return true;
    for (int image = 0; image < t.vertex_count(); ++image) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (u < v) {
                const int fu = map[static_cast<std::size_t>(u)];
                if (fu == image || !t.adjacent(fu, image)) {
                    ok = false;
                    break;
                }
            }
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = image;
        if (hom_plain(g, t, v + 1, map)) return true;
    }
    map[static_cast<std::size_t>(v)] = -1;
    return false;
}

inline bool hom_bruteforce(const Graph& g, const Graph& t) {
    if (g.vertex_count() == 0) return true;
    if (t.vertex_count() == 0) return false;
    std::vector<int> map(static_cast<std::size_t>(g.vertex_count()), -1);
    return hom_plain(g, t, 0, map);
}

// Box complex straight from the definition with explicit loops.
inline std::vector<galekit::BoxSimplex> box_complex_bruteforce(const Graph& g,
                                                               galekit::BoxVariant variant) {
    const int n = g.vertex_count();
    std::vector<galekit::BoxSimplex> out;
    auto cn_nonempty = [&](Mask a) {
        // CN of the empty set is all of V; members of a never qualify since
        // simple graphs have no loops.
        for (int v = 0; v < n; ++v) {
            bool all = true;
            for (int x : galekit::bits_of(a))
                if (!g.adjacent(x, v)) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        return false;
    };
    for (Mask a = 0; a < (Mask{1} << n); ++a)
        for (Mask b = 0; b < (Mask{1} << n); ++b) {
            if ((a & b) != 0 || (a | b) == 0) continue;
            bool complete = true;
            for (int x : galekit::bits_of(a))
                for (int y : galekit::bits_of(b))
                    if (!g.adjacent(x, y)) complete = false;
            if (!complete) continue;
            if (variant == galekit::BoxVariant::b && (!cn_nonempty(a) || !cn_nonempty(b))) continue;
            out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Exact d = 1 hemisphere patterns by circular sweep: critical directions
// are the integer vectors orthogonal to (1, i); between consecutive
// criticals the pattern is constant and the vector sum of the two
// bracketing criticals realizes it. All arithmetic stays integral.
inline std::set<std::vector<int>> d1_sweep_patterns(int n) {
    using Dir = std::pair<long long, long long>;
    std::vector<Dir> dirs;
    for (int i = 1; i <= n; ++i) {
        dirs.push_back({-i, 1});
        dirs.push_back({i, -1});
    }
    auto half = [](const Dir& d) { return (d.second > 0 || (d.second == 0 && d.first > 0)) ? 0 : 1; };
    auto cross = [](const Dir& a, const Dir& b) { return a.first * b.second - a.second * b.first; };
    std::sort(dirs.begin(), dirs.end(), [&](const Dir& a, const Dir& b) {
        if (half(a) != half(b)) return half(a) < half(b);
        return cross(a, b) > 0;
    });
    auto pattern_at = [&](const Dir& d) {
        std::vector<int> s;
        for (int i = 1; i <= n; ++i) {
            const long long v = d.first + d.second * i;
            s.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
        }
        return s;
    };
    std::set<std::vector<int>> out;
    for (std::size_t j = 0; j < dirs.size(); ++j) {
        out.insert(pattern_at(dirs[j]));
        const Dir& a = dirs[j];
        const Dir& b = dirs[(j + 1) % dirs.size()];
        out.insert(pattern_at({a.first + b.first, a.second + b.second}));
    }
    return out;
}

// Central arrangement cell count in general position: 2 * sum_{j<=d} C(n-1, j).
inline long long general_position_cell_count(int n, int d) {
    long long total = 0;
    for (int j = 0; j <= d && j <= n - 1; ++j) {
        long long c = 1;
        for (int i = 1; i <= j; ++i) c = c * (n - 1 - j + i) / i;
        total += c;
    }
    return 2 * total;
}

}  // namespace oracles
