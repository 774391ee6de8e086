#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "galekit/bitops.hpp"
#include "galekit/coloring.hpp"
#include "galekit/errors.hpp"
#include "galekit/graph.hpp"

namespace galekit {

/// Independent witness checker: map preserves adjacency and hits no loop.
inline bool is_valid_homomorphism(const Graph& g, const Graph& t, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (map[static_cast<std::size_t>(v)] < 0 ||
            map[static_cast<std::size_t>(v)] >= t.vertex_count())
            return false;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (u > v) continue;
            int fu = map[static_cast<std::size_t>(u)], fv = map[static_cast<std::size_t>(v)];
            if (fu == fv || !t.adjacent(fu, fv)) return false;
        }
    return true;
}

struct HomOptions {
    /// When the target is vertex transitive the first branching vertex can
    /// be pinned to target vertex 0 without losing completeness.
    bool target_vertex_transitive = false;
    int vertex_cap = kDefaultChromaticCap;
};

/// Backtracking homomorphism search G -> T with forward checking. Domains
/// are target bitsets: assigning v constrains each unassigned neighbor of v
/// to the neighborhood of the image. Branching picks the smallest domain.
inline std::optional<std::vector<int>> find_homomorphism(const Graph& g, const Graph& t,
                                                         const HomOptions& opts = {}) {
    const int ng = g.vertex_count();
    const int nt = t.vertex_count();
    if (ng > opts.vertex_cap || nt > opts.vertex_cap)
        throw capacity_error("homomorphism search refused: instance exceeds vertex cap " +
                             std::to_string(opts.vertex_cap));
    if (ng == 0) return std::vector<int>{};
    if (nt == 0) return std::nullopt;

    const int words = (nt + 63) / 64;
    const std::uint64_t tail =
        (nt % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (nt % 64)) - 1);

    using Domain = std::vector<std::uint64_t>;
    std::vector<Domain> domains(static_cast<std::size_t>(ng),
                                Domain(static_cast<std::size_t>(words), ~std::uint64_t{0}));
    for (auto& d : domains) d[static_cast<std::size_t>(words) - 1] = tail;

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(ng));
    for (int v = 0; v < ng; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);

    std::vector<int> map(static_cast<std::size_t>(ng), -1);

    auto domain_size = [&](const Domain& d) {
        int c = 0;
        for (std::uint64_t w : d) c += std::popcount(w);
        return c;
    };

    bool first_assignment_pending = opts.target_vertex_transitive;

    std::function<bool(int)> dfs = [&](int assigned) -> bool {
        if (assigned == ng) return true;
        int pick = -1, pick_size = 0;
        for (int v = 0; v < ng; ++v) {
            if (map[static_cast<std::size_t>(v)] != -1) continue;
            int s = domain_size(domains[static_cast<std::size_t>(v)]);
            if (pick == -1 || s < pick_size) {
                pick = v;
                pick_size = s;
            }
        }
        Domain candidates = domains[static_cast<std::size_t>(pick)];
        if (first_assignment_pending) {
            // pin the very first image; valid for vertex-transitive targets
            bool any = false;
            for (std::size_t w = 0; w < candidates.size(); ++w) {
                if (!any && candidates[w]) {
                    candidates[w] &= candidates[w] & (~candidates[w] + 1);
                    any = true;
                } else if (any) {
                    candidates[w] = 0;
                }
            }
        }
        for (std::size_t w = 0; w < candidates.size(); ++w) {
            for (std::uint64_t bits = candidates[w]; bits; bits &= bits - 1) {
                const int target = static_cast<int>(w) * 64 + std::countr_zero(bits);
                map[static_cast<std::size_t>(pick)] = target;
                bool saved_first = first_assignment_pending;
                first_assignment_pending = false;
                std::vector<std::pair<int, Domain>> saved;
                bool dead = false;
                for (int u : adj[static_cast<std::size_t>(pick)]) {
                    if (map[static_cast<std::size_t>(u)] != -1) {
                        if (!t.adjacent(map[static_cast<std::size_t>(u)], target)) {
                            dead = true;
                            break;
                        }
                        continue;
                    }
                    saved.emplace_back(u, domains[static_cast<std::size_t>(u)]);
                    auto& dom = domains[static_cast<std::size_t>(u)];
                    const auto& trow = t.row(target);
                    bool empty = true;
                    for (std::size_t x = 0; x < dom.size(); ++x) {
                        dom[x] &= trow[x];
                        if (dom[x]) empty = false;
                    }
                    if (empty) {
                        dead = true;
                        break;
                    }
                }
                if (!dead && dfs(assigned + 1)) return true;
                for (auto& [u, dom] : saved) domains[static_cast<std::size_t>(u)] = std::move(dom);
                map[static_cast<std::size_t>(pick)] = -1;
                first_assignment_pending = saved_first;
            }
        }
        return false;
    };

    if (!dfs(0)) return std::nullopt;
    if (!is_valid_homomorphism(g, t, map))
        throw internal_error("homomorphism search produced an invalid map");
    return map;
}

namespace detail {

/// Enumerates the r-subsets of the set bits of mask, invoking fn(subset).
/// Returns true if fn returned true for some subset (early exit).
inline bool for_each_bit_subset(Mask mask, int r, const std::function<bool(Mask)>& fn) {
    std::vector<int> elems = bits_of(mask);
    if (r > static_cast<int>(elems.size())) return false;
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::function<bool(int, int)> rec = [&](int depth, int start) -> bool {
        if (depth == r) {
            Mask s = 0;
            for (int i : idx) s |= bit(elems[static_cast<std::size_t>(i)]);
            return fn(s);
        }
        for (int i = start; i <= static_cast<int>(elems.size()) - (r - depth); ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            if (rec(depth + 1, i + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace detail

/// Decision form of the m-fold coloring problem: can every vertex get an
/// m-subset of [n_colors] such that adjacent vertices get disjoint subsets?
/// This is exactly the homomorphism question G -> KG(n_colors, m), searched
/// directly over color subsets so that color symmetry can be broken: a
/// branch may use previously unseen colors only as the next unused ones.
inline bool is_mfold_colorable(const Graph& g, int n_colors, int m,
                               std::vector<Mask>* witness = nullptr) {
    if (m < 1 || n_colors < m) throw domain_error("m-fold coloring requires n_colors >= m >= 1");
    if (n_colors > 63) throw capacity_error("m-fold coloring supports n_colors <= 63");
    const int n = g.vertex_count();
    if (n == 0) {
        if (witness) witness->clear();
        return true;
    }

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);

    std::vector<Mask> avail(static_cast<std::size_t>(n), full_mask(n_colors));
    std::vector<Mask> chosen(static_cast<std::size_t>(n), 0);
    std::vector<char> done(static_cast<std::size_t>(n), 0);

    // candidate count under the canonical-new-color rule
    auto count_candidates = [&](int v, int used) {
        const int a = popcount(avail[static_cast<std::size_t>(v)] & full_mask(used));
        const int fresh = n_colors - used;
        long long total = 0;
        for (int j = std::max(0, m - a); j <= std::min(m, fresh); ++j) {
            // C(a, m - j)
            long long c = 1;
            for (int i = 1; i <= m - j; ++i) c = c * (a - (m - j) + i) / i;
            total += c;
        }
        return total;
    };

    std::function<bool(int, int)> dfs = [&](int remaining, int used) -> bool {
        if (remaining == 0) return true;
        int pick = -1;
        long long pick_cnt = 0;
        for (int v = 0; v < n; ++v) {
            if (done[static_cast<std::size_t>(v)]) continue;
            long long c = count_candidates(v, used);
            if (c == 0) return false;
            if (pick == -1 || c < pick_cnt) {
                pick = v;
                pick_cnt = c;
            }
        }
        const Mask old_avail = avail[static_cast<std::size_t>(pick)] & full_mask(used);
        done[static_cast<std::size_t>(pick)] = 1;
        bool found = false;
        for (int j = 0; j <= std::min(m, n_colors - used) && !found; ++j) {
            Mask fresh_part = 0;
            for (int f = 0; f < j; ++f) fresh_part |= bit(used + f);
            found = detail::for_each_bit_subset(old_avail, m - j, [&](Mask old_part) -> bool {
                const Mask s = old_part | fresh_part;
                chosen[static_cast<std::size_t>(pick)] = s;
                std::vector<std::pair<int, Mask>> saved;
                bool dead = false;
                for (int u : adj[static_cast<std::size_t>(pick)]) {
                    if (done[static_cast<std::size_t>(u)]) {
                        if (chosen[static_cast<std::size_t>(u)] & s) {
                            dead = true;
                            break;
                        }
                        continue;
                    }
                    saved.emplace_back(u, avail[static_cast<std::size_t>(u)]);
                    avail[static_cast<std::size_t>(u)] &= ~s;
                    if (popcount(avail[static_cast<std::size_t>(u)]) < m) {
                        dead = true;
                        break;
                    }
                }
                if (!dead && dfs(remaining - 1, used + j)) return true;
                for (auto& [u, a] : saved) avail[static_cast<std::size_t>(u)] = a;
                return false;
            });
        }
        if (!found) {
            done[static_cast<std::size_t>(pick)] = 0;
            chosen[static_cast<std::size_t>(pick)] = 0;
        }
        return found;
    };

    if (!dfs(n, 0)) return false;
    for (int u = 0; u < n; ++u)
        for (int v : adj[static_cast<std::size_t>(u)])
            if (u < v && (chosen[static_cast<std::size_t>(u)] & chosen[static_cast<std::size_t>(v)]))
                throw internal_error("m-fold coloring produced overlapping neighbor subsets");
    if (witness) *witness = chosen;
    return true;
}

/// chi_m(G): the least n <= n_max admitting a homomorphism G -> KG(n, m).
/// Throws capacity_error when no such n exists below the cap.
inline int multichromatic_number(const Graph& g, int m, int n_max) {
    if (m < 1 || n_max < m) throw domain_error("multichromatic_number requires n_max >= m >= 1");
    for (int n = m; n <= n_max; ++n)
        if (is_mfold_colorable(g, n, m)) return n;
    throw capacity_error("multichromatic number not found below n_max = " + std::to_string(n_max));
}

}  // namespace galekit
