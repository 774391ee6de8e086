#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "galekit/bitops.hpp"
#include "galekit/errors.hpp"
#include "galekit/hypergraph.hpp"

namespace galekit {

/// A sign vector: entries in {-1, 0, +1}.
using SignVector = std::vector<std::int8_t>;

/// Length of the longest subsequence of nonzero entries whose signs
/// strictly alternate. The all-zero vector has value 0.
inline int alt_of(const SignVector& x) {
    int count = 0;
    int last = 0;
    for (std::int8_t e : x) {
        if (e == 0) continue;
        if (e != last) {
            ++count;
            last = e;
        }
    }
    return count;
}

inline SignVector parse_signs(const std::string& text) {
    SignVector out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '+') out.push_back(1);
        else if (c == '-') out.push_back(-1);
        else if (c == '0') out.push_back(0);
        else throw domain_error(std::string("bad sign character '") + c + "'");
    }
    return out;
}

inline std::string format_signs(const SignVector& x) {
    std::string out;
    out.reserve(x.size());
    for (std::int8_t e : x) out += (e > 0 ? '+' : (e < 0 ? '-' : '0'));
    return out;
}

/// An ordered pair of disjoint vertex subsets.
struct SignedPair {
    Mask plus = 0;
    Mask minus = 0;
};

inline bool signed_pair_subseteq(const SignedPair& a, const SignedPair& b) {
    return (a.plus & ~b.plus) == 0 && (a.minus & ~b.minus) == 0;
}

/// A superset-closed family of disjoint pairs over a fixed ground set,
/// given by its membership predicate. Closure is a caller obligation,
/// spot-checkable with check_superset_closed.
struct SignedIncreasingProperty {
    std::string name;
    int ground_size = 0;
    std::function<bool(Mask plus, Mask minus)> member;
};

/// A bijection [n] -> V as a permutation: sigma[pos] = vertex index.
using Bijection = std::vector<int>;

inline Bijection identity_bijection(int n) {
    Bijection sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    return sigma;
}

inline void validate_bijection(const Bijection& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n) throw domain_error("bijection has wrong length");
    Mask seen = 0;
    for (int v : sigma) {
        if (v < 0 || v >= n || has_bit(seen, v)) throw domain_error("mapping is not a bijection");
        seen |= bit(v);
    }
}

/// 3^n enumeration is the only known exact route; keep it at desk scale.
inline constexpr int kMaxAlternationVertices = 16;

struct AltValue {
    int value = -1;
    /// True when every sign vector's image lies in the property, so the
    /// maximum ranges over an empty set. value is then the -1 sentinel.
    bool all_in_property = false;
};

/// alt(P, sigma): maximum alt(X) over all sign vectors X whose sigma-image
/// (sigma(X^+), sigma(X^-)) is NOT in P. Depth-first over positions with the
/// bound alt_so_far + remaining <= best as the pruning rule.
inline AltValue alt_property(const SignedIncreasingProperty& p, const Bijection& sigma) {
    const int n = p.ground_size;
    if (n < 1) throw domain_error("alt_property: empty ground set");
    if (n > kMaxAlternationVertices)
        throw capacity_error("alt_property enumerates 3^n sign vectors; refusing n > " +
                             std::to_string(kMaxAlternationVertices));
    validate_bijection(sigma, n);

    int best = -1;
    bool found = false;

    // state per frame: position, plus/minus masks, last sign, alt count
    std::function<void(int, Mask, Mask, int, int)> dfs = [&](int pos, Mask plus, Mask minus,
                                                             int last, int alt) {
        if (alt + (n - pos) <= best) return;
        if (pos == n) {
            if (!p.member(plus, minus)) {
                found = true;
                if (alt > best) best = alt;
            }
            return;
        }
        const Mask vb = bit(sigma[static_cast<std::size_t>(pos)]);
        dfs(pos + 1, plus | vb, minus, 1, alt + (last != 1 ? 1 : 0));
        dfs(pos + 1, plus, minus | vb, -1, alt + (last != -1 ? 1 : 0));
        dfs(pos + 1, plus, minus, last, alt);
    };
    dfs(0, 0, 0, 0, 0);

    if (!found) return AltValue{-1, true};
    return AltValue{best, false};
}

/// Table over all vertex subsets: does the subset contain an edge of h?
inline std::vector<char> edge_containment_table(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n > kMaxAlternationVertices)
        throw capacity_error("edge containment table refuses n > " +
                             std::to_string(kMaxAlternationVertices));
    std::vector<char> table(std::size_t{1} << n, 0);
    for (Mask e : h.edges()) table[e] = 1;
    for (int b = 0; b < n; ++b) {
        const Mask vb = bit(b);
        for (Mask m = 0; m < table.size(); ++m)
            if ((m & vb) && table[m & ~vb]) table[m] = 1;
    }
    return table;
}

/// P1: at least one side contains an edge of h.
inline SignedIncreasingProperty property_some_side_contains_edge(const Hypergraph& h) {
    auto table = std::make_shared<std::vector<char>>(edge_containment_table(h));
    return SignedIncreasingProperty{
        "p1", h.vertex_count(),
        [table](Mask plus, Mask minus) { return (*table)[plus] || (*table)[minus]; }};
}

/// P2: both sides contain an edge of h.
inline SignedIncreasingProperty property_both_sides_contain_edge(const Hypergraph& h) {
    auto table = std::make_shared<std::vector<char>>(edge_containment_table(h));
    return SignedIncreasingProperty{
        "p2", h.vertex_count(),
        [table](Mask plus, Mask minus) { return (*table)[plus] && (*table)[minus]; }};
}

namespace detail {

/// side_ok[m] = 1 iff the subset m contains `target` pairwise disjoint
/// members of `candidates`. Level-by-level: reachable[t][m] via packing DP.
inline std::vector<char> disjoint_packing_table(int n, const std::vector<Mask>& candidates,
                                                int target) {
    std::vector<char> prev(std::size_t{1} << n, 1);  // zero subsets always fit
    if (target == 0) return prev;
    for (int t = 1; t <= target; ++t) {
        std::vector<char> cur(std::size_t{1} << n, 0);
        for (Mask m = 0; m < cur.size(); ++m) {
            for (Mask c : candidates) {
                if ((c & ~m) != 0) continue;
                if (prev[m & ~c]) {
                    cur[m] = 1;
                    break;
                }
            }
        }
        prev.swap(cur);
    }
    return prev;
}

}  // namespace detail

/// The packing property on [n]: (A, B) is a member iff each of A and B
/// contains at least s/2 pairwise disjoint s-stable k-subsets of [n].
/// Requires s even.
inline SignedIncreasingProperty property_disjoint_stable_packing(int n, int k, int s) {
    if (s < 1 || s % 2 != 0) throw domain_error("packing property requires even s");
    if (n < 1 || k < 1) throw domain_error("packing property requires positive n, k");
    if (n > kMaxAlternationVertices)
        throw capacity_error("packing property table refuses n > " +
                             std::to_string(kMaxAlternationVertices));
    std::vector<Mask> stable;
    if (k <= n)
        for_each_combination(n, k, [&](Mask e) {
            if (is_s_stable(e, n, s)) stable.push_back(e);
        });
    auto side_ok = std::make_shared<std::vector<char>>(
        detail::disjoint_packing_table(n, stable, s / 2));
    return SignedIncreasingProperty{
        "pnks:" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(s), n,
        [side_ok](Mask plus, Mask minus) { return (*side_ok)[plus] && (*side_ok)[minus]; }};
}

/// alt(H, sigma): maximum alt(X) over X such that neither side's image
/// contains an edge. Equals alt_property with P1.
inline int alt_hypergraph(const Hypergraph& h, const Bijection& sigma) {
    if (h.vertex_count() < 1) throw domain_error("alt_hypergraph: empty vertex set");
    AltValue v = alt_property(property_some_side_contains_edge(h), sigma);
    if (v.all_in_property) throw internal_error("alt_hypergraph: empty pair cannot be in P1");
    return v.value;
}

/// salt(H, sigma): maximum alt(X) over X such that at least one side's
/// image is edge-free. Equals alt_property with P2.
inline int salt_hypergraph(const Hypergraph& h, const Bijection& sigma) {
    if (h.vertex_count() < 1) throw domain_error("salt_hypergraph: empty vertex set");
    AltValue v = alt_property(property_both_sides_contain_edge(h), sigma);
    if (v.all_in_property) throw internal_error("salt_hypergraph: empty pair cannot be in P2");
    return v.value;
}

enum class AltMode { alt, salt };

inline const char* to_string(AltMode m) { return m == AltMode::alt ? "alt" : "salt"; }

struct AltSearchBudget {
    /// n up to which the permutation minimum is exhaustive (n! sweeps).
    int exhaustive_threshold = 8;
    /// Simulated-annealing proposals above the threshold.
    int anneal_iterations = 200;
    std::uint64_t seed = 12345;
    int threads = 1;
};

struct AltMinResult {
    int value = 0;
    Bijection sigma;   // witness; lexicographically least minimizer when exact
    bool exact = false;
};

namespace detail {

/// Evaluates the alt/salt maximum for one sigma, giving up as soon as the
/// running maximum exceeds abort_above (the caller's best known minimum;
/// such a sigma cannot improve it). Returns the exact value when it is
/// <= abort_above, otherwise some value > abort_above.
inline int alt_sigma_with_abort(const std::vector<char>& table, AltMode mode, int n,
                                const Bijection& sigma, int abort_above) {
    int best = -1;
    std::function<void(int, Mask, Mask, int, int)> dfs = [&](int pos, Mask plus, Mask minus,
                                                             int last, int alt) {
        if (best > abort_above) return;
        if (alt + (n - pos) <= best) return;
        if (pos == n) {
            bool in_p = mode == AltMode::alt ? (table[plus] || table[minus])
                                             : (table[plus] && table[minus]);
            if (!in_p && alt > best) best = alt;
            return;
        }
        const Mask vb = bit(sigma[static_cast<std::size_t>(pos)]);
        dfs(pos + 1, plus | vb, minus, 1, alt + (last != 1 ? 1 : 0));
        dfs(pos + 1, plus, minus | vb, -1, alt + (last != -1 ? 1 : 0));
        dfs(pos + 1, plus, minus, last, alt);
    };
    dfs(0, 0, 0, 0, 0);
    return best;
}

struct PrefixScan {
    int value = INT32_MAX;
    Bijection sigma;
};

/// Exhaustive scan of all permutations with a fixed first element, in
/// lexicographic order. shared_best is a pruning hint only: any sigma whose
/// value is <= shared_best is evaluated exactly, so the per-prefix minimum
/// and its first witness never depend on thread timing.
inline PrefixScan scan_prefix(const std::vector<char>& table, AltMode mode, int n, int first,
                              std::atomic<int>& shared_best) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (v != first) rest.push_back(v);
    PrefixScan out;
    Bijection sigma(static_cast<std::size_t>(n));
    sigma[0] = first;
    do {
        std::copy(rest.begin(), rest.end(), sigma.begin() + 1);
        int hint = std::min(out.value == INT32_MAX ? n : out.value - 1,
                            shared_best.load(std::memory_order_relaxed));
        int v = alt_sigma_with_abort(table, mode, n, sigma, hint);
        if (v <= hint && v < out.value) {
            out.value = v;
            out.sigma = sigma;
            int cur = shared_best.load(std::memory_order_relaxed);
            while (v < cur && !shared_best.compare_exchange_weak(cur, v)) {
            }
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

}  // namespace detail

/// Minimum of alt(H, sigma) (or salt) over all bijections sigma. Exhaustive
/// for n <= budget.exhaustive_threshold; otherwise simulated annealing over
/// adjacent transpositions with a fixed seed. A non-exact result is an
/// upper bound on the true minimum, so |V| - value stays a valid chromatic
/// lower bound.
inline AltMinResult alt_min(const Hypergraph& h, AltMode mode,
                            const AltSearchBudget& budget = {}) {
    const int n = h.vertex_count();
    if (n < 1) throw domain_error("alt_min: empty vertex set");
    const auto table = edge_containment_table(h);

    if (h.edge_count() == 0) return AltMinResult{n, identity_bijection(n), true};

    if (n <= budget.exhaustive_threshold) {
        std::atomic<int> shared_best{n};
        std::vector<detail::PrefixScan> scans(static_cast<std::size_t>(n));
        if (budget.threads > 1 && n > 2) {
            std::vector<std::future<detail::PrefixScan>> futs;
            futs.reserve(static_cast<std::size_t>(n));
            for (int first = 0; first < n; ++first)
                futs.push_back(std::async(std::launch::async, [&, first] {
                    return detail::scan_prefix(table, mode, n, first, shared_best);
                }));
            for (int first = 0; first < n; ++first)
                scans[static_cast<std::size_t>(first)] = futs[static_cast<std::size_t>(first)].get();
        } else {
            for (int first = 0; first < n; ++first)
                scans[static_cast<std::size_t>(first)] =
                    detail::scan_prefix(table, mode, n, first, shared_best);
        }
        // reduce in prefix order: the first prefix attaining the minimum
        // holds the lexicographically least witness
        AltMinResult out;
        out.value = INT32_MAX;
        out.exact = true;
        for (const auto& s : scans) {
            if (s.value < out.value) {
                out.value = s.value;
                out.sigma = s.sigma;
            }
        }
        if (out.value == INT32_MAX) throw internal_error("alt_min: no permutation evaluated");
        return out;
    }

    // local search: simulated annealing over adjacent transpositions
    std::mt19937_64 rng(budget.seed);
    Bijection sigma = identity_bijection(n);
    auto eval = [&](const Bijection& s) {
        return detail::alt_sigma_with_abort(table, mode, n, s, n);
    };
    int cur = eval(sigma);
    AltMinResult out{cur, sigma, false};
    double temperature = 1.5;
    for (int it = 0; it < budget.anneal_iterations; ++it, temperature *= 0.97) {
        int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        std::swap(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i) + 1]);
        int cand = eval(sigma);
        int delta = cand - cur;
        bool accept = delta <= 0;
        if (!accept) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            accept = u < std::exp(-delta / std::max(temperature, 1e-9));
        }
        if (accept) {
            cur = cand;
            if (cand < out.value) {
                out.value = cand;
                out.sigma = sigma;
            }
        } else {
            std::swap(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i) + 1]);
        }
    }
    return out;
}

struct SupersetCheckResult {
    bool ok = true;
    SignedPair small;
    SignedPair large;  // witness chain small <= large with member(small) && !member(large)
};

/// Randomized spot check of the superset-closure hypothesis: sample chains
/// (A,B) <= (C,D) and verify membership monotonicity.
inline SupersetCheckResult check_superset_closed(const SignedIncreasingProperty& p, int samples,
                                                 std::uint64_t seed) {
    const int n = p.ground_size;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        SignedPair a, c;
        for (int v = 0; v < n; ++v) {
            switch (rng() % 3) {
                case 0: a.plus |= bit(v); break;
                case 1: a.minus |= bit(v); break;
                default: break;
            }
        }
        c = a;
        for (int v = 0; v < n; ++v) {
            if (has_bit(a.plus | a.minus, v)) continue;
            switch (rng() % 3) {
                case 0: c.plus |= bit(v); break;
                case 1: c.minus |= bit(v); break;
                default: break;
            }
        }
        if (p.member(a.plus, a.minus) && !p.member(c.plus, c.minus))
            return SupersetCheckResult{false, a, c};
    }
    return SupersetCheckResult{};
}

}  // namespace galekit
