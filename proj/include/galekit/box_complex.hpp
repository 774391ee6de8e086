#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galekit/bitops.hpp"
#include "galekit/errors.hpp"
#include "galekit/graph.hpp"
#include "galekit/homomorphism.hpp"

namespace galekit {

enum class BoxVariant { b0, b };

inline const char* to_string(BoxVariant v) { return v == BoxVariant::b ? "b" : "b0"; }

/// A simplex of the box complex: the disjoint pair (A, B) read as
/// A x {1} together with B x {2}. The empty simplex is left implicit.
using BoxSimplex = std::pair<Mask, Mask>;

/// Simplicial Z2-complex on two copies of V(G) with the copy-swap
/// involution (A, B) -> (B, A). Simplices are stored sorted, so membership
/// is a binary search.
struct BoxComplex {
    int n = 0;
    BoxVariant variant = BoxVariant::b0;
    std::vector<std::string> labels;
    std::vector<BoxSimplex> simplices;  // nonempty simplices, sorted
    std::vector<BoxSimplex> maximal;

    bool contains(const BoxSimplex& s) const {
        return std::binary_search(simplices.begin(), simplices.end(), s);
    }
};

inline constexpr int kMaxBoxVertices = 16;

/// Common neighborhood of a vertex set; CN of the empty set is all of V(G).
inline Mask common_neighborhood(const Graph& g, Mask a) {
    Mask cn = full_mask(g.vertex_count());
    for (int v : bits_of(a)) {
        Mask row = 0;
        for (int u : g.neighbors(v)) row |= bit(u);
        cn &= row;
    }
    return cn;
}

/// Enumerates all simplices of B0(G) or B(G): disjoint pairs (A, B) with
/// G[A, B] complete bipartite (vacuously when a side is empty), and for
/// variant B additionally CN(A) and CN(B) both nonempty.
inline BoxComplex build_box_complex(const Graph& g, BoxVariant variant) {
    const int n = g.vertex_count();
    if (n > kMaxBoxVertices)
        throw capacity_error("box complex enumeration refuses more than " +
                             std::to_string(kMaxBoxVertices) + " vertices");
    BoxComplex c;
    c.n = n;
    c.variant = variant;
    c.labels = g.labels();

    const Mask ground = full_mask(n);
    std::vector<Mask> cn(std::size_t{1} << n);
    cn[0] = ground;
    for (Mask a = 1; a < cn.size(); ++a) {
        const int v = lowest_bit(a);
        Mask row = 0;
        for (int u : g.neighbors(v)) row |= bit(u);
        cn[a] = cn[a & (a - 1)] & row;
    }

    for (Mask a = 0; a < cn.size(); ++a) {
        if (variant == BoxVariant::b && cn[a] == 0) continue;
        // G[A,B] complete bipartite iff B is a subset of CN(A)
        const Mask b_range = cn[a] & ~a;
        for_each_submask(b_range, [&](Mask b) {
            if ((a | b) == 0) return;
            if (variant == BoxVariant::b && cn[b] == 0) return;
            c.simplices.emplace_back(a, b);
        });
    }
    std::sort(c.simplices.begin(), c.simplices.end());

    for (const auto& s : c.simplices) {
        bool is_max = true;
        for (int v = 0; v < n && is_max; ++v) {
            const Mask vb = bit(v);
            if (!(s.first & vb) && !(s.second & vb)) {
                if (c.contains({s.first | vb, s.second}) || c.contains({s.first, s.second | vb}))
                    is_max = false;
            }
        }
        if (is_max) c.maximal.push_back(s);
    }
    return c;
}

/// Simplex counts by dimension (|A| + |B| - 1).
inline std::vector<long long> f_vector(const BoxComplex& c) {
    std::vector<long long> f;
    for (const auto& [a, b] : c.simplices) {
        const int dim = popcount(a) + popcount(b) - 1;
        if (dim >= static_cast<int>(f.size())) f.resize(static_cast<std::size_t>(dim) + 1, 0);
        ++f[static_cast<std::size_t>(dim)];
    }
    return f;
}

inline int complex_dimension(const BoxComplex& c) {
    return static_cast<int>(f_vector(c).size()) - 1;  // -1 for the empty complex
}

struct Z2CheckResult {
    bool hereditary = true;
    bool involution_closed = true;
    bool free = true;
    std::optional<BoxSimplex> witness;
};

/// Explicit verification of the three structural invariants: downward
/// closure, closure under the swap involution, and freeness (no nonempty
/// simplex is its own swap).
inline Z2CheckResult check_z2_structure(const BoxComplex& c) {
    Z2CheckResult r;
    for (const auto& s : c.simplices) {
        for (int v : bits_of(s.first)) {
            BoxSimplex sub{s.first & ~bit(v), s.second};
            if ((sub.first | sub.second) != 0 && !c.contains(sub)) {
                r.hereditary = false;
                r.witness = s;
                return r;
            }
        }
        for (int v : bits_of(s.second)) {
            BoxSimplex sub{s.first, s.second & ~bit(v)};
            if ((sub.first | sub.second) != 0 && !c.contains(sub)) {
                r.hereditary = false;
                r.witness = s;
                return r;
            }
        }
    }
    for (const auto& s : c.simplices)
        if (!c.contains({s.second, s.first})) {
            r.involution_closed = false;
            r.witness = s;
            return r;
        }
    for (const auto& s : c.simplices)
        if (s.first == s.second) {
            r.free = false;
            r.witness = s;
            return r;
        }
    return r;
}

struct SimplicialMapCheck {
    bool ok = true;
    std::optional<BoxSimplex> violating_simplex;  // simplex of the source complex
};

/// Checks that a graph homomorphism f : G -> H induces a simplicial
/// Z2-map on the chosen box complex variant: the vertex map
/// (v, i) -> (f(v), i) must send simplices to simplices; commuting with
/// the swaps then holds by construction and is re-checked literally.
inline SimplicialMapCheck hom_induced_map(const Graph& g, const Graph& h,
                                          const std::vector<int>& f, BoxVariant variant) {
    if (!is_valid_homomorphism(g, h, f))
        throw domain_error("hom_induced_map requires a verified graph homomorphism");
    const BoxComplex cg = build_box_complex(g, variant);
    const BoxComplex ch = build_box_complex(h, variant);
    auto image = [&](Mask m) {
        Mask out = 0;
        for (int v : bits_of(m)) out |= bit(f[static_cast<std::size_t>(v)]);
        return out;
    };
    for (const auto& s : cg.simplices) {
        const BoxSimplex img{image(s.first), image(s.second)};
        const BoxSimplex img_of_swap{image(s.second), image(s.first)};
        if (!ch.contains(img) || img_of_swap != BoxSimplex{img.second, img.first})
            return SimplicialMapCheck{false, s};
    }
    return SimplicialMapCheck{};
}

}  // namespace galekit
