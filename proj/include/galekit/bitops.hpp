#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace galekit {

/// Subsets of a ground set of at most 64 elements, one bit per element.
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSet = 64;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit(int i) { return Mask{1} << i; }

inline bool has_bit(Mask m, int i) { return (m >> i) & Mask{1}; }

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

/// All-ones mask on n elements; safe for n == 64.
inline Mask full_mask(int n) {
    if (n <= 0) return 0;
    if (n >= 64) return ~Mask{0};
    return (Mask{1} << n) - 1;
}

inline std::vector<int> bits_of(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    for (Mask t = m; t; t &= t - 1) out.push_back(std::countr_zero(t));
    return out;
}

/// Smallest k-element subset in the colex enumeration, i.e. bits 0..k-1.
inline Mask first_combination(int k) { return full_mask(k); }

/// Advances comb to the next k-subset of [0,n) (Gosper). Returns false when
/// the enumeration is exhausted. comb must be a valid k-subset of [0,n).
inline bool next_combination(Mask& comb, int n) {
    if (comb == 0) return false;  // the empty set is its own orbit
    const Mask limit = full_mask(n);
    Mask c = comb;
    Mask low = c & (~c + 1);
    Mask ripple = c + low;
    if (ripple > limit || ripple == 0) return false;
    comb = ripple | (((c ^ ripple) >> 2) / low);
    return comb <= limit;
}

/// Calls fn(mask) for every k-subset of [0,n).
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    Mask comb = first_combination(k);
    do {
        fn(comb);
    } while (next_combination(comb, n));
}

/// Calls fn(sub) for every subset of mask, including 0 and mask itself.
template <typename Fn>
void for_each_submask(Mask mask, Fn&& fn) {
    Mask sub = mask;
    while (true) {
        fn(sub);
        if (sub == 0) break;
        sub = (sub - 1) & mask;
    }
}

}  // namespace galekit
