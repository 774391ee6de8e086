#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "galekit/alternation.hpp"
#include "galekit/bitops.hpp"
#include "galekit/errors.hpp"
#include "galekit/hypergraph.hpp"

namespace galekit {

/// Labeled unit vectors on S^d built from the moment curve: the point for
/// position i (1-based) is (-1)^i * w_i / ||w_i|| with w_i = (1, i, ..., i^d).
/// Position i is identified with vertex sigma(i). For d = 0 the points
/// collapse onto {-1, +1}, so the configuration is a multiset; for d >= 1
/// the points are pairwise distinct.
struct GaleConfiguration {
    int dim = 0;                                 // d
    std::vector<std::vector<double>> points;     // n unit vectors in R^{d+1}
    std::vector<std::string> vertex_names;       // canonical vertex order
    Bijection sigma;                             // position -> vertex index
    std::vector<std::vector<long long>> moment;  // exact w_i; empty if it overflows
    std::vector<int> flip;                       // (-1)^i per position

    int size() const { return static_cast<int>(points.size()); }
    bool has_exact() const { return !moment.empty(); }
    std::string identification(int pos) const {
        return vertex_names[static_cast<std::size_t>(sigma[static_cast<std::size_t>(pos)])];
    }
};

inline GaleConfiguration build_configuration(int n, int d, const Bijection& sigma,
                                             std::vector<std::string> names = {}) {
    if (n < 1) throw domain_error("configuration needs at least one point");
    if (d < 0) throw domain_error("sphere dimension d = -1 is excluded");
    if (d > n - 1) throw domain_error("build_configuration requires d <= n-1");
    validate_bijection(sigma, n);
    if (names.empty())
        for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    if (static_cast<int>(names.size()) != n) throw domain_error("vertex name list has wrong size");

    GaleConfiguration z;
    z.dim = d;
    z.sigma = sigma;
    z.vertex_names = std::move(names);
    bool exact_ok = true;
    std::vector<std::vector<long long>> moment;
    for (int i = 1; i <= n; ++i) {
        std::vector<long long> w(static_cast<std::size_t>(d) + 1);
        long long pw = 1;
        for (int j = 0; j <= d; ++j) {
            w[static_cast<std::size_t>(j)] = pw;
            if (j < d) {
                if (pw > (std::int64_t{1} << 62) / std::max(i, 1)) {
                    exact_ok = false;
                    break;
                }
                pw *= i;
            }
        }
        if (!exact_ok) break;
        moment.push_back(std::move(w));
    }
    if (exact_ok) z.moment = std::move(moment);

    for (int i = 1; i <= n; ++i) {
        const int sign = (i % 2 == 1) ? -1 : 1;
        z.flip.push_back(sign);
        std::vector<double> p(static_cast<std::size_t>(d) + 1);
        long double norm2 = 0;
        long double pw = 1;
        for (int j = 0; j <= d; ++j) {
            p[static_cast<std::size_t>(j)] = static_cast<double>(pw);
            norm2 += pw * pw;
            pw *= i;
        }
        const long double norm = std::sqrt(norm2);
        for (auto& c : p) c = static_cast<double>(sign * (c / static_cast<double>(norm)));
        z.points.push_back(std::move(p));
    }
    return z;
}

inline constexpr double kZeroBand = 1e-9;
inline constexpr double kUnitNormTolerance = 1e-9;

/// Signed trace of a direction: which vertices land in the open hemisphere
/// around x, around -x, or inside the zero band.
struct HemisphereTrace {
    std::vector<double> direction;
    Mask plus = 0;
    Mask minus = 0;
    Mask zero = 0;
};

inline HemisphereTrace hemisphere_trace(const GaleConfiguration& z, const std::vector<double>& x,
                                        double zero_band = kZeroBand) {
    if (static_cast<int>(x.size()) != z.dim + 1)
        throw domain_error("direction has wrong dimension");
    double norm2 = 0;
    for (double c : x) norm2 += c * c;
    if (std::abs(std::sqrt(norm2) - 1.0) > kUnitNormTolerance)
        throw domain_error("direction must be a unit vector");
    HemisphereTrace t;
    t.direction = x;
    for (int pos = 0; pos < z.size(); ++pos) {
        double dot = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            dot += x[j] * z.points[static_cast<std::size_t>(pos)][j];
        const Mask vb = bit(z.sigma[static_cast<std::size_t>(pos)]);
        if (dot > zero_band) t.plus |= vb;
        else if (dot < -zero_band) t.minus |= vb;
        else t.zero |= vb;
    }
    return t;
}

namespace detail {

/// Minimal extra cost of a run of c zero positions between two nonzero
/// samples whose signs need (or do not need) a flip: the zeros force c
/// simple roots, and one more root fixes the crossing parity if required.
inline int gap_cost(int c, bool sign_change) {
    const int needed = sign_change ? 1 : 0;
    return c + (((c & 1) != needed) ? 1 : 0);
}

/// Enumerates every sign vector (s_1..s_n) realizable as the signs of a
/// nonzero real polynomial of degree <= d at the sample points 1..n.
///
/// Such patterns are exactly the hemisphere sign patterns of the moment
/// configuration: a direction x in S^d has <x, w_i> = p_x(i) where p_x is
/// the polynomial with coefficient vector x. A pattern is realizable iff
/// its forced root count fits in degree d: one root per zero sample, plus
/// one root per sign change not already accounted for by interior zeros.
/// The enumeration therefore covers all open cells and all boundary strata
/// of the hyperplane arrangement dual to the configuration.
template <typename Visitor>
void enumerate_moment_sign_patterns(int n, int d, Visitor&& visit) {
    SignVector signs(static_cast<std::size_t>(n), 0);
    // state: position, sign of last nonzero (0 = none yet), zeros since
    // then, committed root count
    std::function<void(int, int, int, int)> dfs = [&](int pos, int last, int pending, int cost) {
        if (cost + pending > d) return;  // trailing or bridged zeros both pay at least this
        if (pos == n) {
            if (last != 0) visit(static_cast<const SignVector&>(signs));
            return;
        }
        auto& slot = signs[static_cast<std::size_t>(pos)];
        for (int s : {+1, -1}) {
            const int c = (last == 0) ? cost + pending : cost + gap_cost(pending, s != last);
            if (c <= d) {
                slot = static_cast<std::int8_t>(s);
                dfs(pos + 1, s, 0, c);
            }
        }
        slot = 0;
        dfs(pos + 1, last, pending + 1, cost);
    };
    dfs(0, 0, 0, 0);
}

/// Builds a unit direction whose hemisphere trace realizes the given
/// pattern, from the minimal root placement: simple roots at the zero
/// samples and half-integer roots where a sign flip needs one.
inline std::vector<double> direction_for_pattern(const SignVector& signs, int d) {
    const int n = static_cast<int>(signs.size());
    std::vector<long long> roots2;  // doubled root values
    int last = 0, last_pos = 0;     // last nonzero sign and its 1-based position
    std::vector<long long> pending_zeros;
    for (int i = 1; i <= n; ++i) {
        const int s = signs[static_cast<std::size_t>(i - 1)];
        if (s == 0) {
            pending_zeros.push_back(2 * i);
            continue;
        }
        if (last != 0) {
            const bool change = s != last;
            if ((static_cast<int>(pending_zeros.size()) & 1) != (change ? 1 : 0))
                roots2.push_back(2 * last_pos + 1);  // extra crossing at last_pos + 1/2
        }
        roots2.insert(roots2.end(), pending_zeros.begin(), pending_zeros.end());
        pending_zeros.clear();
        last = s;
        last_pos = i;
    }
    roots2.insert(roots2.end(), pending_zeros.begin(), pending_zeros.end());
    if (last == 0) throw internal_error("cannot realize the all-zero pattern");
    if (static_cast<int>(roots2.size()) > d)
        throw internal_error("pattern realization exceeds the degree budget");

    // expand prod_j (2t - roots2[j]) into monomial coefficients
    std::vector<long long> coeff{1};
    for (long long r2 : roots2) {
        std::vector<long long> next(coeff.size() + 1, 0);
        for (std::size_t j = 0; j < coeff.size(); ++j) {
            next[j + 1] += 2 * coeff[j];
            next[j] -= r2 * coeff[j];
        }
        coeff = std::move(next);
    }
    auto eval = [&](long long t) {
        long long acc = 0, p = 1;
        for (long long c : coeff) {
            acc += c * p;
            p *= t;
        }
        return acc;
    };
    int first_nonzero = 0;
    while (signs[static_cast<std::size_t>(first_nonzero)] == 0) ++first_nonzero;
    const long long probe = eval(first_nonzero + 1);
    if (probe == 0) throw internal_error("witness polynomial vanishes at a nonzero sample");
    const long long lead = (probe > 0) == (signs[static_cast<std::size_t>(first_nonzero)] > 0) ? 1 : -1;
    for (int i = 1; i <= n; ++i) {
        const long long v = lead * eval(i);
        const int s = signs[static_cast<std::size_t>(i - 1)];
        if ((s == 0) != (v == 0) || (s > 0 && v < 0) || (s < 0 && v > 0))
            throw internal_error("witness polynomial does not realize its pattern");
    }

    std::vector<double> x(static_cast<std::size_t>(d) + 1, 0.0);
    for (std::size_t j = 0; j < coeff.size(); ++j)
        x[j] = static_cast<double>(lead * coeff[j]);
    double norm = 0;
    for (double c : x) norm += c * c;
    norm = std::sqrt(norm);
    for (auto& c : x) c /= norm;
    return x;
}

}  // namespace detail

/// All sign patterns a direction on S^d can induce on the moment samples.
inline std::vector<SignVector> realizable_sign_patterns(int n, int d) {
    std::vector<SignVector> out;
    detail::enumerate_moment_sign_patterns(n, d, [&](const SignVector& s) { out.push_back(s); });
    return out;
}

struct VerificationReport {
    bool ok = true;
    std::string mode;      // "exact" | "sampled"
    long long checked = 0; // sign patterns or random trials
    std::optional<HemisphereTrace> counterexample;
};

inline constexpr int kMaxExactDim = 3;

/// Exact verification that every hemisphere trace of z lies in p, by
/// complete enumeration of the realizable sign patterns (all strata, not
/// just open cells). Sign decisions are integer-exact via the unnormalized
/// moment vectors. The documented contract keeps this to d <= 3; larger d
/// should use verify_sampled.
inline VerificationReport verify_exact(const GaleConfiguration& z,
                                       const SignedIncreasingProperty& p) {
    if (z.dim > kMaxExactDim)
        throw capacity_error("verify_exact handles d <= " + std::to_string(kMaxExactDim) +
                             "; use verify_sampled for d = " + std::to_string(z.dim));
    if (!z.has_exact()) throw domain_error("configuration lacks exact moment data");
    if (p.ground_size != z.size()) throw domain_error("property ground set mismatch");

    VerificationReport report;
    report.mode = "exact";
    bool failed = false;
    SignVector failing;
    detail::enumerate_moment_sign_patterns(z.size(), z.dim, [&](const SignVector& signs) {
        if (failed) return;
        ++report.checked;
        Mask plus = 0, minus = 0;
        for (int pos = 0; pos < z.size(); ++pos) {
            const int s = signs[static_cast<std::size_t>(pos)];
            if (s == 0) continue;
            const int point_sign = s * z.flip[static_cast<std::size_t>(pos)];
            const Mask vb = bit(z.sigma[static_cast<std::size_t>(pos)]);
            if (point_sign > 0) plus |= vb;
            else minus |= vb;
        }
        if (!p.member(plus, minus)) {
            failed = true;
            failing = signs;
        }
    });
    if (failed) {
        report.ok = false;
        std::vector<double> x = detail::direction_for_pattern(failing, z.dim);
        HemisphereTrace t;
        t.direction = x;
        for (int pos = 0; pos < z.size(); ++pos) {
            const int s = failing[static_cast<std::size_t>(pos)];
            const Mask vb = bit(z.sigma[static_cast<std::size_t>(pos)]);
            if (s == 0) t.zero |= vb;
            else if (s * z.flip[static_cast<std::size_t>(pos)] > 0) t.plus |= vb;
            else t.minus |= vb;
        }
        report.counterexample = std::move(t);
    }
    return report;
}

/// Monte-Carlo verification over uniformly random unit directions. Any
/// reported counterexample is genuine; passing is one-sided evidence.
/// Directions falling inside the zero band of some point are rejected and
/// redrawn, so every trial is a full-dimensional trace.
inline VerificationReport verify_sampled(const GaleConfiguration& z,
                                         const SignedIncreasingProperty& p, long long trials,
                                         std::uint64_t seed) {
    if (trials < 1) throw domain_error("verify_sampled requires trials >= 1");
    if (p.ground_size != z.size()) throw domain_error("property ground set mismatch");
    std::mt19937_64 rng(seed);
    auto uniform01 = [&]() { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
    constexpr double two_pi = 6.28318530717958647692;
    const int dims = z.dim + 1;

    VerificationReport report;
    report.mode = "sampled";
    std::vector<double> x(static_cast<std::size_t>(dims));
    for (long long trial = 0; trial < trials; ++trial) {
        long long guard = 0;
        while (true) {
            if (++guard > 10000)
                throw internal_error("direction sampling rejected too many candidates");
            double norm2 = 0;
            for (int j = 0; j < dims; j += 2) {
                const double u1 = uniform01(), u2 = uniform01();
                const double r = std::sqrt(-2.0 * std::log(u1));
                x[static_cast<std::size_t>(j)] = r * std::cos(two_pi * u2);
                if (j + 1 < dims) x[static_cast<std::size_t>(j) + 1] = r * std::sin(two_pi * u2);
            }
            for (double c : x) norm2 += c * c;
            if (norm2 < 1e-24) continue;
            const double inv = 1.0 / std::sqrt(norm2);
            for (auto& c : x) c *= inv;
            bool on_boundary = false;
            for (int pos = 0; pos < z.size() && !on_boundary; ++pos) {
                double dot = 0;
                for (int j = 0; j < dims; ++j)
                    dot += x[static_cast<std::size_t>(j)] *
                           z.points[static_cast<std::size_t>(pos)][static_cast<std::size_t>(j)];
                on_boundary = std::abs(dot) <= kZeroBand;
            }
            if (!on_boundary) break;
        }
        ++report.checked;
        HemisphereTrace t = hemisphere_trace(z, x);
        if (!p.member(t.plus, t.minus)) {
            report.ok = false;
            report.counterexample = std::move(t);
            return report;
        }
    }
    return report;
}

/// The configuration promised for a hypergraph: d = |V| - alt(H,sigma) - 1
/// in alt mode (pair with P1), d = |V| - salt(H,sigma) - 1 in salt mode
/// (pair with P2). Degenerate alt = |V| has no sphere and is rejected.
inline GaleConfiguration corollary_configuration(const Hypergraph& h, const Bijection& sigma,
                                                 AltMode mode) {
    const int n = h.vertex_count();
    const int a = mode == AltMode::alt ? alt_hypergraph(h, sigma) : salt_hypergraph(h, sigma);
    if (a == n)
        throw domain_error(std::string(to_string(mode)) +
                           "(H, sigma) equals |V|, so d = -1 and no configuration exists");
    return build_configuration(n, n - a - 1, sigma, h.vertex_names());
}

/// Checks that every (d+1)-subset of the moment vectors is linearly
/// independent (integer-exact determinants). This is the geometric content
/// of the "no central hyperplane meets the curve in more than d points"
/// argument.
inline bool moment_nondegenerate(const GaleConfiguration& z) {
    if (!z.has_exact()) throw domain_error("configuration lacks exact moment data");
    const int n = z.size();
    const int rows = z.dim + 1;
    bool ok = true;
    for_each_combination(n, rows, [&](Mask subset) {
        if (!ok) return;
        std::vector<std::vector<long long>> m;
        for (int i : bits_of(subset)) m.push_back(z.moment[static_cast<std::size_t>(i)]);
        // fraction-free Gaussian elimination (Bareiss)
        __int128 prev = 1;
        std::vector<std::vector<__int128>> a(m.size(), std::vector<__int128>(m.size()));
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < m.size(); ++c) a[r][c] = m[r][c];
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (a[k][k] == 0) {
                std::size_t swap_row = k + 1;
                while (swap_row < m.size() && a[swap_row][k] == 0) ++swap_row;
                if (swap_row == m.size()) {
                    ok = false;
                    return;
                }
                std::swap(a[k], a[swap_row]);
            }
            for (std::size_t r = k + 1; r < m.size(); ++r)
                for (std::size_t c = k + 1; c < m.size(); ++c)
                    a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
            prev = a[k][k];
        }
        if (a[m.size() - 1][m.size() - 1] == 0) ok = false;
    });
    return ok;
}

}  // namespace galekit
