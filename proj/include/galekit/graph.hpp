#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galekit/bitops.hpp"
#include "galekit/errors.hpp"
#include "galekit/hypergraph.hpp"

namespace galekit {

/// Simple undirected graph with bit-row adjacency. Vertex labels are kept
/// for reporting; all algorithms work on indices.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::vector<std::string> labels)
        : labels_(std::move(labels)),
          n_(static_cast<int>(labels_.size())),
          words_((n_ + 63) / 64),
          adj_(labels_.size(), std::vector<std::uint64_t>(static_cast<std::size_t>((n_ + 63) / 64), 0)) {}

    static Graph numbered(int n) {
        std::vector<std::string> labels;
        labels.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
        return Graph(std::move(labels));
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw domain_error("edge endpoint out of range");
        if (u == v) throw domain_error("loops are not allowed");
        if (adjacent(u, v)) return;
        adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
        adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u) / 64] |= std::uint64_t{1} << (u % 64);
        ++edges_;
    }

    bool adjacent(int u, int v) const {
        return (adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v) / 64] >>
                (v % 64)) & 1;
    }

    const std::vector<std::uint64_t>& row(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const {
        int d = 0;
        for (std::uint64_t w : adj_[static_cast<std::size_t>(v)]) d += std::popcount(w);
        return d;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        const auto& r = adj_[static_cast<std::size_t>(v)];
        for (std::size_t w = 0; w < r.size(); ++w)
            for (std::uint64_t t = r[w]; t; t &= t - 1)
                out.push_back(static_cast<int>(w) * 64 + std::countr_zero(t));
        return out;
    }

private:
    std::vector<std::string> labels_;
    int n_ = 0;
    int words_ = 0;
    std::vector<std::vector<std::uint64_t>> adj_;
    long long edges_ = 0;
};

/// KG(H): one vertex per edge of H, adjacency = vertex-disjointness.
inline Graph kneser_graph(const Hypergraph& h) {
    const auto& edges = h.edges();
    std::vector<std::string> labels;
    labels.reserve(edges.size());
    for (Mask e : edges) labels.push_back(h.subset_label(e));
    Graph g(std::move(labels));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if ((edges[i] & edges[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

inline Graph kneser_graph_nk(int n, int k) { return kneser_graph(complete_k_uniform(n, k)); }

/// SG(n,k), the 2-stable Kneser graph.
inline Graph schrijver_graph(int n, int k) { return kneser_graph(s_stable_k_uniform(n, k, 2)); }

/// KG(n,k)_s, the s-stable Kneser graph.
inline Graph stable_kneser_graph(int n, int k, int s) {
    return kneser_graph(s_stable_k_uniform(n, k, s));
}

inline Graph complete_graph(int n) {
    Graph g = Graph::numbered(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw domain_error("cycle needs at least 3 vertices");
    Graph g = Graph::numbered(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

}  // namespace galekit
