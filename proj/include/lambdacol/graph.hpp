#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lambdacol {

using Vertex = int;

/// Undirected edge, stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the dense vertex ids 0..n-1.
///
/// Self-loops, duplicate edges and out-of-range endpoints are rejected by
/// add_edge, so every Graph value satisfies the simple-graph invariants.
class Graph {
public:
    /// Graph on n >= 1 isolated vertices.
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edge_count_; }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const;

    /// Neighbours of u in ascending id order.
    const std::vector<Vertex>& neighbours(Vertex u) const { return adj_.at(u); }
    int degree(Vertex u) const { return static_cast<int>(adj_.at(u).size()); }

    /// All edges sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.matrix_ == b.matrix_;
    }

private:
    void check_vertex(Vertex u) const;

    int n_;
    std::size_t edge_count_ = 0;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::vector<Vertex>> adj_;
};

/// All-pairs hop distances. Unreachable pairs are reported as std::nullopt.
class DistanceMatrix {
public:
    explicit DistanceMatrix(int n);

    int order() const noexcept { return n_; }
    std::optional<int> at(Vertex u, Vertex v) const;
    void set(Vertex u, Vertex v, std::optional<int> d);

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    static constexpr int kUnreachable = -1;

    int n_;
    std::vector<int> d_;
};

DistanceMatrix distances(const Graph& g);
Graph complement(const Graph& g);
int max_degree(const Graph& g);

/// Labelled containment: g.order() <= h.order() and E(g) is a subset of E(h).
bool is_subgraph(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

inline constexpr int kDefaultPathCoverCap = 20;

/// Minimum number of vertex-disjoint paths covering V(g). A lone vertex is a
/// path of length 0. Exponential in g.order(); throws CapExceeded when
/// g.order() > cap.
int path_cover_number(const Graph& g, int cap = kDefaultPathCoverCap);

} // namespace lambdacol
