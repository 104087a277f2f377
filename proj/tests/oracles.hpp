#pragma once

// Slow, direct reference implementations used only to cross-check the library.

#include "lambdacol/graph.hpp"
#include "lambdacol/transform.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using lambdacol::Graph;

inline constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (int u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v))
                d[u][v] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline bool valid_labelling(const std::vector<std::vector<int>>& d, const std::vector<int>& lab)
{
    const int n = static_cast<int>(lab.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::abs(lab[u] - lab[v]) + d[u][v] < 3)
                return false;
    return true;
}

/// Every labelling in [0, span]^n (id order, lexicographic) passing the
/// distance condition, found by plain backtracking without pruning heuristics.
inline void all_labellings(const Graph& g, int span, const std::function<void(const std::vector<int>&)>& cb)
{
    const auto d = floyd_warshall(g);
    const int n = g.order();
    std::vector<int> lab(n, 0);
    std::function<void(int)> go = [&](int v) {
        if (v == n) {
            cb(lab);
            return;
        }
        for (int x = 0; x <= span; ++x) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = std::abs(lab[u] - x) + d[u][v] >= 3;
            if (ok) {
                lab[v] = x;
                go(v + 1);
            }
        }
    };
    go(0);
}

inline bool labellable(const Graph& g, int span)
{
    bool found = false;
    const auto d = floyd_warshall(g);
    const int n = g.order();
    std::vector<int> lab(n, 0);
    std::function<void(int)> go = [&](int v) {
        if (found)
            return;
        if (v == n) {
            found = true;
            return;
        }
        for (int x = 0; x <= span && !found; ++x) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = std::abs(lab[u] - x) + d[u][v] >= 3;
            if (ok) {
                lab[v] = x;
                go(v + 1);
            }
        }
    };
    go(0);
    return found;
}

inline int lambda(const Graph& g)
{
    int span = 0;
    while (!labellable(g, span))
        ++span;
    return span;
}

/// Smallest number of blocks in a partition of V(g) where each block induces
/// a graph with a Hamiltonian path.
inline int path_cover(const Graph& g)
{
    const int n = g.order();
    auto traceable = [&](std::vector<int> block) {
        std::sort(block.begin(), block.end());
        do {
            bool ok = true;
            for (std::size_t i = 0; i + 1 < block.size() && ok; ++i)
                ok = g.adjacent(block[i], block[i + 1]);
            if (ok)
                return true;
        } while (std::next_permutation(block.begin(), block.end()));
        return false;
    };
    int best = n;
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> go = [&](int v) {
        if (static_cast<int>(blocks.size()) >= best)
            return;
        if (v == n) {
            for (const auto& b : blocks)
                if (!traceable(b))
                    return;
            best = static_cast<int>(blocks.size());
            return;
        }
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            blocks[i].push_back(v);
            go(v + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({v});
        go(v + 1);
        blocks.pop_back();
    };
    go(0);
    return best;
}

/// Every length-(t+1) non-negative vector summing to n (odometer order),
/// filtered by the shape rules written out directly.
inline std::vector<std::vector<int>> shapes(int n, int t)
{
    std::vector<std::vector<int>> out;
    std::vector<int> c(t + 1, 0);
    std::function<void(int, int)> go = [&](int j, int left) {
        if (j == t) {
            c[t] = left;
            bool ok = c[0] >= 1 && c[t] >= 1;
            for (int i = 0; i < t && ok; ++i)
                ok = !(c[i] == 0 && c[i + 1] == 0);
            if (ok)
                out.push_back(c);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            c[j] = v;
            go(j + 1, left - v);
        }
    };
    go(0, n);
    return out;
}

inline int M(const std::vector<int>& c)
{
    int total = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 2; j < c.size(); ++j)
            total += std::min(c[i], c[j]);
    return total;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

/// Every labelled graph on n vertices.
inline void all_graphs(int n, const std::function<void(const Graph&)>& cb)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                g.add_edge(pairs[i].first, pairs[i].second);
        cb(g);
    }
}

} // namespace oracle
