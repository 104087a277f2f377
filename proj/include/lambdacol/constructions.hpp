#pragma once

#include "lambdacol/graph.hpp"
#include "lambdacol/solver.hpp"

#include <map>
#include <random>
#include <utility>
#include <vector>

namespace lambdacol {

/// The recursive graph on v_0..v_n: v_0v_2, v_0v_3, v_1v_3, then for each
/// k = 4..n the edges v_i v_k with i <= k - 2. Vertex v_i has id i.
Graph build_G_n(int n);

/// Classes V_0..V_t of equal size l.
struct FamilyAssignment {
    int t = 0;
    int l = 0;
    std::vector<int> class_of;

    /// Vertices of class m in ascending id order.
    std::vector<Vertex> members(int m) const;
};

/// For each class pair (m, p) with p >= m + 2, a permutation perm of 0..l-1:
/// the i-th vertex of V_m is joined to the perm[i]-th vertex of V_p. Pairs
/// without an entry use the identity, so an empty map gives the canonical member.
struct FamilyMatchings {
    std::map<std::pair<int, int>, std::vector<int>> perms;

    static FamilyMatchings canonical() { return {}; }
    static FamilyMatchings random(int t, int l, std::mt19937_64& rng);
};

struct FamilyMember {
    Graph graph;
    FamilyAssignment assignment;
};

/// Member of the equal-class family G(t, l). Vertex m*l + i is the i-th
/// vertex of class m.
FamilyMember build_family_member(int t, int l, const FamilyMatchings& matchings = FamilyMatchings::canonical());

/// Class sizes all l, no edge inside a class or between consecutive classes,
/// and a perfect matching between every pair of classes two or more apart.
bool is_family_member(const Graph& g, const FamilyAssignment& fa);

/// The class-index colouring of a family member.
Colouring class_colouring(const FamilyAssignment& fa);

/// Checks that no vertex has two neighbours carrying the same colour. Holds for
/// every lambda colouring; returns the offending vertex when it fails.
std::optional<Vertex> forbidden_subgraph_witness(const Graph& g, const Colouring& c);

struct Embedding {
    Graph host;
    FamilyAssignment assignment;
    /// injection[v] is the host vertex standing for g's vertex v.
    std::vector<Vertex> injection;
};

/// Pads each colour class of (g, c) to the largest class size l with fresh
/// vertices (ids g.order(), g.order()+1, ... in class order), then matches the
/// still-unmatched vertices of every non-consecutive class pair by ascending
/// id. The host is a member of G(span, l) containing g.
Embedding embed_universal(const Graph& g, const Colouring& c);

} // namespace lambdacol
