#include "lambdacol/constructions.hpp"

#include "lambdacol/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lambdacol {

Graph build_G_n(int n)
{
    if (n < 3)
        throw InvalidArgument("G_n needs n >= 3, got " + std::to_string(n));
    Graph g(n + 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 3);
    for (int k = 4; k <= n; ++k)
        for (int i = 0; i <= k - 2; ++i)
            g.add_edge(i, k);
    return g;
}

std::vector<Vertex> FamilyAssignment::members(int m) const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(class_of.size()); ++v)
        if (class_of[v] == m)
            out.push_back(v);
    return out;
}

FamilyMatchings FamilyMatchings::random(int t, int l, std::mt19937_64& rng)
{
    FamilyMatchings out;
    for (int m = 0; m <= t; ++m) {
        for (int p = m + 2; p <= t; ++p) {
            std::vector<int> perm(l);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            out.perms[{m, p}] = std::move(perm);
        }
    }
    return out;
}

FamilyMember build_family_member(int t, int l, const FamilyMatchings& matchings)
{
    if (t < 3)
        throw InvalidArgument("family needs t >= 3, got " + std::to_string(t));
    if (l < 1)
        throw InvalidArgument("family needs l >= 1, got " + std::to_string(l));

    for (const auto& [pair, perm] : matchings.perms) {
        auto [m, p] = pair;
        if (m < 0 || p > t || p < m + 2)
            throw InvalidArgument("matching given for non-eligible class pair (" + std::to_string(m) + "," +
                                  std::to_string(p) + ")");
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> identity(l);
        std::iota(identity.begin(), identity.end(), 0);
        if (sorted != identity)
            throw InvalidArgument("matching for pair (" + std::to_string(m) + "," + std::to_string(p) +
                                  ") is not a bijection on 0.." + std::to_string(l - 1));
    }

    FamilyMember out{Graph((t + 1) * l), FamilyAssignment{t, l, std::vector<int>((t + 1) * l)}};
    for (int m = 0; m <= t; ++m)
        for (int i = 0; i < l; ++i)
            out.assignment.class_of[m * l + i] = m;

    for (int m = 0; m <= t; ++m) {
        for (int p = m + 2; p <= t; ++p) {
            auto it = matchings.perms.find({m, p});
            for (int i = 0; i < l; ++i) {
                int j = it == matchings.perms.end() ? i : it->second[i];
                out.graph.add_edge(m * l + i, p * l + j);
            }
        }
    }
    return out;
}

bool is_family_member(const Graph& g, const FamilyAssignment& fa)
{
    if (static_cast<int>(fa.class_of.size()) != g.order())
        throw InvalidArgument("assignment covers " + std::to_string(fa.class_of.size()) +
                              " vertices, graph has " + std::to_string(g.order()));
    if (fa.t < 3 || fa.l < 1)
        return false;
    std::vector<int> sizes(fa.t + 1, 0);
    for (int cls : fa.class_of) {
        if (cls < 0 || cls > fa.t)
            return false;
        ++sizes[cls];
    }
    if (std::any_of(sizes.begin(), sizes.end(), [&](int s) { return s != fa.l; }))
        return false;

    // Every vertex has exactly one neighbour in each class two or more away and
    // none elsewhere; that is the same as perfect matchings on all such pairs.
    for (Vertex u = 0; u < g.order(); ++u) {
        std::vector<int> hits(fa.t + 1, 0);
        for (Vertex w : g.neighbours(u))
            ++hits[fa.class_of[w]];
        for (int p = 0; p <= fa.t; ++p) {
            int want = std::abs(p - fa.class_of[u]) >= 2 ? 1 : 0;
            if (hits[p] != want)
                return false;
        }
    }
    return true;
}

Colouring class_colouring(const FamilyAssignment& fa)
{
    return Colouring(fa.class_of);
}

std::optional<Vertex> forbidden_subgraph_witness(const Graph& g, const Colouring& c)
{
    for (Vertex u = 0; u < g.order(); ++u) {
        std::vector<int> seen;
        for (Vertex w : g.neighbours(u))
            seen.push_back(c.label(w));
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            return u;
    }
    return std::nullopt;
}

Embedding embed_universal(const Graph& g, const Colouring& c)
{
    if (c.size() != g.order())
        throw InvalidArgument("colouring does not cover the graph");
    if (auto bad = first_violation(g, c))
        throw InvalidArgument("not a lambda colouring: vertices " + std::to_string(bad->u) + " and " +
                              std::to_string(bad->v) + " conflict");
    const int t = c.span();
    if (t < 3)
        throw InvalidArgument("embedding needs span >= 3, got " + std::to_string(t));
    if (auto v = forbidden_subgraph_witness(g, c))
        throw InternalError("vertex " + std::to_string(*v) + " has two neighbours of one colour");

    std::vector<std::vector<Vertex>> classes(t + 1);
    for (Vertex v = 0; v < g.order(); ++v)
        classes[c.label(v)].push_back(v);
    int l = 0;
    for (const auto& cls : classes)
        l = std::max<int>(l, static_cast<int>(cls.size()));

    Vertex next_id = g.order();
    for (auto& cls : classes)
        while (static_cast<int>(cls.size()) < l)
            cls.push_back(next_id++);

    Embedding out{Graph(next_id), FamilyAssignment{t, l, std::vector<int>(next_id)}, {}};
    for (int m = 0; m <= t; ++m)
        for (Vertex v : classes[m])
            out.assignment.class_of[v] = m;
    for (const auto& e : g.edges())
        out.host.add_edge(e.u, e.v);
    out.injection.resize(g.order());
    std::iota(out.injection.begin(), out.injection.end(), 0);

    auto unmatched = [&](int m, int p) {
        std::vector<Vertex> z;
        for (Vertex v : classes[m]) {
            bool has = std::any_of(classes[p].begin(), classes[p].end(),
                                   [&](Vertex w) { return out.host.adjacent(v, w); });
            if (!has)
                z.push_back(v);
        }
        return z;
    };

    for (int m = 0; m <= t; ++m) {
        for (int p = m + 2; p <= t; ++p) {
            auto zm = unmatched(m, p);
            auto zp = unmatched(p, m);
            if (zm.size() != zp.size())
                throw InternalError("unmatched sets between classes " + std::to_string(m) + " and " +
                                    std::to_string(p) + " differ in size");
            for (std::size_t i = 0; i < zm.size(); ++i)
                out.host.add_edge(zm[i], zp[i]);
        }
    }
    if (!is_family_member(out.host, out.assignment))
        throw InternalError("embedding host is not a family member");
    return out;
}

} // namespace lambdacol
