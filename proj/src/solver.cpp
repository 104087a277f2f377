#include "lambdacol/solver.hpp"

#include "lambdacol/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace lambdacol {

Colouring::Colouring(std::vector<int> labels)
    : labels_(std::move(labels))
{
    if (labels_.empty())
        throw InvalidArgument("colouring must label at least one vertex");
    auto [lo, hi] = std::minmax_element(labels_.begin(), labels_.end());
    if (*lo < 0)
        throw InvalidArgument("colouring labels must be non-negative");
    if (*lo != 0)
        throw InvalidArgument("colouring must be normalized: minimum label is " + std::to_string(*lo) + ", not 0");
    span_ = *hi;
}

std::optional<Edge> first_violation(const Graph& g, const Colouring& c)
{
    if (c.size() != g.order())
        throw InvalidArgument("colouring covers " + std::to_string(c.size()) + " vertices, graph has " +
                              std::to_string(g.order()));
    auto d = distances(g);
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            auto duv = d.at(u, v);
            if (!duv || *duv >= 3)
                continue;
            if (std::abs(c.label(u) - c.label(v)) + *duv < 3)
                return Edge{u, v};
        }
    }
    return std::nullopt;
}

bool is_lambda_colouring(const Graph& g, const Colouring& c)
{
    return !first_violation(g, c).has_value();
}

std::vector<int> holes_of(const Colouring& c)
{
    std::vector<bool> used(c.span() + 1, false);
    for (int label : c.labels())
        used[label] = true;
    std::vector<int> out;
    for (int h = 1; h < c.span(); ++h)
        if (!used[h])
            out.push_back(h);
    return out;
}

Colouring dual(const Colouring& c)
{
    std::vector<int> labels(c.labels().begin(), c.labels().end());
    for (int& label : labels)
        label = c.span() - label;
    return Colouring(std::move(labels));
}

namespace {

using Mask = std::uint64_t;

Mask low_bits(int count)
{
    return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1;
}

/// Labels forbidden for a neighbour of a vertex labelled `label`.
Mask near_block(int label)
{
    Mask m = Mask{1} << label;
    if (label > 0)
        m |= Mask{1} << (label - 1);
    if (label < 63)
        m |= Mask{1} << (label + 1);
    return m;
}

class Search {
public:
    Search(const Graph& g, int span)
        : n_(g.order())
        , span_(span)
        , near_(n_, 0)
        , far_(n_, 0)
        , weight_(n_, 0)
    {
        auto d = distances(g);
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v = 0; v < n_; ++v) {
                auto duv = d.at(u, v);
                if (!duv || u == v)
                    continue;
                if (*duv == 1)
                    near_[u] |= Mask{1} << v;
                else if (*duv == 2)
                    far_[u] |= Mask{1} << v;
            }
            weight_[u] = std::popcount(near_[u]) * 3 + std::popcount(far_[u]);
        }
    }

    /// Decision search: smallest-domain-first, heaviest constraints on ties.
    bool feasible()
    {
        std::vector<Mask> domains(n_, low_bits(span_ + 1));
        return decide(domains, 0, true);
    }

    /// Lexicographic enumeration in vertex-id order.
    std::size_t enumerate(std::size_t limit, const std::function<bool(const Colouring&)>& visit)
    {
        std::vector<Mask> domains(n_, low_bits(span_ + 1));
        std::vector<int> labels(n_, -1);
        produced_ = 0;
        limit_ = limit;
        stop_ = false;
        lex(domains, labels, 0, visit);
        return produced_;
    }

private:
    bool assign(std::vector<Mask>& domains, Mask assigned, Vertex v, int label) const
    {
        domains[v] = Mask{1} << label;
        Mask block = near_block(label);
        for (Mask rest = near_[v] & ~assigned; rest; rest &= rest - 1) {
            int w = std::countr_zero(rest);
            domains[w] &= ~block;
            if (!domains[w])
                return false;
        }
        Mask same = Mask{1} << label;
        for (Mask rest = far_[v] & ~assigned; rest; rest &= rest - 1) {
            int w = std::countr_zero(rest);
            domains[w] &= ~same;
            if (!domains[w])
                return false;
        }
        return true;
    }

    bool decide(const std::vector<Mask>& domains, Mask assigned, bool first)
    {
        if (assigned == low_bits(n_))
            return true;
        Vertex pick = -1;
        int best_size = 65;
        for (Vertex v = 0; v < n_; ++v) {
            if (assigned >> v & 1)
                continue;
            int size = std::popcount(domains[v]);
            if (pick < 0 || size < best_size || (size == best_size && weight_[v] > weight_[pick])) {
                pick = v;
                best_size = size;
            }
        }
        Mask values = domains[pick];
        // Reversing every label maps solutions to solutions, so the first
        // vertex may be restricted to the lower half.
        if (first)
            values &= low_bits(span_ / 2 + 1);
        std::vector<Mask> next;
        for (; values; values &= values - 1) {
            int label = std::countr_zero(values);
            next = domains;
            if (assign(next, assigned, pick, label) && decide(next, assigned | (Mask{1} << pick), false))
                return true;
        }
        return false;
    }

    void lex(const std::vector<Mask>& domains, std::vector<int>& labels, Vertex v,
             const std::function<bool(const Colouring&)>& visit)
    {
        if (stop_)
            return;
        if (v == n_) {
            if (*std::min_element(labels.begin(), labels.end()) != 0)
                return;
            ++produced_;
            if (!visit(Colouring(labels)) || produced_ >= limit_)
                stop_ = true;
            return;
        }
        std::vector<Mask> next;
        for (Mask values = domains[v]; values && !stop_; values &= values - 1) {
            int label = std::countr_zero(values);
            next = domains;
            if (!assign(next, low_bits(v), v, label))
                continue;
            labels[v] = label;
            lex(next, labels, v + 1, visit);
        }
        labels[v] = -1;
    }

    int n_;
    int span_;
    std::vector<Mask> near_;
    std::vector<Mask> far_;
    std::vector<int> weight_;
    std::size_t produced_ = 0;
    std::size_t limit_ = 0;
    bool stop_ = false;
};

void check_cap(const Graph& g, const SolverOptions& opts)
{
    if (g.order() > opts.max_vertices)
        throw CapExceeded("solver: n=" + std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(opts.max_vertices));
    if (g.order() > kSolverHardLimit)
        throw CapExceeded("solver: n=" + std::to_string(g.order()) + " exceeds hard limit " +
                          std::to_string(kSolverHardLimit));
}

int search_lambda(const Graph& g)
{
    int span = g.size() == 0 ? 0 : max_degree(g) + 1;
    while (!Search(g, span).feasible())
        ++span;
    return span;
}

} // namespace

bool has_colouring_within(const Graph& g, int span, const SolverOptions& opts)
{
    check_cap(g, opts);
    if (span < 0)
        return false;
    if (span > 63)
        span = 63;
    return Search(g, span).feasible();
}

std::size_t for_each_colouring_within(const Graph& g, int span, std::size_t limit,
                                      const std::function<bool(const Colouring&)>& visit,
                                      const SolverOptions& opts)
{
    check_cap(g, opts);
    if (span < 0 || span > 63)
        throw InvalidArgument("span must lie in [0, 63]");
    if (limit == 0)
        return 0;
    return Search(g, span).enumerate(limit, visit);
}

int lambda_value(const Graph& g, const SolverOptions& opts)
{
    check_cap(g, opts);
    return search_lambda(g);
}

SolveReport lambda_number(const Graph& g, const SolverOptions& opts)
{
    check_cap(g, opts);
    const int lambda = search_lambda(g);
    std::optional<Colouring> witness;
    Search(g, lambda).enumerate(1, [&](const Colouring& c) {
        witness = c;
        return false;
    });
    if (!witness)
        throw InternalError("solver: no colouring found at span " + std::to_string(lambda));
    Colouring c = remove_consecutive_holes(g, std::move(*witness));
    if (c.span() != lambda || !is_lambda_colouring(g, c))
        throw InternalError("solver: witness does not certify lambda " + std::to_string(lambda));
    auto holes = holes_of(c);
    return SolveReport{lambda, std::move(c), std::move(holes)};
}

int delta_lower_bound(const Graph& g)
{
    if (g.size() == 0)
        throw NotApplicable("degree bound needs at least one edge");
    return max_degree(g) + 1;
}

PathCoverLambda lambda_via_path_cover(const Graph& g, int cap)
{
    const int tau = path_cover_number(complement(g), cap);
    if (tau >= 2)
        return {true, g.order() + tau - 2, tau};
    return {false, g.order() - 1, tau};
}

Colouring remove_consecutive_holes(const Graph& g, Colouring c)
{
    for (;;) {
        auto holes = holes_of(c);
        auto it = std::adjacent_find(holes.begin(), holes.end(), [](int a, int b) { return b == a + 1; });
        if (it == holes.end())
            return c;
        const int upper = *std::next(it);
        std::vector<int> labels(c.labels().begin(), c.labels().end());
        for (int& label : labels)
            if (label > upper)
                --label;
        Colouring shifted(std::move(labels));
        if (!is_lambda_colouring(g, shifted))
            throw InternalError("closing a double hole broke the colouring");
        c = std::move(shifted);
    }
}

} // namespace lambdacol
