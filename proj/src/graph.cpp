#include "lambdacol/graph.hpp"

#include "lambdacol/error.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace lambdacol {

const char* to_string(ParseErrorKind kind) noexcept
{
    switch (kind) {
    case ParseErrorKind::MissingHeader: return "missing header";
    case ParseErrorKind::Malformed: return "malformed line";
    case ParseErrorKind::SelfLoop: return "self-loop";
    case ParseErrorKind::EndpointOutOfRange: return "endpoint out of range";
    case ParseErrorKind::DuplicateEdge: return "duplicate edge";
    case ParseErrorKind::EdgeCountMismatch: return "edge count mismatch";
    case ParseErrorKind::DuplicateVertex: return "duplicate vertex";
    case ParseErrorKind::MissingVertex: return "missing vertex";
    }
    return "parse error";
}

namespace {

std::string parse_message(ParseErrorKind kind, int line, const std::string& detail)
{
    std::string msg = to_string(kind);
    if (line > 0)
        msg += " at line " + std::to_string(line);
    if (!detail.empty())
        msg += ": " + detail;
    return msg;
}

} // namespace

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : Error(parse_message(kind, line, detail))
    , kind_(kind)
    , line_(line)
{
}

Graph::Graph(int n)
    : n_(n)
{
    if (n < 1)
        throw InvalidArgument("graph must have at least one vertex, got " + std::to_string(n));
    matrix_.assign(static_cast<std::size_t>(n) * n, 0);
    adj_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges)
    : Graph(n)
{
    for (const auto& e : edges)
        add_edge(e.u, e.v);
}

void Graph::check_vertex(Vertex u) const
{
    if (u < 0 || u >= n_)
        throw InvalidArgument("vertex " + std::to_string(u) + " out of range for n=" + std::to_string(n_));
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    auto& cell = matrix_[static_cast<std::size_t>(u) * n_ + v];
    if (cell)
        throw InvalidArgument("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    cell = 1;
    matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    if (!adjacent(u, v))
        throw InvalidArgument("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    matrix_[static_cast<std::size_t>(u) * n_ + v] = 0;
    matrix_[static_cast<std::size_t>(v) * n_ + u] = 0;
    std::erase(adj_[u], v);
    std::erase(adj_[v], u);
    --edge_count_;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.push_back({u, v});
    return out;
}

DistanceMatrix::DistanceMatrix(int n)
    : n_(n)
    , d_(static_cast<std::size_t>(n) * n, kUnreachable)
{
    for (int u = 0; u < n; ++u)
        d_[static_cast<std::size_t>(u) * n + u] = 0;
}

std::optional<int> DistanceMatrix::at(Vertex u, Vertex v) const
{
    int d = d_.at(static_cast<std::size_t>(u) * n_ + v);
    if (d == kUnreachable)
        return std::nullopt;
    return d;
}

void DistanceMatrix::set(Vertex u, Vertex v, std::optional<int> d)
{
    d_.at(static_cast<std::size_t>(u) * n_ + v) = d.value_or(kUnreachable);
}

DistanceMatrix distances(const Graph& g)
{
    const int n = g.order();
    DistanceMatrix out(n);
    std::vector<int> dist(n);
    std::queue<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            for (Vertex w : g.neighbours(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push(w);
                }
            }
        }
        for (Vertex v = 0; v < n; ++v)
            if (dist[v] >= 0)
                out.set(s, v, dist[v]);
    }
    return out;
}

Graph complement(const Graph& g)
{
    Graph out(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                out.add_edge(u, v);
    return out;
}

int max_degree(const Graph& g)
{
    int best = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        best = std::max(best, g.degree(u));
    return best;
}

bool is_subgraph(const Graph& g, const Graph& h)
{
    if (g.order() > h.order())
        return false;
    for (const auto& e : g.edges())
        if (!h.adjacent(e.u, e.v))
            return false;
    return true;
}

bool is_connected(const Graph& g)
{
    auto d = distances(g);
    for (Vertex v = 1; v < g.order(); ++v)
        if (!d.at(0, v))
            return false;
    return true;
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph path_graph(int n)
{
    Graph g(n);
    for (Vertex u = 0; u + 1 < n; ++u)
        g.add_edge(u, u + 1);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw InvalidArgument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph star_graph(int leaves)
{
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

int path_cover_number(const Graph& g, int cap)
{
    const int n = g.order();
    if (n > cap)
        throw CapExceeded("path cover: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (n > 22)
        throw CapExceeded("path cover: n=" + std::to_string(n) + " exceeds hard limit 22");

    // best[mask * n + v]: fewest paths covering mask when the vertices are laid
    // out in one sequence ending at v; a new path starts at every non-adjacent
    // step.
    constexpr std::uint8_t kUnset = std::numeric_limits<std::uint8_t>::max();
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::uint8_t> best(states * n, kUnset);
    for (Vertex v = 0; v < n; ++v)
        best[(std::size_t{1} << v) * n + v] = 1;

    std::vector<std::uint32_t> nbr(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbours(v))
            nbr[v] |= std::uint32_t{1} << w;

    for (std::size_t mask = 1; mask < states; ++mask) {
        for (Vertex v = 0; v < n; ++v) {
            std::uint8_t cur = best[mask * n + v];
            if (cur == kUnset)
                continue;
            for (Vertex w = 0; w < n; ++w) {
                if (mask & (std::size_t{1} << w))
                    continue;
                std::uint8_t next = cur + ((nbr[v] >> w & 1u) ? 0 : 1);
                auto& slot = best[(mask | (std::size_t{1} << w)) * n + w];
                if (next < slot)
                    slot = next;
            }
        }
    }
    std::uint8_t answer = kUnset;
    const std::size_t full = states - 1;
    for (Vertex v = 0; v < n; ++v)
        answer = std::min(answer, best[full * n + v]);
    return answer;
}

} // namespace lambdacol
