#include "lambdacol/error.hpp"
#include "lambdacol/extremal.hpp"

#include <algorithm>
#include <thread>

namespace lambdacol {

namespace {

std::vector<Edge> all_pairs(int n)
{
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    return pairs;
}

Graph graph_of_mask(int n, const std::vector<Edge>& pairs, std::uint64_t mask)
{
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1)
            g.add_edge(pairs[i].u, pairs[i].v);
    return g;
}

void merge_into(std::map<int, int>& into, const std::map<int, int>& from)
{
    for (auto [lambda, edges] : from) {
        auto [it, fresh] = into.emplace(lambda, edges);
        if (!fresh)
            it->second = std::max(it->second, edges);
    }
}

} // namespace

void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& cb)
{
    if (n < 1)
        throw InvalidArgument("need n >= 1, got " + std::to_string(n));
    if (n > kCensusCap + 1)
        throw CapExceeded("labelled enumeration capped at n=" + std::to_string(kCensusCap + 1));
    const auto pairs = all_pairs(n);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask)
        cb(graph_of_mask(n, pairs, mask));
}

std::map<int, int> brute_force_graph_census(int n, int threads)
{
    if (n < 1)
        throw InvalidArgument("need n >= 1, got " + std::to_string(n));
    if (n > kCensusCap)
        throw CapExceeded("census capped at n=" + std::to_string(kCensusCap) + ", got " + std::to_string(n));
    if (threads <= 0)
        threads = std::max(1u, std::thread::hardware_concurrency());

    const auto pairs = all_pairs(n);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    const std::uint64_t chunks = std::min<std::uint64_t>(threads, total);
    std::vector<std::map<int, int>> partial(chunks);

    auto work = [&](std::uint64_t chunk) {
        const std::uint64_t lo = total * chunk / chunks;
        const std::uint64_t hi = total * (chunk + 1) / chunks;
        auto& table = partial[chunk];
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            const Graph g = graph_of_mask(n, pairs, mask);
            merge_into(table, {{lambda_value(g), static_cast<int>(g.size())}});
        }
    };

    if (chunks == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t c = 0; c < chunks; ++c)
            pool.emplace_back(work, c);
        for (auto& th : pool)
            th.join();
    }

    std::map<int, int> out;
    for (const auto& table : partial)
        merge_into(out, table);
    return out;
}

} // namespace lambdacol
