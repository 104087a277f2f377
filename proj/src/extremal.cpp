#include "lambdacol/extremal.hpp"

#include "lambdacol/error.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace lambdacol {

namespace {

void check_range(int n, int t)
{
    if (t < 3)
        throw InvalidArgument("need t >= 3, got t=" + std::to_string(t));
    if (n < t + 1)
        throw InvalidArgument("need n >= t+1, got n=" + std::to_string(n) + " t=" + std::to_string(t));
}

/// Depth-first over valid shapes with M accumulated along the way.
template <class Visit>
class ShapeWalker {
public:
    ShapeWalker(int n, int t, Visit& visit)
        : n_(n), t_(t), c_(t + 1, 0), visit_(visit)
    {
    }

    void run() { place(0, n_, 0); }

private:
    void place(int j, int left, int m)
    {
        if (j == t_) {
            if (left < 1)
                return;
            c_[j] = left;
            visit_(c_, m + gain(j));
            return;
        }
        const int lo = j == 0 ? 1 : (c_[j - 1] == 0 ? 1 : 0);
        for (int v = lo; v <= left - 1; ++v) {
            c_[j] = v;
            place(j + 1, left - v, m + gain(j));
        }
    }

    int gain(int j) const
    {
        int g = 0;
        for (int i = 0; i + 2 <= j; ++i)
            g += std::min(c_[i], c_[j]);
        return g;
    }

    int n_;
    int t_;
    std::vector<int> c_;
    Visit& visit_;
};

template <class Visit>
void walk_shapes(int n, int t, Visit&& visit)
{
    ShapeWalker<std::remove_reference_t<Visit>> walker(n, t, visit);
    walker.run();
}

std::optional<StationaryTag> direct_tag(const std::vector<int>& c)
{
    const int t = static_cast<int>(c.size()) - 1;
    if (t == 3) {
        if (c[0] == c[1] + 1 && c[1] + 1 == c[2] + 2 && c[2] + 2 == c[3])
            return StationaryTag::A;
        if (c[0] + 1 == c[1] && c[1] == c[2] + 2 && c[2] + 2 == c[3])
            return StationaryTag::B;
        if (c[0] == c[1] + 2 && c[1] + 2 == c[2] && c[2] == c[3])
            return StationaryTag::C;
        if (c[0] == c[1] + 3 && c[1] + 3 == c[2] && c[2] == c[3])
            return StationaryTag::D;
    }
    if (t == 4) {
        if (c[0] == c[1] + 2 && c[1] + 2 == c[2] && c[2] == c[3] + 1 && c[3] + 1 == c[4])
            return StationaryTag::F;
        if (c[0] == c[1] + 2 && c[1] + 2 == c[2] && c[2] == c[3] + 2 && c[3] + 2 == c[4])
            return StationaryTag::G;
        if (c[0] == c[1] && c[1] == c[2] + 2 && c[2] + 2 == c[3] && c[3] == c[4])
            return StationaryTag::H;
    }
    return std::nullopt;
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > std::numeric_limits<std::uint64_t>::max() / num)
            return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;
    }
    return r;
}

} // namespace

void for_each_valid_shape(int n, int t, const std::function<void(const PartitionShape&)>& cb)
{
    check_range(n, t);
    walk_shapes(n, t, [&](const std::vector<int>& c, int) { cb(PartitionShape(c)); });
}

std::vector<PartitionShape> valid_shapes(int n, int t)
{
    std::vector<PartitionShape> out;
    for_each_valid_shape(n, t, [&](const PartitionShape& s) { out.push_back(s); });
    return out;
}

std::uint64_t composition_count(int n, int t)
{
    return binomial(n + t, t);
}

MaxEdgesResult max_edges(int n, int t, std::uint64_t max_shapes)
{
    check_range(n, t);
    if (composition_count(n, t) > max_shapes)
        throw CapExceeded("shape search for n=" + std::to_string(n) + " t=" + std::to_string(t) + " scans " +
                          std::to_string(composition_count(n, t)) + " compositions, cap is " +
                          std::to_string(max_shapes));
    MaxEdgesResult out{-1, {}};
    std::vector<std::vector<int>> best;
    walk_shapes(n, t, [&](const std::vector<int>& c, int m) {
        if (m > out.max_edges) {
            out.max_edges = m;
            best.clear();
        }
        if (m == out.max_edges)
            best.push_back(c);
    });
    for (auto& c : best)
        out.shapes.emplace_back(std::move(c));
    return out;
}

std::string to_string(StationaryTag tag)
{
    switch (tag) {
    case StationaryTag::Equitable: return "equitable";
    case StationaryTag::A: return "a";
    case StationaryTag::B: return "b";
    case StationaryTag::C: return "c";
    case StationaryTag::D: return "d";
    case StationaryTag::F: return "f";
    case StationaryTag::G: return "g";
    case StationaryTag::H: return "h";
    }
    return "?";
}

std::string to_string(const StationaryType& type)
{
    return type.dual ? to_string(type.tag) + "-dual" : to_string(type.tag);
}

std::optional<StationaryType> match_stationary_type(const PartitionShape& s)
{
    if (s.is_equitable())
        return StationaryType{StationaryTag::Equitable, false};
    if (auto tag = direct_tag(s.sizes()))
        return StationaryType{*tag, false};
    if (auto tag = direct_tag(dual(s).sizes()))
        return StationaryType{*tag, true};
    return std::nullopt;
}

std::vector<PartitionShape> predicted_shapes(int n, int t)
{
    check_range(n, t);
    const int b = n / (t + 1);
    const int r = n % (t + 1);
    if (r == 0)
        return {PartitionShape(std::vector<int>(t + 1, b))};

    constexpr std::uint64_t kSubsetCap = 50'000'000;
    if (binomial(t + 1, r) > kSubsetCap)
        throw CapExceeded("too many equitable shapes for n=" + std::to_string(n) + " t=" + std::to_string(t));

    // Equitable shapes: choose which r classes get b + 1.
    std::set<PartitionShape> out;
    std::vector<PartitionShape> equitable;
    std::vector<int> c(t + 1, b);
    auto choose = [&](auto& self, int from, int left) -> void {
        if (left == 0) {
            PartitionShape s(c);
            if (s.is_valid())
                equitable.push_back(std::move(s));
            return;
        }
        for (int i = from; i + left <= t + 1; ++i) {
            c[i] = b + 1;
            self(self, i + 1, left - 1);
            c[i] = b;
        }
    };
    choose(choose, 0, r);
    int least = std::numeric_limits<int>::max();
    for (const auto& s : equitable)
        least = std::min(least, K_value(s));
    for (const auto& s : equitable)
        if (K_value(s) == least)
            out.insert(s);

    auto offer = [&](int total_offset, std::vector<int> offsets) {
        // sizes x + offsets[i], summing to n.
        const int parts = static_cast<int>(offsets.size());
        if ((n - total_offset) % parts != 0)
            return;
        const int x = (n - total_offset) / parts;
        std::vector<int> sizes(parts);
        for (int i = 0; i < parts; ++i) {
            sizes[i] = x + offsets[i];
            if (sizes[i] < 0)
                return;
        }
        PartitionShape s(std::move(sizes));
        if (!s.is_valid())
            return;
        out.insert(s);
        out.insert(dual(s));
    };
    auto with_sum = [&](std::vector<int> offsets) {
        int sum = 0;
        for (int o : offsets)
            sum += o;
        offer(sum, std::move(offsets));
    };
    if (t == 3) {
        with_sum({0, -1, -2, 0});
        with_sum({-1, 0, -2, 0});
        with_sum({0, -2, 0, 0});
        with_sum({0, -3, 0, 0});
    }
    if (t == 4) {
        with_sum({0, -2, 0, -1, 0});
        with_sum({0, -2, 0, -2, 0});
    }
    return {out.begin(), out.end()};
}

StationaryMatchings StationaryMatchings::random(const PartitionShape& s, std::mt19937_64& rng)
{
    StationaryMatchings out;
    for (int i = 0; i <= s.t(); ++i) {
        for (int j = i + 2; j <= s.t(); ++j) {
            if (s[i] == 0 || s[j] == 0)
                continue;
            std::vector<int> inj(std::max(s[i], s[j]));
            std::iota(inj.begin(), inj.end(), 0);
            std::shuffle(inj.begin(), inj.end(), rng);
            inj.resize(std::min(s[i], s[j]));
            out.injections[{i, j}] = std::move(inj);
        }
    }
    return out;
}

StationaryGraph build_stationary(const PartitionShape& s, const StationaryMatchings& matchings)
{
    if (!s.is_valid())
        throw InvalidArgument("invalid shape " + to_string(s));
    const int t = s.t();
    for (const auto& [pair, inj] : matchings.injections) {
        auto [i, j] = pair;
        if (i < 0 || j > t || j < i + 2 || s[i] == 0 || s[j] == 0)
            throw InvalidArgument("injection given for non-eligible class pair (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
        const int small = std::min(s[i], s[j]);
        const int large = std::max(s[i], s[j]);
        std::vector<char> used(large, 0);
        bool ok = static_cast<int>(inj.size()) == small;
        for (int k = 0; ok && k < small; ++k) {
            ok = inj[k] >= 0 && inj[k] < large && !used[inj[k]];
            if (ok)
                used[inj[k]] = 1;
        }
        if (!ok)
            throw InvalidArgument("injection for pair (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is not one-to-one from " + std::to_string(small) + " into " +
                                  std::to_string(large));
    }

    ColouredPartition p{std::vector<std::vector<Vertex>>(t + 1)};
    Vertex next = 0;
    for (int m = 0; m <= t; ++m)
        for (int k = 0; k < s[m]; ++k)
            p.classes[m].push_back(next++);
    Graph g(next);
    for (int i = 0; i <= t; ++i) {
        for (int j = i + 2; j <= t; ++j) {
            if (s[i] == 0 || s[j] == 0)
                continue;
            const auto& small = s[i] <= s[j] ? p.classes[i] : p.classes[j];
            const auto& large = s[i] <= s[j] ? p.classes[j] : p.classes[i];
            auto it = matchings.injections.find({i, j});
            for (std::size_t k = 0; k < small.size(); ++k) {
                const int target = it == matchings.injections.end() ? static_cast<int>(k) : it->second[k];
                g.add_edge(small[k], large[target]);
            }
        }
    }
    return StationaryGraph{std::move(g), std::move(p)};
}

std::optional<StationaryType> is_stationary(const Graph& g, const ColouredPartition& p)
{
    if (p.vertex_count() != g.order())
        throw InvalidArgument("partition covers " + std::to_string(p.vertex_count()) + " vertices, graph has " +
                              std::to_string(g.order()));
    const auto class_of = p.class_of();
    const int t = p.t();
    if (t < 3 || g.order() < t + 1)
        return std::nullopt;
    const auto shape = p.shape();
    if (!shape.is_valid())
        return std::nullopt;

    for (Vertex u = 0; u < g.order(); ++u) {
        std::vector<int> hits(t + 1, 0);
        for (Vertex w : g.neighbours(u))
            ++hits[class_of[w]];
        const int cu = class_of[u];
        for (int q = 0; q <= t; ++q) {
            if (std::abs(q - cu) <= 1) {
                if (hits[q] != 0)
                    return std::nullopt;
            } else if (shape[q] > 0) {
                if (shape[cu] <= shape[q] ? hits[q] != 1 : hits[q] > 1)
                    return std::nullopt;
            }
        }
    }
    return match_stationary_type(shape);
}

std::string to_string(ClassificationCase c)
{
    switch (c) {
    case ClassificationCase::Divisible: return "DIVISIBLE";
    case ClassificationCase::EquitableMinK: return "EQUITABLE_MIN_K";
    case ClassificationCase::Sporadic: return "SPORADIC";
    case ClassificationCase::NotMaximal: return "NOT_MAXIMAL";
    }
    return "?";
}

ClassificationReport classify(const Graph& g, const ClassifyOptions& opts)
{
    auto solved = lambda_number(g, opts.solver);
    const int t = solved.lambda;
    const int n = g.order();
    if (t < 3)
        throw NotApplicable("classification needs lambda >= 3, got " + std::to_string(t));
    if (n < t + 1)
        throw NotApplicable("classification needs n >= lambda+1, got n=" + std::to_string(n) +
                            " lambda=" + std::to_string(t));
    if (opts.witness) {
        if (!is_lambda_colouring(g, *opts.witness))
            throw InvalidArgument("supplied witness is not a lambda colouring");
        if (opts.witness->span() != t)
            throw InvalidArgument("supplied witness has span " + std::to_string(opts.witness->span()) +
                                  ", lambda is " + std::to_string(t));
        solved.witness = *opts.witness;
    }

    const auto best = max_edges(n, t, opts.max_shapes);
    const int edges = static_cast<int>(g.size());
    ClassificationReport report{ClassificationCase::NotMaximal, t, edges, best.max_edges,
                                partition_of(g, solved.witness).shape(), solved.witness, std::nullopt};
    if (edges > best.max_edges)
        throw InternalError("graph has " + std::to_string(edges) + " edges, above the shape maximum " +
                            std::to_string(best.max_edges));
    if (edges < best.max_edges)
        return report;

    auto attaining = [&](const Colouring& c) -> std::optional<StationaryType> {
        auto partition = partition_of(g, c);
        if (!std::binary_search(best.shapes.begin(), best.shapes.end(), partition.shape()))
            return std::nullopt;
        return is_stationary(g, partition);
    };

    auto type = attaining(solved.witness);
    if (!type) {
        for_each_colouring_within(
            g, t, opts.research_limit,
            [&](const Colouring& c) {
                if (c.span() != t)
                    return true;
                auto cleaned = remove_consecutive_holes(g, c);
                if (cleaned.span() != t)
                    return true;
                if (auto found = attaining(cleaned)) {
                    type = found;
                    report.witness = cleaned;
                    report.witness_shape = partition_of(g, cleaned).shape();
                    return false;
                }
                return true;
            },
            opts.solver);
        if (!type)
            throw InternalError("edge-maximal graph is not stationary under any scanned optimal colouring");
    }
    report.type = type;
    if (n % (t + 1) == 0)
        report.kase = ClassificationCase::Divisible;
    else if (report.witness_shape.is_equitable())
        report.kase = ClassificationCase::EquitableMinK;
    else
        report.kase = ClassificationCase::Sporadic;
    return report;
}

namespace {

std::map<int, int> cached_census(int n)
{
    static std::mutex mu;
    static std::map<int, std::map<int, int>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, brute_force_graph_census(n)).first;
    return it->second;
}

void append_shapes(std::ostringstream& out, const char* label, const std::vector<PartitionShape>& shapes)
{
    if (shapes.empty())
        return;
    out << ' ' << label << '=';
    for (std::size_t i = 0; i < shapes.size(); ++i)
        out << (i ? ";" : "") << to_string(shapes[i]);
}

} // namespace

std::string VerifyVerdict::report_line() const
{
    std::ostringstream out;
    out << "n=" << n << " t=" << t << ' ' << (pass() ? "PASS" : "FAIL") << " max=" << max_edges
        << " shapes=" << argmax_count << " census=" << (census_checked ? (census_match ? "ok" : "FAIL") : "skip")
        << " inner_outer=" << (inner_outer ? "ok" : "FAIL");
    append_shapes(out, "unexpected", unexpected);
    append_shapes(out, "missing", missing);
    return out.str();
}

VerifyVerdict verify_classification(int n, int t, const VerifyOptions& opts)
{
    check_range(n, t);
    const auto best = max_edges(n, t, opts.max_shapes);
    const auto predicted = predicted_shapes(n, t);

    VerifyVerdict v{n, t, best.max_edges, static_cast<int>(best.shapes.size()), false, true, false, false, true,
                    {}, {}, {}};
    std::set_difference(best.shapes.begin(), best.shapes.end(), predicted.begin(), predicted.end(),
                        std::back_inserter(v.unexpected));
    std::set_difference(predicted.begin(), predicted.end(), best.shapes.begin(), best.shapes.end(),
                        std::back_inserter(v.missing));
    v.shapes_match = v.unexpected.empty() && v.missing.empty();

    if (t >= 5)
        v.all_equitable = std::all_of(best.shapes.begin(), best.shapes.end(),
                                      [](const PartitionShape& s) { return s.is_equitable(); });

    if (n <= std::min(opts.census_max_n, kCensusCap)) {
        v.census_checked = true;
        const auto census = cached_census(n);
        auto it = census.find(t);
        v.census_match = it != census.end() && it->second == best.max_edges;
    }

    const int b = n / (t + 1);
    for (const auto& s : best.shapes) {
        int lo = std::numeric_limits<int>::max();
        int hi = 0;
        for (int c : s.sizes()) {
            if (c > 0)
                lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (lo < b || hi > b + 3)
            v.inner_outer_violations.push_back(s);
    }
    v.inner_outer = v.inner_outer_violations.empty();
    return v;
}

} // namespace lambdacol
