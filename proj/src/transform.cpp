#include "lambdacol/transform.hpp"

#include "lambdacol/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace lambdacol {

PartitionShape::PartitionShape(std::vector<int> sizes)
    : sizes_(std::move(sizes))
{
    if (sizes_.empty())
        throw InvalidArgument("shape needs at least one class");
    if (std::any_of(sizes_.begin(), sizes_.end(), [](int s) { return s < 0; }))
        throw InvalidArgument("shape sizes must be non-negative");
}

int PartitionShape::vertex_count() const noexcept
{
    return std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

bool PartitionShape::is_valid() const noexcept
{
    if (sizes_.front() < 1 || sizes_.back() < 1)
        return false;
    for (std::size_t i = 0; i + 1 < sizes_.size(); ++i)
        if (sizes_[i] == 0 && sizes_[i + 1] == 0)
            return false;
    return true;
}

bool PartitionShape::is_equitable() const noexcept
{
    auto [lo, hi] = std::minmax_element(sizes_.begin(), sizes_.end());
    return *hi - *lo <= 1;
}

PartitionShape parse_shape(std::string_view text)
{
    std::vector<int> sizes;
    std::size_t pos = 0;
    for (;;) {
        std::size_t end = text.find(',', pos);
        auto tok = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw InvalidArgument("bad shape entry '" + std::string(tok) + "' in '" + std::string(text) + "'");
        sizes.push_back(value);
        if (end == std::string_view::npos)
            break;
        pos = end + 1;
    }
    return PartitionShape(std::move(sizes));
}

std::string to_string(const PartitionShape& s)
{
    std::string out;
    for (int i = 0; i <= s.t(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

int M_value(const PartitionShape& s)
{
    const auto& c = s.sizes();
    const int t = s.t();
    int total = 0;
    for (int i = 0; i + 2 <= t; ++i)
        for (int j = i + 2; j <= t; ++j)
            total += std::min(c[i], c[j]);
    return total;
}

int K_value(const PartitionShape& s)
{
    const auto& c = s.sizes();
    const int top = *std::max_element(c.begin(), c.end());
    int count = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] == top && c[i + 1] == top)
            ++count;
    return count;
}

int nabla(const PartitionShape& s)
{
    auto [lo, hi] = std::minmax_element(s.sizes().begin(), s.sizes().end());
    return *hi - *lo;
}

namespace {

std::vector<int> indices_with(const PartitionShape& s, int value)
{
    std::vector<int> out;
    for (int i = 0; i <= s.t(); ++i)
        if (s[i] == value)
            out.push_back(i);
    return out;
}

int count_in(const std::vector<int>& set, const std::vector<int>& members)
{
    int n = 0;
    for (int x : members)
        if (std::find(set.begin(), set.end(), x) != set.end())
            ++n;
    return n;
}

bool contains(const std::vector<int>& set, int x)
{
    return std::find(set.begin(), set.end(), x) != set.end();
}

} // namespace

std::vector<int> max_classes(const PartitionShape& s)
{
    return indices_with(s, *std::max_element(s.sizes().begin(), s.sizes().end()));
}

std::vector<int> min_classes(const PartitionShape& s)
{
    return indices_with(s, *std::min_element(s.sizes().begin(), s.sizes().end()));
}

std::vector<int> prohibited_zone(int t, int m)
{
    if (t < 1 || m < 0 || m > t)
        throw InvalidArgument("class index " + std::to_string(m) + " outside 0.." + std::to_string(t));
    if (m == 0)
        return {1};
    if (m == t)
        return {t - 1};
    return {m - 1, m + 1};
}

PartitionShape dual(const PartitionShape& s)
{
    std::vector<int> r(s.sizes().rbegin(), s.sizes().rend());
    return PartitionShape(std::move(r));
}

int ColouredPartition::vertex_count() const noexcept
{
    int n = 0;
    for (const auto& cls : classes)
        n += static_cast<int>(cls.size());
    return n;
}

PartitionShape ColouredPartition::shape() const
{
    std::vector<int> sizes;
    for (const auto& cls : classes)
        sizes.push_back(static_cast<int>(cls.size()));
    return PartitionShape(std::move(sizes));
}

std::vector<int> ColouredPartition::class_of() const
{
    std::vector<int> out(vertex_count(), -1);
    for (int m = 0; m <= t(); ++m)
        for (Vertex v : classes[m]) {
            if (v < 0 || v >= static_cast<int>(out.size()) || out[v] != -1)
                throw InvalidArgument("partition classes must be disjoint and cover 0..n-1");
            out[v] = m;
        }
    return out;
}

ColouredPartition partition_of(const Graph& g, const Colouring& c)
{
    if (auto bad = first_violation(g, c))
        throw InvalidArgument("not a lambda colouring: vertices " + std::to_string(bad->u) + " and " +
                              std::to_string(bad->v) + " conflict");
    ColouredPartition p{std::vector<std::vector<Vertex>>(c.span() + 1)};
    for (Vertex v = 0; v < g.order(); ++v)
        p.classes[c.label(v)].push_back(v);
    return p;
}

ColouredPartition dual(const ColouredPartition& p)
{
    return ColouredPartition{{p.classes.rbegin(), p.classes.rend()}};
}

namespace {

void add_standard_edges(Graph& g, const ColouredPartition& p)
{
    const int t = p.t();
    for (int m = 0; m + 2 <= t; ++m) {
        for (int q = m + 2; q <= t; ++q) {
            const auto& a = p.classes[m];
            const auto& b = p.classes[q];
            for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
                g.add_edge(a[i], b[i]);
        }
    }
}

} // namespace

StandardisedGraph edge_standardise(const Graph& g, const Colouring& c)
{
    auto partition = partition_of(g, c);
    if (partition.t() < 3)
        throw InvalidArgument("standardisation needs span >= 3, got " + std::to_string(partition.t()));
    Graph out(g.order());
    add_standard_edges(out, partition);
    return StandardisedGraph{std::move(out), std::move(partition)};
}

StandardisedGraph standardised_from_shape(const PartitionShape& s)
{
    if (!s.is_valid())
        throw InvalidArgument("invalid shape " + to_string(s));
    ColouredPartition p{std::vector<std::vector<Vertex>>(s.t() + 1)};
    Vertex next = 0;
    for (int m = 0; m <= s.t(); ++m)
        for (int i = 0; i < s[m]; ++i)
            p.classes[m].push_back(next++);
    Graph g(next);
    add_standard_edges(g, p);
    return StandardisedGraph{std::move(g), std::move(p)};
}

PartitionShape delete_max(const PartitionShape& s, int max_index)
{
    if (!contains(max_classes(s), max_index))
        throw InvalidArgument("class " + std::to_string(max_index) + " is not a max class of " + to_string(s));
    auto sizes = s.sizes();
    --sizes[max_index];
    PartitionShape out(std::move(sizes));
    if (!out.is_valid())
        throw InvalidArgument("deleting from class " + std::to_string(max_index) + " of " + to_string(s) +
                              " leaves an empty end class or two consecutive holes");
    return out;
}

PartitionShape insert_min(const PartitionShape& s, int min_index)
{
    if (!contains(min_classes(s), min_index))
        throw InvalidArgument("class " + std::to_string(min_index) + " is not a min class of " + to_string(s));
    auto sizes = s.sizes();
    ++sizes[min_index];
    return PartitionShape(std::move(sizes));
}

int deletion_loss(const PartitionShape& s, int max_index)
{
    auto big = max_classes(s);
    if (!contains(big, max_index))
        throw InvalidArgument("class " + std::to_string(max_index) + " is not a max class of " + to_string(s));
    auto zone = prohibited_zone(s.t(), max_index);
    return static_cast<int>(big.size()) - 1 - count_in(big, zone);
}

int insertion_gain(const PartitionShape& s, int min_index)
{
    auto small = min_classes(s);
    if (!contains(small, min_index))
        throw InvalidArgument("class " + std::to_string(min_index) + " is not a min class of " + to_string(s));
    auto zone = prohibited_zone(s.t(), min_index);
    int union_size = static_cast<int>(small.size());
    for (int z : zone)
        if (!contains(small, z))
            ++union_size;
    return s.t() + 1 - union_size;
}

int composite_gain(const PartitionShape& s, int max_index, int min_index)
{
    auto big = max_classes(s);
    if (!contains(big, max_index))
        throw InvalidArgument("class " + std::to_string(max_index) + " is not a max class of " + to_string(s));
    auto after = delete_max(s, max_index);
    auto small = min_classes(after);
    if (!contains(small, min_index))
        throw InvalidArgument("class " + std::to_string(min_index) + " is not a min class after deletion");
    auto zone_a = prohibited_zone(s.t(), max_index);
    auto zone_b = prohibited_zone(s.t(), min_index);
    return s.t() + 2 + count_in(big, zone_a) + count_in(small, zone_b) -
           (static_cast<int>(big.size()) + static_cast<int>(small.size()) + static_cast<int>(zone_b.size()));
}

int equitable_edge_formula(const PartitionShape& s)
{
    if (!s.is_equitable())
        throw NotApplicable("closed form needs an equitable shape, got " + to_string(s));
    const int t = s.t();
    const int n = s.vertex_count();
    const int b = n / (t + 1);
    const int r = n - (t + 1) * b;
    int value = b * (t * (t - 1) / 2) + r * (r - 1) / 2;
    if (r > 0)
        value -= K_value(s);
    return value;
}

} // namespace lambdacol
