#pragma once

#include "lambdacol/graph.hpp"
#include "lambdacol/solver.hpp"
#include "lambdacol/transform.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace lambdacol {

/// Calls cb on every valid shape with t+1 entries summing to n, in
/// lexicographic order. Throws InvalidArgument unless n >= t+1 >= 4.
void for_each_valid_shape(int n, int t, const std::function<void(const PartitionShape&)>& cb);
std::vector<PartitionShape> valid_shapes(int n, int t);

/// Number of length-(t+1) compositions of n into non-negative parts, saturating
/// at UINT64_MAX. Bounds the work done by max_edges.
std::uint64_t composition_count(int n, int t);

inline constexpr std::uint64_t kDefaultMaxShapes = 200'000'000;

struct MaxEdgesResult {
    int max_edges;
    /// Ascending.
    std::vector<PartitionShape> shapes;
};

/// Maximum of M over valid shapes and every shape attaining it. Throws
/// CapExceeded when more than max_shapes compositions would be scanned.
MaxEdgesResult max_edges(int n, int t, std::uint64_t max_shapes = kDefaultMaxShapes);

enum class StationaryTag { Equitable, A, B, C, D, F, G, H };

/// t = 3:  a (x, x-1, x-2, x)   b (x-1, x, x-2, x)
///         c (x, x-2, x, x)     d (x, x-3, x, x)
/// t = 4:  f (x, x-2, x, x-1, x)   g (x, x-2, x, x-2, x)
///         h (x, x, x-2, x, x)
/// dual is set when only the reversed shape matches.
struct StationaryType {
    StationaryTag tag;
    bool dual = false;

    friend bool operator==(const StationaryType&, const StationaryType&) = default;
};

std::string to_string(StationaryTag tag);
std::string to_string(const StationaryType& type);

std::optional<StationaryType> match_stationary_type(const PartitionShape& s);

/// Shapes the classification predicts as edge-maximal: the equal shape when
/// t+1 divides n, otherwise the equitable shapes of least K together with the
/// shapes of types a-d (t = 3) and f, g (t = 4) and their duals. Ascending.
std::vector<PartitionShape> predicted_shapes(int n, int t);

/// For each class pair (i, j), j >= i + 2, with both classes non-empty, an
/// injection from the smaller class into the larger: the k-th vertex of the
/// smaller class (the i-th class on ties) meets the inj[k]-th vertex of the
/// other. Missing pairs use the identity.
struct StationaryMatchings {
    std::map<std::pair<int, int>, std::vector<int>> injections;

    static StationaryMatchings canonical() { return {}; }
    static StationaryMatchings random(const PartitionShape& s, std::mt19937_64& rng);
};

struct StationaryGraph {
    Graph graph;
    ColouredPartition partition;
};

/// Vertices of class m take a contiguous id range, classes in order.
StationaryGraph build_stationary(const PartitionShape& s,
                                 const StationaryMatchings& matchings = StationaryMatchings::canonical());

/// Checks the edge distribution (no edge inside a class or between
/// consecutive classes, each vertex of the smaller of two classes at distance
/// two or more meets exactly one vertex of the larger and no vertex of the
/// larger meets two) and then matches the shape or its dual against a-h.
/// Throws InvalidArgument when the partition does not cover g.
std::optional<StationaryType> is_stationary(const Graph& g, const ColouredPartition& p);

enum class ClassificationCase { Divisible, EquitableMinK, Sporadic, NotMaximal };

std::string to_string(ClassificationCase c);

struct ClassificationReport {
    ClassificationCase kase;
    int lambda;
    int edges;
    int max_edges;
    PartitionShape witness_shape;
    Colouring witness;
    std::optional<StationaryType> type;
};

struct ClassifyOptions {
    SolverOptions solver;
    std::uint64_t max_shapes = kDefaultMaxShapes;
    /// Optimal colourings scanned when the witness has a non-maximal shape.
    std::size_t research_limit = 100'000;
    /// Use this optimal colouring instead of the solver's witness. A graph can
    /// be stationary under several partitions, and the case follows the one used.
    std::optional<Colouring> witness;
};

/// Throws NotApplicable when lambda < 3 or n < lambda + 1, InvalidArgument
/// when a supplied witness is not an optimal colouring, and InternalError
/// if an edge-maximal graph fails to be stationary under every scanned
/// optimal colouring.
ClassificationReport classify(const Graph& g, const ClassifyOptions& opts = {});

/// Labelled graphs on n vertices, edge set given by the bits of a mask over
/// the pairs (0,1), (0,2), ..., (n-2,n-1).
void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& cb);

inline constexpr int kCensusCap = 7;

/// lambda -> largest edge count among labelled n-vertex graphs with that
/// lambda. Throws CapExceeded when n > kCensusCap.
std::map<int, int> brute_force_graph_census(int n, int threads = 0);

struct VerifyOptions {
    std::uint64_t max_shapes = kDefaultMaxShapes;
    /// Graph census cross-check runs for n up to this.
    int census_max_n = 6;
};

struct VerifyVerdict {
    int n;
    int t;
    int max_edges;
    int argmax_count;
    bool shapes_match;
    /// Always true for t < 5.
    bool all_equitable;
    bool census_checked;
    bool census_match;
    /// Every attaining shape has its non-empty class sizes in [b, b + 3],
    /// b = floor(n / (t + 1)).
    bool inner_outer;
    std::vector<PartitionShape> unexpected;
    std::vector<PartitionShape> missing;
    std::vector<PartitionShape> inner_outer_violations;

    bool pass() const { return shapes_match && all_equitable && (!census_checked || census_match); }
    /// `n=<n> t=<t> PASS|FAIL max=<m> shapes=<k> census=<ok|FAIL|skip> inner_outer=<ok|FAIL>`
    std::string report_line() const;
};

VerifyVerdict verify_classification(int n, int t, const VerifyOptions& opts = {});

} // namespace lambdacol
