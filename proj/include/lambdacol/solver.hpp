#pragma once

#include "lambdacol/graph.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace lambdacol {

/// Total vertex labelling with non-negative labels and minimum label 0.
class Colouring {
public:
    explicit Colouring(std::vector<int> labels);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    int label(Vertex v) const { return labels_.at(v); }
    std::span<const int> labels() const noexcept { return labels_; }
    /// Largest label used.
    int span() const noexcept { return span_; }

    friend bool operator==(const Colouring&, const Colouring&) = default;
    friend auto operator<=>(const Colouring& a, const Colouring& b) { return a.labels_ <=> b.labels_; }

private:
    std::vector<int> labels_;
    int span_ = 0;
};

/// |c(u) - c(v)| + d(u, v) >= 3 for every pair of distinct vertices.
/// Throws InvalidArgument when c does not cover exactly g's vertices.
bool is_lambda_colouring(const Graph& g, const Colouring& c);

/// First violating pair (u < v), if any.
std::optional<Edge> first_violation(const Graph& g, const Colouring& c);

/// Unused labels h with 0 < h < span, ascending.
std::vector<int> holes_of(const Colouring& c);

/// Reverses labels: u -> span - c(u).
Colouring dual(const Colouring& c);

struct SolveReport {
    int lambda;
    Colouring witness;
    std::vector<int> holes;
};

inline constexpr int kDefaultSolverCap = 24;
/// Labels and vertex sets are held in 64-bit masks; lambda <= 2n - 2.
inline constexpr int kSolverHardLimit = 32;

struct SolverOptions {
    int max_vertices = kDefaultSolverCap;
};

/// Exact lambda chromatic number with the lexicographically smallest optimal
/// colouring (vertex-id order) as witness, after consecutive-hole removal.
SolveReport lambda_number(const Graph& g, const SolverOptions& opts = {});

/// Lambda chromatic number only; skips the witness search.
int lambda_value(const Graph& g, const SolverOptions& opts = {});

/// Is there a lambda colouring with every label in [0, span]?
bool has_colouring_within(const Graph& g, int span, const SolverOptions& opts = {});

/// Calls visit on every lambda colouring with labels in [0, span], in
/// lexicographic order, until visit returns false or limit colourings were
/// produced. Returns the number produced. At span = lambda these are exactly
/// the optimal colourings.
std::size_t for_each_colouring_within(const Graph& g, int span, std::size_t limit,
                                      const std::function<bool(const Colouring&)>& visit,
                                      const SolverOptions& opts = {});

/// Delta + 1. Throws NotApplicable on an edgeless graph.
int delta_lower_bound(const Graph& g);

/// Value obtained from the path covering number of the complement:
/// exact = n + tau - 2 when tau >= 2, otherwise only lambda <= n - 1 is known.
struct PathCoverLambda {
    bool exact;
    int value; ///< the exact lambda, or the upper bound n - 1
    int tau;
};

PathCoverLambda lambda_via_path_cover(const Graph& g, int cap = kDefaultPathCoverCap);

/// While c has two consecutive holes, shift every label above the upper one
/// down by one. Each step is re-checked against g.
Colouring remove_consecutive_holes(const Graph& g, Colouring c);

} // namespace lambdacol
