#pragma once

#include "lambdacol/graph.hpp"
#include "lambdacol/solver.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lambdacol {

/// Class-size vector (|C_0|, ..., |C_t|). Zero entries are holes.
class PartitionShape {
public:
    explicit PartitionShape(std::vector<int> sizes);

    int t() const noexcept { return static_cast<int>(sizes_.size()) - 1; }
    int operator[](int i) const { return sizes_.at(i); }
    const std::vector<int>& sizes() const noexcept { return sizes_; }
    int vertex_count() const noexcept;

    /// Ends non-empty and no two consecutive empty classes.
    bool is_valid() const noexcept;
    /// All sizes within one of each other.
    bool is_equitable() const noexcept;

    friend bool operator==(const PartitionShape&, const PartitionShape&) = default;
    friend auto operator<=>(const PartitionShape&, const PartitionShape&) = default;

private:
    std::vector<int> sizes_;
};

/// `c0,c1,...,ct`
PartitionShape parse_shape(std::string_view text);
std::string to_string(const PartitionShape& s);

/// Sum over class pairs i <= j - 2 of min(|C_i|, |C_j|): the largest number
/// of edges a graph with this coloured partition can carry.
int M_value(const PartitionShape& s);

/// Number of consecutive pairs (i, i+1) both of maximum size.
int K_value(const PartitionShape& s);

/// max size - min size, holes counting as 0.
int nabla(const PartitionShape& s);
std::vector<int> max_classes(const PartitionShape& s);
std::vector<int> min_classes(const PartitionShape& s);

/// Classes adjacent in label to class m; no edge may join them to C_m.
std::vector<int> prohibited_zone(int t, int m);

PartitionShape dual(const PartitionShape& s);

/// Classes C_0..C_t of a colouring, members ascending by vertex id.
struct ColouredPartition {
    std::vector<std::vector<Vertex>> classes;

    int t() const noexcept { return static_cast<int>(classes.size()) - 1; }
    int vertex_count() const noexcept;
    PartitionShape shape() const;
    /// Inverse map vertex -> class index.
    std::vector<int> class_of() const;
};

ColouredPartition partition_of(const Graph& g, const Colouring& c);
ColouredPartition dual(const ColouredPartition& p);

/// Graph whose edges are fixed by its partition: the i-th vertices of every
/// pair of non-empty classes two or more apart are joined.
struct StandardisedGraph {
    Graph graph;
    ColouredPartition partition;

    PartitionShape shape() const { return partition.shape(); }
};

/// Replaces the edges of (g, c) by the rank-aligned matchings. Vertex ids are
/// unchanged; within a class, rank follows ascending id.
StandardisedGraph edge_standardise(const Graph& g, const Colouring& c);

/// Standardised graph on fresh vertex ids: class m occupies a contiguous id
/// range, classes in order.
StandardisedGraph standardised_from_shape(const PartitionShape& s);

/// Removes one vertex from max class M. Throws InvalidArgument if M is not a
/// max class or the result would be an invalid shape.
PartitionShape delete_max(const PartitionShape& s, int max_index);

/// Adds one vertex to min class m. Throws InvalidArgument if m is not a min
/// class.
PartitionShape insert_min(const PartitionShape& s, int min_index);

/// Edges lost by delete_max: |max| - 1 - |max ∩ P(M)|.
int deletion_loss(const PartitionShape& s, int max_index);

/// Edges gained by insert_min: t + 1 - |min ∪ P(m)|.
int insertion_gain(const PartitionShape& s, int min_index);

/// Net change of deleting from max class A then inserting into class B, a min
/// class of the intermediate shape:
/// t + 2 + |max ∩ P(A)| + |min' ∩ P(B)| - (|max| + |min'| + |P(B)|),
/// where min' is the min class set after the deletion.
int composite_gain(const PartitionShape& s, int max_index, int min_index);

/// b*C(t,2) + C(r,2) - K with b = floor(n/(t+1)), r = n - (t+1)b. The K term
/// only applies when r > 0. Throws NotApplicable unless s is equitable.
int equitable_edge_formula(const PartitionShape& s);

} // namespace lambdacol
