#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rwlab/gf2.hpp"
#include "rwlab/graph.hpp"

namespace rwlab {

/// Permutation of the vertex indices of an associated graph.
struct LinearOrder {
    std::vector<int> perm; // perm[t] = vertex at position t

    static LinearOrder identity(int n);
    void validate(int n) const; // bijection onto 0..n-1

    friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
};

enum class CutMeasure {
    CutRank,           // F2-rank of the cut matrix
    NeighborhoodCount, // number of distinct neighborhoods across the cut
};

struct MeasureOptions {
    std::uint64_t closure_cap = kClosureCap; // for NeighborhoodCount
};

struct WidthResult {
    std::uint64_t width = 0;
    std::size_t argmax_prefix = 0; // first prefix length attaining the width
    bool saturated = false;        // some prefix count hit the closure cap
};

/// Evaluates the measure on every proper nonempty prefix cut of the order.
WidthResult linear_width(const Graph& g, const LinearOrder& ord, CutMeasure measure,
                         const MeasureOptions& opts = {});

/// Unrooted tree whose internal nodes have degree exactly 3 and whose
/// leaves are bijectively labeled by the vertices of a graph.
struct BranchTree {
    struct Node {
        std::vector<int> adj;
        int leaf_vertex = -1; // graph vertex for leaves, -1 for internal nodes
    };
    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> edges;

    int add_node(int leaf_vertex = -1);
    void add_edge(int a, int b);
    int node_count() const { return static_cast<int>(nodes.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    /// Checks degree-3 internal nodes and the leaf bijection onto 0..n-1.
    void validate(int n_vertices) const;

    /// Graph vertices on the `edges[e].first` side of tree edge e.
    BitVec side_of(int e) const;

    /// Leaf-side sizes |side ∩ x| for every edge, as (first-side, second-side).
    std::vector<std::pair<int, int>> side_counts(const BitVec& x) const;
};

/// Caterpillar tree displaying exactly the prefix cuts of the order.
BranchTree caterpillar_from_order(const LinearOrder& ord);

/// Max measure over all edge-displayed bipartitions of the tree.
WidthResult branch_width(const Graph& g, const BranchTree& t, CutMeasure measure,
                         const MeasureOptions& opts = {});

/// An edge whose displayed bipartition (L, R) has |L ∩ x| >= |x|/3 and
/// |R ∩ x| >= |x|/3, located by orienting every edge toward the side
/// richer in x and walking to a sink; a tie ends the walk at that edge.
/// Requires |x| >= 2. Returns the edge index.
int find_balanced_cut_edge(const BranchTree& t, std::span<const int> x);

struct OptimalWidthResult {
    std::uint64_t width = 0;
    LinearOrder order;
};

inline constexpr std::size_t kOptimalWidthCap = 9;

/// Exhaustive minimum linear width over all orders, via DP on prefix sets.
OptimalWidthResult optimal_linear_width(const Graph& g, CutMeasure measure,
                                        std::size_t max_vertices = kOptimalWidthCap,
                                        const MeasureOptions& opts = {});

} // namespace rwlab
