#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rwlab/formula.hpp"
#include "rwlab/graph.hpp"

namespace rwlab {

// Default solver size caps. All of them can be raised by the caller;
// expect exponential running time growth beyond the defaults.
inline constexpr int kSatVarCap = 16;
inline constexpr int kMwisVertexCap = 64;
inline constexpr int kMwdsVertexCap = 40;
inline constexpr int kMimVertexCap = 24;
inline constexpr int kForestVertexCap = 24;

struct SatResult {
    bool satisfiable = false;
    std::optional<Assignment> model; // lexicographically first, when satisfiable
    std::uint64_t model_count = 0;
};

/// Exhaustive truth-table scan of the k^2 grid variables.
SatResult sat_enumerate(const CnfFormula& f, int max_vars = kSatVarCap);

struct SolveResult {
    std::uint64_t value = 0;
    std::vector<int> witness; // sorted vertex indices
};

/// Exact maximum-weight independent set via branch and bound with a
/// greedy clique-cover weight bound. Witness re-verified before return.
SolveResult max_weight_independent_set(const WeightedGraph& g, int cap = kMwisVertexCap);

/// Exact minimum-weight dominating set via branch and bound over the
/// dominators of an undominated vertex, with a disjoint-closed-
/// neighborhood lower bound.
SolveResult min_weight_dominating_set(const WeightedGraph& g, int cap = kMwdsVertexCap);

struct MatchingResult {
    std::uint64_t size = 0;
    std::vector<std::pair<int, int>> edges; // witness, each pair u < v
};

/// Exact maximum induced matching via edge branch and bound; upper bounds
/// from greedy clique covers of the alive support and doubled maximal
/// matchings.
MatchingResult max_induced_matching(const Graph& g, int cap = kMimVertexCap);

/// Exact maximum induced forest (complement of a minimum feedback vertex
/// set) via cycle branching with a disjoint-clique lower bound.
SolveResult max_induced_forest(const Graph& g, int cap = kForestVertexCap);

// Independent witness checkers; the solvers run these before reporting.
bool is_independent_set(const Graph& g, const std::vector<int>& vs);
bool is_dominating_set(const Graph& g, const std::vector<int>& vs);
bool is_induced_matching(const Graph& g, const std::vector<std::pair<int, int>>& edges);
bool induces_forest(const Graph& g, const std::vector<int>& vs);

} // namespace rwlab
