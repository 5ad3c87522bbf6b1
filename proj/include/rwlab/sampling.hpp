#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rwlab/decomposition.hpp"
#include "rwlab/formula.hpp"
#include "rwlab/graph.hpp"

namespace rwlab {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) drawn without distribution objects, so
/// the stream is identical across standard library implementations.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

/// Erdős–Rényi-style graph on n plain-labeled vertices; each pair becomes
/// an edge with probability percent/100.
Graph random_graph(int n, int percent, Rng& rng);

WeightedGraph random_weighted_graph(int n, int percent, std::uint64_t max_weight, Rng& rng);

/// Random branch tree with degree-3 internal nodes over n leaf vertices.
BranchTree random_branch_tree(int n, Rng& rng);

/// Random grid 3-CNF with m clauses, literals uniform over the 2k^2 signed
/// grid cells.
CnfFormula random_formula(int k, int m, Rng& rng);

/// All grid formulas at k = 1 with exactly m clauses, one per multiset of
/// clause types (a clause over one variable is, up to symmetry, the count
/// of positive literals among its three positions).
std::vector<CnfFormula> all_k1_formulas(int m);

} // namespace rwlab
