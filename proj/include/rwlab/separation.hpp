#pragma once

#include <span>
#include <vector>

#include "rwlab/decomposition.hpp"
#include "rwlab/gf2.hpp"
#include "rwlab/graph.hpp"

namespace rwlab {

inline constexpr int kSeparationGuard = 3;
inline constexpr std::uint64_t kIndependentEnumCap = std::uint64_t{1} << 20;

/// A graph whose rank-width stays at most 2k+1 while the number of
/// neighborhoods across its center cuts grows like 2^(k^2): a selector
/// center of k clique blocks attached to k^2 probe cliques, each wired by
/// the odd-intersection rule, with no edges between distinct probe blocks.
struct SeparationInstance {
    int k = 0;
    Graph graph;
    LinearOrder order; // center blocks first, then the probe cliques
    int width_bound = 0;
    std::vector<int> center;              // selector vertex indices
    std::vector<std::vector<int>> blocks; // probe clique indices per copy
};

SeparationInstance build_separation_instance(int k, int guard = kSeparationGuard);

struct CutDimensionReport {
    std::size_t rank = 0;
    std::uint64_t neighborhood_count = 0;
    bool neighborhood_saturated = false;
    std::uint64_t independent_count = 0; // neighborhoods of independent subsets only
    bool independent_saturated = false;
    double log2_neighborhoods = 0.0;
    double log2_independent = 0.0;
};

/// Per-cut comparison of rank against Boolean dimension: the GF(2) rank,
/// the full neighborhood count, and the count restricted to independent
/// subsets of a (enumerated by backtracking only over independent
/// extensions, so the work is proportional to the number of independent
/// sets). Saturation is reported, not thrown.
CutDimensionReport measure_cut_boolean_dimension(const Graph& g, std::span<const int> a,
                                                 std::span<const int> b,
                                                 std::uint64_t closure_cap = kClosureCap,
                                                 std::uint64_t enum_cap = kIndependentEnumCap);

} // namespace rwlab
