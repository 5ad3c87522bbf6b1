#pragma once

// Test-only brute-force oracles. These stay independent of the solver
// implementations they are used to check: plain subset enumeration, no
// bounding, no shared code paths.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "rwlab/bitvec.hpp"
#include "rwlab/formula.hpp"
#include "rwlab/graph.hpp"

namespace brute {

using rwlab::BitVec;
using rwlab::Graph;
using rwlab::WeightedGraph;

inline bool subset_independent(const Graph& g, std::uint64_t set) {
    for (int u = 0; u < g.n(); ++u) {
        if (!((set >> u) & 1)) continue;
        for (int v = u + 1; v < g.n(); ++v)
            if (((set >> v) & 1) && g.has_edge(u, v)) return false;
    }
    return true;
}

inline std::uint64_t set_weight(const WeightedGraph& g, std::uint64_t set) {
    std::uint64_t w = 0;
    for (int v = 0; v < g.graph.n(); ++v)
        if ((set >> v) & 1) w += g.weight(v);
    return w;
}

inline std::uint64_t max_weight_independent_set(const WeightedGraph& g) {
    int n = g.graph.n();
    std::uint64_t best = 0;
    for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set)
        if (subset_independent(g.graph, set)) best = std::max(best, set_weight(g, set));
    return best;
}

inline std::uint64_t max_independent_set_size(const Graph& g) {
    WeightedGraph wg;
    wg.graph = g;
    wg.weights.assign(static_cast<std::size_t>(g.n()), 1);
    return brute::max_weight_independent_set(wg);
}

inline bool subset_dominating(const Graph& g, std::uint64_t set) {
    for (int v = 0; v < g.n(); ++v) {
        if ((set >> v) & 1) continue;
        bool covered = false;
        for (int u = 0; u < g.n(); ++u)
            if (((set >> u) & 1) && g.has_edge(u, v)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

inline std::uint64_t min_weight_dominating_set(const WeightedGraph& g) {
    int n = g.graph.n();
    std::uint64_t best = ~std::uint64_t{0};
    for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set)
        if (subset_dominating(g.graph, set)) best = std::min(best, set_weight(g, set));
    return best;
}

/// Maximum induced matching by enumerating subsets of the edge list.
inline std::uint64_t max_induced_matching(const Graph& g) {
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    std::uint64_t best = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
        std::vector<std::pair<int, int>> chosen;
        for (int e = 0; e < m; ++e)
            if ((pick >> e) & 1) chosen.push_back(edges[static_cast<std::size_t>(e)]);
        bool ok = true;
        for (std::size_t i = 0; i < chosen.size() && ok; ++i)
            for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) {
                int ends[4] = {chosen[i].first, chosen[i].second, chosen[j].first,
                               chosen[j].second};
                for (int x = 0; x < 2 && ok; ++x)
                    for (int y = 2; y < 4 && ok; ++y)
                        if (ends[x] == ends[y] || g.has_edge(ends[x], ends[y])) ok = false;
            }
        if (ok) best = std::max<std::uint64_t>(best, chosen.size());
    }
    return best;
}

inline bool subset_acyclic(const Graph& g, std::uint64_t set) {
    // union-find
    std::vector<int> parent(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (int u = 0; u < g.n(); ++u) {
        if (!((set >> u) & 1)) continue;
        for (int v = u + 1; v < g.n(); ++v) {
            if (!((set >> v) & 1) || !g.has_edge(u, v)) continue;
            int a = find(u), b = find(v);
            if (a == b) return false;
            parent[static_cast<std::size_t>(a)] = b;
        }
    }
    return true;
}

/// Maximum induced forest by scanning subsets in descending size.
inline std::uint64_t max_induced_forest(const Graph& g) {
    int n = g.n();
    for (int size = n; size >= 0; --size) {
        for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set) {
            if (std::popcount(set) != size) continue;
            if (subset_acyclic(g, set)) return static_cast<std::uint64_t>(size);
        }
    }
    return 0;
}

/// |{N(X) ∩ b : X ⊆ a}| by enumerating all 2^|a| subsets.
inline std::uint64_t neighborhood_count(const Graph& g, const std::vector<int>& a,
                                        const std::vector<int>& b) {
    BitVec b_mask = BitVec::from_indices(b);
    std::set<BitVec> seen;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << a.size()); ++pick) {
        BitVec x;
        for (std::size_t i = 0; i < a.size(); ++i)
            if ((pick >> i) & 1) x.set(static_cast<std::size_t>(a[i]));
        BitVec nb = g.neighborhood(x);
        nb &= b_mask;
        seen.insert(nb);
    }
    return seen.size();
}

/// Satisfying-assignment count of a raw DIMACS clause list.
inline std::uint64_t raw_sat_count(const rwlab::RawCnf& cnf) {
    std::uint64_t count = 0;
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << cnf.n_vars); ++f) {
        bool all = true;
        for (const auto& clause : cnf.clauses) {
            bool sat = false;
            for (int lit : clause) {
                int var = std::abs(lit) - 1;
                bool val = (f >> var) & 1;
                if (val == (lit > 0)) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) ++count;
    }
    return count;
}

/// Number of XOR-closed vector sets containing 0 in GF(2)^k: the subspace
/// count that the family sizes must reproduce.
inline std::uint64_t subspace_count(int k) {
    std::uint32_t vectors = 1u << k;
    std::uint64_t count = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << vectors); ++pick) {
        if (!(pick & 1)) continue; // must contain the zero vector
        bool closed = true;
        for (std::uint32_t x = 0; x < vectors && closed; ++x) {
            if (!((pick >> x) & 1)) continue;
            for (std::uint32_t y = x; y < vectors && closed; ++y)
                if (((pick >> y) & 1) && !((pick >> (x ^ y)) & 1)) closed = false;
        }
        if (closed) ++count;
    }
    return count;
}

/// All masks t ⊆ [k] orthogonal (even intersection) to every generator.
inline std::vector<std::uint32_t> orthogonal_complement(const std::vector<std::uint32_t>& gens,
                                                        int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t t = 0; t < (1u << k); ++t) {
        bool ortho = true;
        for (std::uint32_t s : gens)
            if (std::popcount(s & t) % 2 == 1) {
                ortho = false;
                break;
            }
        if (ortho) out.push_back(t);
    }
    return out;
}

} // namespace brute
