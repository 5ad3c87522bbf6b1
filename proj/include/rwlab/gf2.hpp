#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rwlab/bitvec.hpp"
#include "rwlab/graph.hpp"

namespace rwlab {

/// Dense 0/1 matrix over GF(2); rows are bit vectors, bits at column
/// indices >= n_cols stay zero.
struct GF2Matrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<BitVec> rows;

    static GF2Matrix from_rows(std::vector<BitVec> rows, std::size_t n_cols);
};

/// Rank over GF(2) by word-parallel Gaussian elimination on a copy.
std::size_t gf2_rank(const GF2Matrix& m);
std::size_t gf2_rank(std::vector<BitVec> rows); // consumes the copy

/// Biadjacency matrix of g[a, b]: one row per vertex of a, one column per
/// vertex of b (in the given orders).
GF2Matrix cut_matrix(const Graph& g, std::span<const int> a, std::span<const int> b);

/// F2-rank of the biadjacency matrix of g[a, b]; symmetric in (a, b).
/// Throws InputError when a and b overlap.
std::size_t cut_rank(const Graph& g, std::span<const int> a, std::span<const int> b);

struct NeighborhoodCountResult {
    std::uint64_t count = 0;
    bool saturated = false; // closure enumeration stopped at the cap
};

inline constexpr std::size_t kNeighborhoodSideLimit = 24;
inline constexpr std::uint64_t kClosureCap = std::uint64_t{1} << 20;

/// |{N(X) ∩ b : X ⊆ a}| via the union-closure of the single-vertex
/// neighborhoods; work is proportional to the answer, not to 2^|a|.
/// Never throws; reports saturation when the closure exceeds `cap`.
NeighborhoodCountResult neighborhood_closure_count(const Graph& g, std::span<const int> a,
                                                   std::span<const int> b,
                                                   std::uint64_t cap = kClosureCap);

/// Strict variant: |a| beyond `limit` is tolerated as long as the closure
/// stays under `cap`; a saturated closure raises ResourceLimitError
/// identifying the cut.
std::uint64_t neighborhood_count(const Graph& g, std::span<const int> a, std::span<const int> b,
                                 std::size_t limit = kNeighborhoodSideLimit,
                                 std::uint64_t cap = kClosureCap);

} // namespace rwlab
