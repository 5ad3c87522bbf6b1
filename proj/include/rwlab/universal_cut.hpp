#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rwlab/formula.hpp"
#include "rwlab/graph.hpp"

namespace rwlab {

inline constexpr int kFamilyGuard = 6;    // library-level enumeration guard
inline constexpr int kFamilyCliGuard = 4; // default CLI guard

/// The universal k-rank cut: bipartite graph on {a_s} x {b_t} for
/// s, t ⊆ [k], with an edge exactly when |s ∩ t| is odd. It is the
/// maximal twin-free cut of rank k.
struct UniversalCut {
    int k = 0;
    Graph graph; // a-side first (masks ascending), then b-side

    int side_size() const { return 1 << k; }
    int a_index(std::uint32_t mask) const { return static_cast<int>(mask); }
    int b_index(std::uint32_t mask) const { return side_size() + static_cast<int>(mask); }

    std::vector<int> a_side() const;
    std::vector<int> b_side() const;
    std::vector<int> a_of(const Collection& s) const; // A[S]
};

UniversalCut build_universal_cut(int k);

/// Ground-extension step: from S over [k] produce the collections over
/// [k+1] consisting of S plus the new member {k+1}, and every way of
/// optionally adding k+1 to each existing member. Exactly 2^|S| + 1
/// results.
std::vector<Collection> extend_collection(const Collection& s);

/// The family of collections over [k] in bijection with the GF(2)
/// row-reduced echelon forms on k columns (equivalently, with the
/// subspaces of the k-dimensional GF(2) space). Sorted, duplicate-free.
std::vector<Collection> enumerate_family(int k, int guard = kFamilyGuard);

struct FamilyMembership {
    bool in_family = false;
    std::vector<int> pivots; // pivot element per member, aligned with members
};

/// Echelon-form membership test: every member must contain its own minimum
/// and no other member's minimum. Pivots are exactly those minima.
FamilyMembership is_in_family(const Collection& s);

/// The probe set t = {pivot of m : m ∈ x}; for every member m of s,
/// |m ∩ t| is odd exactly when m ∈ x. Throws InputError when s is not in
/// the family or x is not a sub-collection of s.
std::uint32_t witness_vector(const Collection& s, const Collection& x);

struct NeighborhoodCollision {
    Collection first, second;
};

struct DistinctNeighborhoodsReport {
    int k = 0;
    std::size_t family_size = 0;
    std::size_t pairs_checked = 0;
    std::vector<NeighborhoodCollision> collisions;
    bool ok() const { return collisions.empty(); }
};

/// Checks that A[S] has a different neighborhood in the universal cut for
/// every S in the family; collisions are report content, not errors.
DistinctNeighborhoodsReport verify_distinct_neighborhoods(int k, int threads = 1,
                                                          int guard = kFamilyGuard);

struct NeighborhoodSizeMismatch {
    Collection s;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
};

struct NeighborhoodSizeReport {
    int k = 0;
    std::size_t family_size = 0;
    std::vector<NeighborhoodSizeMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Checks |N(A[S])| = 2^k - 2^(k-|S|) for every S in the family.
NeighborhoodSizeReport verify_neighborhood_size(int k, int guard = kFamilyGuard);

} // namespace rwlab
