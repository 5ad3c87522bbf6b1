#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "rwlab/universal_cut.hpp"
#include "support/brute.hpp"

using namespace rwlab;

namespace {

/// Membership by trying every injective pivot assignment, straight from
/// the echelon characterization: distinct pivots, each the minimum of its
/// member, and no member touching a foreign pivot.
bool brute_membership(const Collection& s) {
    std::size_t n = s.size();
    std::vector<int> idx(n);
    auto full = [&](auto&& self, std::size_t i, std::uint32_t pmask) -> bool {
        if (i == n) {
            for (std::size_t j = 0; j < n; ++j)
                if ((s.members[j] & pmask) != (1u << (idx[j] - 1))) return false;
            return true;
        }
        for (int alpha = 1; alpha <= s.ground; ++alpha) {
            std::uint32_t bit = 1u << (alpha - 1);
            if (pmask & bit) continue;
            std::uint32_t m = s.members[i];
            if (!(m & bit)) continue;
            if ((m & (bit - 1)) != 0) continue; // alpha must be min(m)
            idx[i] = alpha;
            if (self(self, i + 1, pmask | bit)) return true;
        }
        return false;
    };
    return full(full, 0, 0);
}

} // namespace

TEST_CASE("universal cut construction") {
    SUBCASE("k=1 has a single edge") {
        UniversalCut r1 = build_universal_cut(1);
        CHECK(r1.graph.n() == 4);
        CHECK(r1.graph.edge_count() == 1);
        CHECK(r1.graph.has_edge(r1.a_index(1), r1.b_index(1)));
    }
    SUBCASE("k=2 parity rule spot checks") {
        UniversalCut r2 = build_universal_cut(2);
        CHECK(r2.graph.n() == 8);
        CHECK(r2.graph.has_edge(r2.a_index(0b11), r2.b_index(0b01)));
        CHECK(r2.graph.has_edge(r2.a_index(0b11), r2.b_index(0b10)));
        CHECK_FALSE(r2.graph.has_edge(r2.a_index(0b11), r2.b_index(0b11)));
    }
    SUBCASE("empty-set vertices stay isolated") {
        for (int k = 1; k <= 4; ++k) {
            UniversalCut cut = build_universal_cut(k);
            CHECK(cut.graph.degree(cut.a_index(0)) == 0);
            CHECK(cut.graph.degree(cut.b_index(0)) == 0);
        }
    }
    SUBCASE("k=0 is rejected") { CHECK_THROWS_AS(build_universal_cut(0), InputError); }
}

TEST_CASE("collection extension") {
    SUBCASE("extending the empty collection") {
        Collection empty{1, {}};
        auto out = extend_collection(empty);
        REQUIRE(out.size() == 2);
        std::set<Collection> got(out.begin(), out.end());
        CHECK(got.count(Collection{2, {0b10}}) == 1); // {{2}}
        CHECK(got.count(Collection{2, {}}) == 1);     // ∅
    }
    SUBCASE("extending {{1}}") {
        auto out = extend_collection(Collection{1, {0b1}});
        std::set<Collection> got(out.begin(), out.end());
        REQUIRE(got.size() == 3);
        CHECK(got.count(Collection{2, {0b01}}) == 1);       // {{1}}
        CHECK(got.count(Collection{2, {0b11}}) == 1);       // {{1,2}}
        CHECK(got.count(Collection{2, {0b01, 0b10}}) == 1); // {{1},{2}}
    }
    SUBCASE("always 2^l + 1 distinct results") {
        for (const Collection& s : enumerate_family(3)) {
            auto out = extend_collection(s);
            std::set<Collection> got(out.begin(), out.end());
            CHECK(got.size() == (std::size_t{1} << s.size()) + 1);
            CHECK(out.size() == got.size());
        }
    }
}

TEST_CASE("family sizes match the subspace-count oracle") {
    CHECK(enumerate_family(1).size() == 2);
    CHECK(enumerate_family(2).size() == 5);
    CHECK(enumerate_family(3).size() == 16);
    CHECK(enumerate_family(4).size() == 67);
    for (int k = 1; k <= 4; ++k)
        CHECK(enumerate_family(k).size() == brute::subspace_count(k));
    CHECK_THROWS_AS(enumerate_family(7), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_family(5, 4), ResourceLimitError);
}

TEST_CASE("recursive family equals echelon membership, exhaustively") {
    for (int k = 1; k <= 3; ++k) {
        std::vector<Collection> by_test;
        std::uint32_t n_masks = 1u << k;
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n_masks); ++pick) {
            Collection c;
            c.ground = k;
            for (std::uint32_t mask = 0; mask < n_masks; ++mask)
                if ((pick >> mask) & 1) c.members.push_back(mask);
            c.normalize();
            bool fast = is_in_family(c).in_family;
            CHECK(fast == brute_membership(c));
            if (fast) by_test.push_back(std::move(c));
        }
        std::sort(by_test.begin(), by_test.end());
        CHECK(by_test == enumerate_family(k));
    }
}

TEST_CASE("membership pivots") {
    SUBCASE("{{1},{2}} is in the family with pivots 1,2") {
        auto r = is_in_family(Collection{2, {0b01, 0b10}});
        CHECK(r.in_family);
        CHECK(r.pivots == std::vector<int>{1, 2});
    }
    SUBCASE("{{1,2},{2}} is rejected") {
        CHECK_FALSE(is_in_family(Collection{2, {0b11, 0b10}}).in_family);
    }
    SUBCASE("the empty collection is vacuously a member") {
        CHECK(is_in_family(Collection{3, {}}).in_family);
    }
    SUBCASE("a member equal to the empty set disqualifies") {
        CHECK_FALSE(is_in_family(Collection{2, {0b00}}).in_family);
    }
}

TEST_CASE("witness vectors flip exactly the requested members") {
    SUBCASE("worked examples") {
        Collection s{2, {0b01, 0b10}};
        CHECK(witness_vector(s, Collection{2, {0b01}}) == 0b01);
        CHECK(witness_vector(s, Collection{2, {}}) == 0);
        Collection s2{3, {0b101, 0b110}}; // {1,3}, {2,3}
        CHECK(witness_vector(s2, s2) == 0b011);
    }
    SUBCASE("postcondition for every pair at k <= 3, against a full scan") {
        for (int k = 1; k <= 3; ++k) {
            for (const Collection& s : enumerate_family(k)) {
                for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << s.size()); ++pick) {
                    Collection x{k, {}};
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if ((pick >> i) & 1) x.members.push_back(s.members[i]);
                    std::uint32_t t = witness_vector(s, x);
                    // exhaustive scan over all candidate probes
                    bool found_ours = false;
                    for (std::uint32_t cand = 0; cand < (1u << k); ++cand) {
                        bool works = true;
                        for (std::uint32_t m : s.members) {
                            bool odd = std::popcount(m & cand) % 2 == 1;
                            if (odd != x.contains(m)) {
                                works = false;
                                break;
                            }
                        }
                        if (cand == t) {
                            found_ours = works;
                            if (!works) break;
                        }
                    }
                    CHECK(found_ours);
                }
            }
        }
    }
    SUBCASE("rejects non-members and foreign sub-collections") {
        CHECK_THROWS_AS(witness_vector(Collection{2, {0b11, 0b10}}, Collection{2, {}}),
                        InputError);
        CHECK_THROWS_AS(witness_vector(Collection{2, {0b01}}, Collection{2, {0b10}}), InputError);
    }
}

TEST_CASE("family neighborhoods are pairwise distinct") {
    for (int k = 1; k <= 3; ++k) {
        auto report = verify_distinct_neighborhoods(k);
        CHECK(report.family_size == enumerate_family(k).size());
        CHECK(report.ok());
    }
    SUBCASE("sharded runs agree with the single-threaded scan") {
        auto seq = verify_distinct_neighborhoods(4, 1);
        auto par = verify_distinct_neighborhoods(4, 4);
        CHECK(seq.ok());
        CHECK(par.ok());
        CHECK(seq.family_size == par.family_size);
        CHECK(seq.pairs_checked == par.pairs_checked);
    }
}

TEST_CASE("family neighborhood sizes follow the closed form") {
    for (int k = 1; k <= 4; ++k) CHECK(verify_neighborhood_size(k).ok());
}

TEST_CASE("non-neighbors are exactly the orthogonal complement") {
    for (int k = 1; k <= 3; ++k) {
        UniversalCut cut = build_universal_cut(k);
        for (const Collection& s : enumerate_family(k)) {
            BitVec a_set;
            for (std::uint32_t m : s.members) a_set.set(static_cast<std::size_t>(cut.a_index(m)));
            BitVec nbhd = cut.graph.neighborhood(a_set);
            BitVec expected;
            for (std::uint32_t t : brute::orthogonal_complement(s.members, k))
                expected.set(static_cast<std::size_t>(cut.b_index(t)));
            // B minus the complement must be the neighborhood
            for (std::uint32_t t = 0; t < (1u << k); ++t) {
                std::size_t idx = static_cast<std::size_t>(cut.b_index(t));
                CHECK(nbhd.test(idx) == !expected.test(idx));
            }
        }
    }
}
