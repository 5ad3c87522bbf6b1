#include <doctest.h>

#include <cmath>
#include <set>

#include "rwlab/oracles.hpp"
#include "rwlab/separation.hpp"
#include "rwlab/universal_cut.hpp"
#include "support/brute.hpp"

using namespace rwlab;

TEST_CASE("separation instance shape") {
    SUBCASE("k=1 has six vertices") {
        SeparationInstance inst = build_separation_instance(1);
        CHECK(inst.graph.n() == 6);
        CHECK(inst.center.size() == 2);
        CHECK(inst.blocks.size() == 1);
        CHECK(inst.width_bound == 3);
    }
    SUBCASE("k=2 has 72 vertices and certified width 5") {
        SeparationInstance inst = build_separation_instance(2);
        CHECK(inst.graph.n() == 72);
        CHECK(inst.blocks.size() == 4);
        WidthResult w = linear_width(inst.graph, inst.order, CutMeasure::CutRank);
        CHECK(w.width <= 5);
        BranchTree cat = caterpillar_from_order(inst.order);
        CHECK(branch_width(inst.graph, cat, CutMeasure::CutRank).width <= 5);
    }
    SUBCASE("probe blocks are cliques, mutually non-adjacent") {
        SeparationInstance inst = build_separation_instance(2);
        const Graph& g = inst.graph;
        for (std::size_t j = 0; j < inst.blocks.size(); ++j) {
            const auto& block = inst.blocks[j];
            for (std::size_t x = 0; x < block.size(); ++x)
                for (std::size_t y = x + 1; y < block.size(); ++y)
                    CHECK(g.has_edge(block[x], block[y]));
            for (std::size_t j2 = j + 1; j2 < inst.blocks.size(); ++j2)
                for (int u : block)
                    for (int v : inst.blocks[j2]) CHECK_FALSE(g.has_edge(u, v));
        }
    }
    SUBCASE("the guard rejects oversized k") {
        CHECK_THROWS_AS(build_separation_instance(4), ResourceLimitError);
        CHECK_THROWS_AS(build_separation_instance(0), InputError);
    }
}

TEST_CASE("center-to-block cut measurements") {
    SUBCASE("k=1: rank 2, three independent-subset neighborhoods") {
        SeparationInstance inst = build_separation_instance(1);
        CutDimensionReport r =
            measure_cut_boolean_dimension(inst.graph, inst.center, inst.blocks[0]);
        CHECK(r.rank == 2);
        CHECK(r.independent_count == 3);
        CHECK_FALSE(r.independent_saturated);
    }
    SUBCASE("k=2: rank 4 but 25 independent-subset neighborhoods") {
        SeparationInstance inst = build_separation_instance(2);
        CutDimensionReport r =
            measure_cut_boolean_dimension(inst.graph, inst.center, inst.blocks[0]);
        CHECK(r.rank == 4);
        CHECK(r.independent_count == 25);
        CHECK(r.log2_independent > 4.0);
        CHECK(r.log2_independent == doctest::Approx(std::log2(25.0)));
    }
    SUBCASE("empty side") {
        SeparationInstance inst = build_separation_instance(1);
        std::vector<int> empty;
        CutDimensionReport r =
            measure_cut_boolean_dimension(inst.graph, empty, inst.blocks[0]);
        CHECK(r.rank == 0);
        CHECK(r.neighborhood_count == 1);
        CHECK(r.independent_count == 1);
    }
}

TEST_CASE("distinct independent selections have distinct neighborhoods in every block") {
    for (int k = 1; k <= 2; ++k) {
        SeparationInstance inst = build_separation_instance(k);
        const Graph& g = inst.graph;
        for (const auto& block : inst.blocks) {
            BitVec block_mask = BitVec::from_indices(block);
            std::set<BitVec> seen;
            std::size_t subsets = 0;
            // enumerate one-selector-per-clique-block subsets
            std::vector<int> cur;
            auto rec = [&](auto&& self, std::size_t idx) -> void {
                ++subsets;
                BitVec nb = g.neighborhood(BitVec::from_indices(cur));
                nb &= block_mask;
                CHECK(seen.insert(nb).second);
                for (std::size_t i = idx; i < inst.center.size(); ++i) {
                    bool clash = false;
                    for (int v : cur)
                        if (g.has_edge(inst.center[i], v)) clash = true;
                    if (!clash) {
                        cur.push_back(inst.center[i]);
                        self(self, i + 1);
                        cur.pop_back();
                    }
                }
            };
            rec(rec, 0);
            std::size_t expected = 1;
            for (int i = 0; i < k; ++i) expected *= (std::size_t{1} << k) + 1;
            CHECK(subsets == expected);
            CHECK(seen.size() == expected);
        }
    }
}

TEST_CASE("a bipartition cutting every block carries a large induced matching") {
    for (int k = 1; k <= 2; ++k) {
        SeparationInstance inst = build_separation_instance(k);
        // split every probe clique in half, centers on the left
        std::set<int> left(inst.center.begin(), inst.center.end());
        std::vector<std::pair<int, int>> matching;
        for (const auto& block : inst.blocks) {
            std::size_t half = block.size() / 2;
            for (std::size_t i = 0; i < half; ++i) left.insert(block[i]);
            int u = block[half - 1]; // left side
            int v = block[half];     // right side
            matching.emplace_back(std::min(u, v), std::max(u, v));
        }
        CHECK(matching.size() == static_cast<std::size_t>(k * k));
        CHECK(is_induced_matching(inst.graph, matching));
        for (auto [u, v] : matching) {
            CHECK(left.count(u) == 1);
            CHECK(left.count(v) == 0);
        }
    }
}

TEST_CASE("independent-subset enumeration saturates gracefully") {
    SeparationInstance inst = build_separation_instance(2);
    CutDimensionReport r =
        measure_cut_boolean_dimension(inst.graph, inst.center, inst.blocks[0], kClosureCap, 10);
    CHECK(r.independent_saturated);
    CHECK(r.rank == 4); // rank still reported
}
