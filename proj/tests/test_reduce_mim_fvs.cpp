#include <doctest.h>

#include "rwlab/oracles.hpp"
#include "rwlab/reduce_is.hpp"
#include "rwlab/reduce_mim_fvs.hpp"
#include "rwlab/sampling.hpp"
#include "support/brute.hpp"

using namespace rwlab;

namespace {

Graph complete_graph(int n) {
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(VertexLabel::plain(v));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(VertexLabel::plain(v));
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

TwinPairBundles doubled(const Graph& g, std::uint64_t kappa) {
    return duplicate_with_true_twins(g, LinearOrder::identity(g.n()), g.n(), kappa, BundleMeta{});
}

} // namespace

TEST_CASE("doubling structure") {
    SUBCASE("a single vertex becomes a single edge") {
        Graph g;
        g.add_vertex(VertexLabel::plain(0));
        TwinPairBundles pair = doubled(g, 1);
        CHECK(pair.mim.instance.graph.n() == 2);
        CHECK(pair.mim.instance.graph.edge_count() == 1);
        CHECK(max_induced_matching(pair.mim.instance.graph).size == 1);
        CHECK(max_induced_forest(pair.fvs.instance.graph).value == 2);
    }
    SUBCASE("each original edge becomes four, plus one twin edge per vertex") {
        Graph g = cycle_graph(5);
        TwinPairBundles pair = doubled(g, 2);
        const Graph& d = pair.mim.instance.graph;
        CHECK(d.n() == 10);
        CHECK(d.edge_count() == 4 * 5 + 5);
        for (int v = 0; v < 5; ++v) {
            CHECK(d.has_edge(2 * v, 2 * v + 1));
            VertexLabel hat = g.label(v);
            hat.hat = true;
            CHECK(d.label(2 * v + 1) == hat);
        }
    }
    SUBCASE("order interleaves twins and widens the certificate by one") {
        Rng rng(97);
        for (int round = 0; round < 20; ++round) {
            int n = 2 + static_cast<int>(rng_below(rng, 9)); // 2..10
            Graph g = random_graph(n, 50, rng);
            LinearOrder ord = LinearOrder::identity(n);
            for (std::size_t i = static_cast<std::size_t>(n); i > 1; --i)
                std::swap(ord.perm[i - 1], ord.perm[rng_below(rng, i)]);
            std::uint64_t base = linear_width(g, ord, CutMeasure::CutRank).width;
            TwinPairBundles pair = duplicate_with_true_twins(g, ord, static_cast<int>(base), 1,
                                                             BundleMeta{});
            std::uint64_t after =
                linear_width(pair.mim.instance.graph, pair.mim.order, CutMeasure::CutRank).width;
            CHECK(after <= base + 1);
            CHECK(pair.mim.width_bound == static_cast<int>(base) + 1);
        }
    }
}

TEST_CASE("matching and forest targets track the independence number") {
    SUBCASE("triangle") {
        Graph k3 = complete_graph(3);
        TwinPairBundles pair = doubled(k3, 1);
        CHECK(max_induced_matching(pair.mim.instance.graph).size == 1);
        CHECK(max_induced_forest(pair.fvs.instance.graph).value == 2);
        CHECK(pair.fvs.meta.extra.at("fvs_budget") == 4);
    }
    SUBCASE("5-cycle") {
        TwinPairBundles pair = doubled(cycle_graph(5), 2);
        CHECK(max_induced_matching(pair.mim.instance.graph).size == 2);
        CHECK(max_induced_forest(pair.fvs.instance.graph).value == 4);
    }
    SUBCASE("random graphs, against the brute independence number") {
        Rng rng(101);
        for (int round = 0; round < 25; ++round) {
            int n = 1 + static_cast<int>(rng_below(rng, 8)); // 1..8
            Graph g = random_graph(n, 50, rng);
            std::uint64_t alpha = brute::max_independent_set_size(g);
            TwinPairBundles pair = doubled(g, alpha);
            CHECK(max_induced_matching(pair.mim.instance.graph).size == alpha);
            CHECK(max_induced_forest(pair.fvs.instance.graph).value == 2 * alpha);
        }
    }
}

TEST_CASE("pipeline composition at k=1") {
    CnfFormula phi;
    phi.k = 1;
    phi.clauses.push_back({Literal{1, 2, true}});
    ReductionBundle unit = make_unweighted(build_is_instance(phi));
    TwinPairBundles pair = duplicate_with_true_twins(unit);
    CHECK(pair.mim.target == unit.target);
    CHECK(pair.fvs.target == 2 * unit.target);
    CHECK(pair.mim.instance.graph.n() == 2 * unit.instance.graph.n());
    int n = pair.mim.instance.graph.n();
    CHECK(max_induced_matching(pair.mim.instance.graph, n).size == pair.mim.target);
    CHECK(max_induced_forest(pair.fvs.instance.graph, n).value == pair.fvs.target);
}

TEST_CASE("doubling rejects weighted bundles and oversized targets") {
    Graph g = complete_graph(3);
    CHECK_THROWS_AS(doubled(g, 4), InputError); // kappa beyond |V|
    ReductionBundle weighted = build_is_instance([] {
        CnfFormula f;
        f.k = 1;
        f.clauses.push_back({Literal{1, 2, true}});
        return f;
    }());
    CHECK_THROWS_AS(duplicate_with_true_twins(weighted), InputError);
}
