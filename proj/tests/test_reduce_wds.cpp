#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include "rwlab/oracles.hpp"
#include "rwlab/reduce_wds.hpp"
#include "rwlab/sampling.hpp"
#include "support/brute.hpp"

using namespace rwlab;

namespace {

CnfFormula k1_formula(std::initializer_list<int> positives_per_clause) {
    CnfFormula f;
    f.k = 1;
    for (int positives : positives_per_clause) {
        std::vector<Literal> clause;
        for (int p = 0; p < 3; ++p) clause.push_back({1, 2, p < positives});
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

/// Decode the assignment spelled by the solution's selector choice of copy i.
Assignment decode_copy(const ReductionBundle& b, const std::vector<int>& witness, int copy) {
    Assignment f;
    f.k = b.meta.k;
    for (int v : witness) {
        const VertexLabel& l = b.instance.graph.label(v);
        if (l.kind != LabelKind::A || l.copy != copy) continue;
        std::uint32_t row_part = l.mask & ((1u << f.k) - 1);
        REQUIRE(row_part != 0);
        int row = std::countr_zero(row_part) + 1;
        for (int col = f.k + 1; col <= 2 * f.k; ++col)
            if ((l.mask >> (col - 1)) & 1) f.bits |= 1u << f.cell(row, col);
    }
    return f;
}

} // namespace

TEST_CASE("instance shape, weights and target") {
    CnfFormula phi = k1_formula({3, 0});
    ReductionBundle b = build_wds_instance(phi);
    SUBCASE("sixteen vertices at k=1, m=2") {
        CHECK(b.instance.graph.n() == 16);
        CHECK(b.meta.extra.at("vertex_count") == 16);
        CHECK(b.target == 14);
        CHECK(b.sense == Sense::Min);
        CHECK(b.width_bound == 6);
    }
    SUBCASE("sentinel exceeds the total finite weight") {
        std::uint64_t sentinel = b.meta.extra.at("sentinel").get<std::uint64_t>();
        std::uint64_t finite = 0;
        for (int v = 0; v < b.instance.graph.n(); ++v)
            if (b.instance.weight(v) != sentinel) finite += b.instance.weight(v);
        CHECK(sentinel == finite + 1);
        // sentinels sit exactly on the matched layer and the block closers
        for (int v = 0; v < b.instance.graph.n(); ++v) {
            LabelKind kind = b.instance.graph.label(v).kind;
            bool is_sentinel = kind == LabelKind::BHat || kind == LabelKind::Aux;
            CHECK((b.instance.weight(v) == sentinel) == is_sentinel);
        }
    }
    SUBCASE("probe layers are matched for every subset") {
        for (std::uint32_t t = 0; t < 4; ++t)
            CHECK(b.instance.graph.has_edge(b.instance.graph.index_of(VertexLabel::b(1, t)),
                                            b.instance.graph.index_of(VertexLabel::b_hat(1, t))));
    }
}

TEST_CASE("domination threshold tracks satisfiability for every one-variable formula") {
    for (int m = 2; m <= 3; ++m) {
        for (const CnfFormula& phi : all_k1_formulas(m)) {
            bool sat = sat_enumerate(phi).satisfiable;
            ReductionBundle b = build_wds_instance(phi);
            SolveResult r = min_weight_dominating_set(b.instance);
            CAPTURE(m);
            CHECK(sat == meets_target(b, r.value));
            if (sat) CHECK(r.value == b.target);
        }
    }
}

TEST_CASE("optimal solutions at the target have the expected structure") {
    for (const CnfFormula& phi : {k1_formula({3}), k1_formula({3, 3}), k1_formula({1, 2})}) {
        if (!sat_enumerate(phi).satisfiable) continue;
        ReductionBundle b = build_wds_instance(phi);
        SolveResult r = min_weight_dominating_set(b.instance);
        REQUIRE(r.value == b.target);
        const Graph& g = b.instance.graph;
        std::uint64_t sentinel = b.meta.extra.at("sentinel").get<std::uint64_t>();

        // no sentinel vertex, exactly one selector per block
        std::map<std::pair<int, int>, int> per_block;
        for (int v : r.witness) {
            CHECK(b.instance.weight(v) != sentinel);
            const VertexLabel& l = g.label(v);
            if (l.kind == LabelKind::A)
                per_block[{l.copy, std::countr_zero(l.mask) + 1}]++;
        }
        for (int i = 1; i <= b.meta.m; ++i)
            for (int j = 1; j <= b.meta.k; ++j) CHECK(per_block[{i, j}] == 1);

        // every copy decodes to the same satisfying assignment
        Assignment first = decode_copy(b, r.witness, 1);
        CHECK(first.satisfies(phi));
        for (int i = 2; i <= b.meta.m; ++i) CHECK(decode_copy(b, r.witness, i) == first);

        // probe part of the witness = probes unseen by the selector choice
        for (int i = 1; i < b.meta.m; ++i) {
            std::set<int> expected;
            for (std::uint32_t t = 0; t < 4; ++t) {
                int bt = g.index_of(VertexLabel::b(i, t));
                bool dominated = false;
                for (int v : r.witness)
                    if (g.label(v).kind == LabelKind::A && g.label(v).copy == i &&
                        g.has_edge(v, bt))
                        dominated = true;
                if (!dominated) expected.insert(bt);
            }
            std::set<int> got;
            for (int v : r.witness)
                if (g.label(v).kind == LabelKind::B && g.label(v).copy == i) got.insert(v);
            CHECK(got == expected);
        }
    }
}

TEST_CASE("every optimal solution decodes consistently (full scan at m=2)") {
    CnfFormula phi = k1_formula({3, 1});
    REQUIRE(sat_enumerate(phi).satisfiable);
    ReductionBundle b = build_wds_instance(phi);
    REQUIRE(b.instance.graph.n() == 16);
    std::uint64_t best = brute::min_weight_dominating_set(b.instance);
    REQUIRE(best == b.target);
    std::uint64_t sentinel = b.meta.extra.at("sentinel").get<std::uint64_t>();
    int optima = 0;
    for (std::uint64_t set = 0; set < (std::uint64_t{1} << 16); ++set) {
        if (brute::set_weight(b.instance, set) != best) continue;
        if (!brute::subset_dominating(b.instance.graph, set)) continue;
        ++optima;
        std::vector<int> witness;
        for (int v = 0; v < 16; ++v)
            if ((set >> v) & 1) witness.push_back(v);
        for (int v : witness) CHECK(b.instance.weight(v) != sentinel);
        Assignment f1 = decode_copy(b, witness, 1);
        CHECK(f1.satisfies(phi));
        CHECK(decode_copy(b, witness, 2) == f1);
    }
    CHECK(optima >= 1);
}

TEST_CASE("the bundled order certifies width 4k+2") {
    Rng rng(103);
    for (int k = 1; k <= 2; ++k)
        for (int m = 1; m <= 3; ++m) {
            ReductionBundle b = build_wds_instance(random_formula(k, m, rng));
            WidthResult w = linear_width(b.instance.graph, b.order, CutMeasure::CutRank);
            CHECK(w.width <= static_cast<std::uint64_t>(b.width_bound));
        }
}

TEST_CASE("single-clause instances degenerate but stay sound") {
    for (const CnfFormula& phi : all_k1_formulas(1)) {
        ReductionBundle b = build_wds_instance(phi);
        CHECK(b.meta.extra.value("degenerate", false));
        CHECK(b.target == 6);
        bool sat = sat_enumerate(phi).satisfiable;
        SolveResult r = min_weight_dominating_set(b.instance);
        CHECK(sat == meets_target(b, r.value));
    }
}
