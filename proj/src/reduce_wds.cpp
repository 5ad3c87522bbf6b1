#include "rwlab/reduce_wds.hpp"

#include <bit>
#include <string>

#include "rwlab/errors.hpp"
#include "rwlab/util.hpp"

namespace rwlab {

ReductionBundle build_wds_instance(const CnfFormula& phi) {
    phi.validate();
    int k = phi.k;
    int m = phi.clause_count();
    if (m < 1) throw InputError("need at least one clause");
    if (2 * k > 16) throw ResourceLimitError("probe layer 2^(2k) too large for k=" + std::to_string(k));

    std::uint32_t probe_count = 1u << (2 * k);
    std::uint64_t selector_weight = (std::uint64_t{1} << (2 * k)) + 2;

    std::uint64_t selector_count =
        checked_mul(checked_mul(std::uint64_t{1} << k, static_cast<std::uint64_t>(k)),
                    static_cast<std::uint64_t>(m));
    std::uint64_t finite_total = checked_add(
        checked_add(checked_mul(selector_weight, selector_count),
                    checked_mul(static_cast<std::uint64_t>(m - 1), probe_count)),
        static_cast<std::uint64_t>(m));
    std::uint64_t sentinel = checked_add(finite_total, 1);

    ReductionBundle bundle;
    WeightedGraph& wg = bundle.instance;
    Graph& g = wg.graph;

    // Insertion follows the certified order:
    // A-block of copy 1, probe pair layer 1, A-block of copy 2, ...
    for (int i = 1; i <= m; ++i) {
        g.add_vertex(VertexLabel::clause(i, 0));
        wg.weights.push_back(1);
        for (int j = 1; j <= k; ++j) {
            auto block = row_block_masks(j, k);
            for (std::uint32_t s : block) {
                g.add_vertex(VertexLabel::a(i, s));
                wg.weights.push_back(selector_weight);
            }
            int aux = g.add_vertex(VertexLabel::aux(i, static_cast<std::uint32_t>(j)));
            wg.weights.push_back(sentinel);
            // K_{i,j}: the row block plus its auxiliary vertex is a clique
            for (std::size_t x = 0; x < block.size(); ++x) {
                g.add_edge(aux, g.index_of(VertexLabel::a(i, block[x])));
                for (std::size_t y = x + 1; y < block.size(); ++y)
                    g.add_edge(VertexLabel::a(i, block[x]), VertexLabel::a(i, block[y]));
            }
        }
        if (i < m) {
            for (std::uint32_t t = 0; t < probe_count; ++t) {
                int b = g.add_vertex(VertexLabel::b(i, t));
                wg.weights.push_back(1);
                int bh = g.add_vertex(VertexLabel::b_hat(i, t));
                wg.weights.push_back(sentinel);
                g.add_edge(b, bh);
            }
        }
    }

    for (int i = 1; i <= m; ++i) {
        // clause vertex sees the selectors compatible with some literal
        auto clause = phi.padded_clause(i - 1);
        int c = g.index_of(VertexLabel::clause(i, 0));
        for (const Literal& lit : clause)
            for (std::uint32_t s : literal_sets(lit, k).members)
                g.add_edge(c, g.index_of(VertexLabel::a(i, s)));

        for (int j = 1; j <= k; ++j) {
            for (std::uint32_t s : row_block_masks(j, k)) {
                int a = g.index_of(VertexLabel::a(i, s));
                for (std::uint32_t t = 0; t < probe_count; ++t) {
                    if (std::popcount(s & t) % 2 != 1) continue;
                    if (i < m) g.add_edge(a, g.index_of(VertexLabel::b(i, t)));
                    if (i > 1) g.add_edge(a, g.index_of(VertexLabel::b_hat(i - 1, t)));
                }
            }
        }
    }

    bundle.target = checked_add(
        checked_mul(checked_mul(selector_weight, static_cast<std::uint64_t>(k)),
                    static_cast<std::uint64_t>(m)),
        checked_mul(std::uint64_t{1} << k, static_cast<std::uint64_t>(m - 1)));
    bundle.sense = Sense::Min;
    bundle.order = LinearOrder::identity(g.n());
    bundle.width_bound = 4 * k + 2;
    bundle.meta.construction = "wds";
    bundle.meta.k = k;
    bundle.meta.m = m;
    bundle.meta.extra["sentinel"] = sentinel;
    bundle.meta.extra["vertex_count"] = g.n();
    bundle.meta.extra["probe_matching"] = "all-subsets";
    if (m == 1) bundle.meta.extra["degenerate"] = true;
    return bundle;
}

} // namespace rwlab
