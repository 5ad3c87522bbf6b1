#include "rwlab/reduce_is.hpp"

#include <bit>
#include <string>

#include "rwlab/errors.hpp"
#include "rwlab/util.hpp"

namespace rwlab {

ReductionBundle build_is_instance(const CnfFormula& phi) {
    phi.validate();
    int k = phi.k;
    int m = phi.clause_count();
    if (m < 1) throw InputError("need at least one clause");
    if (2 * k > 16) throw ResourceLimitError("probe layer 2^(2k) too large for k=" + std::to_string(k));

    std::uint32_t probe_count = 1u << (2 * k);
    std::uint64_t selector_weight = std::uint64_t{1} << (2 * k);

    ReductionBundle bundle;
    WeightedGraph& wg = bundle.instance;
    Graph& g = wg.graph;

    // Insertion follows the certified order: B, then A_1, T_1, ..., A_m, T_m.
    for (std::uint32_t t = 0; t < probe_count; ++t) {
        g.add_vertex(VertexLabel::b(0, t));
        wg.weights.push_back(1);
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= k; ++j) {
            auto block = row_block_masks(j, k);
            for (std::uint32_t s : block) {
                int v = g.add_vertex(VertexLabel::a(i, s));
                wg.weights.push_back(selector_weight);
                for (std::uint32_t t = 0; t < probe_count; ++t)
                    if (std::popcount(s & t) % 2 == 1) g.add_edge(v, static_cast<int>(t));
            }
            // the row block is a clique
            for (std::size_t x = 0; x < block.size(); ++x)
                for (std::size_t y = x + 1; y < block.size(); ++y)
                    g.add_edge(VertexLabel::a(i, block[x]), VertexLabel::a(i, block[y]));
        }
        auto clause = phi.padded_clause(i - 1);
        int first_clause_vertex = g.n();
        for (std::uint32_t p = 1; p <= 3; ++p) {
            int c = g.add_vertex(VertexLabel::clause(i, p));
            wg.weights.push_back(1);
            Literal negated = clause[p - 1];
            negated.positive = !negated.positive;
            for (std::uint32_t s : literal_sets(negated, k).members)
                g.add_edge(c, g.index_of(VertexLabel::a(i, s)));
            for (int prev = first_clause_vertex; prev < c; ++prev) g.add_edge(c, prev);
        }
    }

    bundle.target = checked_add(
        checked_add(checked_mul(checked_mul(selector_weight, static_cast<std::uint64_t>(k)),
                                static_cast<std::uint64_t>(m)),
                    std::uint64_t{1} << k),
        static_cast<std::uint64_t>(m));
    bundle.sense = Sense::Max;
    bundle.order = LinearOrder::identity(g.n());
    bundle.width_bound = 2 * k + 4;
    bundle.meta.construction = "is";
    bundle.meta.k = k;
    bundle.meta.m = m;
    return bundle;
}

ReductionBundle make_unweighted(const ReductionBundle& b) {
    if (b.sense != Sense::Max) throw InputError("unweighting applies to maximization bundles");
    for (std::uint64_t w : b.instance.weights)
        if (w == 0) throw InputError("zero-weight vertex must be deleted before unweighting");

    const Graph& g = b.instance.graph;
    ReductionBundle out;
    WeightedGraph& wg = out.instance;

    // copies[v] = new indices of the run (v_1, ..., v_{w(v)})
    std::vector<std::vector<int>> copies(static_cast<std::size_t>(g.n()));
    for (std::size_t pos = 0; pos < b.order.perm.size(); ++pos) {
        int v = b.order.perm[pos];
        std::uint64_t w = b.instance.weight(v);
        VertexLabel base = g.label(v);
        for (std::uint64_t c = 0; c < w; ++c) {
            VertexLabel l = base;
            l.twin = base.twin + static_cast<std::int32_t>(c);
            copies[static_cast<std::size_t>(v)].push_back(wg.graph.add_vertex(l));
            wg.weights.push_back(1);
        }
    }
    for (auto [u, v] : g.edges())
        for (int cu : copies[static_cast<std::size_t>(u)])
            for (int cv : copies[static_cast<std::size_t>(v)]) wg.graph.add_edge(cu, cv);

    out.target = b.target;
    out.sense = Sense::Max;
    out.order = LinearOrder::identity(wg.graph.n());
    out.width_bound = b.width_bound + 1;
    out.meta = b.meta;
    out.meta.construction = b.meta.construction + "-unweighted";
    out.meta.extra["weighted_vertex_count"] = g.n();
    return out;
}

} // namespace rwlab
