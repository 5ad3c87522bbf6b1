#include "rwlab/reduce_mim_fvs.hpp"

#include "rwlab/errors.hpp"
#include "rwlab/util.hpp"

namespace rwlab {

TwinPairBundles duplicate_with_true_twins(const Graph& g, const LinearOrder& ord,
                                          int width_bound, std::uint64_t kappa,
                                          const BundleMeta& base_meta) {
    ord.validate(g.n());
    if (kappa > static_cast<std::uint64_t>(g.n()))
        throw InputError("independent-set target exceeds the vertex count");

    WeightedGraph doubled;
    // original v lands at 2v, its twin at 2v+1
    for (int v = 0; v < g.n(); ++v) {
        doubled.graph.add_vertex(g.label(v));
        VertexLabel twin = g.label(v);
        twin.hat = true;
        doubled.graph.add_vertex(twin);
        doubled.weights.push_back(1);
        doubled.weights.push_back(1);
        doubled.graph.add_edge(2 * v, 2 * v + 1);
    }
    for (auto [u, v] : g.edges()) {
        doubled.graph.add_edge(2 * u, 2 * v);
        doubled.graph.add_edge(2 * u, 2 * v + 1);
        doubled.graph.add_edge(2 * u + 1, 2 * v);
        doubled.graph.add_edge(2 * u + 1, 2 * v + 1);
    }

    LinearOrder order;
    order.perm.reserve(static_cast<std::size_t>(2 * g.n()));
    for (int v : ord.perm) {
        order.perm.push_back(2 * v);
        order.perm.push_back(2 * v + 1);
    }

    TwinPairBundles out;
    out.mim.instance = doubled;
    out.mim.target = kappa;
    out.mim.sense = Sense::Max;
    out.mim.order = order;
    out.mim.width_bound = width_bound + 1;
    out.mim.meta = base_meta;
    out.mim.meta.construction = "mim";
    out.mim.meta.extra["kappa"] = kappa;

    out.fvs.instance = std::move(doubled);
    out.fvs.target = checked_mul(2, kappa); // induced-forest vertices
    out.fvs.sense = Sense::Max;
    out.fvs.order = std::move(order);
    out.fvs.width_bound = width_bound + 1;
    out.fvs.meta = base_meta;
    out.fvs.meta.construction = "fvs";
    out.fvs.meta.extra["kappa"] = kappa;
    out.fvs.meta.extra["fvs_budget"] =
        static_cast<std::uint64_t>(2 * g.n()) - checked_mul(2, kappa);
    return out;
}

TwinPairBundles duplicate_with_true_twins(const ReductionBundle& unit_bundle) {
    if (unit_bundle.sense != Sense::Max)
        throw InputError("twin doubling expects a maximization bundle");
    for (std::uint64_t w : unit_bundle.instance.weights)
        if (w != 1) throw InputError("twin doubling expects unit weights; unweight first");
    return duplicate_with_true_twins(unit_bundle.instance.graph, unit_bundle.order,
                                     unit_bundle.width_bound, unit_bundle.target,
                                     unit_bundle.meta);
}

} // namespace rwlab
