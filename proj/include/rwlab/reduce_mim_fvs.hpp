#pragma once

#include "rwlab/bundle.hpp"

namespace rwlab {

struct TwinPairBundles {
    ReductionBundle mim; // target: kappa matching edges, sense max
    ReductionBundle fvs; // target: 2*kappa induced-forest vertices, sense max
};

/// True-twin doubling: every vertex v gains a twin v' adjacent to v and to
/// all four copies of each original edge. The graph has an independent set
/// of size kappa exactly when the doubled graph has an induced matching of
/// kappa edges, exactly when it has an induced forest on 2*kappa vertices.
/// The order inserts each twin right after its original, adding one to the
/// certified width. The feedback-vertex-set budget |V'| - 2*kappa is kept
/// in the fvs bundle's metadata.
TwinPairBundles duplicate_with_true_twins(const Graph& g, const LinearOrder& ord,
                                          int width_bound, std::uint64_t kappa,
                                          const BundleMeta& base_meta);

/// Pipeline convenience: runs the doubling on an unweighted maximization
/// bundle, taking kappa from its target.
TwinPairBundles duplicate_with_true_twins(const ReductionBundle& unit_bundle);

} // namespace rwlab
