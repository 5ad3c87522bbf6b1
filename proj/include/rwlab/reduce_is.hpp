#pragma once

#include "rwlab/bundle.hpp"
#include "rwlab/formula.hpp"

namespace rwlab {

/// Weighted Independent Set instance for a grid 3-CNF: one probe layer B,
/// m selector copies A_i (each a union of k row-block cliques wired to B by
/// the odd-intersection rule) and one clause triangle per clause whose
/// vertices exclude the selectors incompatible with their literal.
/// Selector vertices weigh 2^{2k}, everything else 1; the instance has an
/// independent set of weight 2^{2k}km + 2^k + m exactly when the formula is
/// satisfiable. The bundled order certifies linear cut-rank width 2k+4.
ReductionBundle build_is_instance(const CnfFormula& phi);

/// False-twin expansion to unit weights: every vertex becomes w(v) mutually
/// non-adjacent copies, the order replaces v by its copy run, the target is
/// unchanged as a cardinality and the width bound grows by one.
ReductionBundle make_unweighted(const ReductionBundle& b);

} // namespace rwlab
