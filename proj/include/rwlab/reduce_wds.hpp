#pragma once

#include "rwlab/bundle.hpp"
#include "rwlab/formula.hpp"

namespace rwlab {

/// Weighted Dominating Set instance for a grid 3-CNF: m selector copies A_i
/// closed into cliques K_{i,j} by auxiliary vertices, coupled in a path
/// through matched probe layers B_i / B̂_i (a perfect matching joins
/// b^i_t to b̂^i_t for every t ⊆ [2k]), and one clause vertex c_i adjacent
/// to the selectors compatible with some literal of C_i. Prohibitive
/// sentinel weights on B̂ layers and auxiliary vertices stand in for +∞.
/// The instance has a dominating set of weight (2^{2k}+2)km + 2^k(m-1)
/// exactly when the formula is satisfiable; the bundled order certifies
/// linear cut-rank width 4k+2. m = 1 degenerates to no probe layers and is
/// flagged in the metadata.
ReductionBundle build_wds_instance(const CnfFormula& phi);

} // namespace rwlab
