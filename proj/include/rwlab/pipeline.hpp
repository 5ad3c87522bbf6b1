#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "rwlab/bundle.hpp"
#include "rwlab/formula.hpp"
#include "rwlab/separation.hpp"
#include "rwlab/universal_cut.hpp"

namespace rwlab {

struct CommandResult {
    int exit_code = 0; // kExitPass / kExitAssertionFailure
    nlohmann::json report;
};

struct RoundtripOptions {
    bool unweighted = false;
    bool lift_guards = false; // raise oracle caps to the instance size
    int threads = 1;
};

/// Builds the reduction for `problem` in {"is","mim","fvs","wds"}, solves
/// the formula by the SAT oracle and the instance by the problem oracle,
/// and asserts both the threshold biconditional and the width certificate.
CommandResult cmd_roundtrip(const std::string& problem, const CnfFormula& phi,
                            const RoundtripOptions& opts = {});

struct VerifyParams {
    int k = 2;
    int m = 2;
    std::string construction = "is"; // for the widths check
    int samples = 500;               // randomized checks
    int instances = 3;               // formulas per widths check
    std::uint64_t seed = 1;
    int threads = 1;
    int family_guard = kFamilyCliGuard; // lifted by RWLAB_GUARD_OVERRIDE=1
};

/// check in {"lemma34","lemma35","widths","subadditivity","family-equivalence"}.
CommandResult cmd_verify(const std::string& check, const VerifyParams& params = {});

CommandResult cmd_separation(int k, int guard = kSeparationGuard);

CommandResult cmd_enum_family(int k, int family_guard = kFamilyCliGuard);

struct SolveOptions {
    bool lift_guards = false;
    int threads = 1;
};

/// problem in {"mwis","mwds","mim","forest"} over a bundle, or "sat" over
/// a formula.
CommandResult cmd_solve(const std::string& problem, const ReductionBundle& bundle,
                        const SolveOptions& opts = {});
CommandResult cmd_solve_sat(const CnfFormula& phi, const SolveOptions& opts = {});

/// DIMACS text for a grid formula (variable (row,col) becomes index
/// (row-1)k + col-k, 1-based).
std::string formula_to_dimacs(const CnfFormula& phi);

nlohmann::json formula_to_json(const CnfFormula& phi);

/// Report skeleton shared by every command: schema, tool, version and the
/// full parameter echo.
nlohmann::json report_skeleton(const std::string& command, nlohmann::json params);

} // namespace rwlab
