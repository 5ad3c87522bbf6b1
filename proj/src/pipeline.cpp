#include "rwlab/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "rwlab/oracles.hpp"
#include "rwlab/reduce_is.hpp"
#include "rwlab/reduce_mim_fvs.hpp"
#include "rwlab/reduce_wds.hpp"
#include "rwlab/sampling.hpp"
#include "rwlab/util.hpp"

namespace rwlab {

using nlohmann::json;

json report_skeleton(const std::string& command, json params) {
    return json{{"schema", kReportSchema},
                {"tool", kToolName},
                {"version", kToolVersion},
                {"command", command},
                {"params", std::move(params)}};
}

json formula_to_json(const CnfFormula& phi) {
    json clauses = json::array();
    for (const auto& clause : phi.clauses) {
        json c = json::array();
        for (const Literal& lit : clause)
            c.push_back({{"row", lit.row}, {"col", lit.col}, {"positive", lit.positive}});
        clauses.push_back(std::move(c));
    }
    return json{{"k", phi.k}, {"clauses", std::move(clauses)}};
}

std::string formula_to_dimacs(const CnfFormula& phi) {
    phi.validate();
    std::ostringstream out;
    out << "p cnf " << phi.var_count() << " " << phi.clause_count() << "\n";
    for (const auto& clause : phi.clauses) {
        for (const Literal& lit : clause) {
            int var = (lit.row - 1) * phi.k + (lit.col - phi.k - 1) + 1;
            out << (lit.positive ? var : -var) << " ";
        }
        out << "0\n";
    }
    return out.str();
}

namespace {

int lifted_cap(bool lift, int default_cap, int instance_size) {
    return lift ? std::max(default_cap, instance_size) : default_cap;
}

} // namespace

CommandResult cmd_roundtrip(const std::string& problem, const CnfFormula& phi,
                            const RoundtripOptions& opts) {
    json params{{"problem", problem},
                {"unweighted", opts.unweighted},
                {"formula", formula_to_json(phi)}};
    CommandResult result;
    result.report = report_skeleton("roundtrip", params);

    SatResult sat = sat_enumerate(phi, opts.lift_guards ? phi.var_count() : kSatVarCap);

    ReductionBundle bundle;
    std::uint64_t value = 0;
    if (problem == "is") {
        bundle = build_is_instance(phi);
        if (opts.unweighted) bundle = make_unweighted(bundle);
        value = max_weight_independent_set(
                    bundle.instance,
                    lifted_cap(opts.lift_guards, kMwisVertexCap, bundle.instance.graph.n()))
                    .value;
    } else if (problem == "mim" || problem == "fvs") {
        TwinPairBundles pair = duplicate_with_true_twins(make_unweighted(build_is_instance(phi)));
        bundle = (problem == "mim") ? std::move(pair.mim) : std::move(pair.fvs);
        int n = bundle.instance.graph.n();
        if (problem == "mim")
            value = max_induced_matching(bundle.instance.graph,
                                         lifted_cap(opts.lift_guards, kMimVertexCap, n))
                        .size;
        else
            value = max_induced_forest(bundle.instance.graph,
                                       lifted_cap(opts.lift_guards, kForestVertexCap, n))
                        .value;
    } else if (problem == "wds") {
        bundle = build_wds_instance(phi);
        value = min_weight_dominating_set(
                    bundle.instance,
                    lifted_cap(opts.lift_guards, kMwdsVertexCap, bundle.instance.graph.n()))
                    .value;
    } else {
        throw InputError("unknown roundtrip problem '" + problem + "'");
    }

    bool met = meets_target(bundle, value);
    WidthResult width = linear_width(bundle.instance.graph, bundle.order, CutMeasure::CutRank);
    bool width_ok = width.width <= static_cast<std::uint64_t>(bundle.width_bound);
    bool pass = (sat.satisfiable == met) && width_ok;

    result.report["satisfiable"] = sat.satisfiable;
    result.report["model_count"] = sat.model_count;
    result.report["construction"] = bundle.meta.construction;
    result.report["vertices"] = bundle.instance.graph.n();
    result.report["target"] = bundle.target;
    result.report["sense"] = sense_to_string(bundle.sense);
    result.report["value"] = value;
    result.report["target_met"] = met;
    result.report["width"] = width.width;
    result.report["width_bound"] = bundle.width_bound;
    result.report["width_ok"] = width_ok;
    result.report["pass"] = pass;
    result.exit_code = pass ? kExitPass : kExitAssertionFailure;
    return result;
}

namespace {

int checked_family_k(int k, int cli_guard) {
    int guard = guard_override() ? kFamilyGuard : std::min(cli_guard, kFamilyGuard);
    if (k > guard)
        throw ResourceLimitError("k=" + std::to_string(k) + " beyond guard " +
                                 std::to_string(guard) +
                                 " (set RWLAB_GUARD_OVERRIDE=1 to lift)");
    return k;
}

json collection_to_json(const Collection& c) {
    json members = json::array();
    for (std::uint32_t m : c.members) {
        json elems = json::array();
        for (int e = 1; e <= c.ground; ++e)
            if ((m >> (e - 1)) & 1) elems.push_back(e);
        members.push_back(std::move(elems));
    }
    return members;
}

CommandResult verify_lemma34(const VerifyParams& p) {
    int k = checked_family_k(p.k, p.family_guard);
    auto report = verify_distinct_neighborhoods(k, p.threads);
    CommandResult out;
    out.report = report_skeleton("verify", {{"check", "lemma34"}, {"k", k}, {"threads", p.threads}});
    out.report["family_size"] = report.family_size;
    out.report["pairs_checked"] = report.pairs_checked;
    json collisions = json::array();
    for (const auto& c : report.collisions)
        collisions.push_back({collection_to_json(c.first), collection_to_json(c.second)});
    out.report["collisions"] = std::move(collisions);
    out.report["pass"] = report.ok();
    out.exit_code = report.ok() ? kExitPass : kExitAssertionFailure;
    return out;
}

CommandResult verify_lemma35(const VerifyParams& p) {
    int k = checked_family_k(p.k, p.family_guard);
    auto report = verify_neighborhood_size(k);
    CommandResult out;
    out.report = report_skeleton("verify", {{"check", "lemma35"}, {"k", k}});
    out.report["family_size"] = report.family_size;
    json mismatches = json::array();
    for (const auto& m : report.mismatches)
        mismatches.push_back({{"collection", collection_to_json(m.s)},
                              {"expected", m.expected},
                              {"actual", m.actual}});
    out.report["mismatches"] = std::move(mismatches);
    out.report["pass"] = report.ok();
    out.exit_code = report.ok() ? kExitPass : kExitAssertionFailure;
    return out;
}

CommandResult verify_widths(const VerifyParams& p) {
    CommandResult out;
    out.report = report_skeleton("verify", {{"check", "widths"},
                                            {"construction", p.construction},
                                            {"k", p.k},
                                            {"m", p.m},
                                            {"instances", p.instances},
                                            {"seed", p.seed}});
    json checks = json::array();
    bool pass = true;
    auto push = [&](const ReductionBundle& b, const json& tag) {
        WidthResult w = linear_width(b.instance.graph, b.order, CutMeasure::CutRank);
        bool ok = w.width <= static_cast<std::uint64_t>(b.width_bound);
        pass = pass && ok;
        json c = tag;
        c["width"] = w.width;
        c["width_bound"] = b.width_bound;
        c["ok"] = ok;
        checks.push_back(std::move(c));
    };

    if (p.construction == "separation") {
        SeparationInstance inst = build_separation_instance(p.k);
        WidthResult w = linear_width(inst.graph, inst.order, CutMeasure::CutRank);
        bool ok = w.width <= static_cast<std::uint64_t>(inst.width_bound);
        pass = ok;
        checks.push_back({{"width", w.width}, {"width_bound", inst.width_bound}, {"ok", ok}});
    } else if (p.construction == "is" || p.construction == "is-unweighted" ||
               p.construction == "wds" || p.construction == "mim" || p.construction == "fvs") {
        Rng rng(p.seed);
        for (int i = 0; i < p.instances; ++i) {
            CnfFormula phi = random_formula(p.k, p.m, rng);
            if (p.construction == "wds") {
                push(build_wds_instance(phi), {{"instance", i}});
            } else if (p.construction == "is") {
                push(build_is_instance(phi), {{"instance", i}});
            } else if (p.construction == "is-unweighted") {
                push(make_unweighted(build_is_instance(phi)), {{"instance", i}});
            } else {
                TwinPairBundles pair =
                    duplicate_with_true_twins(make_unweighted(build_is_instance(phi)));
                push(p.construction == "mim" ? pair.mim : pair.fvs, {{"instance", i}});
            }
        }
    } else {
        throw InputError("unknown construction '" + p.construction + "' for widths check");
    }
    out.report["checks"] = std::move(checks);
    out.report["pass"] = pass;
    out.exit_code = pass ? kExitPass : kExitAssertionFailure;
    return out;
}

CommandResult verify_subadditivity(const VerifyParams& p) {
    CommandResult out;
    out.report =
        report_skeleton("verify", {{"check", "subadditivity"}, {"samples", p.samples}, {"seed", p.seed}});
    Rng rng(p.seed);
    int violations = 0;
    for (int i = 0; i < p.samples; ++i) {
        int n = 2 + static_cast<int>(rng_below(rng, 11)); // 2..12
        Graph g = random_graph(n, 50, rng);
        std::vector<int> a, b, s;
        for (int v = 0; v < n; ++v) {
            switch (rng_below(rng, 3)) {
                case 0: a.push_back(v); break;
                case 1: b.push_back(v); break;
                default: break;
            }
            if (rng_below(rng, 2) == 0) s.push_back(v);
        }
        std::vector<int> a_in, a_out;
        for (int v : a)
            (std::find(s.begin(), s.end(), v) != s.end() ? a_in : a_out).push_back(v);
        std::size_t whole = cut_rank(g, a, b);
        std::size_t split = cut_rank(g, a_in, b) + cut_rank(g, a_out, b);
        if (whole > split) ++violations;
    }
    out.report["violations"] = violations;
    out.report["pass"] = violations == 0;
    out.exit_code = violations == 0 ? kExitPass : kExitAssertionFailure;
    return out;
}

CommandResult verify_family_equivalence(const VerifyParams& p) {
    int k = p.k;
    if (k > 4) throw ResourceLimitError("family-equivalence scans all 2^(2^k) collections; k <= 4");
    checked_family_k(k, p.family_guard);
    CommandResult out;
    out.report = report_skeleton("verify", {{"check", "family-equivalence"}, {"k", k}});

    std::vector<Collection> by_test;
    std::uint32_t n_masks = 1u << k;
    // every collection of subsets of [k], the empty member included
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n_masks); ++pick) {
        Collection c;
        c.ground = k;
        for (std::uint32_t mask = 0; mask < n_masks; ++mask)
            if ((pick >> mask) & 1) c.members.push_back(mask);
        c.normalize();
        if (is_in_family(c).in_family) by_test.push_back(std::move(c));
    }
    std::sort(by_test.begin(), by_test.end());
    std::vector<Collection> by_recursion = enumerate_family(k);
    bool pass = by_test == by_recursion;
    out.report["recursive_count"] = by_recursion.size();
    out.report["membership_count"] = by_test.size();
    out.report["collections_scanned"] = std::uint64_t{1} << n_masks;
    out.report["pass"] = pass;
    out.exit_code = pass ? kExitPass : kExitAssertionFailure;
    return out;
}

} // namespace

CommandResult cmd_verify(const std::string& check, const VerifyParams& params) {
    if (check == "lemma34") return verify_lemma34(params);
    if (check == "lemma35") return verify_lemma35(params);
    if (check == "widths") return verify_widths(params);
    if (check == "subadditivity") return verify_subadditivity(params);
    if (check == "family-equivalence") return verify_family_equivalence(params);
    throw InputError("unknown verify check '" + check + "'");
}

CommandResult cmd_separation(int k, int guard) {
    SeparationInstance inst = build_separation_instance(k, guard);
    CommandResult out;
    out.report = report_skeleton("separation", {{"k", k}});
    WidthResult width = linear_width(inst.graph, inst.order, CutMeasure::CutRank);
    bool width_ok = width.width <= static_cast<std::uint64_t>(inst.width_bound);

    CutDimensionReport cut =
        measure_cut_boolean_dimension(inst.graph, inst.center, inst.blocks.front());
    std::uint64_t expected_indep = 1;
    for (int i = 0; i < k; ++i) expected_indep *= (std::uint64_t{1} << k) + 1;
    bool indep_ok = !cut.independent_saturated && cut.independent_count == expected_indep;
    // the quadratic gap shows up from k = 2 on
    bool gap_ok = k < 2 || cut.log2_independent > static_cast<double>(cut.rank);

    out.report["vertices"] = inst.graph.n();
    out.report["width"] = width.width;
    out.report["width_bound"] = inst.width_bound;
    out.report["width_ok"] = width_ok;
    out.report["cut"] = {{"sides", {"center", "block-1"}},
                         {"rank", cut.rank},
                         {"neighborhoods", cut.neighborhood_count},
                         {"neighborhoods_saturated", cut.neighborhood_saturated},
                         {"independent_neighborhoods", cut.independent_count},
                         {"independent_expected", expected_indep},
                         {"independent_saturated", cut.independent_saturated},
                         {"log2_neighborhoods", cut.log2_neighborhoods},
                         {"log2_independent", cut.log2_independent}};
    out.report["independent_count_ok"] = indep_ok;
    out.report["log2_exceeds_rank"] = gap_ok;
    bool pass = width_ok && indep_ok && gap_ok;
    out.report["pass"] = pass;
    out.exit_code = pass ? kExitPass : kExitAssertionFailure;
    return out;
}

CommandResult cmd_enum_family(int k, int family_guard) {
    int kk = checked_family_k(k, family_guard);
    std::vector<Collection> family = enumerate_family(kk);
    CommandResult out;
    out.report = report_skeleton("enum-family", {{"k", kk}});
    out.report["count"] = family.size();
    json list = json::array();
    for (const Collection& c : family) list.push_back(collection_to_json(c));
    out.report["collections"] = std::move(list);
    return out;
}

CommandResult cmd_solve(const std::string& problem, const ReductionBundle& bundle,
                        const SolveOptions& opts) {
    CommandResult out;
    out.report = report_skeleton(
        "solve", {{"problem", problem}, {"construction", bundle.meta.construction}});
    int n = bundle.instance.graph.n();
    std::uint64_t value = 0;
    json witness = json::array();
    if (problem == "mwis") {
        SolveResult r = max_weight_independent_set(bundle.instance,
                                                   lifted_cap(opts.lift_guards, kMwisVertexCap, n));
        value = r.value;
        for (int v : r.witness) witness.push_back(bundle.instance.graph.label(v).to_string());
    } else if (problem == "mwds") {
        SolveResult r = min_weight_dominating_set(bundle.instance,
                                                  lifted_cap(opts.lift_guards, kMwdsVertexCap, n));
        value = r.value;
        for (int v : r.witness) witness.push_back(bundle.instance.graph.label(v).to_string());
    } else if (problem == "mim") {
        MatchingResult r =
            max_induced_matching(bundle.instance.graph, lifted_cap(opts.lift_guards, kMimVertexCap, n));
        value = r.size;
        for (auto [u, v] : r.edges)
            witness.push_back({bundle.instance.graph.label(u).to_string(),
                               bundle.instance.graph.label(v).to_string()});
    } else if (problem == "forest") {
        SolveResult r = max_induced_forest(bundle.instance.graph,
                                           lifted_cap(opts.lift_guards, kForestVertexCap, n));
        value = r.value;
        for (int v : r.witness) witness.push_back(bundle.instance.graph.label(v).to_string());
    } else {
        throw InputError("unknown solve problem '" + problem + "'");
    }
    out.report["value"] = value;
    out.report["witness"] = std::move(witness);
    out.report["target"] = bundle.target;
    out.report["sense"] = sense_to_string(bundle.sense);
    out.report["target_met"] = meets_target(bundle, value);
    return out;
}

CommandResult cmd_solve_sat(const CnfFormula& phi, const SolveOptions& opts) {
    SatResult sat = sat_enumerate(phi, opts.lift_guards ? phi.var_count() : kSatVarCap);
    CommandResult out;
    out.report = report_skeleton("solve", {{"problem", "sat"}, {"formula", formula_to_json(phi)}});
    out.report["satisfiable"] = sat.satisfiable;
    out.report["model_count"] = sat.model_count;
    if (sat.model) {
        json model = json::array();
        for (int row = 1; row <= phi.k; ++row)
            for (int col = phi.k + 1; col <= 2 * phi.k; ++col)
                model.push_back({{"row", row}, {"col", col}, {"value", sat.model->value(row, col)}});
        out.report["model"] = std::move(model);
    }
    return out;
}

} // namespace rwlab
