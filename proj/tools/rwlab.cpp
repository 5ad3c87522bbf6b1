// rwlab: build, verify, solve and roundtrip gadget reductions whose
// decompositions certify small linear rank-width.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rwlab/bundle.hpp"
#include "rwlab/oracles.hpp"
#include "rwlab/parallel.hpp"
#include "rwlab/pipeline.hpp"
#include "rwlab/reduce_is.hpp"
#include "rwlab/reduce_mim_fvs.hpp"
#include "rwlab/reduce_wds.hpp"
#include "rwlab/sampling.hpp"
#include "rwlab/universal_cut.hpp"
#include "rwlab/util.hpp"

namespace {

using namespace rwlab;
using nlohmann::json;

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot open output file '" + out_path + "'");
    out << text << "\n";
}

void emit_report(const std::string& out_path, const json& report) {
    write_output(out_path, report.dump(2));
}

CnfFormula load_formula(const std::string& cnf_path) {
    RawCnf raw;
    if (cnf_path.empty() || cnf_path == "-") {
        raw = parse_dimacs(std::cin);
    } else {
        std::ifstream in(cnf_path);
        if (!in) throw InputError("cannot open CNF file '" + cnf_path + "'");
        raw = parse_dimacs(in);
    }
    return pad_to_square(raw);
}

ReductionBundle load_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open bundle file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad bundle JSON: ") + e.what());
    }
    return bundle_from_json(j);
}

int run(int argc, char** argv) {
    CLI::App app{"gadget reductions, certified decompositions and exact oracles "
                 "for rank-width lower-bound machinery"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    int threads = default_thread_count();
    app.add_option("--threads", threads, "worker threads for parallelizable verifiers");

    // gen -------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate inputs");
    gen->require_subcommand(1);
    int gen_k = 2, gen_m = 3;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    auto* gen_cnf = gen->add_subcommand("cnf", "random grid 3-CNF in DIMACS form");
    gen_cnf->add_option("--k", gen_k, "grid dimension (k^2 variables)")->check(CLI::PositiveNumber);
    gen_cnf->add_option("--m", gen_m, "clause count")->check(CLI::PositiveNumber);
    gen_cnf->add_option("--seed", gen_seed, "rng seed");
    gen_cnf->add_option("--out", gen_out, "output path (default stdout)");
    auto* gen_rk = gen->add_subcommand("rk", "universal rank cut as an edge list");
    gen_rk->add_option("--k", gen_k, "cut rank")->check(CLI::PositiveNumber);
    gen_rk->add_option("--out", gen_out, "output path (default stdout)");

    // reduce ----------------------------------------------------------
    auto* reduce = app.add_subcommand("reduce", "build a reduction bundle from a CNF");
    reduce->require_subcommand(1);
    std::string red_cnf, red_out;
    bool red_unweighted = false;
    for (const char* name : {"is", "mim", "fvs", "wds"}) {
        auto* sub = reduce->add_subcommand(name);
        sub->add_option("--cnf", red_cnf, "DIMACS input (default stdin)");
        sub->add_option("--out", red_out, "bundle output path (default stdout)");
        if (std::string(name) == "is")
            sub->add_flag("--unweighted", red_unweighted, "expand to unit weights by false twins");
    }

    // solve -----------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "run an exact oracle");
    solve->require_subcommand(1);
    std::string solve_in, solve_out;
    for (const char* name : {"mwis", "mwds", "mim", "forest", "sat"}) {
        auto* sub = solve->add_subcommand(name);
        sub->add_option("--in", solve_in, "bundle JSON (or CNF for sat)")->required();
        sub->add_option("--out", solve_out, "report output path (default stdout)");
    }

    // verify ----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a structural verifier");
    verify->require_subcommand(1);
    VerifyParams vp;
    std::string verify_out;
    for (const char* name :
         {"lemma34", "lemma35", "widths", "subadditivity", "family-equivalence"}) {
        auto* sub = verify->add_subcommand(name);
        sub->add_option("--k", vp.k, "parameter k");
        sub->add_option("--out", verify_out, "report output path (default stdout)");
        if (std::string(name) == "widths") {
            sub->add_option("--m", vp.m, "clause count");
            sub->add_option("--construction", vp.construction,
                            "is | is-unweighted | mim | fvs | wds | separation");
            sub->add_option("--instances", vp.instances, "formulas sampled per check");
            sub->add_option("--seed", vp.seed, "rng seed");
        }
        if (std::string(name) == "subadditivity") {
            sub->add_option("--samples", vp.samples, "random instances");
            sub->add_option("--seed", vp.seed, "rng seed");
        }
    }

    // roundtrip ---------------------------------------------------------
    auto* roundtrip = app.add_subcommand(
        "roundtrip", "SAT oracle vs reduction oracle biconditional plus width certificate");
    roundtrip->require_subcommand(1);
    std::string rt_cnf, rt_out;
    bool rt_unweighted = false;
    for (const char* name : {"is", "mim", "fvs", "wds"}) {
        auto* sub = roundtrip->add_subcommand(name);
        sub->add_option("--cnf", rt_cnf, "DIMACS input (default stdin)");
        sub->add_option("--out", rt_out, "report output path (default stdout)");
        if (std::string(name) == "is")
            sub->add_flag("--unweighted", rt_unweighted, "roundtrip the unit-weight expansion");
    }

    // separation --------------------------------------------------------
    auto* separation = app.add_subcommand("separation", "rank vs Boolean dimension instance");
    int sep_k = 2;
    std::string sep_out;
    separation->add_option("--k", sep_k, "construction parameter")->check(CLI::PositiveNumber);
    separation->add_option("--report", sep_out, "report output path (default stdout)");

    // enum-family ---------------------------------------------------------
    auto* enum_family = app.add_subcommand("enum-family", "list the collection family");
    int fam_k = 2;
    std::string fam_out;
    enum_family->add_option("--k", fam_k, "ground set size")->check(CLI::PositiveNumber);
    enum_family->add_option("--out", fam_out, "report output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    bool lift = guard_override();

    if (gen->parsed()) {
        if (gen_cnf->parsed()) {
            Rng rng(gen_seed);
            CnfFormula phi = random_formula(gen_k, gen_m, rng);
            write_output(gen_out, formula_to_dimacs(phi));
        } else {
            UniversalCut cut = build_universal_cut(gen_k);
            WeightedGraph wg;
            wg.graph = cut.graph;
            wg.weights.assign(static_cast<std::size_t>(cut.graph.n()), 1);
            write_output(gen_out, to_edge_list_text(wg));
        }
        return kExitPass;
    }

    if (reduce->parsed()) {
        CnfFormula phi = load_formula(red_cnf);
        ReductionBundle bundle;
        if (reduce->get_subcommand("is")->parsed()) {
            bundle = build_is_instance(phi);
            if (red_unweighted) bundle = make_unweighted(bundle);
        } else if (reduce->get_subcommand("wds")->parsed()) {
            bundle = build_wds_instance(phi);
        } else {
            TwinPairBundles pair = duplicate_with_true_twins(make_unweighted(build_is_instance(phi)));
            bundle = reduce->get_subcommand("mim")->parsed() ? std::move(pair.mim)
                                                             : std::move(pair.fvs);
        }
        emit_report(red_out, bundle_to_json(bundle));
        return kExitPass;
    }

    if (solve->parsed()) {
        SolveOptions opts;
        opts.lift_guards = lift;
        opts.threads = threads;
        CommandResult result;
        if (solve->get_subcommand("sat")->parsed()) {
            result = cmd_solve_sat(load_formula(solve_in), opts);
        } else {
            const char* names[] = {"mwis", "mwds", "mim", "forest"};
            std::string picked;
            for (const char* name : names)
                if (solve->get_subcommand(name)->parsed()) picked = name;
            result = cmd_solve(picked, load_bundle(solve_in), opts);
        }
        emit_report(solve_out, result.report);
        return result.exit_code;
    }

    if (verify->parsed()) {
        vp.threads = threads;
        std::string picked;
        for (const char* name :
             {"lemma34", "lemma35", "widths", "subadditivity", "family-equivalence"})
            if (verify->get_subcommand(name)->parsed()) picked = name;
        CommandResult result = cmd_verify(picked, vp);
        emit_report(verify_out, result.report);
        return result.exit_code;
    }

    if (roundtrip->parsed()) {
        RoundtripOptions opts;
        opts.unweighted = rt_unweighted;
        opts.lift_guards = lift;
        opts.threads = threads;
        std::string picked;
        for (const char* name : {"is", "mim", "fvs", "wds"})
            if (roundtrip->get_subcommand(name)->parsed()) picked = name;
        CommandResult result = cmd_roundtrip(picked, load_formula(rt_cnf), opts);
        emit_report(rt_out, result.report);
        return result.exit_code;
    }

    if (separation->parsed()) {
        CommandResult result = cmd_separation(sep_k, lift ? 20 : kSeparationGuard);
        emit_report(sep_out, result.report);
        return result.exit_code;
    }

    if (enum_family->parsed()) {
        CommandResult result = cmd_enum_family(fam_k);
        emit_report(fam_out, result.report);
        return result.exit_code;
    }

    return kExitInputError;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitResourceGuard;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
