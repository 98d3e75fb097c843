#include "planemf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "planemf/errors.hpp"
#include "planemf/generators.hpp"
#include "planemf/io.hpp"
#include "planemf/laminar.hpp"
#include "planemf/multicut.hpp"
#include "planemf/oracle.hpp"
#include "planemf/rounding.hpp"

namespace planemf::cli {

namespace {

using nlohmann::json;

json rational_json(const Rational& r) {
    return json{{"num", r.num_int64()}, {"den", r.den_int64()}};
}

json paths_json(const Flow& f) {
    json out = json::array();
    for (const auto& fe : f.entries) {
        out.push_back(json{{"demand_edge", fe.path.demand_edge},
                           {"value", rational_json(fe.value)},
                           {"vertices", fe.path.vertices}});
    }
    return out;
}

void print_flow(std::ostream& out, const Instance& inst, const Flow& f) {
    out << serialize_flow(inst, f);
}

struct PipelineValues {
    Rational frac;
    Flow frac_flow;
    Rational half;
    Flow half_flow;
    Rational integer;
    Flow integer_flow;
    Rational plus_one;
    Flow plus_one_flow;
};

PipelineValues run_pipeline(const Instance& inst) {
    PipelineValues pv;
    PathSet ps = enumerate_paths(inst);
    MaxFlowResult frac = max_multiflow(inst, ps);
    pv.frac = frac.value;
    pv.frac_flow = frac.flow;
    DualMap dm = dual(inst.plane);
    LaminarFlow lf = laminarize(inst, dm, frac.flow);
    pv.half_flow = half_integer_round(inst, dm, lf);
    pv.half = pv.half_flow.value();
    pv.integer_flow = integer_round(inst, dm, pv.half_flow);
    pv.integer = pv.integer_flow.value();
    pv.plus_one_flow = plus_one_round(inst, dm, lf);
    pv.plus_one = pv.plus_one_flow.value();
    return pv;
}

int cmd_solve(const std::string& file, const std::string& mode, bool as_json,
              std::ostream& out) {
    Instance inst = load_instance_file(file);
    PathSet ps = enumerate_paths(inst);
    DualMap dm = dual(inst.plane);
    Flow flow;
    json checks;
    if (mode == "frac") {
        MaxFlowResult r = max_multiflow(inst, ps);
        flow = r.flow;
    } else {
        MaxFlowResult r = max_multiflow(inst, ps);
        LaminarFlow lf = laminarize(inst, dm, r.flow);
        if (mode == "half") {
            flow = half_integer_round(inst, dm, lf);
            checks["half_integer"] = flow.is_half_integer();
            checks["value_at_least_half_of_fractional"] =
                !(flow.value() * Rational(2) < r.value);
        } else if (mode == "int") {
            Flow half = half_integer_round(inst, dm, lf);
            flow = integer_round(inst, dm, half);
            checks["integer"] = flow.is_integer();
            checks["value_at_least_quarter_of_fractional"] =
                !(flow.value() * Rational(4) < r.value);
        } else {  // plus-one
            flow = plus_one_round(inst, dm, lf);
            checks["integer"] = flow.is_integer();
            checks["value_at_least_fractional"] = !(flow.value() < r.value);
        }
    }
    FeasibilityReport rep = check_feasible(inst, flow);
    if (mode == "plus-one") {
        bool ok = true;
        for (int e = 0; e < inst.plane.num_edges(); ++e)
            if (inst.is_supply(e) && rep.load[e] > Rational(inst.capacity[e] + 1)) ok = false;
        checks["loads_at_most_capacity_plus_one"] = ok;
    } else {
        checks["feasible"] = rep.feasible;
        if (!rep.feasible) return 1;
    }
    if (as_json) {
        json j{{"instance", file},
               {"mode", mode},
               {"value", rational_json(flow.value())},
               {"paths", paths_json(flow)},
               {"multicut", json::array()},
               {"checks", checks}};
        out << j.dump(2) << "\n";
    } else {
        out << "value " << flow.value() << "\n";
        print_flow(out, inst, flow);
    }
    return 0;
}

int cmd_multicut(const std::string& file, bool as_json, std::ostream& out) {
    Instance inst = load_instance_file(file);
    MulticutRun run = wgmv_multicut(inst);
    Rational fv = run.flow.value();
    if (as_json) {
        json j{{"instance", file},
               {"mode", "multicut"},
               {"value", rational_json(Rational(run.multicut_capacity))},
               {"paths", paths_json(run.flow)},
               {"multicut", run.multicut},
               {"checks",
                {{"is_multicut", true},
                 {"flow_feasible", true},
                 {"capacity_at_most_twice_flow",
                  !(Rational(run.multicut_capacity) > Rational(2) * fv)}}}};
        out << j.dump(2) << "\n";
    } else {
        out << "multicut capacity " << run.multicut_capacity << "\n";
        out << "edges";
        for (int e : run.multicut) out << " " << e;
        out << "\n";
        out << "certifying flow value " << fv << "\n";
    }
    return 0;
}

int cmd_oracle(const std::string& file, const std::string& what, std::ostream& out) {
    Instance inst = load_instance_file(file);
    if (what == "mincut") {
        auto r = exact_min_multicut(inst);
        out << "oracle mincut " << r.value << "\nedges";
        for (int e : r.multicut) out << " " << e;
        out << "\n";
    } else {
        PathSet ps = enumerate_paths(inst);
        auto r = (what == "int") ? exact_max_integer_flow(inst, ps)
                                 : exact_max_half_integer_flow(inst, ps);
        out << "oracle " << what << " " << r.value << "\n";
        print_flow(out, inst, r.flow);
    }
    return 0;
}

int cmd_verify(const std::string& file, const std::string& flow_file, std::ostream& out) {
    Instance inst = load_instance_file(file);
    Flow f = parse_flow(inst, read_file(flow_file));
    FeasibilityReport rep = check_feasible(inst, f);
    out << "value " << f.value() << "\n";
    out << (rep.feasible ? "feasible" : "infeasible") << "\n";
    if (!rep.feasible) {
        out << "violated edges";
        for (int e : rep.violated) out << " " << e;
        out << "\n";
        return 1;
    }
    out << "max loaded edges";
    for (int e : rep.max_loaded) out << " " << e;
    out << "\n";
    return 0;
}

int cmd_report(const std::string& file, bool as_json, std::ostream& out, std::ostream& err) {
    Instance inst = load_instance_file(file);
    PipelineValues pv = run_pipeline(inst);
    MulticutRun mc = wgmv_multicut(inst);
    Rational mc_cap(mc.multicut_capacity);

    bool have_oracles = false;
    long long oracle_mincut = 0;
    Rational oracle_int, oracle_half;
    try {
        PathSet ps = enumerate_paths(inst);
        auto om = exact_min_multicut(inst);
        auto oi = exact_max_integer_flow(inst, ps);
        auto oh = exact_max_half_integer_flow(inst, ps);
        have_oracles = true;
        oracle_mincut = om.value;
        oracle_int = oi.value;
        oracle_half = oh.value;
    } catch (const too_large&) {
        have_oracles = false;
    }

    // the inequality chain every run must satisfy
    std::vector<std::pair<std::string, bool>> invariants;
    invariants.push_back({"wgmv flow <= fractional max", !(mc.flow.value() > pv.frac)});
    invariants.push_back({"fractional max <= multicut capacity", !(pv.frac > mc_cap)});
    invariants.push_back(
        {"multicut capacity <= 2 * wgmv flow", !(mc_cap > Rational(2) * mc.flow.value())});
    invariants.push_back({"half >= fractional / 2", !(pv.half * Rational(2) < pv.frac)});
    invariants.push_back({"integer >= half / 2", !(pv.integer * Rational(2) < pv.half)});
    invariants.push_back({"plus-one value >= fractional", !(pv.plus_one < pv.frac)});
    if (have_oracles) {
        invariants.push_back({"oracle int <= oracle half", !(oracle_int > oracle_half)});
        invariants.push_back({"oracle half <= fractional", !(oracle_half > pv.frac)});
        invariants.push_back(
            {"fractional <= oracle mincut", !(pv.frac > Rational(oracle_mincut))});
        invariants.push_back({"wgmv multicut >= oracle mincut", mc.multicut_capacity >= oracle_mincut});
    }
    bool all_ok = true;
    for (const auto& [name, ok] : invariants) all_ok = all_ok && ok;

    if (as_json) {
        json j{{"instance", file}, {"mode", "report"}};
        j["value"] = rational_json(pv.frac);
        j["paths"] = paths_json(pv.frac_flow);
        j["multicut"] = mc.multicut;
        json checks;
        checks["fractional"] = rational_json(pv.frac);
        checks["half"] = rational_json(pv.half);
        checks["integer"] = rational_json(pv.integer);
        checks["plus_one"] = rational_json(pv.plus_one);
        checks["wgmv_multicut"] = mc.multicut_capacity;
        checks["wgmv_flow"] = rational_json(mc.flow.value());
        if (have_oracles) {
            checks["oracle_mincut"] = oracle_mincut;
            checks["oracle_integer"] = rational_json(oracle_int);
            checks["oracle_half"] = rational_json(oracle_half);
        }
        for (const auto& [name, ok] : invariants) checks["invariants"][name] = ok;
        j["checks"] = checks;
        out << j.dump(2) << "\n";
    } else {
        out << "instance            " << file << "\n";
        out << "fractional max      " << pv.frac << "\n";
        out << "half-integer output " << pv.half << "\n";
        out << "integer output      " << pv.integer << "\n";
        out << "plus-one output     " << pv.plus_one << " (capacities c+1)\n";
        out << "wgmv multicut       " << mc.multicut_capacity << "\n";
        out << "wgmv flow           " << mc.flow.value() << "\n";
        if (have_oracles) {
            out << "oracle mincut       " << oracle_mincut << "\n";
            out << "oracle integer      " << oracle_int << "\n";
            out << "oracle half         " << oracle_half << "\n";
        }
        if (!pv.frac.is_zero() && !pv.half.is_zero() && !pv.integer.is_zero())
            out << "ratios: multicut/fractional = " << (mc_cap / pv.frac).str()
                << ", fractional/half = " << (pv.frac / pv.half).str()
                << ", half/integer = " << (pv.half / pv.integer).str() << "\n";
        for (const auto& [name, ok] : invariants)
            out << (ok ? "ok   " : "FAIL ") << name << "\n";
    }
    if (!all_ok) {
        err << "invariant violation\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"plane multiflow toolkit"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate an instance file");
    gen->require_subcommand(1);
    int gk_k = 3;
    std::string gen_out;
    auto* gen_gk_cmd = gen->add_subcommand("gk", "ladder family instance");
    gen_gk_cmd->add_option("--k", gk_k, "ladder size, at least 3")->required();
    gen_gk_cmd->add_option("-o,--output", gen_out, "output file")->required();
    auto* gen_c4_cmd = gen->add_subcommand("c4", "subdivided four-cycle instance");
    gen_c4_cmd->add_option("-o,--output", gen_out, "output file")->required();

    std::string solve_file, solve_mode = "frac";
    bool solve_json = false;
    auto* solve = app.add_subcommand("solve", "run a flow pipeline stage");
    solve->add_option("file", solve_file, "instance file")->required();
    solve->add_option("--mode", solve_mode, "frac|half|int|plus-one")
        ->check(CLI::IsMember({"frac", "half", "int", "plus-one"}));
    solve->add_flag("--json", solve_json, "emit the json report schema");

    std::string mc_file;
    bool mc_json = false;
    auto* mc = app.add_subcommand("multicut", "primal-dual multicut with flow certificate");
    mc->add_option("file", mc_file, "instance file")->required();
    mc->add_flag("--json", mc_json, "emit the json report schema");

    std::string oracle_file, oracle_what;
    auto* orc = app.add_subcommand("oracle", "exact brute-force values");
    orc->add_option("file", oracle_file, "instance file")->required();
    orc->add_option("--what", oracle_what, "mincut|int|half")
        ->required()
        ->check(CLI::IsMember({"mincut", "int", "half"}));

    std::string verify_file, verify_flow;
    auto* ver = app.add_subcommand("verify", "check a flow file against an instance");
    ver->add_option("file", verify_file, "instance file")->required();
    ver->add_option("--flow", verify_flow, "flow file")->required();

    std::string report_file;
    bool report_json = false;
    auto* rep = app.add_subcommand("report", "full pipeline with the value sandwich");
    rep->add_option("file", report_file, "instance file")->required();
    rep->add_flag("--json", report_json, "emit the json report schema");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        if (gen_gk_cmd->parsed()) {
            write_file(gen_out, serialize(gen_gk(gk_k)));
            return 0;
        }
        if (gen_c4_cmd->parsed()) {
            write_file(gen_out, serialize(gen_c4_2k2_overline()));
            return 0;
        }
        if (solve->parsed()) return cmd_solve(solve_file, solve_mode, solve_json, out);
        if (mc->parsed()) return cmd_multicut(mc_file, mc_json, out);
        if (orc->parsed()) return cmd_oracle(oracle_file, oracle_what, out);
        if (ver->parsed()) return cmd_verify(verify_file, verify_flow, out);
        if (rep->parsed()) return cmd_report(report_file, report_json, out, err);
    } catch (const bad_parameter& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no command given\n";
    return 2;
}

}  // namespace planemf::cli
