#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gasplab/generators.hpp"
#include "gasplab/io.hpp"
#include "gasplab/oracle.hpp"
#include "gasplab/solver_gasp.hpp"
#include "gasplab/solvers_sgasp.hpp"

using namespace gasplab;
using nlohmann::json;

namespace {

enum Exit { decided = 0, violations = 1, bad_input = 2, out_of_budget = 3 };

auto emit(const json & j, const std::string & out) -> void
{
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json(out, j);
}

auto limits_for(double timeout) -> Limits
{
    return timeout > 0 ? Limits::with_timeout(timeout) : default_limits();
}

struct Outcome {
    std::string answer; // yes, no, budget, timeout
    json witness;
    SolveStats stats;
};

auto run_solver(const InstanceFile & file, const std::string & alg, double timeout) -> Outcome
{
    auto limits = limits_for(timeout);
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        if (file.kind == InstanceKind::GGasp) {
            if (alg != "brute")
                throw InputError("network instances can only be solved with --alg brute");
            auto & net = file.network();
            auto r = oracle_ggasp(net, OracleOptions{false, limits.max_nodes});
            o.answer = r.exists ? "yes" : "no";
            if (r.exists)
                o.witness = assignment_to_json(net, r.stable.front());
            o.stats.branches = r.visited;
        }
        else if (file.kind == InstanceKind::SGasp || file.kind == InstanceKind::Gasp) {
            auto & inst = file.typed();
            bool approval = file.kind == InstanceKind::SGasp;
            if (alg == "brute") {
                auto r = approval ? oracle_sgasp(inst, OracleOptions{false, limits.max_nodes})
                                  : oracle_gasp(inst, OracleOptions{false, limits.max_nodes});
                o.answer = r.exists ? "yes" : "no";
                if (r.exists)
                    o.witness = assignment_to_json(inst, r.stable.front());
                o.stats.branches = r.visited;
            }
            else {
                SolveResult r;
                if (alg == "xp-gasp")
                    r = solve_xp_gasp(inst, {}, limits);
                else if (! approval)
                    throw InputError("ranked instances can only be solved with xp-gasp or brute");
                else if (alg == "fpt-ta")
                    r = solve_fpt_ta(inst, limits);
                else if (alg == "xp-t")
                    r = solve_xp_t(inst, limits);
                else if (alg == "fpt-n")
                    r = solve_fpt_n(inst, {}, limits);
                else
                    throw InputError("unknown algorithm '" + alg + "'");
                o.answer = r.exists ? "yes" : "no";
                if (r.witness)
                    o.witness = assignment_to_json(inst, *r.witness);
                o.stats = r.stats;
            }
        }
        else
            throw InputError("solve needs an sgasp, gasp or ggasp instance, got " + kind_name(file.kind));
    }
    catch (const Timeout &) {
        o.answer = "timeout";
    }
    catch (const BudgetExceeded &) {
        o.answer = "budget";
    }
    o.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return o;
}

auto cmd_solve(const std::string & path, const std::string & alg, double timeout, const std::string & out,
               const std::string & witness_out) -> int
{
    auto file = parse_instance(read_json(path));
    auto o = run_solver(file, alg, timeout);
    json result{{"instance", path},
                {"algorithm", alg},
                {"answer", o.answer},
                {"exists", o.answer == "yes" ? json(true) : o.answer == "no" ? json(false) : json(nullptr)},
                {"stats", {{"wall_ms", o.stats.wall_ms}, {"branches", o.stats.branches}}}};
    if (! o.witness.is_null())
        result["witness"] = o.witness;
    emit(result, out);
    if (! witness_out.empty() && ! o.witness.is_null())
        write_json(witness_out, o.witness);
    if (o.answer == "budget" || o.answer == "timeout") {
        std::cerr << "gasplab: " << o.answer << " exhausted before a decision\n";
        return out_of_budget;
    }
    return decided;
}

auto cmd_verify(const std::string & instance_path, const std::string & assignment_path, const std::string & out) -> int
{
    auto file = parse_instance(read_json(instance_path));
    auto aj = read_json(assignment_path);
    if (aj.contains("witness"))
        aj = aj.at("witness");
    json report;
    bool stable = false;
    if (file.kind == InstanceKind::GGasp) {
        auto & net = file.network();
        auto r = verify_ggasp(net, parse_agent_assignment(net, aj));
        stable = r.stable();
        report = report_to_json(net, r);
    }
    else if (file.kind == InstanceKind::SGasp || file.kind == InstanceKind::Gasp) {
        auto & inst = file.typed();
        auto x = parse_type_assignment(inst, aj);
        auto r = file.kind == InstanceKind::SGasp ? verify_sgasp(inst, x) : verify_gasp(inst, x);
        stable = r.stable();
        report = report_to_json(inst, r);
    }
    else
        throw InputError("verify needs an sgasp, gasp or ggasp instance");
    emit(report, out);
    return stable ? decided : violations;
}

struct GenParams {
    int length = 5;
    std::string input;
    int k = 3, n = 2, m = 2;
    bool plant = true;
    bool no_scale = false;
    RandomParams random;
    std::string witness_out;
};

auto clique_source(const GenParams & p) -> PartitionedClique
{
    if (! p.input.empty()) {
        auto f = parse_instance(read_json(p.input));
        if (f.kind != InstanceKind::PClique)
            throw InputError(p.input + " is not a partitioned clique instance");
        return std::get<PartitionedClique>(f.data);
    }
    return random_partitioned_clique(p.k, p.n, p.m, p.plant, p.random.seed);
}

auto with_clique(json metadata, const PartitionedClique & pc, const std::optional<Clique> & clique) -> json
{
    json pj = to_json(InstanceFile{InstanceKind::PClique, pc, json::object()});
    pj.erase("metadata");
    pj.erase("format");
    pj.erase("version");
    metadata["pclique"] = pj;
    if (clique) {
        std::vector<int> one_based;
        for (int v : *clique)
            one_based.push_back(v + 1);
        metadata["clique"] = one_based;
    }
    else
        metadata["clique"] = nullptr;
    return metadata;
}

auto cmd_gen(const std::string & sub, const GenParams & p, const std::string & out) -> int
{
    json result;
    json witness;
    if (sub == "sidon")
        result = {{"kind", "sidon"}, {"sequence", sidon(p.length)}};
    else if (sub == "pclique") {
        auto pc = random_partitioned_clique(p.k, p.n, p.m, p.plant, p.random.seed);
        result = to_json(InstanceFile{InstanceKind::PClique, pc,
                                      {{"source", "random_partitioned_clique"}, {"seed", p.random.seed}}});
    }
    else if (sub == "pc-smpss") {
        auto pc = clique_source(p);
        auto g = pc_to_smpss(pc);
        auto clique = find_partitioned_clique(pc);
        auto meta = with_clique(g.metadata, pc, clique);
        meta["components"] = g.component_names;
        meta["set_names"] = g.set_names;
        if (clique)
            meta["selection"] = smpss_clique_selection(pc, *clique);
        result = to_json(InstanceFile{InstanceKind::Smpss, g.instance, meta});
    }
    else if (sub == "smpss-sgasp") {
        if (p.input.empty())
            throw InputError("smpss-sgasp needs --input");
        auto f = parse_instance(read_json(p.input));
        if (f.kind != InstanceKind::Smpss)
            throw InputError(p.input + " is not a subset-sum instance");
        auto & s = std::get<SmpssInstance>(f.data);
        auto g = smpss_to_sgasp(s, ! p.no_scale);
        if (f.metadata.contains("selection")) {
            auto selection = f.metadata.at("selection").get<std::vector<int>>();
            witness = assignment_to_json(g.instance, smpss_selection_assignment(s, g, selection, ! p.no_scale));
        }
        result = to_json(make_file(g.instance, g.metadata));
    }
    else if (sub == "pc-gasp") {
        auto pc = clique_source(p);
        auto g = pc_to_gasp(pc);
        auto clique = find_partitioned_clique(pc);
        if (clique)
            witness = assignment_to_json(g.instance, gasp_clique_assignment(pc, g, *clique));
        result = to_json(make_file(g.instance, with_clique(g.metadata, pc, clique)));
    }
    else if (sub == "pc-ggasp") {
        auto pc = clique_source(p);
        auto g = pc_to_ggasp(pc);
        auto clique = find_partitioned_clique(pc);
        if (clique)
            witness = assignment_to_json(g.instance, ggasp_clique_assignment(pc, g, *clique));
        auto meta = with_clique(g.metadata, pc, clique);
        std::vector<std::string> cover;
        for (int c : g.cover)
            cover.push_back(g.instance.agents()[c].id);
        meta["cover"] = cover;
        result = to_json(make_file(g.instance, meta));
    }
    else if (sub == "random-sgasp" || sub == "random-gasp" || sub == "random-ggasp") {
        json meta{{"source", sub},
                  {"types", p.random.types},
                  {"activities", p.random.activities},
                  {"agents", p.random.agents},
                  {"density", p.random.density},
                  {"seed", p.random.seed}};
        if (sub == "random-sgasp")
            result = to_json(make_file(random_sgasp(p.random), meta));
        else if (sub == "random-gasp")
            result = to_json(make_file(random_gasp(p.random), meta));
        else {
            meta["link_density"] = p.random.link_density < 0 ? p.random.density : p.random.link_density;
            result = to_json(make_file(random_ggasp(p.random), meta));
        }
    }
    else
        throw InputError("unknown generator '" + sub + "'");

    emit(result, out);
    if (! p.witness_out.empty()) {
        if (witness.is_null())
            throw InputError("this instance has no planted witness");
        write_json(p.witness_out, witness);
    }
    return decided;
}

auto split(const std::string & s, char sep) -> std::vector<std::string>
{
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep))
        if (! item.empty())
            parts.push_back(item);
    return parts;
}

auto cmd_bench(const std::string & suite, const std::string & algs, double timeout, const std::string & out) -> int
{
    std::ifstream in(suite);
    if (! in)
        throw InputError("cannot open " + suite);
    auto base = std::filesystem::path(suite).parent_path();
    std::vector<std::filesystem::path> instances;
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#')
            continue;
        auto e = line.find_last_not_of(" \t\r");
        std::filesystem::path p = line.substr(b, e - b + 1);
        instances.push_back(p.is_absolute() ? p : base / p);
    }
    auto list = split(algs, ',');
    if (list.empty())
        throw InputError("bench needs at least one algorithm");
    std::vector<InstanceFile> files;
    for (auto & path : instances)
        files.push_back(parse_instance(read_json(path)));

    std::ostringstream csv;
    csv << "instance,algorithm,answer,exit,wall_ms,branches\n";
    bool disagreement = false;
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::map<std::string, int> answers;
        for (auto & alg : list) {
            auto o = run_solver(files[i], alg, timeout);
            int code = (o.answer == "yes" || o.answer == "no") ? decided : out_of_budget;
            csv << instances[i].filename().string() << "," << alg << "," << o.answer << "," << code << ","
                << o.stats.wall_ms << "," << o.stats.branches << "\n";
            if (code == decided)
                ++answers[o.answer];
        }
        if (answers.size() > 1) {
            disagreement = true;
            std::cerr << "gasplab: algorithms disagree on " << instances[i] << "\n";
        }
    }
    if (out.empty())
        std::cout << csv.str();
    else {
        std::ofstream f(out);
        f << csv.str();
    }
    return disagreement ? violations : decided;
}

} // namespace

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"gasplab: stable group activity assignments"};
    app.require_subcommand(1);

    std::string out;
    double timeout = 0;

    std::string solve_path, alg = "fpt-ta", witness_out;
    auto solve = app.add_subcommand("solve", "decide whether a stable assignment exists");
    solve->add_option("instance,--in", solve_path, "instance file")->required();
    solve->add_option("--alg", alg, "fpt-ta, xp-t, fpt-n, xp-gasp or brute")
        ->check(CLI::IsMember({"fpt-ta", "xp-t", "fpt-n", "xp-gasp", "brute"}));
    solve->add_option("--timeout", timeout, "seconds");
    solve->add_option("--witness", witness_out, "write the stable assignment here");
    solve->add_option("--out", out, "write the result here instead of stdout");

    std::string verify_instance, verify_assignment;
    auto verify = app.add_subcommand("verify", "check an assignment for stability");
    verify->add_option("instance,--in", verify_instance)->required();
    verify->add_option("assignment,--assignment", verify_assignment)->required();
    verify->add_option("--out", out);

    std::string gen_kind;
    GenParams gp;
    auto gen = app.add_subcommand("gen", "generate instances");
    gen->add_option("generator", gen_kind,
                    "sidon, pclique, pc-smpss, smpss-sgasp, pc-gasp, pc-ggasp, random-sgasp, random-gasp, random-ggasp")
        ->required();
    gen->add_option("--length", gp.length);
    gen->add_option("--input", gp.input, "source instance for reductions");
    gen->add_option("-k", gp.k, "parts");
    gen->add_option("-n", gp.n, "vertices per part");
    gen->add_option("-m", gp.m, "edges per pair of parts");
    gen->add_flag("!--no-plant", gp.plant, "do not plant a clique");
    gen->add_flag("--no-scale", gp.no_scale, "subset-sum values are already multiplied by 3");
    gen->add_option("--types", gp.random.types);
    gen->add_option("--activities", gp.random.activities);
    gen->add_option("--agents", gp.random.agents, "most agents per type");
    gen->add_option("--density", gp.random.density);
    gen->add_option("--link-density", gp.random.link_density);
    gen->add_option("--seed", gp.random.seed);
    gen->add_option("--witness-out", gp.witness_out, "write the planted stable assignment here");
    gen->add_option("--out", out);

    std::string suite, algs = "fpt-ta,xp-t,fpt-n,brute";
    auto bench = app.add_subcommand("bench", "run several algorithms over a suite");
    bench->add_option("suite,--suite", suite, "text file, one instance path per line")->required();
    bench->add_option("--alg", algs, "comma-separated algorithms");
    bench->add_option("--timeout", timeout, "seconds per run");
    bench->add_option("--out", out, "CSV file");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return bad_input;
    }

    try {
        if (solve->parsed())
            return cmd_solve(solve_path, alg, timeout, out, witness_out);
        if (verify->parsed())
            return cmd_verify(verify_instance, verify_assignment, out);
        if (gen->parsed())
            return cmd_gen(gen_kind, gp, out);
        if (bench->parsed())
            return cmd_bench(suite, algs, timeout, out);
    }
    catch (const InputError & e) {
        std::cerr << "gasplab: " << e.what() << "\n";
        return bad_input;
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "gasplab: " << e.what() << "\n";
        return out_of_budget;
    }
    catch (const StructureError & e) {
        std::cerr << "gasplab: " << e.what() << "\n";
        return bad_input;
    }
    return bad_input;
}
