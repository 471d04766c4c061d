#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gasplab/io.hpp"
#include "support/cli.hpp"

using namespace gasplab;
using nlohmann::json;

TEST_CASE("every fixture survives a round trip")
{
    for (auto name : {"sgasp_pair.json", "sgasp_no.json", "sgasp_split.json", "gasp_single.json", "gasp_no_stable.json",
                      "ggasp_linked.json", "ggasp_ranked.json", "smpss_small.json", "pclique_small.json"}) {
        CAPTURE(name);
        auto file = parse_instance(read_json(cli::fixtures / name));
        auto again = parse_instance(to_json(file));
        CHECK(again == file);
        CHECK(to_json(again) == to_json(file));
    }
}

TEST_CASE("parse errors name the problem")
{
    CHECK_THROWS_AS(read_json(cli::fixtures / "malformed.json"), InputError);
    CHECK_THROWS_AS(parse_instance(read_json(cli::fixtures / "unknown_activity.json")), InputError);
    CHECK_THROWS_AS(parse_instance(json{{"kind", "nope"}}), InputError);
    CHECK_THROWS_AS(parse_instance(json{{"kind", "gasp"}, {"activities", {"a"}}, {"types", {{{"id", "t"}, {"count", 1}, {"ranks", {1}}}}}}),
                    InputError);
    CHECK_THROWS_AS(parse_instance(json{{"kind", "smpss"}, {"d", 1}, {"target", {2}}, {"sets", {{{1}, {1}}}}}),
                    InputError);
}

TEST_CASE("assignments round trip")
{
    auto file = parse_instance(read_json(cli::fixtures / "sgasp_split.json"));
    auto x = TypeCountAssignment::from_rows({{1, 2}}, 2);
    CHECK(parse_type_assignment(file.typed(), assignment_to_json(file.typed(), x)) == x);
    CHECK_THROWS_AS(parse_type_assignment(file.typed(), json{{"counts", {{"t9", json::object()}}}}), InputError);
    CHECK_THROWS_AS(parse_type_assignment(file.typed(), json{{"counts", {{"t1", {{"a1", 4}}}}}}), InvalidAssignment);

    auto net = parse_instance(read_json(cli::fixtures / "ggasp_ranked.json"));
    AgentAssignment pi{0, 0, 1};
    CHECK(parse_agent_assignment(net.network(), assignment_to_json(net.network(), pi)) == pi);
    CHECK(parse_agent_assignment(net.network(), json{{"agents", {{"z", "b"}}}}) == AgentAssignment{kVoid, kVoid, 1});
}

TEST_CASE("solve")
{
    auto yes = cli::run("solve --alg fpt-ta --in " + cli::fixture("sgasp_pair.json"));
    CHECK(yes.code == 0);
    auto j = json::parse(yes.out);
    CHECK(j["exists"] == true);
    CHECK(j.contains("witness"));

    auto no = cli::run("solve --alg xp-gasp --in " + cli::fixture("gasp_no_stable.json"));
    CHECK(no.code == 0);
    CHECK(json::parse(no.out)["exists"] == false);

    CHECK(cli::run("solve --alg fpt-ta --in " + cli::fixture("gasp_single.json")).code == 2);
    CHECK(cli::run("solve --alg fpt-ta --in " + cli::fixture("malformed.json")).code == 2);
    CHECK(cli::run("solve --alg fpt-ta --in /nonexistent.json").code == 2);
    CHECK(cli::run("solve --alg quantum --in " + cli::fixture("sgasp_pair.json")).code == 2);
    CHECK(cli::run("solve --alg brute --in " + cli::fixture("ggasp_ranked.json")).code == 0);
}

TEST_CASE("budget override")
{
    CHECK(cli::run("solve --alg brute --in " + cli::fixture("sgasp_split.json"), "GASPLAB_BUDGET=2").code == 3);
    CHECK(cli::run("solve --alg brute --in " + cli::fixture("sgasp_split.json"), "GASPLAB_BUDGET=lots").code == 2);
    CHECK(cli::run("solve --alg brute --in " + cli::fixture("sgasp_split.json"), "GASPLAB_BUDGET=100000").code == 0);
}

TEST_CASE("solve then verify")
{
    auto dir = cli::scratch();
    for (auto name : {"sgasp_pair.json", "sgasp_split.json", "gasp_single.json", "ggasp_linked.json"}) {
        CAPTURE(name);
        auto witness = (dir / "w.json").string();
        auto alg = std::string(name).starts_with("sgasp") ? "fpt-ta" : std::string(name).starts_with("gasp") ? "xp-gasp" : "brute";
        REQUIRE(cli::run("solve --alg " + std::string(alg) + " --in " + cli::fixture(name) + " --witness " + witness).code == 0);
        CHECK(cli::run("verify --in " + cli::fixture(name) + " --assignment " + witness).code == 0);
    }
}

TEST_CASE("verify")
{
    auto dir = cli::scratch();
    auto bad = (dir / "bad.json").string();
    write_json(bad, json{{"counts", {{"t1", {{"a", 1}}}}}});
    auto r = cli::run("verify --in " + cli::fixture("sgasp_pair.json") + " --assignment " + bad);
    CHECK(r.code == 1);
    auto report = json::parse(r.out);
    CHECK(report["stable"] == false);
    CHECK(report["violations"].size() >= 1);

    auto ghost = (dir / "ghost.json").string();
    write_json(ghost, json{{"counts", {{"nobody", json::object()}}}});
    CHECK(cli::run("verify --in " + cli::fixture("sgasp_pair.json") + " --assignment " + ghost).code == 2);
    CHECK(cli::run("verify --in " + cli::fixture("sgasp_pair.json") + " --assignment " + cli::fixture("malformed.json")).code == 2);
}

TEST_CASE("planted network witness, then one agent moved")
{
    auto dir = cli::scratch();
    auto inst = (dir / "net.json").string(), w = (dir / "net_w.json").string();
    REQUIRE(cli::run("gen pc-ggasp -k 3 -n 2 -m 1 --seed 5 --out " + inst + " --witness-out " + w).code == 0);
    CHECK(cli::run("verify --in " + inst + " --assignment " + w).code == 0);

    auto pi = read_json(w);
    pi["agents"]["fwd1"] = std::string(kVoidId);
    write_json(w, pi);
    auto r = cli::run("verify --in " + inst + " --assignment " + w);
    CHECK(r.code == 1);
    CHECK(r.out.find("fwd1") != std::string::npos);
}

TEST_CASE("gen")
{
    auto s = cli::run("gen sidon --length 5");
    REQUIRE(s.code == 0);
    CHECK(json::parse(s.out)["sequence"] == json{1, 2, 4, 8, 13});

    auto g = cli::run("gen pc-gasp --input " + cli::fixture("pclique_small.json"));
    REQUIRE(g.code == 0);
    auto file = parse_instance(json::parse(g.out));
    CHECK(file.typed().activity_count() == 6);
    CHECK(file.typed().type_count() == 7);
    CHECK(file.typed().agent_count() == 25);

    auto a = cli::run("gen random-sgasp --seed 7");
    auto b = cli::run("gen random-sgasp --seed 7");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    CHECK(cli::run("gen pc-gasp -k 2 -n 2 -m 1").code == 2);
    CHECK(cli::run("gen warp-drive").code == 2);
}

TEST_CASE("bench")
{
    auto dir = cli::scratch();
    auto csv = (dir / "bench.csv").string();
    auto r = cli::run("bench --suite " + cli::fixture("suite.txt") + " --alg fpt-ta,xp-t,brute --out " + csv);
    CHECK(r.code == 0);
    auto text = cli::slurp(csv);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 3 * 3);

    auto e = cli::run("bench --suite " + cli::fixture("empty_suite.txt") + " --alg fpt-ta");
    CHECK(e.code == 0);
    CHECK(e.out == "instance,algorithm,answer,exit,wall_ms,branches\n");

    auto tight = cli::run("bench --suite " + cli::fixture("suite.txt") + " --alg brute", "GASPLAB_BUDGET=2");
    CHECK(tight.code == 0);
    CHECK(tight.out.find(",budget,3,") != std::string::npos);

    auto dangling = (dir / "dangling.txt").string();
    std::ofstream(dangling) << "missing.json\n";
    CHECK(cli::run("bench --suite " + dangling).code == 2);
}
