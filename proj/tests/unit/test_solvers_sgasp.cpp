#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gasplab/oracle.hpp"
#include "gasplab/solvers_sgasp.hpp"
#include "support/reference.hpp"

using namespace gasplab;

namespace {

auto count_patterns(int T, int A) -> int
{
    int n = 0;
    enumerate_acyclic_patterns(T, A, std::vector<bool>(T, false), std::vector<bool>(A, false),
                               [&](const PatternGraph &) {
                                   ++n;
                                   return true;
                               });
    return n;
}

auto all_solvers(const TypedInstance & inst) -> std::vector<SolveResult>
{
    return {solve_fpt_ta(inst), solve_xp_t(inst), solve_fpt_n(inst), solve_fpt_n(inst, {10, true})};
}

} // namespace

TEST_CASE("acyclic patterns")
{
    CHECK(count_patterns(2, 2) == 15);
    CHECK(count_patterns(1, 1) == 2);
    CHECK(count_patterns(2, 1) == 4);
    // K_{1,3} has no cycle, so every edge set counts
    CHECK(count_patterns(1, 3) == 8);

    int with_required = 0;
    enumerate_acyclic_patterns(2, 2, {true, true}, {true, true}, [&](const PatternGraph & g) {
        CHECK(is_forest(2, 2, g.edges));
        ++with_required;
        return true;
    });
    // spanning forests of K_{2,2} touching all four vertices: 4 paths of length 3, 2 matchings
    CHECK(with_required == 6);

    int seen = 0;
    enumerate_acyclic_patterns(2, 2, {false, false}, {false, false}, [&](const PatternGraph &) { return ++seen < 3; });
    CHECK(seen == 3);
}

TEST_CASE("small verdicts")
{
    struct Case {
        TypedInstance inst;
        bool expected;
    };
    std::vector<Case> cases{
        {ref::sgasp(1, {ref::approval("t1", 2, {{2}})}), true},
        {ref::sgasp(1, {ref::approval("t1", 1, {{2}}), ref::approval("t2", 1, {{1}})}), false},
        {ref::sgasp(0, {ref::approval("t1", 3, {})}), true},
        {ref::sgasp(2, {ref::approval("t1", 3, {{1}, {2}})}), true},
        {ref::sgasp(1, {ref::approval("t1", 2, {{1}})}), true},
        {ref::sgasp(1, {ref::approval("t1", 1, {{}})}), true},
    };
    for (auto & c : cases) {
        REQUIRE(ref::exists(c.inst) == c.expected);
        for (auto & r : all_solvers(c.inst)) {
            CAPTURE(r.algorithm);
            CHECK(r.exists == c.expected);
            CHECK(r.witness.has_value() == c.expected);
            if (r.witness)
                CHECK(ref::stable(c.inst, *r.witness));
        }
    }
}

TEST_CASE("the only stable assignment of t1(2,{1}) keeps one agent home")
{
    auto inst = ref::sgasp(1, {ref::approval("t1", 2, {{1}})});
    auto r = solve_xp_t(inst);
    REQUIRE(r.witness);
    CHECK(r.witness->at(0, 0) == 1);
}

TEST_CASE("find_ir_assignment honours the perfect set and the non-empty activities")
{
    auto inst = ref::sgasp(2, {ref::approval("t1", 3, {{1}, {2}})});
    auto full = find_ir_assignment(inst, {true}, {false, false});
    REQUIRE(full);
    CHECK(full->at(0, 0) == 1);
    CHECK(full->at(0, 1) == 2);

    auto partial = find_ir_assignment(inst, {false}, {false, true});
    REQUIRE(partial);
    CHECK(partial->assigned(0) < 3);
    CHECK(partial->size(1) == 2);

    // one agent must stay home, and nobody approves (a,1)
    CHECK_FALSE(find_ir_assignment(ref::sgasp(1, {ref::approval("t1", 2, {{2}})}), {false}, {true}));
}

TEST_CASE("fpt-n refuses large instances")
{
    auto inst = ref::sgasp(1, {ref::approval("t1", 11, {{1}})});
    CHECK_THROWS_AS(solve_fpt_n(inst), BudgetExceeded);
}

TEST_CASE("branch budget is enforced")
{
    auto inst = ref::sgasp(3, {ref::approval("t1", 3, {{1, 2}, {2}, {3}}), ref::approval("t2", 2, {{1}, {1, 2}, {}})});
    Limits tight;
    tight.max_branches = 1;
    CHECK_THROWS_AS(solve_fpt_ta(inst, tight), BudgetExceeded);
}

TEST_CASE("solvers agree with the reference on random instances")
{
    std::mt19937_64 rng(2024);
    int yes = 0, no = 0;
    for (int round = 0; round < 150; ++round) {
        int T = 1 + int(rng() % 3), A = 1 + int(rng() % 3);
        std::vector<AgentType> types;
        int n = 0;
        std::vector<int> counts;
        for (int t = 0; t < T; ++t)
            n += counts.emplace_back(1 + int(rng() % 3));
        for (int t = 0; t < T; ++t) {
            std::vector<std::vector<int>> sizes(A);
            for (int a = 0; a < A; ++a)
                for (int s = 1; s <= n; ++s)
                    if (rng() % 3 == 0)
                        sizes[a].push_back(s);
            types.push_back(ref::approval("t" + std::to_string(t), counts[t], sizes));
        }
        auto inst = ref::sgasp(A, types);
        bool expected = ref::exists(inst);
        (expected ? yes : no)++;
        for (auto & r : all_solvers(inst)) {
            CAPTURE(r.algorithm);
            CHECK(r.exists == expected);
            if (r.witness)
                CHECK(ref::stable(inst, *r.witness));
        }
    }
    CHECK(yes > 0);
    CHECK(no > 0);
}
