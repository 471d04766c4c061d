#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gasplab/oracle.hpp"
#include "support/reference.hpp"

using namespace gasplab;

TEST_CASE("oracle_sgasp lists every stable assignment")
{
    auto inst = ref::sgasp(1, {ref::approval("t1", 2, {{2}})});
    auto r = oracle_sgasp(inst, {true});
    CHECK(r.exists);
    std::vector<int> at_a;
    for (auto & x : r.stable)
        at_a.push_back(x.at(0, 0));
    std::sort(at_a.begin(), at_a.end());
    CHECK(at_a == std::vector<int>{0, 2});

    auto lone = ref::sgasp(1, {ref::approval("t1", 1, {{1}})});
    auto l = oracle_sgasp(lone, {true});
    REQUIRE(l.stable.size() == 1);
    CHECK(l.stable[0].at(0, 0) == 1);

    CHECK(oracle_sgasp(ref::sgasp(2, {})).exists);
}

TEST_CASE("oracle_gasp")
{
    auto crossed = ref::gasp(1, {ref::ranked("t1", 1, {{0, 1, 3}, {kVoid, 1, 2}, {0, 2, 1}}),
                                 ref::ranked("t2", 1, {{0, 2, 3}, {kVoid, 1, 2}, {0, 1, 1}})});
    auto r = oracle_gasp(crossed, {true});
    CHECK_FALSE(r.exists);
    CHECK(r.stable.empty());
    CHECK(r.visited > 0);
}

TEST_CASE("oracle budget")
{
    auto inst = ref::sgasp(3, {ref::approval("t1", 6, {{1}, {2}, {3}}), ref::approval("t2", 6, {{4}, {5}, {6}})});
    CHECK_THROWS_AS(oracle_sgasp(inst, {false, 10}), BudgetExceeded);
}

TEST_CASE("oracle_ggasp")
{
    auto base = ref::sgasp(1, {ref::approval("t", 2, {{2}})});
    NetworkInstance linked(base, {{"u", 0}, {"v", 0}}, {{0, 1}});
    NetworkInstance apart(base, {{"u", 0}, {"v", 0}}, {});

    auto l = oracle_ggasp(linked, {true});
    CHECK(l.exists);
    CHECK(std::find(l.stable.begin(), l.stable.end(), AgentAssignment{0, 0}) != l.stable.end());

    auto a = oracle_ggasp(apart, {true});
    CHECK(a.exists);
    CHECK(a.stable == std::vector<AgentAssignment>{{kVoid, kVoid}});

    CHECK_THROWS_AS(oracle_ggasp(linked, {false, 3}), BudgetExceeded);
}

TEST_CASE("oracles match the reference, whatever the declaration order")
{
    std::mt19937_64 rng(9);
    for (int round = 0; round < 150; ++round) {
        int T = 1 + int(rng() % 3), A = 1 + int(rng() % 2);
        std::vector<int> counts;
        int n = 0;
        for (int t = 0; t < T; ++t)
            n += counts.emplace_back(1 + int(rng() % 2));
        std::vector<AgentType> types;
        for (int t = 0; t < T; ++t) {
            std::vector<std::tuple<int, int, std::int64_t>> e{{kVoid, 1, 0}};
            for (int a = 0; a < A; ++a)
                for (int s = 1; s <= n; ++s)
                    if (rng() % 2)
                        e.emplace_back(a, s, std::int64_t(rng() % 5) - 2);
            types.push_back(ref::ranked("t" + std::to_string(t), counts[t], e));
        }
        auto inst = ref::gasp(A, types);
        bool expected = ref::exists(inst);
        CHECK(oracle_gasp(inst).exists == expected);

        std::reverse(types.begin(), types.end());
        CHECK(oracle_gasp(ref::gasp(A, types)).exists == expected);

        if (T <= 2 && n <= 4)
            CHECK(oracle_ggasp(complete_network(inst)).exists == expected);
    }
}
