#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gasplab/subsetsum.hpp"

using namespace gasplab;

TEST_CASE("solve_pss")
{
    CHECK(solve_pss({{5}, {{2, 3}}}) == IntSet{2, 3});
    CHECK(solve_pss({{4}, {}}) == IntSet{4});
    CHECK(solve_pss({{3, 4}, {{1}, {1, 2}}}) == IntSet{0, 1, 2});
    CHECK(solve_pss({{1}, {{2}}}).empty());

    PssSolver s({{3, 4}, {{1}, {1, 2}}});
    auto w = s.witness(1);
    REQUIRE(w.size() == 3);
    CHECK(w[0] - w[1] - w[2] == 1);
    CHECK_THROWS_AS(s.witness(7), InputError);
}

TEST_CASE("brute_pss matches the examples")
{
    CHECK(brute_pss({{5}, {{2, 3}}}) == IntSet{2, 3});
    CHECK(brute_pss({{4}, {}}) == IntSet{4});
    CHECK(brute_pss({{3, 4}, {{1}, {1, 2}}}) == IntSet{0, 1, 2});
}

TEST_CASE("solve_tss")
{
    LabeledTree star{{{5}, {0, 2}, {0, 3}, {0, 7}}, {{0, 1}, {0, 2}, {0, 3}}};
    auto r = solve_tss(star);
    REQUIRE(r.feasible);
    CHECK(r.edge_values == std::vector<int>{2, 3, 0});
    CHECK(brute_tss(star).feasible);

    LabeledTree single{{{0}}, {}};
    CHECK(solve_tss(single).feasible);
    CHECK(brute_tss(single).feasible);

    LabeledTree edge{{{2}, {3}}, {{0, 1}}};
    CHECK_FALSE(solve_tss(edge).feasible);
    CHECK_FALSE(brute_tss(edge).feasible);

    LabeledTree forest{{{1}, {1}, {2}, {2}}, {{0, 1}, {2, 3}}};
    auto f = solve_tss(forest);
    REQUIRE(f.feasible);
    CHECK(check_tss(forest, f.edge_values));

    LabeledTree triangle{{{0}, {0}, {0}}, {{0, 1}, {1, 2}, {2, 0}}};
    CHECK_THROWS_AS(solve_tss(triangle), StructureError);
}

TEST_CASE("solve_mpss")
{
    MpssSolver one({1, {5}, {{{2}, {3}}, {{0}, {1}}}});
    CHECK(one.solutions() == std::vector<IntVector>{{2}, {3}, {4}});

    MpssSolver two({2, {2, 2}, {{{1, 0}, {0, 2}}}});
    CHECK(two.solutions() == std::vector<IntVector>{{0, 2}, {1, 0}});

    MpssSolver three({2, {3, 3}, {{{1, 0}, {0, 1}}, {{2, 0}}}});
    CHECK(three.solutions() == std::vector<IntVector>{{2, 1}, {3, 0}});
    auto w = three.witness({2, 1});
    CHECK(w == std::vector<int>{1, 0});
    CHECK_THROWS_AS(three.witness({0, 0}), InputError);

    MpssSolver none({1, {3}, {{{1}}, {}}});
    CHECK(none.has_empty_set());
    CHECK(none.solutions().empty());

    CHECK(brute_mpss({1, {5}, {{{2}, {3}}, {{0}, {1}}}}) == std::vector<IntVector>{{2}, {3}, {4}});
    CHECK(brute_mpss({2, {3, 3}, {{{1, 0}, {0, 1}}, {{2, 0}}}}) == std::vector<IntVector>{{2, 1}, {3, 0}});
}

TEST_CASE("brute_mpss_find")
{
    std::vector<std::vector<WideVector>> sets{{{1, 0}, {0, 1}}, {{2, 0}, {0, 5}}};
    auto hit = brute_mpss_find(sets, {1, 5});
    REQUIRE(hit);
    CHECK(*hit == std::vector<int>{0, 1});
    CHECK_FALSE(brute_mpss_find(sets, {2, 2}));
    CHECK_THROWS_AS(brute_mpss_find(sets, {3, 0}, 1), BudgetExceeded);
}

TEST_CASE("enlarging a set never loses a solution")
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 200; ++round) {
        VectorFamily fam{2, {6, 6}, {}};
        for (int i = 0; i < 3; ++i) {
            std::vector<IntVector> set;
            for (int j = 0; j < 2; ++j)
                set.push_back({int(rng() % 4), int(rng() % 4)});
            fam.sets.push_back(set);
        }
        auto before = MpssSolver(fam).solutions();
        fam.sets[rng() % 3].push_back({int(rng() % 4), int(rng() % 4)});
        MpssSolver after(fam);
        for (auto & v : before)
            CHECK(after.contains(v));
    }
}
