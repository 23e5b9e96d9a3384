#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "supermonad/errors.hpp"
#include "supermonad/weights.hpp"

#include <random>

using namespace supermonad;

TEST_CASE("weights reject increasing sequences")
{
    CHECK_THROWS_AS(Weight({0, 1}), ValidationError);
    CHECK_THROWS_AS(RootSequence({0, 0}), ValidationError);
    CHECK_THROWS_AS(DegreeSequence({2, 2}), ValidationError);
    CHECK_NOTHROW(Weight({3, -1, -1}));
}

TEST_CASE("dim_schur on small shapes")
{
    CHECK(dim_schur({0, 0, 0}, 3) == 1);
    CHECK(dim_schur({1, 0, 0}, 3) == 3);
    CHECK(dim_schur({2, 0}, 2) == 3);
    CHECK(dim_schur({2, 1}, 2) == 2);
    CHECK_THROWS_AS(dim_schur({1, 0}, 3), ValidationError);
}

TEST_CASE("dim_schur agrees with semistandard tableau counts")
{
    for (std::size_t m = 1; m <= 4; ++m)
        for (const auto& a : oracle::all_weights(m, 0, 4))
            CHECK_MESSAGE(dim_schur(a, m) == oracle::count_ssyt(a.parts(), m), "m = " << m);
}

TEST_CASE("dim_schur is invariant under determinant twists and duality")
{
    std::mt19937 rng(20261017);
    std::uniform_int_distribution<int> shift(-5, 5);
    for (std::size_t m = 1; m <= 4; ++m)
        for (const auto& a : oracle::all_weights(m, -2, 3)) {
            CHECK(dim_schur(a.shifted(shift(rng)), m) == dim_schur(a, m));
            CHECK(dim_schur(dual_weight(a), m) == dim_schur(a, m));
            CHECK(dual_weight(dual_weight(a)) == a);
        }
}

TEST_CASE("dual_weight reverses and negates")
{
    CHECK(dual_weight({2, 0}) == Weight{0, -2});
    CHECK(dual_weight({3, 1, 0}) == Weight{0, -1, -3});
    CHECK(dual_weight({0, 0, 0}) == Weight{0, 0, 0});
}

TEST_CASE("normalize_twist subtracts the last part from the twist")
{
    // det Q* = O(-1): S_{(2,1)} Q* = Q* (x) det Q* = Q*(-1).
    CHECK(normalize_twist({2, 1}, 0) == std::pair{Weight{1, 0}, std::int64_t{-1}});
    CHECK(normalize_twist({0, 0}, 5) == std::pair{Weight{0, 0}, std::int64_t{5}});
    CHECK(normalize_twist({-1, -2}, 3) == std::pair{Weight{1, 0}, std::int64_t{5}});
}

TEST_CASE("Pieri product of two vector representations")
{
    const auto p = littlewood_richardson({1, 0}, {1, 0}, 2);
    CHECK(p == WeightMultiset{{Weight{2, 0}, 1}, {Weight{1, 1}, 1}});
}

TEST_CASE("dual of Q* tensor Sym^2")
{
    // (0,-1) (x) (2,0) = (2,-1) + (1,0) on GL_2
    const auto p = littlewood_richardson({0, -1}, {2, 0}, 2);
    CHECK(p == WeightMultiset{{Weight{2, -1}, 1}, {Weight{1, 0}, 1}});
}

TEST_CASE("LR coefficients match tableau enumeration")
{
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto ws = oracle::all_weights(m, 0, 4);
        for (const auto& a : ws)
            for (const auto& b : ws) {
                if (a.total() > 4 || b.total() > 4)
                    continue;
                CHECK(littlewood_richardson(a, b, m) == oracle::lr_product(a, b, m));
            }
    }
}

TEST_CASE("LR is symmetric and preserves dimension")
{
    std::mt19937 rng(7);
    for (std::size_t m = 1; m <= 4; ++m) {
        const auto ws = oracle::all_weights(m, -1, 3);
        std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
        for (int trial = 0; trial < 60; ++trial) {
            const auto& a = ws[pick(rng)];
            const auto& b = ws[pick(rng)];
            const auto ab = littlewood_richardson(a, b, m);
            CHECK(ab == littlewood_richardson(b, a, m));
            Integer total = 0;
            for (const auto& [nu, c] : ab)
                total += c * dim_schur(nu, m);
            CHECK(total == dim_schur(a, m) * dim_schur(b, m));
        }
    }
}

TEST_CASE("branching to a smaller general linear group")
{
    CHECK(branch_restrict({1, 0}, 2, 1) == WeightMultiset{{Weight{1}, 1}, {Weight{0}, 1}});
    CHECK(branch_restrict({2, 0}, 2, 1) == WeightMultiset{{Weight{2}, 1}, {Weight{1}, 1}, {Weight{0}, 1}});
    CHECK(branch_restrict({0, 0, 0}, 3, 1) == WeightMultiset{{Weight{0}, 1}});
    for (const auto& a : oracle::all_weights(3, -1, 2))
        CHECK(branch_restrict(a, 3, 3) == WeightMultiset{{a, 1}});
}

TEST_CASE("branching agrees with the restricted character")
{
    for (std::size_t n = 2; n <= 4; ++n)
        for (const auto& a : oracle::all_weights(n, -1, 2))
            for (std::size_t m = 1; m < n; ++m)
                CHECK(branch_restrict(a, n, m) == oracle::branch_by_character(a, n, m));
}
