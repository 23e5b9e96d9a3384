#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "supermonad/decomp.hpp"
#include "supermonad/errors.hpp"

#include <random>

using namespace supermonad;

namespace {

SheafExpr mixed()
{
    SheafExpr f(2);
    f.add(1, BundleExpr::tautological_dual(2));
    f.add(Rational(1, 3), BundleExpr::schur(2, {2, 0}, 1));
    return f;
}

// A descending chain: each step lowers one root while keeping it strictly
// decreasing.
std::vector<RootSequence> random_chain(std::mt19937& rng, std::size_t n, std::size_t length)
{
    std::uniform_int_distribution<std::size_t> slot(0, n - 1);
    std::vector<std::int64_t> f(n);
    for (std::size_t k = 0; k < n; ++k)
        f[k] = 2 - 2 * static_cast<std::int64_t>(k);
    std::vector<RootSequence> out{RootSequence(f)};
    while (out.size() < length) {
        const std::size_t k = slot(rng);
        if (k + 1 < n && f[k] - 1 <= f[k + 1])
            continue;
        --f[k];
        out.emplace_back(f);
    }
    return out;
}

bool chain_ordered(const BSDecomposition& d)
{
    for (std::size_t t = 1; t < d.terms.size(); ++t)
        for (std::size_t k = 0; k < d.n; ++k)
            if (d.terms[t].roots[k] > d.terms[t - 1].roots[k])
                return false;
    return true;
}

} // namespace

TEST_CASE("mixed supernatural sum decomposes into two pure tables")
{
    const Window w(-6, 4);
    const auto d = bs_decompose(mixed(), w);
    REQUIRE(d.terms.size() == 2);
    CHECK(d.terms[0].roots == RootSequence{0, -2});
    CHECK(d.terms[0].coeff == 2);
    CHECK(d.terms[1].roots == RootSequence{0, -3});
    CHECK(d.terms[1].coeff == 1);
    CHECK(equivariant_coefficients(d) == std::vector<Rational>{1, Rational(1, 3)});
    CHECK(equivariant_representative(d.terms[0].roots) == BundleExpr::tautological_dual(2));
    CHECK(equivariant_representative(d.terms[1].roots) == BundleExpr::schur(2, {2, 0}, 1));
    CHECK(reassemble(d, w) == cohomology_table(mixed(), w));
}

TEST_CASE("O + O(-1) on P^1")
{
    const Window w(-4, 3);
    const auto d = bs_decompose(BundleExpr::line(1, 0) + BundleExpr::line(1, -1), w);
    REQUIRE(d.terms.size() == 2);
    CHECK(d.terms[0].roots == RootSequence{0});
    CHECK(d.terms[1].roots == RootSequence{-1});
    // independent solve: the column at -1 only sees roots (0), the column at 0 only (-1)
    const auto t = cohomology_table(BundleExpr::line(1, 0) + BundleExpr::line(1, -1), w);
    CHECK(d.terms[0].coeff == t.at(1, -1) / supernatural_table({0}, 1, w).at(1, -1));
    CHECK(d.terms[1].coeff == t.at(0, 0) / supernatural_table({-1}, 1, w).at(0, 0));
    CHECK(d.terms[0].coeff == 1);
    CHECK(d.terms[1].coeff == 1);
}

TEST_CASE("a single equivariant bundle is already pure")
{
    const Window w(-9, 6);
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& a : oracle::all_weights(n, 0, 3))
            for (std::int64_t e = -1; e <= 1; ++e) {
                const auto b = BundleExpr::schur(n, a, e);
                const auto d = bs_decompose(b, w);
                REQUIRE(d.terms.size() == 1);
                CHECK(d.terms[0].roots == supernatural_roots(b));
                CHECK(d.terms[0].coeff == Rational(b.rank()));
                CHECK(equivariant_representative(d.terms[0].roots) == b);
                CHECK(equivariant_coefficients(d) == std::vector<Rational>{1});
            }
}

TEST_CASE("decomposing a decomposition returns it")
{
    const Window w(-6, 4);
    const auto d = bs_decompose(mixed(), w);
    const auto again = bs_decompose(reassemble(d, w));
    REQUIRE(again.terms.size() == d.terms.size());
    for (std::size_t k = 0; k < d.terms.size(); ++k) {
        CHECK(again.terms[k].roots == d.terms[k].roots);
        CHECK(again.terms[k].coeff == d.terms[k].coeff);
    }
}

TEST_CASE("random positive chain combinations are recovered exactly")
{
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> num(1, 9), den(1, 4);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            const auto chain = random_chain(rng, n, 1 + static_cast<std::size_t>(trial % 4));
            const Window w(-12, 8);
            CohomologyTable t(n, w);
            std::vector<Rational> coeffs;
            for (const auto& f : chain) {
                coeffs.emplace_back(num(rng), den(rng));
                coeffs.back().canonicalize();
                t = add(t, supernatural_table(f, coeffs.back(), w));
            }
            const auto d = bs_decompose(t);
            CHECK(reassemble(d, w) == t);
            CHECK(chain_ordered(d));
            for (const auto& term : d.terms)
                CHECK(term.coeff > 0);
            REQUIRE(d.terms.size() == chain.size());
            for (std::size_t k = 0; k < chain.size(); ++k) {
                CHECK(d.terms[k].roots == chain[k]);
                CHECK(d.terms[k].coeff == coeffs[k]);
            }
        }
}

TEST_CASE("random bundles reassemble with positive chained terms")
{
    std::mt19937 rng(77);
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto ws = oracle::all_weights(n, 0, 2);
        std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
        std::uniform_int_distribution<int> tw(-2, 2);
        for (int trial = 0; trial < 15; ++trial) {
            BundleExpr b(n);
            b.add(ws[pick(rng)], tw(rng), 1);
            b.add(ws[pick(rng)], tw(rng), 1);
            const Window w(-14, 10);
            const auto d = bs_decompose(b, w);
            CHECK(reassemble(d, w) == cohomology_table(b, w));
            CHECK(chain_ordered(d));
        }
    }
}

TEST_CASE("tables that are not positive chain combinations are refused")
{
    CohomologyTable lonely(2, Window(-3, 3));
    lonely.set(1, -3, 1);
    CHECK_THROWS_AS(bs_decompose(lonely), MathRefusal);
    // the window misses the structure sheaf's roots
    CHECK_THROWS_AS(bs_decompose(BundleExpr::line(2, 0), Window(0, 3)), MathRefusal);
    CHECK(bs_decompose(CohomologyTable(2, Window(-2, 2))).terms.empty());
}

TEST_CASE("hypothesis check against W^perp")
{
    const auto m = build_monad({0, 2, 3}, 2);
    const auto t = cohomology_table(mixed(), Window(-6, 4));
    CHECK(hypothesis_check_wperp(t, m) == std::vector<Rational>{0, Rational(1, 3), 1});
    for (std::size_t i = 0; i <= 2; ++i) {
        std::vector<Rational> e(3, Rational(0));
        e[i] = 1;
        CHECK(hypothesis_check_wperp(cohomology_table(m.wperp[i], Window(-6, 4)), m) == e);
    }
    CHECK_FALSE(hypothesis_check_wperp(cohomology_table(BundleExpr::line(2, -1), Window(-6, 4)), m));
    CHECK_THROWS_AS(hypothesis_check_wperp(cohomology_table(m.wperp[0], Window(-3, 0)), m), ValidationError);
}
