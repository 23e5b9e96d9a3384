#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "supermonad/errors.hpp"
#include "supermonad/ktheory.hpp"
#include "supermonad/monad.hpp"

#include <random>

using namespace supermonad;

namespace {

const MonadData& w023()
{
    static const MonadData m = build_monad({0, 2, 3}, 2);
    return m;
}

std::vector<std::int64_t> consecutive(std::size_t n)
{
    std::vector<std::int64_t> w(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        w[i] = static_cast<std::int64_t>(i);
    return w;
}

SheafExpr mixed()
{
    SheafExpr f(2);
    f.add(1, BundleExpr::tautological_dual(2));
    f.add(Rational(1, 3), BundleExpr::schur(2, {2, 0}, 1));
    return f;
}

BundleExpr random_bundle(std::mt19937& rng, std::size_t n)
{
    std::vector<Weight> ws;
    for (const auto& a : oracle::all_weights(n, 0, 3))
        if (a[0] <= 3 && (n < 2 || a[1] <= 1) && (n < 3 || a[2] == 0))
            ws.push_back(a);
    std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
    std::uniform_int_distribution<int> tw(-3, 3);
    std::uniform_int_distribution<int> count(1, 3);
    BundleExpr b(n);
    for (int k = count(rng); k > 0; --k)
        b.add(ws[pick(rng)], tw(rng), 1);
    return b;
}

} // namespace

TEST_CASE("monad data for W = (0,2,3)")
{
    const auto& m = w023();
    CHECK(m.mu == Weight{1, 0, 0});
    CHECK(m.n_w == 3);
    CHECK(binomial_determinant(m.w, 2) == 3);
    CHECK(m.wperp[0] == BundleExpr::line(2, 1));
    CHECK(m.wperp[1] == BundleExpr::schur(2, {2, 0}, 1));
    CHECK(m.wperp[2] == BundleExpr::tautological_dual(2));
    CHECK(m.ew_term(1).first == BundleExpr::line(2, -2));
}

TEST_CASE("consecutive W gives exterior powers")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto m = build_monad(consecutive(n), n);
        CHECK(m.n_w == 1);
        for (std::size_t j = 0; j <= n; ++j)
            CHECK(m.wperp[j] == BundleExpr::exterior(n, j));
    }
}

TEST_CASE("build_monad validates W")
{
    CHECK_THROWS_AS(build_monad({0, 0, 1}, 2), ValidationError);
    CHECK_THROWS_AS(build_monad({0, 1}, 2), ValidationError);
    CHECK_THROWS_AS(build_monad({2, 1, 3}, 2), ValidationError);
}

TEST_CASE("orthogonality and roots over a grid of W")
{
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& w : oracle::w_grid(n, -2, 2, 3)) {
            const auto m = build_monad(w, n);
            CHECK(m.n_w == dim_schur(m.mu, n + 1));
            CHECK(m.n_w == binomial_determinant(w, n));
            CHECK(orthogonality_holds(m));
            for (std::size_t j = 0; j <= n; ++j) {
                std::vector<std::int64_t> expected;
                for (std::size_t k = 0; k <= n; ++k)
                    if (k != j)
                        expected.push_back(-w[k]);
                const auto roots = supernatural_roots(m.wperp[j]);
                CHECK(roots.roots() == expected);
            }
        }
}

TEST_CASE("EFW shapes")
{
    const auto koszul = efw_shape(DegreeSequence({0, 1, 2, 3}));
    CHECK(koszul.ranks == std::vector<Integer>{1, 3, 3, 1});
    CHECK(efw_shape(DegreeSequence({0, 5})).ranks == std::vector<Integer>{1, 1});
    // inserting 1 into (0,2,3): b_1 = N_W = 3, and exactness forces 1 - 3 + b_2 - b_3 = 0
    const auto s = efw_shape(DegreeSequence({0, 1, 2, 3}));
    CHECK(s.ranks[1] == 3);
    CHECK_THROWS_AS(efw_shape(DegreeSequence({4})), ValidationError);
}

TEST_CASE("the inserted degree of an EFW shape has rank N_W")
{
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& w : oracle::w_grid(n, 0, 0, 3)) {
            const auto m = build_monad(w, n);
            for (std::int64_t e = w.front() - 2; e <= w.back() + 2; ++e) {
                if (std::find(w.begin(), w.end(), e) != w.end())
                    continue;
                std::vector<std::int64_t> d(w);
                const auto pos = static_cast<std::size_t>(std::upper_bound(d.begin(), d.end(), e) - d.begin());
                d.insert(d.begin() + static_cast<std::ptrdiff_t>(pos), e);
                const auto shape = efw_shape(DegreeSequence(d));
                CHECK(shape.ranks[pos] == m.n_w);
                // a finite-length module has alternating rank sum zero
                Integer alt = 0;
                for (std::size_t k = 0; k < shape.ranks.size(); ++k)
                    alt += (k % 2 == 0 ? 1 : -1) * shape.ranks[k];
                CHECK(alt == 0);
            }
        }
}

TEST_CASE("phi1 page of O_L")
{
    const auto page = phi1_page(SheafExpr::linear(2, 1, 0), w023());
    REQUIRE(page.entries.size() == 3);
    std::vector<Integer> ranks;
    for (const auto& e : page.entries) {
        CHECK(e.p == 0);
        CHECK(e.object == BundleExpr::line(2, -w023().w[e.q]));
        ranks.push_back(e.mult);
    }
    CHECK(ranks == std::vector<Integer>{2, 3, 1});
    CHECK_FALSE(page.line_bundle_twist);
    const auto c = page_convergence(page);
    REQUIRE(std::holds_alternative<Resolution>(c));
    const auto& r = std::get<Resolution>(c);
    REQUIRE(r.terms.size() == 3);
    CHECK(r.terms[0] == BundleExpr::line(2, 0, 2));
    CHECK(r.terms[1] == BundleExpr::line(2, -2, 3));
    CHECK(r.terms[2] == BundleExpr::line(2, -3, 1));
}

TEST_CASE("phi2 page of O_L")
{
    const auto& m = w023();
    const auto page = phi2_page(SheafExpr::linear(2, 1, 0), m);
    REQUIRE(page.entries.size() == 3);
    CHECK(page.entries[0].p == 0);
    CHECK(page.entries[1].p == -1);
    CHECK(page.entries[2].p == -1);
    CHECK(page.entries[2].mult == 2);
    const auto c = page_convergence(page);
    REQUIRE(std::holds_alternative<Resolution>(c));
    const auto& r = std::get<Resolution>(c);
    REQUIRE(r.terms.size() == 2);
    CHECK(r.terms[0] == m.wperp[0] + m.wperp[1]);
    CHECK(r.terms[1] == m.wperp[2].scaled(2));
    CHECK(ext_dims(m.wperp[1], m.wperp[0])[1] == 0);
}

TEST_CASE("phi2 of O splits as O(1) + Q*")
{
    const auto& m = w023();
    const auto c = page_convergence(phi2_page(BundleExpr::line(2, 0), m));
    REQUIRE(std::holds_alternative<Filtration>(c));
    const auto& f = std::get<Filtration>(c);
    CHECK(f.split_certified);
    CHECK(f.total() == BundleExpr::line(2, 1) + BundleExpr::tautological_dual(2));
}

TEST_CASE("phi2 of E_i is E_i^N_W")
{
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& w : oracle::w_grid(n, 0, 1, 3)) {
            const auto m = build_monad(w, n);
            for (std::size_t i = 0; i <= n; ++i) {
                const auto page = phi2_page(m.wperp[i], m);
                REQUIRE(page.entries.size() == 1);
                CHECK(page.entries[0].q == i);
                CHECK(page.entries[0].p == -static_cast<int>(i));
                CHECK(page.entries[0].mult == m.n_w);
                const auto r = corollary19(m.wperp[i], m);
                CHECK(r.i == i);
                CHECK(r.m == m.n_w);
                CHECK(r.verdict);
            }
        }
}

TEST_CASE("empty and refused pages")
{
    const auto& m = w023();
    CHECK(std::holds_alternative<EmptyPage>(page_convergence(phi2_page(SheafExpr::zero(2), m))));
    CHECK_THROWS_AS(phi1_page(SheafExpr::supernatural({0, -2}, 1), m), MathRefusal);
    CHECK_THROWS_AS(phi2_page(SheafExpr::zero(3), m), ValidationError);
    SheafExpr half(2);
    half.add(Rational(1, 2), BundleExpr::line(2, 0));
    CHECK_THROWS_AS(phi2_page(half, m), MathRefusal);
}

TEST_CASE("phi1 strands of a line bundle between -w_0 and -w_1")
{
    const auto& m = w023();
    const auto page = phi1_page(BundleExpr::line(2, -1), m);
    REQUIRE(page.line_bundle_twist);
    const auto c = page_convergence(page);
    REQUIRE(std::holds_alternative<TwoStrandReport>(c));
    const auto& r = std::get<TwoStrandReport>(c);
    CHECK(r.i == 0);
    CHECK_FALSE(r.single_term);
    REQUIRE(r.a.size() == 1);
    REQUIRE(r.b.size() == 2);
    CHECK(r.witness.degrees() == std::vector<std::int64_t>{0, 1, 2, 3});
    CHECK(r.witness_ranks == std::vector<Integer>{r.a[0].mult, 3, r.b[0].mult, r.b[1].mult});
}

TEST_CASE("strands over a grid of W and twists")
{
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& w : oracle::w_grid(n, -1, 1, 3)) {
            const auto m = build_monad(w, n);
            for (std::int64_t d = -w.back() - 2; d <= -w.front() + 2; ++d) {
                const auto r = phi1_line_bundle_strands(d, m);
                const bool on_w = std::find(w.begin(), w.end(), -d) != w.end();
                CHECK(r.single_term == on_w);
                if (on_w)
                    continue;
                CHECK(r.witness_ranks.size() == n + 2);
                CHECK(r.a.size() + r.b.size() == n + 1);
                CHECK(r.witness_ranks[static_cast<std::size_t>(r.i + 1)] == m.n_w);
            }
        }
}

TEST_CASE("pure resolutions")
{
    const auto& m = w023();
    const auto ol = pure_resolution(SheafExpr::linear(2, 1, 0), m);
    CHECK(ol.twists == std::vector<std::int64_t>{0, -2, -3});
    CHECK(ol.ranks == std::vector<Integer>{2, 3, 1});
    CHECK(pure_resolution(BundleExpr::line(2, 0), m).ranks == std::vector<Integer>{3, 0, 0});
    const auto shifted = build_monad({-1, 1, 4}, 2);
    CHECK(pure_resolution(BundleExpr::line(2, 1), shifted).ranks == std::vector<Integer>{shifted.n_w, 0, 0});
    CHECK_THROWS_AS(pure_resolution(BundleExpr::line(2, -1), m), MathRefusal);
}

TEST_CASE("theorem18 on the mixed supernatural sum")
{
    const auto& m = w023();
    const auto r = theorem18(mixed(), m, Window(-6, 4));
    CHECK(r.a == std::vector<Rational>{0, Rational(1, 3), 1});
    REQUIRE(r.filtration.quotients.size() == 2);
    CHECK(r.filtration.quotients[0] == std::pair{m.wperp[1], Integer(1)});
    CHECK(r.filtration.quotients[1] == std::pair{m.wperp[2], Integer(3)});
    CHECK(r.filtration.split_certified);
    CHECK(ext_dims(m.wperp[2], m.wperp[1])[1] == 0);
    CHECK(r.table_verdict);
    CHECK(r.quotient_table == scale(cohomology_table(mixed(), Window(-6, 4)), 3));
}

TEST_CASE("theorem18 on E_i, zero, and a violating sheaf")
{
    const auto& m = w023();
    for (std::size_t i = 0; i <= 2; ++i) {
        const auto r = theorem18(m.wperp[i], m, Window(-6, 4));
        std::vector<Rational> e(3, Rational(0));
        e[i] = 1;
        CHECK(r.a == e);
        CHECK(r.filtration.quotients.size() == 1);
    }
    const auto z = theorem18(SheafExpr::zero(2), m, Window(-6, 4));
    CHECK(z.filtration.quotients.empty());
    CHECK(z.table_verdict);
    CHECK_THROWS_AS(theorem18(BundleExpr::line(2, 0), m, Window(-6, 4)), MathRefusal);
    CHECK_THROWS_AS(theorem18(m.wperp[0], m, Window(-2, 0)), ValidationError);
}

TEST_CASE("corollary19 examples")
{
    const auto& m = w023();
    const auto two = corollary19(m.wperp[1] + m.wperp[1], m);
    CHECK(two.m == 6);
    const auto formal = corollary19(SheafExpr::supernatural({0, -3}, 3), m);
    CHECK(formal.i == 1);
    CHECK(formal.m == 3);
    CHECK(formal.rank_f == 3);
    CHECK_THROWS_AS(corollary19(BundleExpr::line(2, 0), m), MathRefusal);
    CHECK_THROWS_AS(corollary19(m.wperp[0] + m.wperp[1], m), MathRefusal);
}

TEST_CASE("prop51 on phi2 of O")
{
    const auto& m = w023();
    const SheafExpr o = BundleExpr::line(2, 0);
    const auto f = std::get<Filtration>(page_convergence(phi2_page(o, m)));
    const Window win(-6, 4);
    const auto r = prop51_check(o, m, cohomology_table(f.total(), win));
    CHECK(r.strict_columns == std::vector<std::int64_t>{-1});
    CHECK(r.equality_columns.size() == win.width() - 1);
    for (auto d : r.equality_columns)
        CHECK(prop51_equality_regime(d, m) == (d != -1));

    // N_W gamma(F) itself is never below, and anything smaller is refused
    CHECK(prop51_check(o, m, scale(cohomology_table(o, win), 3)).strict.empty());
    CHECK_THROWS_AS(prop51_check(o, m, cohomology_table(o, win)), InvariantBreach);
}

TEST_CASE("page classes equal N_W [F]")
{
    std::mt19937 rng(1234);
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto grid = oracle::w_grid(n, -1, 1, 3);
        std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
        for (int trial = 0; trial < 15; ++trial) {
            const auto m = build_monad(grid[pick(rng)], n);
            const auto f = random_bundle(rng, n);
            auto target = k0_class(f);
            for (auto& x : target.chi_profile)
                x *= m.n_w;
            CHECK(page_class(phi1_page(f, m)) == target);
            CHECK(page_class(phi2_page(f, m)) == target);
        }
    }
}
