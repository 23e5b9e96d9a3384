#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "supermonad/decomp.hpp"
#include "supermonad/errors.hpp"
#include "supermonad/sheaves.hpp"

#include <random>

using namespace supermonad;

namespace {

std::vector<Rational> col(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("windows and tables validate their input")
{
    CHECK_THROWS_AS(Window(3, 2), ValidationError);
    CohomologyTable t(2, Window(-1, 1));
    CHECK_THROWS_AS(t.set(0, 0, -1), ValidationError);
    CHECK_THROWS_AS(t.set(3, 0, 1), ValidationError);
    CHECK_THROWS_AS(t.at(0, 2), ValidationError);
    t.set(1, 0, Rational(2, 4));
    CHECK(t.at(1, 0) == Rational(1, 2));
    CHECK(t.chi(0) == Rational(-1, 2));
}

TEST_CASE("structure sheaf of a linear subspace")
{
    const auto ol = SheafExpr::linear(2, 1, 0);
    CHECK(cohomology_at(ol, 0) == col({1, 0, 0}));
    CHECK(cohomology_at(ol, 3) == col({4, 0, 0}));
    CHECK(cohomology_at(ol, -1) == col({0, 0, 0}));
    CHECK(cohomology_at(ol, -3) == col({0, 2, 0}));
    const auto pt = SheafExpr::linear(3, 0, 0);
    CHECK(cohomology_at(pt, -7) == col({1, 0, 0, 0}));
    // the whole space agrees with the line bundle
    for (long j = -5; j <= 3; ++j)
        CHECK(cohomology_at(SheafExpr::linear(2, 2, 1), j) == cohomology_at(BundleExpr::line(2, 1), j));
}

TEST_CASE("tensoring a linear subspace restricts the bundle")
{
    const auto ol = SheafExpr::linear(2, 1, 0);
    const auto q_dual = BundleExpr::tautological_dual(2);
    // Q*|_L = O(-1) + O
    CHECK(cohomology_of_tensor(ol, q_dual, 0) == col({1, 0, 0}));
    CHECK(cohomology_of_tensor(ol, q_dual, -2) == col({0, 3, 0}));
    CHECK(cohomology_of_tensor(SheafExpr::linear(2, 0, 0), q_dual, 0) == col({2, 0, 0}));
    CHECK_THROWS_AS(cohomology_of_tensor(SheafExpr::supernatural({0, -2}, 1), q_dual, 0), MathRefusal);
}

TEST_CASE("supernatural tables match equivariant bundles")
{
    const Window w(-7, 5);
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& a : oracle::all_weights(n, 0, 3))
            for (long d = -2; d <= 2; ++d) {
                const auto b = BundleExpr::schur(n, a, d);
                const auto f = supernatural_roots(b);
                CHECK(supernatural_table(f, Rational(b.rank()), w) == cohomology_table(b, w));
            }
}

TEST_CASE("supernatural tables vanish exactly at the roots")
{
    const auto t = supernatural_table({1, -1, -2}, Rational(1, 2), Window(-5, 4));
    for (long j = -5; j <= 4; ++j)
        CHECK(t.column_is_zero(j) == (j == 1 || j == -1 || j == -2));
    CHECK(t.at(3, -3) == Rational(1, 2) * 4 * 2 * 1 / 6);
    CHECK(t.at(1, 0) == Rational(1, 2) * 1 * 1 * 2 / 6);
}

TEST_CASE("Hilbert polynomials interpolate chi")
{
    const auto p = HilbertPolynomial::interpolate({0, 1, 2}, col({1, 3, 6}));
    CHECK(p.degree() == 2);
    CHECK(p.coefficients() == std::vector<Rational>{1, Rational(3, 2), Rational(1, 2)});
    CHECK(hilbert_polynomial(BundleExpr::line(2, 0)) == p);
    CHECK(hilbert_polynomial(SheafExpr::linear(2, 1, 0))(7) == 8);
    CHECK(hilbert_polynomial(SheafExpr::zero(3)).degree() == -1);
}

TEST_CASE("Hilbert polynomial reproduces chi on every random bundle")
{
    std::mt19937 rng(2026);
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto ws = oracle::all_weights(n, 0, 3);
        std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
        std::uniform_int_distribution<int> tw(-4, 4);
        for (int trial = 0; trial < 25; ++trial) {
            BundleExpr b(n);
            b.add(ws[pick(rng)], tw(rng), 1);
            b.add(ws[pick(rng)], tw(rng), 1);
            const auto p = hilbert_polynomial(b);
            for (long j = -10; j <= 10; ++j)
                CHECK(p(j) == Rational(euler_characteristic(b, j)));
        }
    }
}

TEST_CASE("explicit tables answer only inside their window")
{
    const auto t = cohomology_table(BundleExpr::line(1, 0), Window(-3, 2));
    const auto f = SheafExpr::table(t);
    CHECK(cohomology_at(f, -3) == col({0, 2}));
    CHECK_THROWS_AS(cohomology_at(f, 3), MathRefusal);
    CHECK(hilbert_polynomial(f) == hilbert_polynomial(BundleExpr::line(1, 0)));

    CohomologyTable broken(1, Window(0, 3));
    broken.set(0, 0, 1);
    broken.set(0, 1, 2);
    broken.set(0, 2, 7);
    CHECK_THROWS_AS(hilbert_polynomial(SheafExpr::table(broken)), MathRefusal);
    CHECK_THROWS_AS(hilbert_polynomial(SheafExpr::table(CohomologyTable(2, Window(0, 1)))), MathRefusal);
}

TEST_CASE("sub-windows of a table agree with the table")
{
    const auto b = BundleExpr::schur(2, {2, 0}, 1);
    const auto big = cohomology_table(b, Window(-8, 6));
    for (long lo = -8; lo <= 0; lo += 2)
        for (long hi = lo; hi <= 6; hi += 3)
            CHECK(big.restricted(Window(lo, hi)) == cohomology_table(b, Window(lo, hi)));
}

TEST_CASE("table arithmetic and comparison")
{
    const Window w(-4, 2);
    const auto a = cohomology_table(BundleExpr::line(2, 0), w);
    const auto b = cohomology_table(BundleExpr::tautological_dual(2), w);
    CHECK(add(a, b) == cohomology_table(BundleExpr::line(2, 0) + BundleExpr::tautological_dual(2), w));
    CHECK(scale(a, 3) == cohomology_table(BundleExpr::line(2, 0, 3), w));
    CHECK(compare_entrywise(add(a, b), a) == TableOrder::GreaterEqual);
    CHECK(compare_entrywise(a, add(a, b)) == TableOrder::LessEqual);
    CHECK(compare_entrywise(a, a) == TableOrder::Equal);
    CHECK(compare_entrywise(a, b) == TableOrder::Incomparable);
    CHECK_THROWS_AS(add(a, cohomology_table(BundleExpr::line(2, 0), Window(-4, 3))), ValidationError);
}

TEST_CASE("formal sums carry rational coefficients")
{
    SheafExpr f(2);
    f.add(1, BundleExpr::tautological_dual(2));
    f.add(Rational(1, 3), BundleExpr::schur(2, {2, 0}, 1));
    // h^1(F(-1)) = h^1(Q*(-1)) + 1/3 h^1(Sym^2 Q*) = 1 + 1/3 * 3
    CHECK(cohomology_at(f, -1) == col({0, 2, 0}));
    CHECK(cohomology_at(f, 1)[0] == 3 + Rational(1, 3) * 6);
    CHECK_THROWS_AS(f.add(-1, BundleExpr::line(2, 0)), ValidationError);
    CHECK_THROWS_AS(f.as_bundle(), MathRefusal);
    CHECK_THROWS_AS(f.add(1, LinearSubspace{3, 0}), ValidationError);
    CHECK_THROWS_AS(f.add(1, FormalSupernatural{RootSequence{0}, 1}), ValidationError);
}
