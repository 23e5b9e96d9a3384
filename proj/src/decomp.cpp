#include "supermonad/decomp.hpp"

#include "supermonad/errors.hpp"

#include <string>

namespace supermonad {

namespace {

// Highest i with T(i, j) != 0, -1 for a zero column.
int top_row(const CohomologyTable& t, std::int64_t j)
{
    for (int i = static_cast<int>(t.n()); i >= 0; --i)
        if (t.at(static_cast<std::size_t>(i), j) != 0)
            return i;
    return -1;
}

RootSequence top_roots(const CohomologyTable& t)
{
    const std::size_t n = t.n();
    const auto& w = t.window();
    if (top_row(t, w.lo) != static_cast<int>(n))
        throw MathRefusal("not decomposable on this window: column " + std::to_string(w.lo) +
                          " has no entry in degree " + std::to_string(n) +
                          " (the window starts above the lowest root, or the table is not that of a vector bundle)");
    std::vector<std::int64_t> roots(n);
    int cur = static_cast<int>(n);
    for (std::int64_t j = w.lo; j <= w.hi && cur > 0; ++j) {
        const int u = top_row(t, j);
        if (u > cur)
            throw MathRefusal("not decomposable on this window: degree rises to " + std::to_string(u) +
                              " at column " + std::to_string(j));
        if (u < cur) {
            roots[static_cast<std::size_t>(cur - 1)] = j;
            --cur;
        }
    }
    if (cur > 0)
        throw MathRefusal("not decomposable on this window: fewer than n roots before column " +
                          std::to_string(w.hi));
    return RootSequence(std::move(roots));
}

} // namespace

BSDecomposition bs_decompose(const CohomologyTable& t)
{
    const std::size_t n = t.n();
    const Window w = t.window();
    BSDecomposition out;
    out.n = n;
    CohomologyTable rest = t;
    const std::size_t budget = 4 * w.width() * (n + 1);
    for (std::size_t step = 0; !rest.is_zero(); ++step) {
        if (step == budget)
            throw MathRefusal("not decomposable on this window: step budget of " + std::to_string(budget) +
                              " exhausted");
        const RootSequence f = top_roots(rest);
        if (!out.terms.empty()) {
            const auto& prev = out.terms.back().roots;
            if (!f.precedes_or_equal(prev) || f == prev)
                throw MathRefusal("not decomposable on this window: root sequences stop forming a chain");
        }
        const CohomologyTable tau = supernatural_table(f, 1, w);
        std::optional<Rational> coeff;
        for (std::size_t i = 0; i <= n; ++i)
            for (std::int64_t j = w.lo; j <= w.hi; ++j)
                if (tau.at(i, j) != 0) {
                    Rational r = rest.at(i, j) / tau.at(i, j);
                    if (!coeff || r < *coeff)
                        coeff = r;
                }
        if (!coeff || *coeff <= 0)
            throw MathRefusal("not decomposable on this window: no positive multiple of the supernatural table fits");
        for (std::size_t i = 0; i <= n; ++i)
            for (std::int64_t j = w.lo; j <= w.hi; ++j)
                rest.set(i, j, rest.at(i, j) - *coeff * tau.at(i, j));
        out.terms.push_back({f, *coeff});
    }
    return out;
}

BSDecomposition bs_decompose(const SheafExpr& f, Window window)
{
    return bs_decompose(cohomology_table(f, window));
}

CohomologyTable reassemble(const BSDecomposition& d, Window window)
{
    CohomologyTable t(d.n, window);
    for (const auto& term : d.terms)
        t = add(t, supernatural_table(term.roots, term.coeff, window));
    return t;
}

BundleExpr equivariant_representative(const RootSequence& f)
{
    const std::size_t n = f.size();
    if (n == 0)
        throw ValidationError("empty root sequence", "roots");
    const auto ni = static_cast<std::int64_t>(n);
    const std::int64_t twist = -ni - f[n - 1];
    std::vector<std::int64_t> alpha(n);
    for (std::size_t i = 0; i < n; ++i)
        alpha[i] = f[i] + static_cast<std::int64_t>(i + 1) + twist;
    return BundleExpr::schur(n, Weight(std::move(alpha)), twist);
}

std::vector<Rational> equivariant_coefficients(const BSDecomposition& d)
{
    std::vector<Rational> out;
    for (const auto& term : d.terms) {
        Rational c = term.coeff / Rational(equivariant_representative(term.roots).rank());
        c.canonicalize();
        out.push_back(c);
    }
    return out;
}

std::optional<std::vector<Rational>> hypothesis_check_wperp(const CohomologyTable& t, const MonadData& m)
{
    const Window need(-m.w.back() - 1, -m.w.front() + 1);
    if (!t.window().contains(need))
        throw ValidationError("window must contain [" + std::to_string(need.lo) + "," + std::to_string(need.hi) + "]",
                              "window");
    if (t.n() != m.n)
        throw ValidationError("table and W live on different ambient spaces", "n");
    std::vector<Rational> a(m.n + 1);
    CohomologyTable expected(m.n, t.window());
    for (std::size_t i = 0; i <= m.n; ++i) {
        a[i] = t.at(i, -m.w[i]) / Rational(m.n_w);
        a[i].canonicalize();
        if (a[i] != 0)
            expected = add(expected, scale(cohomology_table(m.wperp[i], t.window()), a[i]));
    }
    if (!(expected == t))
        return std::nullopt;
    return a;
}

} // namespace supermonad
