#include "supermonad/ktheory.hpp"

#include "supermonad/errors.hpp"

#include <string>

namespace supermonad {

namespace {

std::vector<Rational> as_rational(const K0Class& c)
{
    return {c.chi_profile.begin(), c.chi_profile.end()};
}

// Solves A x = b exactly; A is given by columns. Empty result when singular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> cols, std::vector<Rational> b)
{
    const std::size_t k = b.size();
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c)
            a[r][c] = cols[c][r];
        a[r][k] = b[r];
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && a[piv][c] == 0)
            ++piv;
        if (piv == k)
            return {};
        std::swap(a[piv], a[c]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            const Rational factor = a[r][c] / a[c][c];
            for (std::size_t t = c; t <= k; ++t)
                a[r][t] -= factor * a[c][t];
        }
    }
    std::vector<Rational> x(k);
    for (std::size_t r = 0; r < k; ++r) {
        x[r] = a[r][k] / a[r][r];
        x[r].canonicalize();
    }
    return x;
}

// Fraction-free (Bareiss) determinant.
Integer bareiss_determinant(std::vector<std::vector<Integer>> a)
{
    const std::size_t k = a.size();
    if (k == 0)
        return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t c = 0; c + 1 < k; ++c) {
        if (a[c][c] == 0) {
            std::size_t piv = c + 1;
            while (piv < k && a[piv][c] == 0)
                ++piv;
            if (piv == k)
                return 0;
            std::swap(a[piv], a[c]);
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < k; ++r)
            for (std::size_t t = c + 1; t < k; ++t)
                a[r][t] = (a[r][t] * a[c][c] - a[r][c] * a[c][t]) / prev;
        prev = a[c][c];
    }
    return sign * a[k - 1][k - 1];
}

} // namespace

std::vector<Rational> rational_profile(const SheafExpr& f)
{
    const auto p = hilbert_polynomial(f);
    std::vector<Rational> out(f.n() + 1);
    for (std::size_t j = 0; j <= f.n(); ++j)
        out[j] = p(static_cast<std::int64_t>(j));
    return out;
}

K0Class k0_class(const SheafExpr& f)
{
    K0Class c{f.n(), {}};
    for (const auto& x : rational_profile(f)) {
        if (!is_integral(x))
            throw MathRefusal("not a lattice class: chi = " + to_string(x) + " is not an integer");
        c.chi_profile.push_back(x.get_num());
    }
    return c;
}

std::vector<Integer> standard_coordinates(const K0Class& c)
{
    // chi(O(j - k)) vanishes for 0 <= j < k <= n and is 1 at j = k, so the
    // profile matrix is lower unitriangular.
    const std::size_t n = c.n;
    std::vector<Integer> x(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        Integer acc = c.chi_profile[j];
        for (std::size_t k = 0; k < j; ++k)
            acc -= x[k] * binomial_poly(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(k) +
                                            static_cast<std::int64_t>(n),
                                        n);
        x[j] = acc;
    }
    return x;
}

RationalCoordinates coords_in_basis(const std::vector<Rational>& profile, const std::vector<K0Class>& basis,
                                    BasisLabel label)
{
    const std::size_t k = profile.size();
    if (basis.size() != k)
        throw ValidationError("basis needs " + std::to_string(k) + " classes", "basis");
    std::vector<std::vector<Rational>> cols;
    for (const auto& b : basis) {
        if (b.chi_profile.size() != k)
            throw ValidationError("basis class on a different ambient space", "basis");
        cols.push_back(as_rational(b));
    }
    auto x = solve(std::move(cols), profile);
    if (x.empty())
        throw MathRefusal("not a basis: the classes are linearly dependent");
    return {label, std::move(x)};
}

RationalCoordinates coords_in_basis(const K0Class& c, const std::vector<K0Class>& basis, BasisLabel label)
{
    return coords_in_basis(as_rational(c), basis, label);
}

Integer subgroup_index(const std::vector<K0Class>& classes)
{
    if (classes.empty())
        return 0;
    const std::size_t k = classes.front().n + 1;
    if (classes.size() != k)
        return 0;
    std::vector<std::vector<Integer>> rows;
    for (const auto& c : classes) {
        if (c.n + 1 != k)
            throw ValidationError("classes on different ambient spaces", "classes");
        rows.push_back(standard_coordinates(c));
    }
    return abs(bareiss_determinant(std::move(rows)));
}

std::vector<K0Class> w_classes(const MonadData& m)
{
    std::vector<K0Class> out;
    for (auto wj : m.w)
        out.push_back(k0_class(BundleExpr::line(m.n, -wj)));
    return out;
}

std::vector<K0Class> wperp_classes(const MonadData& m)
{
    std::vector<K0Class> out;
    for (const auto& e : m.wperp)
        out.push_back(k0_class(e));
    return out;
}

RationalCoordinates decompose_cor14(const SheafExpr& f, const MonadData& m, Cor14Side side)
{
    if (f.n() != m.n)
        throw ValidationError("sheaf and W live on different ambient spaces", "n");
    std::vector<Rational> a(m.n + 1);
    for (std::size_t j = 0; j <= m.n; ++j) {
        std::vector<Rational> h;
        if (side == Cor14Side::W)
            h = cohomology_of_tensor(f, m.wperp[j], 0);
        else
            h = cohomology_at(f, -m.w[j]);
        Rational chi = 0;
        for (std::size_t i = 0; i < h.size(); ++i)
            chi += (i % 2 == 0) ? h[i] : Rational(-h[i]);
        a[j] = (j % 2 == 0 ? chi : Rational(-chi)) / Rational(m.n_w);
        a[j].canonicalize();
    }
    const auto label = side == Cor14Side::W ? BasisLabel::W : BasisLabel::Wperp;
    const auto check =
        coords_in_basis(rational_profile(f), side == Cor14Side::W ? w_classes(m) : wperp_classes(m), label);
    if (check.values != a)
        throw InvariantBreach("Euler-pairing coordinates disagree with the linear solve");
    return {label, std::move(a)};
}

K0Class page_class(const SpectralPage& page)
{
    K0Class c{page.n, std::vector<Integer>(page.n + 1, Integer(0))};
    for (const auto& e : page.entries) {
        const auto obj = k0_class(e.object);
        const Integer signed_mult = (e.total_degree() % 2 != 0) ? Integer(-e.mult) : e.mult;
        for (std::size_t j = 0; j <= page.n; ++j)
            c.chi_profile[j] += signed_mult * obj.chi_profile[j];
    }
    return c;
}

} // namespace supermonad
