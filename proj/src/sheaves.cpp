#include "supermonad/sheaves.hpp"

#include "supermonad/errors.hpp"

#include <algorithm>
#include <string>

namespace supermonad {

Window::Window(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_)
{
    if (lo > hi)
        throw ValidationError("window [" + std::to_string(lo) + "," + std::to_string(hi) + "] is empty", "window");
}

CohomologyTable::CohomologyTable(std::size_t n, Window window)
    : n_(n), window_(window), rows_(n + 1, std::vector<Rational>(window.width(), Rational(0)))
{
}

const Rational& CohomologyTable::at(std::size_t i, std::int64_t j) const
{
    if (i > n_ || !window_.contains(j))
        throw ValidationError("table entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside the table",
                              "window");
    return rows_[i][static_cast<std::size_t>(j - window_.lo)];
}

void CohomologyTable::set(std::size_t i, std::int64_t j, Rational value)
{
    if (i > n_ || !window_.contains(j))
        throw ValidationError("table entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside the table",
                              "window");
    if (value < 0)
        throw ValidationError("cohomology table entries must be nonnegative", "table");
    value.canonicalize();
    rows_[i][static_cast<std::size_t>(j - window_.lo)] = std::move(value);
}

bool CohomologyTable::column_is_zero(std::int64_t j) const
{
    for (std::size_t i = 0; i <= n_; ++i)
        if (at(i, j) != 0)
            return false;
    return true;
}

bool CohomologyTable::is_zero() const
{
    for (const auto& row : rows_)
        for (const auto& x : row)
            if (x != 0)
                return false;
    return true;
}

Rational CohomologyTable::chi(std::int64_t j) const
{
    Rational c = 0;
    for (std::size_t i = 0; i <= n_; ++i)
        c += (i % 2 == 0) ? at(i, j) : Rational(-at(i, j));
    return c;
}

CohomologyTable CohomologyTable::restricted(Window sub) const
{
    if (!window_.contains(sub))
        throw ValidationError("sub-window not contained in the table window", "window");
    CohomologyTable t(n_, sub);
    for (std::size_t i = 0; i <= n_; ++i)
        for (std::int64_t j = sub.lo; j <= sub.hi; ++j)
            t.set(i, j, at(i, j));
    return t;
}

SheafExpr::SheafExpr(std::size_t n) : n_(n)
{
    if (n == 0)
        throw ValidationError("ambient dimension must be positive", "n");
}

SheafExpr::SheafExpr(const BundleExpr& bundle) : n_(bundle.n())
{
    if (!bundle.is_zero())
        terms_.push_back({Rational(1), bundle});
}

SheafExpr SheafExpr::linear(std::size_t n, std::size_t m, std::int64_t d)
{
    SheafExpr s(n);
    s.add(1, LinearSubspace{m, d});
    return s;
}

SheafExpr SheafExpr::supernatural(const RootSequence& f, const Rational& scale)
{
    SheafExpr s(f.size());
    s.add(1, FormalSupernatural{f, scale});
    return s;
}

SheafExpr SheafExpr::table(const CohomologyTable& t)
{
    SheafExpr s(t.n());
    s.add(1, t);
    return s;
}

void SheafExpr::add(const Rational& coeff, SheafTerm term)
{
    if (coeff < 0)
        throw ValidationError("sheaf coefficients must be positive", "coeff");
    if (coeff == 0)
        return;
    std::visit(
        [this](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, BundleExpr>) {
                if (t.n() != n_)
                    throw ValidationError("bundle term lives on a different ambient space", "n");
            } else if constexpr (std::is_same_v<T, LinearSubspace>) {
                if (t.m > n_)
                    throw ValidationError("linear subspace dimension exceeds ambient dimension", "m");
            } else if constexpr (std::is_same_v<T, FormalSupernatural>) {
                if (t.roots.size() != n_)
                    throw ValidationError("supernatural root sequence needs n roots", "roots");
                if (t.scale <= 0)
                    throw ValidationError("supernatural scale must be positive", "scale");
            } else {
                if (t.n() != n_)
                    throw ValidationError("table term lives on a different ambient space", "n");
            }
        },
        term);
    if (const auto* b = std::get_if<BundleExpr>(&term); b && b->is_zero())
        return;
    Rational c = coeff;
    c.canonicalize();
    terms_.push_back({std::move(c), std::move(term)});
}

SheafExpr& SheafExpr::operator+=(const SheafExpr& other)
{
    if (other.n_ != n_)
        throw ValidationError("direct sum of sheaves on different ambient spaces", "n");
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

SheafExpr SheafExpr::scaled(const Rational& q) const
{
    if (q < 0)
        throw ValidationError("sheaf coefficients must be positive", "coeff");
    SheafExpr out(n_);
    if (q == 0)
        return out;
    for (const auto& t : terms_)
        out.terms_.push_back({t.coeff * q, t.term});
    return out;
}

bool SheafExpr::is_bundle_only() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const WeightedTerm& t) { return std::holds_alternative<BundleExpr>(t.term); });
}

BundleExpr SheafExpr::as_bundle() const
{
    BundleExpr out(n_);
    for (const auto& t : terms_) {
        const auto* b = std::get_if<BundleExpr>(&t.term);
        if (!b)
            throw MathRefusal("sheaf expression is not a bundle");
        if (!is_integral(t.coeff))
            throw MathRefusal("bundle term with non-integral coefficient " + to_string(t.coeff));
        out += b->scaled(t.coeff.get_num());
    }
    return out;
}

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

HilbertPolynomial HilbertPolynomial::interpolate(const std::vector<std::int64_t>& xs, const std::vector<Rational>& ys)
{
    if (xs.size() != ys.size() || xs.empty())
        throw ValidationError("interpolation needs matching nonempty node lists");
    const std::size_t k = xs.size();
    std::vector<Rational> out(k, Rational(0));
    for (std::size_t a = 0; a < k; ++a) {
        // basis polynomial prod_{b != a} (x - x_b) / (x_a - x_b)
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t b = 0; b < k; ++b) {
            if (b == a)
                continue;
            if (xs[a] == xs[b])
                throw ValidationError("interpolation nodes must be distinct");
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] += basis[t];
                next[t] -= basis[t] * Rational(static_cast<long>(xs[b]));
            }
            basis = std::move(next);
            denom *= Rational(static_cast<long>(xs[a] - xs[b]));
        }
        for (std::size_t t = 0; t < basis.size(); ++t)
            out[t] += ys[a] * basis[t] / denom;
    }
    return HilbertPolynomial(std::move(out));
}

Rational HilbertPolynomial::operator()(std::int64_t j) const
{
    Rational acc = 0;
    const Rational x(static_cast<long>(j));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

namespace {

std::vector<Rational> linear_subspace_cohomology(std::size_t n, const LinearSubspace& l, std::int64_t j)
{
    std::vector<Rational> h(n + 1, Rational(0));
    if (l.m == 0) {
        h[0] = 1;
        return h;
    }
    const std::int64_t t = l.d + j;
    const auto m = static_cast<std::int64_t>(l.m);
    if (t >= 0)
        h[0] = binomial_poly(t + m, l.m);
    else if (t <= -m - 1)
        h[l.m] = binomial_poly(-t - 1, l.m);
    return h;
}

std::vector<Rational> supernatural_column(const RootSequence& f, const Rational& scale, std::int64_t j)
{
    const std::size_t n = f.size();
    std::vector<Rational> h(n + 1, Rational(0));
    Integer prod = 1;
    std::size_t above = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (f[k] == j)
            return h;
        if (f[k] > j)
            ++above;
        prod *= Integer(static_cast<long>(j - f[k]));
    }
    Rational v = scale * Rational(abs(prod)) / Rational(factorial(n));
    v.canonicalize();
    h[above] = v;
    return h;
}

std::vector<Rational> term_cohomology(std::size_t n, const SheafTerm& term, std::int64_t j)
{
    return std::visit(
        [&](const auto& t) -> std::vector<Rational> {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, BundleExpr>) {
                auto hz = cohomology_of_bundle(t, j);
                return std::vector<Rational>(hz.begin(), hz.end());
            } else if constexpr (std::is_same_v<T, LinearSubspace>) {
                return linear_subspace_cohomology(n, t, j);
            } else if constexpr (std::is_same_v<T, FormalSupernatural>) {
                return supernatural_column(t.roots, t.scale, j);
            } else {
                if (!t.window().contains(j))
                    throw MathRefusal("twist " + std::to_string(j) + " lies outside the explicit table window [" +
                                      std::to_string(t.window().lo) + "," + std::to_string(t.window().hi) + "]");
                std::vector<Rational> h(n + 1);
                for (std::size_t i = 0; i <= n; ++i)
                    h[i] = t.at(i, j);
                return h;
            }
        },
        term);
}

} // namespace

std::vector<Rational> cohomology_at(const SheafExpr& f, std::int64_t j)
{
    std::vector<Rational> h(f.n() + 1, Rational(0));
    for (const auto& t : f.terms()) {
        const auto col = term_cohomology(f.n(), t.term, j);
        for (std::size_t i = 0; i <= f.n(); ++i)
            h[i] += t.coeff * col[i];
    }
    for (auto& x : h)
        x.canonicalize();
    return h;
}

std::vector<Rational> cohomology_of_tensor(const SheafExpr& f, const BundleExpr& e, std::int64_t j)
{
    const std::size_t n = f.n();
    if (e.n() != n)
        throw ValidationError("tensor with a bundle on a different ambient space", "n");
    std::vector<Rational> h(n + 1, Rational(0));
    for (const auto& t : f.terms()) {
        std::vector<Integer> col(n + 1, Integer(0));
        if (const auto* b = std::get_if<BundleExpr>(&t.term)) {
            col = cohomology_of_bundle(tensor(e, *b), j);
        } else if (const auto* l = std::get_if<LinearSubspace>(&t.term)) {
            if (l->m == n) {
                col = cohomology_of_bundle(e, l->d + j);
            } else if (l->m == 0) {
                col[0] = e.rank();
            } else {
                const auto part = cohomology_of_bundle(restrict_linear(e, l->m), l->d + j);
                std::copy(part.begin(), part.end(), col.begin());
            }
        } else {
            throw MathRefusal("cohomology of a tensor product is not determined by a cohomology table");
        }
        for (std::size_t i = 0; i <= n; ++i)
            h[i] += t.coeff * Rational(col[i]);
    }
    for (auto& x : h)
        x.canonicalize();
    return h;
}

Rational euler_characteristic(const SheafExpr& f, std::int64_t j)
{
    const auto h = cohomology_at(f, j);
    Rational chi = 0;
    for (std::size_t i = 0; i < h.size(); ++i)
        chi += (i % 2 == 0) ? h[i] : Rational(-h[i]);
    return chi;
}

CohomologyTable cohomology_table(const SheafExpr& f, Window window)
{
    CohomologyTable t(f.n(), window);
    for (std::int64_t j = window.lo; j <= window.hi; ++j) {
        const auto h = cohomology_at(f, j);
        for (std::size_t i = 0; i <= f.n(); ++i)
            t.set(i, j, h[i]);
    }
    return t;
}

CohomologyTable supernatural_table(const RootSequence& f, const Rational& scale, Window window)
{
    if (f.size() == 0)
        throw ValidationError("root sequence must have n >= 1 roots", "roots");
    if (scale <= 0)
        throw ValidationError("supernatural scale must be positive", "scale");
    CohomologyTable t(f.size(), window);
    for (std::int64_t j = window.lo; j <= window.hi; ++j) {
        const auto h = supernatural_column(f, scale, j);
        for (std::size_t i = 0; i <= f.size(); ++i)
            t.set(i, j, h[i]);
    }
    return t;
}

HilbertPolynomial hilbert_polynomial(const SheafExpr& f)
{
    const std::size_t n = f.n();
    std::optional<Window> common;
    for (const auto& t : f.terms())
        if (const auto* tab = std::get_if<CohomologyTable>(&t.term)) {
            const auto& w = tab->window();
            if (!common)
                common = w;
            else {
                const auto lo = std::max(common->lo, w.lo);
                const auto hi = std::min(common->hi, w.hi);
                if (lo > hi)
                    throw MathRefusal("explicit tables have disjoint windows");
                common = Window(lo, hi);
            }
        }

    const std::int64_t base = common ? common->lo : 0;
    if (common && common->width() < n + 1)
        throw MathRefusal("explicit table window too narrow to determine a degree-" + std::to_string(n) +
                          " polynomial");
    std::vector<std::int64_t> xs(n + 1);
    std::vector<Rational> ys(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        xs[k] = base + static_cast<std::int64_t>(k);
        ys[k] = euler_characteristic(f, xs[k]);
    }
    auto p = HilbertPolynomial::interpolate(xs, ys);
    if (common)
        for (std::int64_t j = common->lo; j <= common->hi; ++j)
            if (p(j) != euler_characteristic(f, j))
                throw MathRefusal("explicit table is not consistent with any Hilbert polynomial (column " +
                                  std::to_string(j) + ")");
    return p;
}

CohomologyTable scale(const CohomologyTable& t, const Rational& q)
{
    if (q < 0)
        throw ValidationError("table scale must be nonnegative", "scale");
    CohomologyTable out(t.n(), t.window());
    for (std::size_t i = 0; i <= t.n(); ++i)
        for (std::int64_t j = t.window().lo; j <= t.window().hi; ++j)
            out.set(i, j, t.at(i, j) * q);
    return out;
}

namespace {

void require_same_shape(const CohomologyTable& a, const CohomologyTable& b)
{
    if (a.n() != b.n())
        throw ValidationError("tables on different ambient spaces", "n");
    if (!(a.window() == b.window()))
        throw ValidationError("tables have different windows", "window");
}

} // namespace

CohomologyTable add(const CohomologyTable& a, const CohomologyTable& b)
{
    require_same_shape(a, b);
    CohomologyTable out(a.n(), a.window());
    for (std::size_t i = 0; i <= a.n(); ++i)
        for (std::int64_t j = a.window().lo; j <= a.window().hi; ++j)
            out.set(i, j, a.at(i, j) + b.at(i, j));
    return out;
}

TableOrder compare_entrywise(const CohomologyTable& a, const CohomologyTable& b)
{
    require_same_shape(a, b);
    bool some_less = false, some_greater = false;
    for (std::size_t i = 0; i <= a.n(); ++i)
        for (std::int64_t j = a.window().lo; j <= a.window().hi; ++j) {
            const int c = cmp(a.at(i, j), b.at(i, j));
            some_less |= c < 0;
            some_greater |= c > 0;
        }
    if (some_less && some_greater)
        return TableOrder::Incomparable;
    if (some_less)
        return TableOrder::LessEqual;
    if (some_greater)
        return TableOrder::GreaterEqual;
    return TableOrder::Equal;
}

const char* to_string(TableOrder order)
{
    switch (order) {
    case TableOrder::Equal:
        return "=";
    case TableOrder::LessEqual:
        return "<=";
    case TableOrder::GreaterEqual:
        return ">=";
    case TableOrder::Incomparable:
        return "incomparable";
    }
    return "?";
}

} // namespace supermonad
