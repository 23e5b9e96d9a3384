#include "supermonad/monad.hpp"

#include "supermonad/decomp.hpp"
#include "supermonad/errors.hpp"
#include "supermonad/ktheory.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace supermonad {

namespace {

// lambda(d)^j_i = d_m - d_{i-1} - (m - i) for i <= j, and
// d_m - d_i - (m - i) for i > j, i = 1..m.
Weight efw_weight(const std::vector<std::int64_t>& d, std::size_t j)
{
    const std::size_t m = d.size() - 1;
    std::vector<std::int64_t> parts(m);
    for (std::size_t i = 1; i <= m; ++i) {
        const auto gap = static_cast<std::int64_t>(m - i);
        parts[i - 1] = (i <= j ? d[m] - d[i - 1] : d[m] - d[i]) - gap;
    }
    return Weight(std::move(parts));
}

Integer integral_mult(const Rational& x, const char* what)
{
    if (!is_integral(x))
        throw MathRefusal(std::string(what) + ": multiplicity " + to_string(x) + " is not an integer");
    return x.get_num();
}

std::vector<Rational> sum_profiles(std::size_t n, const std::vector<std::pair<std::int64_t, Rational>>& lines)
{
    std::vector<Rational> out(n + 1, Rational(0));
    for (const auto& [d, c] : lines) {
        const auto p = k0_class(BundleExpr::line(n, d)).chi_profile;
        for (std::size_t j = 0; j <= n; ++j)
            out[j] += c * Rational(p[j]);
    }
    return out;
}

std::vector<Rational> scaled_profile(const SheafExpr& f, const Integer& k)
{
    auto p = rational_profile(f);
    for (auto& x : p)
        x *= Rational(k);
    return p;
}

void require_same_ambient(const SheafExpr& f, const MonadData& m)
{
    if (f.n() != m.n)
        throw ValidationError("sheaf lives on P^" + std::to_string(f.n()) + " but W on P^" + std::to_string(m.n), "n");
}

void sort_entries(SpectralPage& page)
{
    std::sort(page.entries.begin(), page.entries.end(),
              [](const PageEntry& a, const PageEntry& b) { return std::pair(a.q, a.p) < std::pair(b.q, b.p); });
}

} // namespace

Integer binomial_determinant(const std::vector<std::int64_t>& w, std::size_t n)
{
    const std::size_t k = n + 1;
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j)
            a[i - 1][j - 1] = Rational(binomial_poly(w[n] - w[i - 1] + static_cast<std::int64_t>(j) - 1, n));
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && a[piv][c] == 0)
            ++piv;
        if (piv == k)
            return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < k; ++r) {
            const Rational factor = a[r][c] / a[c][c];
            for (std::size_t t = c; t < k; ++t)
                a[r][t] -= factor * a[c][t];
        }
    }
    return abs(to_integer(det, "binomial determinant"));
}

MonadData build_monad(const std::vector<std::int64_t>& w, std::size_t n)
{
    if (n == 0)
        throw ValidationError("ambient dimension must be positive", "n");
    if (w.size() != n + 1)
        throw ValidationError("W needs n+1 = " + std::to_string(n + 1) + " entries, got " + std::to_string(w.size()),
                              "w");
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] >= w[i])
            throw ValidationError("W must be strictly increasing", "w");

    MonadData m;
    m.n = n;
    m.w = w;
    std::vector<std::int64_t> mu(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i)
        mu[i - 1] = w[n] - w[i - 1] - static_cast<std::int64_t>(n - i + 1);
    m.mu = Weight(std::move(mu));
    m.n_w = dim_schur(m.mu, n + 1);
    if (binomial_determinant(w, n) != m.n_w)
        throw InvariantBreach("N_W: Weyl dimension " + to_string(m.n_w) + " differs from the binomial determinant " +
                              to_string(binomial_determinant(w, n)));
    const std::int64_t twist = w[n] - static_cast<std::int64_t>(n);
    for (std::size_t j = 0; j <= n; ++j) {
        m.lambdas.push_back(efw_weight(w, j));
        m.wperp.push_back(BundleExpr::schur(n, m.lambdas.back(), twist));
    }
    return m;
}

std::vector<std::vector<std::vector<Integer>>> orthogonality_table(const MonadData& m)
{
    std::vector<std::vector<std::vector<Integer>>> out(m.n + 1);
    for (std::size_t k = 0; k <= m.n; ++k)
        for (std::size_t j = 0; j <= m.n; ++j)
            out[k].push_back(cohomology_of_bundle(m.wperp[k], -m.w[j]));
    return out;
}

bool orthogonality_holds(const MonadData& m)
{
    const auto t = orthogonality_table(m);
    for (std::size_t k = 0; k <= m.n; ++k)
        for (std::size_t j = 0; j <= m.n; ++j)
            for (std::size_t i = 0; i <= m.n; ++i) {
                const Integer expected = (i == j && j == k) ? m.n_w : Integer(0);
                if (t[k][j][i] != expected)
                    return false;
            }
    return true;
}

EFWShape efw_shape(const DegreeSequence& d)
{
    if (d.size() < 2)
        throw ValidationError("degree sequence needs at least two entries", "degrees");
    EFWShape s;
    s.degrees = d;
    s.m = d.size() - 1;
    for (std::size_t j = 0; j <= s.m; ++j) {
        s.lambdas.push_back(efw_weight(d.degrees(), j));
        s.ranks.push_back(dim_schur(s.lambdas.back(), s.m));
        if (s.ranks.back() <= 0)
            throw InvariantBreach("EFW term rank is not positive");
    }
    return s;
}

SpectralPage phi1_page(const SheafExpr& f, const MonadData& m)
{
    require_same_ambient(f, m);
    for (const auto& t : f.terms())
        if (std::holds_alternative<FormalSupernatural>(t.term) || std::holds_alternative<CohomologyTable>(t.term))
            throw MathRefusal("phi1 needs E_q (x) F, which a cohomology table does not determine");
    SpectralPage page{PageKind::Phi1, m.n, m.w, {}, std::nullopt};
    for (std::size_t q = 0; q <= m.n; ++q) {
        const auto h = cohomology_of_tensor(f, m.wperp[q], 0);
        for (std::size_t i = 0; i <= m.n; ++i)
            if (h[i] != 0)
                page.entries.push_back({-static_cast<int>(i), q, BundleExpr::line(m.n, -m.w[q]),
                                        integral_mult(h[i], "phi1 page")});
    }
    sort_entries(page);
    if (f.terms().size() == 1 && f.terms().front().coeff == 1)
        if (const auto* b = std::get_if<BundleExpr>(&f.terms().front().term); b && b->is_single()) {
            const auto& [term, mult] = *b->summands().begin();
            if (mult == 1 && term.weight == Weight::zeros(m.n))
                page.line_bundle_twist = term.twist;
        }
    return page;
}

SpectralPage phi2_page(const SheafExpr& f, const MonadData& m)
{
    require_same_ambient(f, m);
    SpectralPage page{PageKind::Phi2, m.n, m.w, {}, std::nullopt};
    for (std::size_t q = 0; q <= m.n; ++q) {
        const auto h = cohomology_at(f, -m.w[q]);
        for (std::size_t i = 0; i <= m.n; ++i)
            if (h[i] != 0)
                page.entries.push_back({-static_cast<int>(i), q, m.wperp[q], integral_mult(h[i], "phi2 page")});
    }
    sort_entries(page);
    return page;
}

BundleExpr Filtration::total() const
{
    if (quotients.empty())
        return BundleExpr();
    BundleExpr out(quotients.front().first.n());
    for (const auto& [b, k] : quotients)
        out += b.scaled(k);
    return out;
}

Convergence page_convergence(const SpectralPage& page)
{
    if (page.entries.empty())
        return EmptyPage{};

    if (page.kind == PageKind::Phi1 && page.line_bundle_twist && page.entries.size() > 1)
        return phi1_line_bundle_strands(*page.line_bundle_twist, build_monad(page.w, page.n));

    const auto& es = page.entries;
    const bool antidiagonal =
        std::all_of(es.begin(), es.end(), [](const PageEntry& e) { return e.total_degree() == 0; });
    if (antidiagonal) {
        Filtration f;
        for (const auto& e : es)
            f.quotients.emplace_back(e.object, e.mult);
        for (std::size_t k = 0; k < f.quotients.size(); ++k)
            for (std::size_t j = 0; j < k; ++j) {
                const auto ext = ext_dims(f.quotients[k].first, f.quotients[j].first);
                if (ext.size() > 1 && ext[1] != 0)
                    f.obstructions.emplace_back(k, j, ext[1]);
            }
        f.split_certified = f.obstructions.empty();
        return f;
    }

    // Entries assemble into an honest complex when no component of the
    // twisted differential can point from a higher q to a lower q except
    // through Hom in the expected direction.
    for (const auto& a : es)
        for (const auto& b : es) {
            if (a.q <= b.q || b.total_degree() < a.total_degree())
                continue;
            const auto k = static_cast<std::size_t>(b.total_degree() - a.total_degree() + 1);
            const auto ext = ext_dims(a.object, b.object);
            if (k < ext.size() && ext[k] != 0)
                return Indeterminate{"possible nonzero differential: Ext^" + std::to_string(k) + " from entry (" +
                                     std::to_string(a.p) + "," + std::to_string(a.q) + ") to entry (" +
                                     std::to_string(b.p) + "," + std::to_string(b.q) + ") has dimension " +
                                     to_string(ext[k])};
        }
    int top = 0;
    for (const auto& e : es) {
        if (e.total_degree() < 0)
            return Indeterminate{"entry (" + std::to_string(e.p) + "," + std::to_string(e.q) +
                                 ") sits in negative total degree"};
        top = std::max(top, e.total_degree());
    }
    Resolution r;
    r.terms.assign(static_cast<std::size_t>(top) + 1, BundleExpr(page.n));
    for (const auto& e : es)
        r.terms[static_cast<std::size_t>(e.total_degree())] += e.object.scaled(e.mult);
    return r;
}

TwoStrandReport phi1_line_bundle_strands(std::int64_t d, const MonadData& m)
{
    const std::size_t n = m.n;
    TwoStrandReport r;
    r.d = d;
    for (std::size_t k = 0; k <= n; ++k)
        if (d == -m.w[k]) {
            r.single_term = true;
            r.i = static_cast<int>(k);
            r.a.push_back({k, m.n_w});
            return r;
        }

    int i = -1;
    while (i < static_cast<int>(n) && d < -m.w[static_cast<std::size_t>(i + 1)])
        ++i;
    r.i = i;

    std::vector<std::pair<std::int64_t, Rational>> ker_a, coker_b;
    for (std::size_t j = 0; j <= n; ++j) {
        const auto h = cohomology_of_bundle(m.wperp[j], d);
        const bool in_a = static_cast<int>(j) <= i;
        const auto deg = static_cast<std::size_t>(in_a ? i : i + 1);
        for (std::size_t t = 0; t <= n; ++t)
            if (t != deg && h[t] != 0)
                throw InvariantBreach("E_" + std::to_string(j) + "(" + std::to_string(d) +
                                      ") has cohomology outside its strand degree");
        if (in_a) {
            r.a.push_back({j, h[deg]});
            const int sign = ((i + static_cast<int>(j)) % 2 == 0) ? 1 : -1;
            ker_a.emplace_back(-m.w[j], Rational(sign * h[deg]));
        } else {
            r.b.push_back({j, h[deg]});
            const int sign = ((static_cast<int>(j) - i - 1) % 2 == 0) ? 1 : -1;
            coker_b.emplace_back(-m.w[j], Rational(sign * h[deg]));
        }
    }

    auto total = sum_profiles(n, ker_a);
    const auto cb = sum_profiles(n, coker_b);
    for (std::size_t j = 0; j <= n; ++j)
        total[j] += cb[j];
    if (total != scaled_profile(BundleExpr::line(n, d), m.n_w))
        throw InvariantBreach("[ker A] + [coker B] differs from N_W [O(d)]");

    std::vector<std::int64_t> e(m.w.begin(), m.w.end());
    e.insert(e.begin() + (i + 1), -d);
    r.witness = DegreeSequence(e);
    r.witness_ranks = efw_shape(r.witness).ranks;
    for (std::size_t k = 0; k < r.witness_ranks.size(); ++k) {
        const auto ki = static_cast<int>(k);
        const Integer expected = ki <= i        ? r.a[k].mult
                                 : ki == i + 1 ? m.n_w
                                                : r.b[k - static_cast<std::size_t>(i) - 2].mult;
        if (r.witness_ranks[k] != expected)
            throw InvariantBreach("EFW witness rank at position " + std::to_string(k) +
                                  " does not match the strand multiplicities");
    }
    r.split = true;
    return r;
}

PureResolutionShape pure_resolution(const SheafExpr& f, const MonadData& m)
{
    require_same_ambient(f, m);
    PureResolutionShape s;
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (std::size_t i = 0; i <= m.n; ++i) {
        const auto h = cohomology_of_tensor(f, m.wperp[i], 0);
        for (std::size_t q = 1; q <= m.n; ++q)
            if (h[q] != 0)
                throw MathRefusal("not w_0-regular: nonzero higher cohomology h^" + std::to_string(q) + "(E_" +
                                  std::to_string(i) + " (x) F) = " + to_string(h[q]) + " at (i, q) = (" +
                                  std::to_string(i) + ", " + std::to_string(q) + ")");
        s.twists.push_back(-m.w[i]);
        s.ranks.push_back(integral_mult(h[0], "pure resolution"));
        terms.emplace_back(-m.w[i], Rational(i % 2 == 0 ? s.ranks.back() : Integer(-s.ranks.back())));
    }
    if (sum_profiles(m.n, terms) != scaled_profile(f, m.n_w))
        throw InvariantBreach("pure resolution ranks do not sum to N_W [F]");
    return s;
}

Theorem18Result theorem18(const SheafExpr& f, const MonadData& m, Window window)
{
    require_same_ambient(f, m);
    const auto table = cohomology_table(f, window);
    const auto a = hypothesis_check_wperp(table, m);
    if (!a)
        throw MathRefusal("hypothesis violated: gamma(F) is not a nonnegative combination of the gamma(E_i) on [" +
                          std::to_string(window.lo) + "," + std::to_string(window.hi) + "]");
    Theorem18Result r;
    r.a = *a;
    r.quotient_table = CohomologyTable(m.n, window);
    for (std::size_t i = 0; i <= m.n; ++i) {
        const Rational k = Rational(m.n_w) * r.a[i];
        if (!is_integral(k))
            throw MathRefusal("hypothesis violated: N_W a_" + std::to_string(i) + " = " + to_string(k) +
                              " is not an integer");
        if (k == 0)
            continue;
        r.filtration.quotients.emplace_back(m.wperp[i], k.get_num());
        r.quotient_table = add(r.quotient_table, scale(cohomology_table(m.wperp[i], window), k));
    }
    for (std::size_t k = 0; k < r.filtration.quotients.size(); ++k)
        for (std::size_t j = 0; j < k; ++j) {
            const auto ext = ext_dims(r.filtration.quotients[k].first, r.filtration.quotients[j].first);
            if (ext[1] != 0)
                r.filtration.obstructions.emplace_back(k, j, ext[1]);
        }
    r.filtration.split_certified = r.filtration.obstructions.empty();

    const auto page = phi2_page(f, m);
    std::size_t idx = 0;
    for (const auto& e : page.entries) {
        if (e.total_degree() != 0 || idx >= r.filtration.quotients.size() ||
            !(e.object == r.filtration.quotients[idx].first) || e.mult != r.filtration.quotients[idx].second)
            throw InvariantBreach("phi2 page does not match the filtration quotients");
        ++idx;
    }
    if (idx != r.filtration.quotients.size())
        throw InvariantBreach("phi2 page is missing filtration quotients");

    r.scaled_input_table = scale(table, Rational(m.n_w));
    r.table_verdict = r.quotient_table == r.scaled_input_table;
    if (!r.table_verdict)
        throw InvariantBreach("sum of quotient tables differs from N_W gamma(F)");
    return r;
}

Corollary19Result corollary19(const SheafExpr& f, const MonadData& m)
{
    require_same_ambient(f, m);
    if (f.is_zero())
        throw MathRefusal("the zero sheaf has no root sequence");
    std::optional<RootSequence> roots;
    Rational rank_f = 0;
    auto absorb = [&](const RootSequence& r) {
        if (roots && !(*roots == r))
            throw MathRefusal("summands have different root sequences");
        roots = r;
    };
    for (const auto& t : f.terms()) {
        if (const auto* b = std::get_if<BundleExpr>(&t.term)) {
            for (const auto& [term, mult] : b->summands())
                absorb(supernatural_roots(BundleExpr::schur(m.n, term.weight, term.twist)));
            rank_f += t.coeff * Rational(b->rank());
        } else if (const auto* s = std::get_if<FormalSupernatural>(&t.term)) {
            absorb(s->roots);
            rank_f += t.coeff * s->scale;
        } else {
            throw MathRefusal("the single-entry check needs bundle or supernatural terms");
        }
    }

    std::optional<std::size_t> which;
    for (std::size_t i = 0; i <= m.n && !which; ++i) {
        std::vector<std::int64_t> complement;
        for (std::size_t k = 0; k <= m.n; ++k)
            if (k != i)
                complement.push_back(-m.w[k]);
        if (roots->roots() == complement)
            which = i;
    }
    if (!which)
        throw MathRefusal("root sequence is not {-w_0,...,-w_n} minus one entry");

    Corollary19Result r;
    r.i = *which;
    r.rank_f = rank_f;
    r.m = integral_mult(cohomology_at(f, -m.w[r.i])[r.i], "single-entry multiplicity");
    r.verdict = Rational(r.m) * Rational(m.wperp[r.i].rank()) == Rational(m.n_w) * rank_f;
    if (!r.verdict)
        throw InvariantBreach("m rank E_i differs from N_W rank F");
    const auto page = phi2_page(f, m);
    if (page.entries.size() != 1 || page.entries[0].q != r.i || page.entries[0].mult != r.m)
        throw InvariantBreach("phi2 page is not the single entry E_i^m");
    return r;
}

bool prop51_equality_regime(std::int64_t d, const MonadData& m)
{
    if (d > -m.w.front() || d < -m.w.back())
        return true;
    return std::any_of(m.w.begin(), m.w.end(), [d](std::int64_t x) { return d == -x; });
}

Prop51Report prop51_check(const SheafExpr& f, const MonadData& m, const CohomologyTable& phi2_table)
{
    require_same_ambient(f, m);
    if (phi2_table.n() != m.n)
        throw ValidationError("phi2 table lives on a different ambient space", "n");
    Prop51Report r;
    r.window = phi2_table.window();
    const auto base = scale(cohomology_table(f, r.window), Rational(m.n_w));
    for (std::int64_t d = r.window.lo; d <= r.window.hi; ++d) {
        bool strict = false;
        for (std::size_t i = 0; i <= m.n; ++i) {
            const int c = cmp(phi2_table.at(i, d), base.at(i, d));
            if (c < 0)
                throw InvariantBreach("h^" + std::to_string(i) + "(Phi_2(F)(" + std::to_string(d) +
                                      ")) is below N_W h^" + std::to_string(i) + "(F(" + std::to_string(d) + "))");
            if (c > 0) {
                strict = true;
                r.strict.emplace_back(i, d);
            }
        }
        if (strict && prop51_equality_regime(d, m))
            throw InvariantBreach("strict inequality at d = " + std::to_string(d) + " inside the equality regime");
        (strict ? r.strict_columns : r.equality_columns).push_back(d);
    }
    return r;
}

} // namespace supermonad
