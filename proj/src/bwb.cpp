#include "supermonad/bwb.hpp"

#include "supermonad/errors.hpp"

#include <algorithm>
#include <string>

namespace supermonad {

namespace {

void require_same_ambient(const BundleExpr& a, const BundleExpr& b, const char* op)
{
    if (a.n() != b.n())
        throw ValidationError(std::string(op) + ": ambient mismatch P^" + std::to_string(a.n()) + " vs P^" +
                                  std::to_string(b.n()),
                              "n");
}

} // namespace

BundleExpr::BundleExpr(std::size_t n) : n_(n)
{
    if (n == 0)
        throw ValidationError("ambient dimension must be positive", "n");
}

BundleExpr BundleExpr::line(std::size_t n, std::int64_t d, const Integer& mult)
{
    return schur(n, Weight::zeros(n), d, mult);
}

BundleExpr BundleExpr::schur(std::size_t n, const Weight& alpha, std::int64_t d, const Integer& mult)
{
    BundleExpr b(n);
    b.add(alpha, d, mult);
    return b;
}

BundleExpr BundleExpr::exterior(std::size_t n, std::size_t j)
{
    if (j > n)
        throw ValidationError("exterior power index exceeds rank", "j");
    std::vector<std::int64_t> p(n, 0);
    std::fill(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(j), 1);
    return schur(n, Weight(std::move(p)), 0);
}

void BundleExpr::add(const Weight& alpha, std::int64_t d, const Integer& mult)
{
    if (alpha.size() != n_)
        throw ValidationError("bundle weight must have n = " + std::to_string(n_) + " parts", "weight");
    if (mult < 0)
        throw ValidationError("bundle multiplicity must be nonnegative", "mult");
    if (mult == 0)
        return;
    auto [w, t] = normalize_twist(alpha, d);
    summands_[SchurTerm{std::move(w), t}] += mult;
}

BundleExpr& BundleExpr::operator+=(const BundleExpr& other)
{
    require_same_ambient(*this, other, "direct sum");
    for (const auto& [term, mult] : other.summands_)
        summands_[term] += mult;
    return *this;
}

BundleExpr BundleExpr::twisted(std::int64_t j) const
{
    BundleExpr out(n_);
    for (const auto& [term, mult] : summands_)
        out.summands_[SchurTerm{term.weight, term.twist + j}] += mult;
    return out;
}

BundleExpr BundleExpr::scaled(const Integer& k) const
{
    if (k < 0)
        throw ValidationError("bundle multiplicity must be nonnegative", "mult");
    BundleExpr out(n_);
    if (k == 0)
        return out;
    for (const auto& [term, mult] : summands_)
        out.summands_[term] = mult * k;
    return out;
}

Integer BundleExpr::rank() const
{
    Integer r = 0;
    for (const auto& [term, mult] : summands_)
        r += mult * dim_schur(term.weight, n_);
    return r;
}

CohomologyOutcome bwb_cohomology(const Weight& alpha, std::int64_t d, std::size_t n)
{
    if (alpha.size() != n)
        throw ValidationError("bwb: weight must have n = " + std::to_string(n) + " parts", "alpha");

    std::vector<std::int64_t> shifted(n + 1);
    shifted[0] = d + static_cast<std::int64_t>(n);
    for (std::size_t i = 0; i < n; ++i)
        shifted[i + 1] = alpha[i] + static_cast<std::int64_t>(n - 1 - i);

    std::size_t inversions = 0;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (shifted[i] == shifted[j])
                return std::nullopt;
            if (shifted[i] < shifted[j])
                ++inversions;
        }

    std::sort(shifted.begin(), shifted.end(), std::greater<>());
    for (std::size_t i = 0; i <= n; ++i)
        shifted[i] -= static_cast<std::int64_t>(n - i);
    Weight gamma(std::move(shifted));
    Integer dim = dim_schur(gamma, n + 1);
    return CohomologyClass{inversions, std::move(gamma), std::move(dim)};
}

std::vector<Integer> cohomology_of_bundle(const BundleExpr& bundle, std::int64_t j)
{
    std::vector<Integer> h(bundle.n() + 1, Integer(0));
    for (const auto& [term, mult] : bundle.summands())
        if (auto c = bwb_cohomology(term.weight, term.twist + j, bundle.n()))
            h[c->degree] += mult * c->dimension;
    return h;
}

Integer euler_characteristic(const BundleExpr& bundle, std::int64_t j)
{
    Integer chi = 0;
    const auto h = cohomology_of_bundle(bundle, j);
    for (std::size_t i = 0; i < h.size(); ++i)
        chi += (i % 2 == 0) ? h[i] : Integer(-h[i]);
    return chi;
}

BundleExpr tensor(const BundleExpr& a, const BundleExpr& b)
{
    require_same_ambient(a, b, "tensor");
    const std::size_t n = a.n();
    BundleExpr out(n);
    for (const auto& [ta, ma] : a.summands())
        for (const auto& [tb, mb] : b.summands()) {
            // Smaller content keeps the tableau search short.
            const bool swap = tb.weight.total() > ta.weight.total();
            const auto& big = swap ? tb.weight : ta.weight;
            const auto& small = swap ? ta.weight : tb.weight;
            for (const auto& [nu, c] : littlewood_richardson(big, small, n))
                out.add(nu, ta.twist + tb.twist, ma * mb * c);
        }
    return out;
}

BundleExpr dual(const BundleExpr& b)
{
    BundleExpr out(b.n());
    for (const auto& [term, mult] : b.summands())
        out.add(dual_weight(term.weight), -term.twist, mult);
    return out;
}

std::vector<Integer> ext_dims(const BundleExpr& a, const BundleExpr& b)
{
    require_same_ambient(a, b, "ext");
    return cohomology_of_bundle(tensor(dual(a), b), 0);
}

Integer euler_pairing(const BundleExpr& a, const BundleExpr& b)
{
    require_same_ambient(a, b, "euler_pairing");
    return euler_characteristic(tensor(dual(a), b), 0);
}

BundleExpr restrict_linear(const BundleExpr& b, std::size_t m)
{
    const std::size_t n = b.n();
    if (m < 1 || m >= n)
        throw ValidationError("restrict_linear: need 1 <= m < n (m = " + std::to_string(m) + ", n = " +
                                  std::to_string(n) + ")",
                              "m");
    BundleExpr out(m);
    for (const auto& [term, mult] : b.summands())
        for (const auto& [beta, c] : branch_restrict(term.weight, n, m))
            out.add(beta, term.twist, mult * c);
    return out;
}

RootSequence supernatural_roots(const BundleExpr& b)
{
    if (!b.is_single())
        throw ValidationError("supernatural_roots needs exactly one Schur summand", "bundle");
    const auto& term = b.summands().begin()->first;
    std::vector<std::int64_t> f(b.n());
    for (std::size_t i = 0; i < b.n(); ++i)
        f[i] = term.weight[i] - static_cast<std::int64_t>(i + 1) - term.twist;
    return RootSequence(std::move(f));
}

std::int64_t supernatural_regularity(const RootSequence& f)
{
    if (f.size() == 0)
        throw ValidationError("empty root sequence", "roots");
    return -f[0] + 1;
}

} // namespace supermonad
