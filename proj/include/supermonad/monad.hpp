#pragma once

#include "supermonad/bwb.hpp"
#include "supermonad/rational.hpp"
#include "supermonad/sheaves.hpp"
#include "supermonad/weights.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace supermonad {

/// W = (w_0 < ... < w_n) and everything derived from it: mu(W), N_W, the
/// dual collection E_0..E_n, and the terms O(-w_j) [x] E_j of the complex E_W.
struct MonadData {
    std::size_t n = 0;
    std::vector<std::int64_t> w;
    Weight mu;
    Integer n_w;
    /// lambda(w)^j, n parts each.
    std::vector<Weight> lambdas;
    /// E_j = S_{lambda(w)^j} Q* (x) O(w_n - n).
    std::vector<BundleExpr> wperp;

    std::pair<BundleExpr, BundleExpr> ew_term(std::size_t j) const
    {
        return {BundleExpr::line(n, -w[j]), wperp[j]};
    }
};

/// |det(binom(w_n - w_{i-1} + j - 1, n))| over i, j = 1..n+1.
Integer binomial_determinant(const std::vector<std::int64_t>& w, std::size_t n);

/// Throws ValidationError unless w is strictly increasing of length n+1, and
/// InvariantBreach if the two computations of N_W disagree.
MonadData build_monad(const std::vector<std::int64_t>& w, std::size_t n);

/// table[k][j][i] = h^i(E_k(-w_j)).
std::vector<std::vector<std::vector<Integer>>> orthogonality_table(const MonadData& m);

/// h^i(E_k(-w_j)) = N_W exactly when i = j = k, zero otherwise.
bool orthogonality_holds(const MonadData& m);

struct EFWShape {
    DegreeSequence degrees;
    std::size_t m = 0;
    std::vector<Weight> lambdas;
    std::vector<Integer> ranks;
};

/// lambda(d)^j for j = 0..m with m = d.size() - 1 >= 1.
EFWShape efw_shape(const DegreeSequence& d);

enum class PageKind { Phi1, Phi2 };

struct PageEntry {
    int p = 0;
    std::size_t q = 0;
    BundleExpr object;
    Integer mult;

    int total_degree() const { return p + static_cast<int>(q); }
};

/// Nonzero E^1 entries, sorted by (q, p).
struct SpectralPage {
    PageKind kind = PageKind::Phi1;
    std::size_t n = 0;
    std::vector<std::int64_t> w;
    std::vector<PageEntry> entries;
    /// Set when the page is Phi_1 of a single line bundle O(d).
    std::optional<std::int64_t> line_bundle_twist;
};

/// E^1_{p,q} = O(-w_q) (x) H^{-p}(E_q (x) F). Table-only terms are refused.
SpectralPage phi1_page(const SheafExpr& f, const MonadData& m);

/// E^1_{p,q} = H^{-p}(F(-w_q)) (x) E_q.
SpectralPage phi2_page(const SheafExpr& f, const MonadData& m);

/// Quotients bottom to top.
struct Filtration {
    std::vector<std::pair<BundleExpr, Integer>> quotients;
    bool split_certified = false;
    /// Ext^1(upper, lower) dimensions that blocked certification, as
    /// (upper index, lower index, dimension).
    std::vector<std::tuple<std::size_t, std::size_t, Integer>> obstructions;

    BundleExpr total() const;
};

/// terms[t] sits in homological degree t.
struct Resolution {
    std::vector<BundleExpr> terms;
};

struct StrandTerm {
    std::size_t j = 0;
    Integer mult;
};

struct TwoStrandReport {
    std::int64_t d = 0;
    /// -w_i > d > -w_{i+1}; -1 above -w_0, n below -w_n. Unused for a
    /// single-term report.
    int i = 0;
    bool single_term = false;
    /// O(-w_j) (x) H^i(E_j(d)), j = 0..i.
    std::vector<StrandTerm> a;
    /// O(-w_j) (x) H^{i+1}(E_j(d)), j = i+1..n.
    std::vector<StrandTerm> b;
    DegreeSequence witness;
    std::vector<Integer> witness_ranks;
    bool split = true;
};

struct EmptyPage {};

struct Indeterminate {
    std::string reason;
};

using Convergence = std::variant<EmptyPage, Resolution, Filtration, TwoStrandReport, Indeterminate>;

Convergence page_convergence(const SpectralPage& page);

TwoStrandReport phi1_line_bundle_strands(std::int64_t d, const MonadData& m);

/// O(-w_i)^{b_i} in homological degree i.
struct PureResolutionShape {
    std::vector<std::int64_t> twists;
    std::vector<Integer> ranks;
};

/// Requires h^{>0}(E_i (x) F) = 0 for every i; otherwise MathRefusal naming
/// the first offending (i, q).
PureResolutionShape pure_resolution(const SheafExpr& f, const MonadData& m);

struct Theorem18Result {
    std::vector<Rational> a;
    Filtration filtration;
    CohomologyTable quotient_table;
    CohomologyTable scaled_input_table;
    bool table_verdict = false;
};

Theorem18Result theorem18(const SheafExpr& f, const MonadData& m, Window window);

struct Corollary19Result {
    std::size_t i = 0;
    Integer m;
    Rational rank_f;
    bool verdict = false;
};

Corollary19Result corollary19(const SheafExpr& f, const MonadData& m);

struct Prop51Report {
    Window window;
    /// (i, d) where h^i(Phi_2(F)(d)) > N_W h^i(F(d)).
    std::vector<std::pair<std::size_t, std::int64_t>> strict;
    std::vector<std::int64_t> equality_columns;
    std::vector<std::int64_t> strict_columns;
};

/// True when d is in {-w_j}, above -w_0, or below -w_n.
bool prop51_equality_regime(std::int64_t d, const MonadData& m);

/// Checks phi2_table >= N_W gamma(F) entrywise with equality in every
/// column d of the equality regime. Violations throw InvariantBreach.
Prop51Report prop51_check(const SheafExpr& f, const MonadData& m, const CohomologyTable& phi2_table);

} // namespace supermonad
