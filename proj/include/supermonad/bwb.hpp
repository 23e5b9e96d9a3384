#pragma once

#include "supermonad/rational.hpp"
#include "supermonad/weights.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace supermonad {

/// One twisted Schur bundle S_weight Q* (x) O(twist) on P^n, always in
/// canonical form (last part of the weight is 0).
struct SchurTerm {
    Weight weight;
    std::int64_t twist = 0;

    auto operator<=>(const SchurTerm&) const = default;
};

/// Formal direct sum of twisted Schur bundles with positive integer
/// multiplicities. The empty sum is the zero bundle.
class BundleExpr {
public:
    explicit BundleExpr(std::size_t n = 1);

    static BundleExpr zero(std::size_t n) { return BundleExpr(n); }
    /// O(d)
    static BundleExpr line(std::size_t n, std::int64_t d, const Integer& mult = 1);
    /// S_alpha Q* (x) O(d); alpha needs n parts.
    static BundleExpr schur(std::size_t n, const Weight& alpha, std::int64_t d, const Integer& mult = 1);
    /// Lambda^j Q* = Omega^j(j)
    static BundleExpr exterior(std::size_t n, std::size_t j);
    /// Q*, the twisted cotangent bundle Omega^1(1)
    static BundleExpr tautological_dual(std::size_t n) { return exterior(n, 1); }

    std::size_t n() const noexcept { return n_; }
    const std::map<SchurTerm, Integer>& summands() const noexcept { return summands_; }
    bool is_zero() const noexcept { return summands_.empty(); }
    bool is_single() const noexcept { return summands_.size() == 1; }

    void add(const Weight& alpha, std::int64_t d, const Integer& mult);
    BundleExpr& operator+=(const BundleExpr& other);
    friend BundleExpr operator+(BundleExpr a, const BundleExpr& b) { return a += b; }

    BundleExpr twisted(std::int64_t j) const;
    BundleExpr scaled(const Integer& k) const;
    Integer rank() const;

    bool operator==(const BundleExpr&) const = default;

private:
    std::size_t n_;
    std::map<SchurTerm, Integer> summands_;
};

/// Non-vanishing outcome of Borel-Weil-Bott: H^degree = S_gamma(V*).
struct CohomologyClass {
    std::size_t degree = 0;
    Weight gamma;
    Integer dimension;
};

/// std::nullopt means all cohomology vanishes.
using CohomologyOutcome = std::optional<CohomologyClass>;

/// H^*(P^n, S_alpha Q* (x) O(d)). Sort beta + rho with beta = (d, alpha) and
/// rho = (n, ..., 0); a repeated entry means total vanishing, otherwise the
/// number of inversions is the degree and sorted - rho is gamma.
CohomologyOutcome bwb_cohomology(const Weight& alpha, std::int64_t d, std::size_t n);

/// h^0..h^n of B(j).
std::vector<Integer> cohomology_of_bundle(const BundleExpr& bundle, std::int64_t j);

/// Alternating sum of cohomology_of_bundle.
Integer euler_characteristic(const BundleExpr& bundle, std::int64_t j);

BundleExpr tensor(const BundleExpr& a, const BundleExpr& b);
BundleExpr dual(const BundleExpr& b);

/// dim Ext^i(a, b) = h^i(a^* (x) b), i = 0..n. Locally free inputs only.
std::vector<Integer> ext_dims(const BundleExpr& a, const BundleExpr& b);

Integer euler_pairing(const BundleExpr& a, const BundleExpr& b);

/// Restriction to a linear P^m inside P^n, 1 <= m < n, using
/// Q|_{P^m} = Q_{P^m} + O^{n-m}.
BundleExpr restrict_linear(const BundleExpr& b, std::size_t m);

/// The n twists j at which every H^i(B(j)) vanishes, for a single summand
/// S_alpha Q* (x) O(d): f_i = alpha_i - i - d.
RootSequence supernatural_roots(const BundleExpr& b);

/// Castelnuovo-Mumford regularity of a supernatural sheaf: -f_1 + 1.
std::int64_t supernatural_regularity(const RootSequence& f);

} // namespace supermonad
