#pragma once

#include "supermonad/bwb.hpp"
#include "supermonad/rational.hpp"
#include "supermonad/weights.hpp"

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace supermonad {

/// Closed twist range [lo, hi].
struct Window {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    Window() = default;
    Window(std::int64_t lo_, std::int64_t hi_);

    std::size_t width() const noexcept { return static_cast<std::size_t>(hi - lo + 1); }
    bool contains(std::int64_t j) const noexcept { return lo <= j && j <= hi; }
    bool contains(const Window& w) const noexcept { return lo <= w.lo && w.hi <= hi; }
    bool operator==(const Window&) const = default;
};

/// gamma_{i,j} = h^i(F(j)) for i in [0, n] and j in a window. Entries are
/// nonnegative rationals.
class CohomologyTable {
public:
    CohomologyTable() = default;
    CohomologyTable(std::size_t n, Window window);

    std::size_t n() const noexcept { return n_; }
    const Window& window() const noexcept { return window_; }

    const Rational& at(std::size_t i, std::int64_t j) const;
    void set(std::size_t i, std::int64_t j, Rational value);

    bool column_is_zero(std::int64_t j) const;
    bool is_zero() const;
    /// Sum_i (-1)^i gamma_{i,j}
    Rational chi(std::int64_t j) const;
    CohomologyTable restricted(Window sub) const;

    bool operator==(const CohomologyTable&) const = default;

private:
    std::size_t n_ = 0;
    Window window_;
    std::vector<std::vector<Rational>> rows_;
};

/// O_{P^m}(d) for a linear P^m inside P^n.
struct LinearSubspace {
    std::size_t m = 0;
    std::int64_t d = 0;
    bool operator==(const LinearSubspace&) const = default;
};

/// A table-only stand-in for a supernatural sheaf: roots and a positive scale
/// (the rank).
struct FormalSupernatural {
    RootSequence roots;
    Rational scale;
    bool operator==(const FormalSupernatural&) const = default;
};

using SheafTerm = std::variant<BundleExpr, LinearSubspace, FormalSupernatural, CohomologyTable>;

struct WeightedTerm {
    Rational coeff;
    SheafTerm term;
};

/// Formal direct sum with positive rational coefficients.
class SheafExpr {
public:
    explicit SheafExpr(std::size_t n);
    SheafExpr(const BundleExpr& bundle); // NOLINT(google-explicit-constructor)

    static SheafExpr zero(std::size_t n) { return SheafExpr(n); }
    static SheafExpr linear(std::size_t n, std::size_t m, std::int64_t d = 0);
    static SheafExpr supernatural(const RootSequence& f, const Rational& scale);
    static SheafExpr table(const CohomologyTable& t);

    std::size_t n() const noexcept { return n_; }
    const std::vector<WeightedTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const Rational& coeff, SheafTerm term);
    SheafExpr& operator+=(const SheafExpr& other);
    friend SheafExpr operator+(SheafExpr a, const SheafExpr& b) { return a += b; }
    SheafExpr scaled(const Rational& q) const;

    /// Every term is a locally free equivariant bundle.
    bool is_bundle_only() const;
    /// Sum of the bundle terms, when every term is a bundle with integer
    /// coefficient.
    BundleExpr as_bundle() const;

private:
    std::size_t n_;
    std::vector<WeightedTerm> terms_;
};

/// Polynomial in the twist variable, monomial coefficients c_0, c_1, ...
class HilbertPolynomial {
public:
    HilbertPolynomial() = default;
    explicit HilbertPolynomial(std::vector<Rational> coeffs);

    /// Through (x_k, y_k); nodes must be distinct.
    static HilbertPolynomial interpolate(const std::vector<std::int64_t>& xs, const std::vector<Rational>& ys);

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational operator()(std::int64_t j) const;

    bool operator==(const HilbertPolynomial&) const = default;

private:
    std::vector<Rational> coeffs_;
};

/// h^0..h^n of F(j). Throws MathRefusal when j lies outside an explicit
/// table's window.
std::vector<Rational> cohomology_at(const SheafExpr& f, std::int64_t j);

/// h^0..h^n of F (x) E (j) for a bundle E. Bundle terms go through tensor,
/// linear subspaces through restrict_linear; table-only terms are refused.
std::vector<Rational> cohomology_of_tensor(const SheafExpr& f, const BundleExpr& e, std::int64_t j);

Rational euler_characteristic(const SheafExpr& f, std::int64_t j);

CohomologyTable cohomology_table(const SheafExpr& f, Window window);

/// scale * |prod_k (j - f_k)| / n! in degree #{k : f_k > j}, zero at roots.
CohomologyTable supernatural_table(const RootSequence& f, const Rational& scale, Window window);

HilbertPolynomial hilbert_polynomial(const SheafExpr& f);

CohomologyTable scale(const CohomologyTable& t, const Rational& q);
CohomologyTable add(const CohomologyTable& a, const CohomologyTable& b);

enum class TableOrder { Equal, LessEqual, GreaterEqual, Incomparable };

/// Strongest entrywise relation of a against b.
TableOrder compare_entrywise(const CohomologyTable& a, const CohomologyTable& b);

const char* to_string(TableOrder order);

} // namespace supermonad
