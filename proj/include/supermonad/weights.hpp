#pragma once

#include "supermonad/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace supermonad {

/// Weakly decreasing integer sequence of fixed length. Parts may be
/// negative; trailing zeros are significant.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<std::int64_t> parts);
    Weight(std::initializer_list<std::int64_t> parts)
        : Weight(std::vector<std::int64_t>(parts)) {}

    static Weight zeros(std::size_t m) { return Weight(std::vector<std::int64_t>(m, 0)); }

    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    std::int64_t operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<std::int64_t>& parts() const noexcept { return parts_; }

    std::int64_t first() const { return parts_.front(); }
    std::int64_t last() const { return parts_.back(); }

    /// Sum of the parts.
    std::int64_t total() const;
    bool is_partition() const { return parts_.empty() || parts_.back() >= 0; }

    /// Appends zeros up to m parts. Requires the last part to be >= 0.
    Weight padded(std::size_t m) const;
    /// Adds c to every part.
    Weight shifted(std::int64_t c) const;

    auto operator<=>(const Weight&) const = default;

private:
    std::vector<std::int64_t> parts_;
};

/// Ordered multiset of weights, multiplicities are positive.
using WeightMultiset = std::map<Weight, Integer>;

/// Strictly decreasing f_1 > ... > f_n.
class RootSequence {
public:
    RootSequence() = default;
    explicit RootSequence(std::vector<std::int64_t> roots);
    RootSequence(std::initializer_list<std::int64_t> roots)
        : RootSequence(std::vector<std::int64_t>(roots)) {}

    std::size_t size() const noexcept { return roots_.size(); }
    std::int64_t operator[](std::size_t i) const { return roots_[i]; }
    const std::vector<std::int64_t>& roots() const noexcept { return roots_; }

    /// Componentwise f <= g.
    bool precedes_or_equal(const RootSequence& other) const;

    auto operator<=>(const RootSequence&) const = default;

private:
    std::vector<std::int64_t> roots_;
};

/// Strictly increasing d_0 < ... < d_s.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<std::int64_t> degrees);
    DegreeSequence(std::initializer_list<std::int64_t> degrees)
        : DegreeSequence(std::vector<std::int64_t>(degrees)) {}

    std::size_t size() const noexcept { return degrees_.size(); }
    std::int64_t operator[](std::size_t i) const { return degrees_[i]; }
    const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }

    auto operator<=>(const DegreeSequence&) const = default;

private:
    std::vector<std::int64_t> degrees_;
};

/// dim S_alpha(k^m) by the Weyl dimension formula. alpha must have m parts.
Integer dim_schur(const Weight& alpha, std::size_t m);

/// (-alpha_m, ..., -alpha_1).
Weight dual_weight(const Weight& alpha);

/// Canonical form of S_alpha Q* (x) O(d): subtracting c = alpha_m from every
/// part divides by (det Q*)^c = O(-c), so the twist becomes d - c.
std::pair<Weight, std::int64_t> normalize_twist(const Weight& alpha, std::int64_t d);

/// S_alpha (x) S_beta = sum_nu S_nu^{c_nu} as GL_m representations. Weights
/// with more than m rows after normalization are dropped.
///
/// Coefficients come from enumerating LR skew tableaux of shape nu/lambda and
/// content mu (lambda, mu the normalized alpha, beta). The search is
/// exponential in |mu|; everything this library asks for stays below a few
/// dozen boxes on at most five rows.
WeightMultiset littlewood_richardson(const Weight& alpha, const Weight& beta, std::size_t m);

/// Restriction of S_alpha(k^n) to GL_m along k^n = k^m + trivial^{n-m}:
/// iterated interlacing (one trivial summand at a time).
WeightMultiset branch_restrict(const Weight& alpha, std::size_t n, std::size_t m);

} // namespace supermonad
