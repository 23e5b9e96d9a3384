#pragma once

// Slow, independent reference computations used only by the tests.

#include "supermonad/rational.hpp"
#include "supermonad/weights.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using supermonad::Integer;
using Partition = std::vector<std::int64_t>;

/// Every semistandard tableau of a partition shape with entries 1..m, each
/// returned as its content vector (length m).
std::vector<std::vector<std::int64_t>> ssyt_contents(const Partition& shape, std::size_t m);

/// Number of semistandard tableaux of the shape with entries 1..m.
Integer count_ssyt(const Partition& shape, std::size_t m);

/// Number of LR tableaux of skew shape nu/lambda with content mu, found by
/// trying every filling of the skew shape.
Integer lr_bruteforce(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Full product S_alpha (x) S_beta on m rows, weights may be negative.
std::map<supermonad::Weight, Integer> lr_product(const supermonad::Weight& alpha, const supermonad::Weight& beta,
                                                 std::size_t m);

/// Restriction S_alpha(k^n) to GL_m by peeling highest weights off the
/// restricted character.
std::map<supermonad::Weight, Integer> branch_by_character(const supermonad::Weight& alpha, std::size_t n,
                                                          std::size_t m);

struct Bott {
    std::size_t degree = 0;
    supermonad::Weight gamma;
};

/// Searches all permutations sigma for sigma(beta + rho) - rho dominant.
std::optional<Bott> bott_by_permutations(const supermonad::Weight& alpha, std::int64_t d, std::size_t n);

/// Invariant factors of a square integer matrix.
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> a);

/// Weakly decreasing vectors of length m with entries in [lo, hi].
std::vector<supermonad::Weight> all_weights(std::size_t m, std::int64_t lo, std::int64_t hi);

/// Strictly increasing W of length n+1 with w_0 in [w0_lo, w0_hi] and gaps in
/// [1, max_gap].
std::vector<std::vector<std::int64_t>> w_grid(std::size_t n, std::int64_t w0_lo, std::int64_t w0_hi,
                                              std::int64_t max_gap);

} // namespace oracle
