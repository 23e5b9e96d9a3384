#pragma once

#include "supermonad/bwb.hpp"
#include "supermonad/monad.hpp"
#include "supermonad/rational.hpp"
#include "supermonad/sheaves.hpp"
#include "supermonad/weights.hpp"

#include <optional>
#include <vector>

namespace supermonad {

struct BSTerm {
    RootSequence roots;
    /// Against supernatural_table(roots, 1, .), whose Hilbert polynomial is
    /// prod_k (j - f_k) / n!.
    Rational coeff;
};

/// Ordered from the top of the chain downward.
struct BSDecomposition {
    std::size_t n = 0;
    std::vector<BSTerm> terms;
};

/// Repeatedly peels off the largest root sequence visible in the table: the
/// top nonzero row of the leftmost column must be n, and scanning rightward
/// every drop of the top nonzero row below the running degree marks the next
/// root. The coefficient is the largest one keeping every entry nonnegative.
/// Throws MathRefusal when this stalls (a non-bundle table or a window that
/// misses a root).
BSDecomposition bs_decompose(const CohomologyTable& t);
BSDecomposition bs_decompose(const SheafExpr& f, Window window);

/// Sum of coeff * supernatural_table(roots, 1, window).
CohomologyTable reassemble(const BSDecomposition& d, Window window);

/// The equivariant bundle S_alpha Q* (x) O(e) with the given roots and
/// alpha_n = 0.
BundleExpr equivariant_representative(const RootSequence& f);

/// coeff / rank of the equivariant representative, term by term: the
/// coefficients against gamma of actual bundles.
std::vector<Rational> equivariant_coefficients(const BSDecomposition& d);

/// a_i = T(i, -w_i) / N_W when T equals sum_i a_i gamma(E_i) on the table's
/// window, std::nullopt otherwise. The window must contain
/// [-w_n - 1, -w_0 + 1].
std::optional<std::vector<Rational>> hypothesis_check_wperp(const CohomologyTable& t, const MonadData& m);

} // namespace supermonad
