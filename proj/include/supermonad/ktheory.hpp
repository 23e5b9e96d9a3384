#pragma once

#include "supermonad/monad.hpp"
#include "supermonad/rational.hpp"
#include "supermonad/sheaves.hpp"

#include <cstddef>
#include <vector>

namespace supermonad {

/// A class in K_0(P^n), stored as (chi(F(0)), ..., chi(F(n))).
struct K0Class {
    std::size_t n = 0;
    std::vector<Integer> chi_profile;

    bool operator==(const K0Class&) const = default;
};

/// Throws MathRefusal ("not a lattice class") for a non-integral profile.
K0Class k0_class(const SheafExpr& f);

/// chi(F(0..n)) without the integrality requirement.
std::vector<Rational> rational_profile(const SheafExpr& f);

/// Integer coordinates in {[O], [O(-1)], ..., [O(-n)]}.
std::vector<Integer> standard_coordinates(const K0Class& c);

enum class BasisLabel { Standard, W, Wperp };

struct RationalCoordinates {
    BasisLabel basis = BasisLabel::Standard;
    std::vector<Rational> values;
};

/// Throws MathRefusal ("not a basis") when the basis is singular.
RationalCoordinates coords_in_basis(const std::vector<Rational>& profile, const std::vector<K0Class>& basis,
                                    BasisLabel label = BasisLabel::Standard);
RationalCoordinates coords_in_basis(const K0Class& c, const std::vector<K0Class>& basis,
                                    BasisLabel label = BasisLabel::Standard);

/// |det| of the standard coordinates; 0 when the classes are dependent.
Integer subgroup_index(const std::vector<K0Class>& classes);

std::vector<K0Class> w_classes(const MonadData& m);
std::vector<K0Class> wperp_classes(const MonadData& m);

enum class Cor14Side { W, Wperp };

/// a_j = (-1)^j chi(F (x) E_j) / N_W on the W side, (-1)^j chi(F(-w_j)) / N_W
/// on the Wperp side; cross-checked against coords_in_basis.
RationalCoordinates decompose_cor14(const SheafExpr& f, const MonadData& m, Cor14Side side);

/// Sum over entries of (-1)^{p+q} mult [object], as a chi-profile.
K0Class page_class(const SpectralPage& page);

} // namespace supermonad
