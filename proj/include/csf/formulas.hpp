#pragma once

#include "csf/family.hpp"
#include "csf/nsym.hpp"

namespace csf {

/// Closed-form noncommutative analog of X_G in the Lambda basis for a family
/// member. Every family except spider yields nonnegative integer
/// coefficients; a violation throws std::logic_error.
NSymPoly elementary_expansion(const FamilySpec& spec);

/// sum_{I |= n} w_I Lambda^I; n = 0 gives 1.
NSymPoly path_analog(int n);
/// sum_{I |= m} (i_1 - 1) w_I Lambda^I.
NSymPoly cycle_analog(int m);

/// (-1)^n Psi^n + sum_{I |= n} eps^I i_1 Psi^I.
NSymPoly cycle_psi_analog(int n);
/// Ribbon-positive analog of the cycle.
NSymPoly cycle_ribbon_analog(int n);

/// sum over I |= l, J |= m of j_1 w_{IJ} Lambda^{IJ}.
NSymPoly path_cycle_product_concat_form(int l, int m);
/// sum over K |= l + m with Theta+_K(l) = 0 of (Theta+_K(l+1) + 1) w_K Lambda^K.
NSymPoly path_cycle_product_theta_form(int l, int m);
/// Analog of X_{P_l} X_{C_m}; evaluates both forms and throws std::logic_error
/// if they disagree. Requires l >= 1, m >= 2.
NSymPoly path_cycle_product(int l, int m);

/// sum_{I |= n} (sigma+_I(l+1) - 1) w_I Lambda^I for 0 <= l <= n - 2.
NSymPoly path_cycle_convolution(int l, int n);
/// sum_{I |= n} sigma-_{rev I}(m) w_I Lambda^I for 2 <= m <= n - 1.
NSymPoly cycle_path_convolution(int m, int n);

}  // namespace csf
