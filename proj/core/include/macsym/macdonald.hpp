// Macdonald, Hall-Littlewood and Green polynomial data: P/Q/J, the c and c'
// cell products, Pieri coefficients, skew polynomials, Schur expansion
// coefficients and the power-sum expansion coefficients d_lambda.
//
// Single-alphabet operations here live on the distinguished degree-1 family
// f1 (its local parameters coincide with the global ones); other modules
// rescale rows per family.
#pragma once

#include <memory>

#include "macsym/symfunc.hpp"
#include "macsym/transition.hpp"

namespace macsym {

/// P_lambda at the binding, expanded in the monomial basis.
SymFunc macdonald_P(const Partition& lambda, Binding binding);
SymFunc macdonald_Q(const Partition& lambda, Binding binding);
/// Integral form J_lambda = c_lambda P_lambda.
SymFunc macdonald_J(const Partition& lambda, Binding binding);
/// P_lambda(x; t) = P_lambda(x; 0, t).
SymFunc hall_littlewood_P(const Partition& lambda);

/// c_lambda = prod_{s in lambda} (1 - A^{a(s)} B^{l(s)+1}) with (A, B) the
/// binding's parameter pair.
RatQT c_coeff(const Partition& lambda, Binding binding);
/// c'_lambda = prod_{s in lambda} (1 - A^{a(s)+1} B^{l(s)}).
RatQT cprime_coeff(const Partition& lambda, Binding binding);

/// Green polynomial table at degree n (formal t).
std::shared_ptr<const GreenTable> green_polynomials(int n);
/// Q_rho^mu(t); |rho| = |mu| = n.
RatQT green_value(const Partition& rho, const Partition& mu);

/// psi'_{lambda/mu} = prod_{s in C \ R} b_lambda(s)/b_mu(s) over the columns
/// of lambda meeting lambda/mu minus the rows meeting it. Throws unless
/// lambda/mu is a vertical strip.
RatQT pieri_psi_prime(const Partition& lambda, const Partition& mu,
                      Binding binding);

/// Skew Macdonald polynomial, defined by <P_{la/mu}, f> = <P_la, Q_mu f> for
/// all f; returned in the Macdonald P basis at the binding (zero if mu is
/// not contained in lambda).
SymFunc skew_P(const Partition& lambda, const Partition& mu, Binding binding);

/// C_{la/mu}^nu = <P_{la/mu}, s_nu> under the Hall inner product.
RatQT schur_expansion_C(const Partition& lambda, const Partition& mu,
                        const Partition& nu, Binding binding);

/// Coefficients of P_lambda(x; q^2, q) = (1/n!) sum_w d_lambda(w)(q) p_{rho(w)},
/// indexed by cycle type: d_lambda(rho) = z_rho [p_rho] P_lambda(q^2, q).
/// degree_scale substitutes q := q^degree_scale in the result.
RatQT d_coeff(const Partition& lambda, const Partition& rho,
              int degree_scale = 1);

}  // namespace macsym
