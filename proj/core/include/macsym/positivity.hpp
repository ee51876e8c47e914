// Positivity and vanishing scans for the Schur expansion of skew Macdonald
// polynomials at (q, q^2), and the Haglund-style certificate checks.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "macsym/macdonald.hpp"

namespace macsym {

struct PositivityReport {
  Partition lambda, mu, nu;
  RatQT coefficient;
  std::vector<std::pair<Rational, Rational>> evaluations;  // (q0, value)
  bool vanishing_predicted = false;
  std::optional<std::vector<Int>> haglund_certificate;
  bool falsified = false;
  std::string falsification;
};

/// Expansion of a * s_mu in the Schur basis by the Littlewood-Richardson
/// rule (horizontal-strip chains with the lattice-word filter).
std::map<Partition, long long> schur_multiply(
    const std::map<Partition, long long>& a, const Partition& mu);

/// <s_alpha, prod_i s_{factors[i]}>; zero (not an error) on weight mismatch.
long long lr_coefficient(const Partition& alpha,
                         const std::vector<Partition>& factors);

/// True iff <s_{la u la}, s_{mu u mu} s_nu s_nu> = 0.
bool vanishing_predicate(const Partition& lambda, const Partition& mu,
                         const Partition& nu);

/// All triples |lambda| <= max_n, |mu| <= max_mu, |lambda| = |mu| + |nu|:
/// C_{lambda/mu}^nu(q, q^2) with exact evaluations at every q0 in q_list.
/// A negative evaluation or a (predicate true, coefficient nonzero) pair is
/// recorded as a falsification, never thrown.
std::vector<PositivityReport> positivity_scan(
    int max_n, const std::vector<Rational>& q_list, int max_mu = 3,
    int jobs = 1);

/// <J_lambda(q,q^2), s_mu>/(1-q)^{|lambda|}: ascending q-coefficients when
/// the value lies in N[q], absent otherwise (reported, never asserted).
std::optional<std::vector<Int>> haglund_check(const Partition& lambda,
                                              const Partition& mu);

/// <J_mu^perp(q,q^2) J_lambda(q,q^2), s_nu>/(1-q)^{|lambda|+|mu|} with
/// J_mu^perp the <,>_{q,q^2}-adjoint of multiplication by J_mu.
std::optional<std::vector<Int>> haglund_skew_check(const Partition& lambda,
                                                   const Partition& mu,
                                                   const Partition& nu);

}  // namespace macsym
