// Spherical function values on unipotent double cosets by three independent
// routes, plus the specialization machinery (delta, the unipotent
// projection, and the Pieri expansion identity check).
#pragma once

#include <vector>

#include "macsym/charmap.hpp"

namespace macsym {

/// Double coset of GL_2n(q) indexed by a class of GL_n(q) supported on the
/// orbit of x - 1 only.
struct UnipotentCoset {
  Partition mu;
  int n = 0;

  static UnipotentCoset of(const Partition& mu);
  /// mu = (1^n).
  static UnipotentCoset identity(int n);
  /// mu = (2, 1^{n-2}); requires n >= 2.
  static UnipotentCoset transvection(int n);

  ClassData class_data() const { return ClassData::unipotent(mu); }
  friend bool operator==(const UnipotentCoset&, const UnipotentCoset&) = default;
};

enum class Route { A, B, C };

/// delta(p_n(phi)) = 1/(q_phi^n - 1), extended as an algebra homomorphism.
/// Throws on M-family content.
RatQT delta_specialize(const SymFunc& F);

/// The f1-variable component of a dual-variable element:
/// pi(p_n(phi)) = (-1)^{n d(phi) - 1} p_{n d(phi)}(f1).
SymFunc unipotent_projection(const SymFunc& F);

/// <F, G> for F in dual variables and G supported on f1 only, computed as
/// inner_sp(pi(F), G); reproduces delta(omega omega_{q,q^2} F) when
/// G = e_n(f1).
RatQT pair_dual_unipotent(const SymFunc& F, const SymFunc& G);

/// phi_lambda(g_mu) through the characteristic map and the isometry.
RatQT value_route_A(const CharData& lambda, const UnipotentCoset& coset);
/// phi_lambda(g_mu) through the basic-function expansion (Green polynomials,
/// d coefficients, torus orders), reorganized over cycle types.
RatQT value_route_B(const CharData& lambda, const UnipotentCoset& coset);
/// Closed form on the transvection coset; requires ||lambda|| >= 2.
RatQT value_route_C_transvection(const CharData& lambda);

/// Cached evaluation; route C demands the transvection coset.
RatQT spherical_value(const CharData& lambda, const UnipotentCoset& coset,
                      Route route);

/// e_k in the f1 variables.
SymFunc e_f1(int k);

/// Verifies e_{n-1}(f1) e_1(f1) = sum_lambda sum_{lambda_0}
/// q^{-n(lambda_0')} c'_lambda(q,q^2) / (c'_{lambda_0}(q,q^2)(1-q))
/// psi'_{lambda/lambda_0} Jhat_lambda(q,q^2) by pairing both sides against
/// the J_lambda(q,q^2) basis over the given family pool.
bool pieri_expansion_lemma_check(int n, const std::vector<FamilyLabel>& pool);
bool pieri_expansion_lemma_check(int n);

/// All partition-valued functions of weight n over the pool (assignments to
/// the concrete families given, at most one partition per family).
std::vector<PartitionFn> partition_fns_of_weight(
    int n, const std::vector<FamilyLabel>& pool);

}  // namespace macsym
