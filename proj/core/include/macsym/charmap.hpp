// The two characteristic maps and the finite-group combinatorics behind
// them: GL_n(q) class and character data, coset sizes, the isometry
// constant, and the mixed product on the symmetric-function side.
#pragma once

#include "macsym/macdonald.hpp"
#include "macsym/symfunc.hpp"

namespace macsym {

/// Conjugacy-class index of GL_n(q): a partition-valued function on
/// M-families with ||mu|| = n.
struct ClassData {
  PartitionFn mu;
  int n = 0;

  explicit ClassData(PartitionFn m);
  /// Class supported on the orbit of x - 1 only.
  static ClassData unipotent(const Partition& part);
};

/// Irreducible-character index of GL_n(q) (and spherical-function index of
/// GL_2n(q)/Sp_2n(q)): a partition-valued function on L-families.
struct CharData {
  PartitionFn lambda;
  int n = 0;

  explicit CharData(PartitionFn l);
  /// |lambda| = sum_phi |lambda(phi)|.
  int total_size() const { return lambda.total_size(); }
  /// Every lambda(phi) doubled; indexes chi_{lambda u lambda} of GL_2n(q).
  CharData union_double() const;
};

RatQT gl_order(int n);  // |GL_n(q)| = prod_{i<n} (q^n - q^i)
RatQT sp_order(int n);  // |Sp_2n(q)| = q^{n^2} prod_{i<=n} (q^{2i} - 1)
RatQT psi_n(int n);     // prod_{i<=n} (q^i - 1)
/// H_lambda(q_f) = prod_{s in lambda} (q_f^{h(s)} - 1).
RatQT hook_product_H(const Partition& lambda, int degree_scale);

/// Centralizer order a_mu(q); |C_mu| = |GL_n(q)| / a_mu(q).
RatQT a_mu(const ClassData& mu);
RatQT class_size(const ClassData& mu);
/// Dimension d_lambda of the irreducible character chi_lambda.
RatQT dim_irreducible(const CharData& lambda);

/// ch_{GL_n}(I_{C_mu}) = prod_f q_f^{-n(mu(f))} P_{mu(f)}(f; q_f^{-1}).
SymFunc ch_GL_indicator(const ClassData& mu);
/// ch_{GL_n}(chi_lambda) = prod_phi s_{lambda(phi)}(phi).
SymFunc ch_GL_character(const CharData& lambda);
/// ch(I_{H g_mu H}) = prod_f q_f^{-2n(mu(f))} P_{mu(f)}(f; q_f^{-2}).
SymFunc ch_sp_indicator(const ClassData& mu);
/// ch(phi_lambda) = ((-1)^{|lambda|}/psi_n(q^2)) prod_phi
///   q_phi^{-n(lambda(phi)')} J_{lambda(phi)}(phi; q_phi, q_phi^2).
SymFunc ch_spherical(const CharData& lambda);
/// ch of a basic function: (-1)^{n - l(lambda)} p_lambda.
SymFunc ch_DL(const CharData& lambda);

/// |H g_mu H| = |Sp_2n(q)| |C_mu|_{q -> q^2}.
RatQT double_coset_size(const ClassData& mu);

/// q^{-n} |Sp_2n|^2 <F, G> with the Sp pairing for M-side arguments and the
/// dual-variable pairing for L-side arguments; recovers the function-space
/// inner product from characteristic images.
RatQT isometry_pair(const SymFunc& F, const SymFunc& G, int n);

/// ch(f * g) = ch(f) . omega omega_{q^2,q} ch_GL(g): the symmetric-function
/// side of inducting an Sp-bi-invariant function against a GL class function.
SymFunc mixed_product(const SymFunc& F, const SymFunc& G);

/// Number of degree-d Frobenius orbits on the units of the algebraic closure
/// of F_{q0}: necklace count with the orbit of 0 removed at d = 1.
long long count_orbits_M(int d, long long q0);

/// A class of GL_n(F_{q0}) up to the choice of orbits: the multiset of
/// (orbit degree, partition) pairs together with the number of
/// partition-valued functions realizing it over the concrete orbit counts.
struct ClassShape {
  std::vector<std::pair<int, Partition>> atoms;
  Int multiplicity;
};

/// Every weight-n shape with its realization count at q0. Summands that
/// depend only on degrees and partitions (sizes, dimensions, norms) can be
/// summed over all classes as sum multiplicity * f(shape).
std::vector<ClassShape> class_shapes(int n, long long q0);

/// Number of weight-n partition-valued functions over F_{q0} (= number of
/// conjugacy classes of GL_n(F_{q0}), of Sp-double cosets of GL_2n, and of
/// irreducible characters).
Int count_partition_fns(int n, long long q0);

/// Concrete index data realizing an atom multiset with fresh distinct ids.
ClassData class_from_shape(const std::vector<std::pair<int, Partition>>& atoms);
CharData char_from_shape(const std::vector<std::pair<int, Partition>>& atoms);

}  // namespace macsym
