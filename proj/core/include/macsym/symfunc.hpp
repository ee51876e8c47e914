// The graded algebra of symmetric functions over Q(q,t) in several variable
// families (one family per Frobenius orbit), with the classical bases, the
// involutions omega and omega_{q,t}, and the inner products used by the two
// characteristic maps. Elements are basis expansions, never polynomials in
// finitely many variables.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "macsym/partition.hpp"
#include "macsym/ratfunc.hpp"

namespace macsym {

enum class FamilyKind { M, L };

/// An abstract variable family: a Frobenius orbit with a degree. The orbit of
/// x - 1 is the distinguished degree-1 M-family "f1"; the trivial character's
/// orbit is the degree-1 L-family "triv". Identity is the id string.
struct FamilyLabel {
  FamilyKind kind = FamilyKind::M;
  int degree = 1;
  std::string id;

  bool is_f1() const { return id == "f1"; }
  /// q_f = q^degree.
  RatQT q_family() const { return RatQT::q_power(degree); }

  static const FamilyLabel& f1();
  static const FamilyLabel& triv();
  static FamilyLabel M_orbit(int degree, std::string id);
  static FamilyLabel L_orbit(int degree, std::string id);

  friend bool operator==(const FamilyLabel&, const FamilyLabel&) = default;
  friend auto operator<=>(const FamilyLabel& a, const FamilyLabel& b) {
    if (auto c = a.id <=> b.id; c != 0) return c;
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.degree <=> b.degree;
  }
};

enum class BasisKind { m, e, h, p, s, P, Q, J };

/// Parameter binding of a Macdonald-type basis or of a deformed pairing.
/// Parameters are always in the family's local variable: a factor labeled
/// (phi, P@qq2, lambda) means P_lambda(x_phi; q_phi, q_phi^2).
enum class Binding {
  none,  // classical bases
  qt,    // formal (q, t)
  tq,    // swapped (t, q)
  qq2,   // (q, q^2)
  q2q,   // (q^2, q)
  hl,    // (0, t): Hall-Littlewood
  hall,  // q = t: Hall pairing
};

struct BasisLabel {
  BasisKind kind = BasisKind::p;
  Binding binding = Binding::none;

  static BasisLabel m() { return {BasisKind::m, Binding::none}; }
  static BasisLabel e() { return {BasisKind::e, Binding::none}; }
  static BasisLabel h() { return {BasisKind::h, Binding::none}; }
  static BasisLabel p() { return {BasisKind::p, Binding::none}; }
  static BasisLabel s() { return {BasisKind::s, Binding::none}; }
  static BasisLabel macP(Binding b) { return {BasisKind::P, b}; }
  static BasisLabel macQ(Binding b) { return {BasisKind::Q, b}; }
  static BasisLabel macJ(Binding b) { return {BasisKind::J, b}; }
  static BasisLabel hallP() { return {BasisKind::P, Binding::hl}; }

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

/// One tensor factor of a term: a basis element of the family's copy of
/// Lambda. The partition is never empty inside a stored term.
struct Factor {
  FamilyLabel family;
  BasisLabel basis;
  Partition part;

  friend bool operator==(const Factor&, const Factor&) = default;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Finitely supported map from families to nonempty partitions, with the
/// weight grading ||mu|| = sum d(f) |mu(f)|.
class PartitionFn {
 public:
  PartitionFn() = default;
  explicit PartitionFn(std::map<FamilyLabel, Partition> assign);

  PartitionFn& set(const FamilyLabel& f, const Partition& p);
  const std::map<FamilyLabel, Partition>& assignments() const {
    return assign_;
  }
  const Partition& at(const FamilyLabel& f) const;
  bool empty() const { return assign_.empty(); }

  /// ||mu|| = sum d(f) |mu(f)|.
  int weight() const;
  /// |mu| = sum |mu(f)|.
  int total_size() const;
  /// l(mu) = total number of parts over all families.
  int total_length() const;
  bool all_of_kind(FamilyKind k) const;

  friend bool operator==(const PartitionFn&, const PartitionFn&) = default;
  friend auto operator<=>(const PartitionFn&, const PartitionFn&) = default;

 private:
  std::map<FamilyLabel, Partition> assign_;
};

/// Element of the tensor ring: finite linear combination of products of
/// basis-labeled partitions, at most one factor per family, factors sorted
/// by family. No zero coefficients are stored.
class SymFunc {
 public:
  using Term = std::vector<Factor>;
  using TermMap = std::map<Term, RatQT>;

  SymFunc() = default;
  static SymFunc zero() { return SymFunc(); }
  static SymFunc scalar(const RatQT& c);
  static SymFunc one() { return scalar(RatQT(1)); }
  /// A single factor; an empty partition gives the scalar 1.
  static SymFunc single(const FamilyLabel& fam, BasisLabel basis,
                        const Partition& part);
  /// p_mu = prod_f p_{mu(f)}(f) over the support of mu.
  static SymFunc power_product(const PartitionFn& mu);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(Term t, const RatQT& c);

  SymFunc operator-() const;
  friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator*(const RatQT& c, const SymFunc& f);

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

  /// Re-express every factor in the target basis, family by family.
  SymFunc to_basis(BasisLabel target) const;
  SymFunc to_p() const { return to_basis(BasisLabel::p()); }

  /// ||.||-degree of a term.
  static int term_degree(const Term& t);
  /// Common degree of all terms; 0 for the zero element. Throws if mixed.
  int degree() const;
  bool is_homogeneous() const;

  bool has_kind(FamilyKind k) const;
  /// Coefficient of a term (after conversion by the caller).
  RatQT coefficient(const Term& t) const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Graded product; families multiply independently (computed in the p basis).
SymFunc multiply(const SymFunc& a, const SymFunc& b);

/// omega: p_n |-> (-1)^{n-1} p_n on every family, algebra homomorphism.
SymFunc omega(const SymFunc& f);

/// omega_{A,B}: p_n(phi) |-> (-1)^{n-1} (A_phi^n - 1)/(B_phi^n - 1) p_n(phi)
/// with (A, B) the binding's parameter pair in the family's local variable.
/// Valid bindings: qt, tq, qq2, q2q.
SymFunc omega_qt(const SymFunc& f, Binding b);

/// (A^{n d} - 1)/(B^{n d} - 1) for the binding's parameter pair; the
/// per-part factor of both omega_qt and the deformed inner product.
RatQT binding_ratio(Binding b, long long n, int degree_scale);

/// Deformed power-sum pairing <p_rho, p_rho>_{q,t} = z_rho prod_i
/// (q^{rho_i}-1)/(t^{rho_i}-1), extended bilinearly. Both arguments must be
/// single-family with a common family; parameters are formal (never scaled
/// by the family degree). Binding hall gives the Hall inner product.
RatQT inner_qt(const SymFunc& a, const SymFunc& b, Binding binding = Binding::qt);

/// Hall pairing on the tensor ring: <p_mu, p_mu> = z_mu per family.
RatQT inner_hall(const SymFunc& a, const SymFunc& b);

/// GL-side pairing: z_mu prod_f prod_i 1/(q_f^{mu_i} - 1). M-families only.
RatQT inner_gl(const SymFunc& a, const SymFunc& b);

/// Sp-side pairing: z_mu prod_f prod_i 1/(q_f^{2 mu_i} - 1). M-families only;
/// throws std::domain_error("project first") on L-family content.
RatQT inner_sp(const SymFunc& a, const SymFunc& b);

/// Dual-variable pairing: z_la prod_phi prod_i (q_phi^{la_i} - 1) /
/// (q_phi^{2 la_i} - 1). L-families only.
RatQT inner_dual(const SymFunc& a, const SymFunc& b);

/// q |-> q^2 applied to every coefficient.
SymFunc subst_q_q2_coeffs(const SymFunc& f);

}  // namespace macsym
