// Exact arithmetic in Z[q,t] and its fraction field Q(q,t). Coefficients are
// arbitrary-precision integers; there is no floating point anywhere in the
// library because every identity checked downstream is exact.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace macsym {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent pair of the monomial q^eq t^et.
struct ExpQT {
  int eq = 0;
  int et = 0;
  friend bool operator==(const ExpQT&, const ExpQT&) = default;
};

/// Graded lexicographic order with q > t: compare total degree, then the
/// q-exponent. Fixes leading terms, hence the canonical sign of RatQT.
struct GradedLexLess {
  bool operator()(const ExpQT& a, const ExpQT& b) const {
    const int da = a.eq + a.et, db = b.eq + b.et;
    if (da != db) return da < db;
    return a.eq < b.eq;
  }
};

/// Sparse polynomial in q and t over Int. No zero coefficients are stored.
class PolyQT {
 public:
  using TermMap = std::map<ExpQT, Int, GradedLexLess>;

  PolyQT() = default;
  static PolyQT zero() { return PolyQT(); }
  static PolyQT one() { return constant(1); }
  static PolyQT constant(Int c);
  static PolyQT monomial(Int c, int eq, int et);
  static PolyQT q() { return monomial(1, 1, 0); }
  static PolyQT t() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (whole value when is_constant()).
  Int constant_value() const;
  int degree_q() const;
  int degree_t() const;
  bool is_t_free() const { return degree_t() == 0; }

  ExpQT leading_exp() const;   // graded-lex maximal term; requires nonzero
  Int leading_coeff() const;

  PolyQT operator-() const;
  PolyQT& operator+=(const PolyQT& o);
  PolyQT& operator-=(const PolyQT& o);
  friend PolyQT operator+(PolyQT a, const PolyQT& b) { return a += b; }
  friend PolyQT operator-(PolyQT a, const PolyQT& b) { return a -= b; }
  friend PolyQT operator*(const PolyQT& a, const PolyQT& b);
  PolyQT& operator*=(const PolyQT& o) { return *this = *this * o; }
  PolyQT pow(int e) const;  // e >= 0

  friend bool operator==(const PolyQT&, const PolyQT&) = default;

  /// gcd of all coefficients, non-negative; 0 for the zero polynomial.
  Int content() const;
  /// Divide every coefficient by d exactly.
  PolyQT divided_by_int(const Int& d) const;
  /// Exact polynomial division: returns the quotient iff b divides *this.
  std::optional<PolyQT> divided_by(const PolyQT& b) const;

  // Exact substitutions (polynomial results).
  PolyQT subst_t_q2() const;          // t := q^2
  PolyQT subst_q_q2() const;          // q := q^2
  PolyQT subst_swap_qt() const;       // q <-> t
  PolyQT subst_q_pow(int d) const;    // q := q^d, d >= 1
  PolyQT subst_t_pow(int d) const;    // t := t^d, d >= 1
  PolyQT subst_q_zero() const;        // q := 0
  PolyQT subst_t_zero() const;        // t := 0
  PolyQT subst_t_q() const;           // t := q

  /// Evaluate a t-free polynomial at q = q0. Throws on t content.
  Rational eval_q(const Rational& q0) const;

  std::string to_string() const;

 private:
  void insert(ExpQT e, Int c);  // accumulating, drops zeros
  TermMap terms_;

  friend PolyQT poly_gcd(const PolyQT& a, const PolyQT& b);
};

/// gcd in Z[q,t], including integer content, normalized so the graded-lex
/// leading coefficient is positive. Primitive-part Euclidean algorithm in q
/// with content recursion in t; degrees in scope stay small.
PolyQT poly_gcd(const PolyQT& a, const PolyQT& b);

/// Rational function num/den in lowest terms: gcd(num, den) = 1 over Z[q,t]
/// and den has positive graded-lex leading coefficient, so equality of values
/// is equality of representations.
class RatQT {
 public:
  RatQT() : num_(PolyQT::zero()), den_(PolyQT::one()) {}
  RatQT(int v) : RatQT(PolyQT::constant(v)) {}         // NOLINT(runtime/explicit)
  RatQT(long long v) : RatQT(PolyQT::constant(v)) {}   // NOLINT(runtime/explicit)
  RatQT(const Int& v) : RatQT(PolyQT::constant(v)) {}  // NOLINT(runtime/explicit)
  explicit RatQT(const Rational& v);
  RatQT(PolyQT num);  // NOLINT(runtime/explicit)
  RatQT(PolyQT num, PolyQT den);  // throws on den = 0

  static RatQT q() { return RatQT(PolyQT::q()); }
  static RatQT t() { return RatQT(PolyQT::t()); }
  /// q^e for any integer e; negative exponents become monomial denominators.
  static RatQT q_power(long long e);
  static RatQT t_power(long long e);

  const PolyQT& num() const { return num_; }
  const PolyQT& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_ == PolyQT::one(); }
  bool is_t_free() const { return num_.is_t_free() && den_.is_t_free(); }

  RatQT operator-() const;
  friend RatQT operator+(const RatQT& a, const RatQT& b);
  friend RatQT operator-(const RatQT& a, const RatQT& b);
  friend RatQT operator*(const RatQT& a, const RatQT& b);
  friend RatQT operator/(const RatQT& a, const RatQT& b);  // throws on b = 0
  RatQT& operator+=(const RatQT& o) { return *this = *this + o; }
  RatQT& operator-=(const RatQT& o) { return *this = *this - o; }
  RatQT& operator*=(const RatQT& o) { return *this = *this * o; }
  RatQT& operator/=(const RatQT& o) { return *this = *this / o; }
  RatQT inverse() const;
  RatQT pow(int e) const;  // any sign

  friend bool operator==(const RatQT&, const RatQT&) = default;

  // Exact substitutions.
  RatQT subst_t_q2() const;
  RatQT subst_q_q2() const;
  RatQT subst_swap_qt() const;
  RatQT subst_q_pow(int d) const;
  RatQT subst_t_pow(int d) const;
  RatQT subst_q_zero() const;
  RatQT subst_t_q() const;        // t := q
  RatQT subst_t_qinv_pow(int d) const;  // t := q^{-d}
  RatQT subst_q_inv() const;            // q := q^{-1}
  RatQT subst_t_inv() const;            // t := t^{-1}

  /// Exact value of a t-free rational function at q = q0. Throws
  /// std::domain_error("bivariate") if t is present and
  /// std::domain_error("pole") if the denominator vanishes at q0.
  Rational eval_q(const Rational& q0) const;

  std::string to_string() const;

 private:
  void normalize();
  /// num/den already coprime; only fixes the zero form and the sign.
  static RatQT make_reduced(PolyQT num, PolyQT den);
  PolyQT num_, den_;
};

/// a / b^k, exact. Throws std::invalid_argument on b = 0 or k < 0.
RatQT divide_exact_by_power(const RatQT& a, const PolyQT& b, int k);

/// Ascending q-coefficients [c0, c1, ...] when r lies in N[q] (a t-free
/// polynomial with non-negative integer coefficients); absent otherwise.
std::optional<std::vector<Int>> nonneg_q_coefficients(const RatQT& r);

/// Membership test for N[q].
bool is_polynomial_with_nonneg_int_coeffs(const RatQT& r);

}  // namespace macsym
