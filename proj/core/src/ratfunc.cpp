#include "macsym/ratfunc.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace macsym {

// ---------------------------------------------------------------------------
// PolyQT
// ---------------------------------------------------------------------------

PolyQT PolyQT::constant(Int c) {
  PolyQT p;
  if (c != 0) p.terms_[{0, 0}] = std::move(c);
  return p;
}

PolyQT PolyQT::monomial(Int c, int eq, int et) {
  if (eq < 0 || et < 0)
    throw std::invalid_argument("PolyQT::monomial: negative exponent");
  PolyQT p;
  if (c != 0) p.terms_[{eq, et}] = std::move(c);
  return p;
}

bool PolyQT::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == ExpQT{0, 0});
}

Int PolyQT::constant_value() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? Int(0) : it->second;
}

int PolyQT::degree_q() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.eq);
  return d;
}

int PolyQT::degree_t() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.et);
  return d;
}

ExpQT PolyQT::leading_exp() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.rbegin()->first;
}

Int PolyQT::leading_coeff() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->second;
}

void PolyQT::insert(ExpQT e, Int c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyQT PolyQT::operator-() const {
  PolyQT r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

PolyQT& PolyQT::operator+=(const PolyQT& o) {
  for (const auto& [e, c] : o.terms_) insert(e, c);
  return *this;
}

PolyQT& PolyQT::operator-=(const PolyQT& o) {
  for (const auto& [e, c] : o.terms_) insert(e, -c);
  return *this;
}

PolyQT operator*(const PolyQT& a, const PolyQT& b) {
  PolyQT r;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      r.insert({ea.eq + eb.eq, ea.et + eb.et}, ca * cb);
  return r;
}

PolyQT PolyQT::pow(int e) const {
  if (e < 0) throw std::invalid_argument("PolyQT::pow: negative exponent");
  PolyQT r = one(), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Int PolyQT::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

PolyQT PolyQT::divided_by_int(const Int& d) const {
  if (d == 0) throw std::invalid_argument("division by zero");
  PolyQT r;
  for (const auto& [e, c] : terms_) {
    if (c % d != 0) throw std::logic_error("divided_by_int: not exact");
    r.terms_[e] = c / d;
  }
  return r;
}

std::optional<PolyQT> PolyQT::divided_by(const PolyQT& b) const {
  if (b.is_zero()) throw std::invalid_argument("division by zero");
  PolyQT rem = *this, quot;
  const ExpQT eb = b.leading_exp();
  const Int cb = b.leading_coeff();
  while (!rem.is_zero()) {
    const ExpQT er = rem.leading_exp();
    if (er.eq < eb.eq || er.et < eb.et) return std::nullopt;
    const Int& cr = rem.terms_.rbegin()->second;
    if (cr % cb != 0) return std::nullopt;
    PolyQT m = monomial(cr / cb, er.eq - eb.eq, er.et - eb.et);
    quot += m;
    rem -= m * b;
  }
  return quot;
}

PolyQT PolyQT::subst_t_q2() const {
  PolyQT r;
  for (const auto& [e, c] : terms_) r.insert({e.eq + 2 * e.et, 0}, c);
  return r;
}

PolyQT PolyQT::subst_q_q2() const {
  PolyQT r;
  for (const auto& [e, c] : terms_) r.insert({2 * e.eq, e.et}, c);
  return r;
}

PolyQT PolyQT::subst_swap_qt() const {
  PolyQT r;
  for (const auto& [e, c] : terms_) r.insert({e.et, e.eq}, c);
  return r;
}

PolyQT PolyQT::subst_q_pow(int d) const {
  if (d < 1) throw std::invalid_argument("subst_q_pow: d must be >= 1");
  PolyQT r;
  for (const auto& [e, c] : terms_) r.insert({d * e.eq, e.et}, c);
  return r;
}

PolyQT PolyQT::subst_t_pow(int d) const {
  if (d < 1) throw std::invalid_argument("subst_t_pow: d must be >= 1");
  PolyQT r;
  for (const auto& [e, c] : terms_) r.insert({e.eq, d * e.et}, c);
  return r;
}

PolyQT PolyQT::subst_q_zero() const {
  PolyQT r;
  for (const auto& [e, c] : terms_)
    if (e.eq == 0) r.insert(e, c);
  return r;
}

PolyQT PolyQT::subst_t_zero() const {
  PolyQT r;
  for (const auto& [e, c] : terms_)
    if (e.et == 0) r.insert(e, c);
  return r;
}

PolyQT PolyQT::subst_t_q() const {
  PolyQT r;
  for (const auto& [e, c] : terms_) r.insert({e.eq + e.et, 0}, c);
  return r;
}

Rational PolyQT::eval_q(const Rational& q0) const {
  if (!is_t_free()) throw std::domain_error("bivariate");
  // Horner over the sparse q-exponents.
  Rational acc = 0;
  int prev = -1;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (prev >= 0)
      for (int k = 0; k < prev - it->first.eq; ++k) acc *= q0;
    acc += Rational(it->second);
    prev = it->first.eq;
  }
  if (prev > 0)
    for (int k = 0; k < prev; ++k) acc *= q0;
  return acc;
}

std::string PolyQT::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Int c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Int ab = boost::multiprecision::abs(c);
    const ExpQT e = it->first;
    const bool has_var = e.eq > 0 || e.et > 0;
    if (ab != 1 || !has_var) os << ab;
    if (e.eq > 0) {
      os << "q";
      if (e.eq > 1) os << "^" << e.eq;
    }
    if (e.et > 0) {
      os << "t";
      if (e.et > 1) os << "^" << e.et;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd: primitive-part Euclid in q over Z[t], content recursion in t.
// ---------------------------------------------------------------------------

namespace {

using Zt = std::vector<Int>;  // dense in t, Zt[k] = coefficient of t^k

void zt_trim(Zt& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool zt_zero(const Zt& a) { return a.empty(); }

Zt zt_mul(const Zt& a, const Zt& b) {
  if (a.empty() || b.empty()) return {};
  Zt r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zt_trim(r);
  return r;
}

Zt zt_scale(const Zt& a, const Int& c) {
  if (c == 0) return {};
  Zt r = a;
  for (auto& x : r) x *= c;
  return r;
}

Zt zt_sub(Zt a, const Zt& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  zt_trim(a);
  return a;
}

Int zt_content(const Zt& a) {
  Int g = 0;
  for (const auto& c : a) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Zt zt_div_int(const Zt& a, const Int& d) {
  Zt r = a;
  for (auto& x : r) x /= d;
  return r;
}

// Primitive part with positive leading coefficient.
Zt zt_pp(const Zt& a) {
  if (zt_zero(a)) return a;
  Int c = zt_content(a);
  if (a.back() < 0) c = -c;
  return zt_div_int(a, c);
}

// Pseudo-remainder of a by b in t; only used up to content, so the
// lc(b)^k prefactor is dropped.
Zt zt_prem(Zt a, const Zt& b) {
  const Int lb = b.back();
  while (!zt_zero(a) && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Int la = a.back();
    a = zt_scale(a, lb);
    Zt s = zt_scale(b, la);
    s.insert(s.begin(), shift, Int(0));
    a = zt_sub(std::move(a), s);
  }
  return a;
}

Zt zt_positive_leading(Zt a) {
  if (!zt_zero(a) && a.back() < 0)
    for (auto& x : a) x = -x;
  return a;
}

Zt zt_gcd(Zt a, Zt b) {
  if (zt_zero(a)) return zt_positive_leading(std::move(b));
  if (zt_zero(b)) return zt_positive_leading(std::move(a));
  const Int c = boost::multiprecision::gcd(zt_content(a), zt_content(b));
  Zt A = zt_pp(a), B = zt_pp(b);
  if (A.size() < B.size()) std::swap(A, B);
  while (!zt_zero(B)) {
    Zt R = zt_prem(A, B);
    A = std::move(B);
    B = zt_pp(R);
  }
  A = zt_pp(A);
  return zt_scale(A, c);
}

using Ztq = std::vector<Zt>;  // dense in q, Ztq[k] = Z[t] coefficient of q^k

void ztq_trim(Ztq& a) {
  while (!a.empty() && zt_zero(a.back())) a.pop_back();
}

bool ztq_zero(const Ztq& a) { return a.empty(); }

Ztq ztq_from_poly(const PolyQT& p) {
  Ztq r(p.degree_q() + 1);
  for (const auto& [e, c] : p.terms()) {
    Zt& row = r[e.eq];
    if (static_cast<int>(row.size()) <= e.et) row.resize(e.et + 1, Int(0));
    row[e.et] = c;
  }
  for (auto& row : r) zt_trim(row);
  ztq_trim(r);
  return r;
}

PolyQT ztq_to_poly(const Ztq& a) {
  PolyQT p;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != 0) p += PolyQT::monomial(a[i][j], static_cast<int>(i),
                                              static_cast<int>(j));
  return p;
}

Zt ztq_content(const Ztq& a) {
  Zt g;
  for (const auto& row : a)
    if (!zt_zero(row)) g = zt_gcd(g, row);
  return g;
}

// Exact division of every q-coefficient by a Z[t] divisor.
Zt zt_divexact(const Zt& a, const Zt& d) {
  if (zt_zero(a)) return {};
  Zt rem = a, quot(a.size() - d.size() + 1, Int(0));
  while (!zt_zero(rem)) {
    if (rem.size() < d.size()) throw std::logic_error("zt_divexact: not exact");
    const std::size_t shift = rem.size() - d.size();
    if (rem.back() % d.back() != 0)
      throw std::logic_error("zt_divexact: not exact");
    Int c = rem.back() / d.back();
    quot[shift] = c;
    Zt s = zt_scale(d, c);
    s.insert(s.begin(), shift, Int(0));
    rem = zt_sub(std::move(rem), s);
  }
  return quot;
}

Ztq ztq_div_zt(const Ztq& a, const Zt& d) {
  Ztq r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!zt_zero(a[i])) r[i] = zt_divexact(a[i], d);
  return r;
}

Ztq ztq_pp(const Ztq& a) {
  if (ztq_zero(a)) return a;
  Zt c = ztq_content(a);
  return ztq_div_zt(a, c);
}

Ztq ztq_scale(const Ztq& a, const Zt& c) {
  Ztq r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = zt_mul(a[i], c);
  ztq_trim(r);
  return r;
}

Ztq ztq_sub(Ztq a, const Ztq& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = zt_sub(a[i], b[i]);
  ztq_trim(a);
  return a;
}

Ztq ztq_prem(Ztq a, const Ztq& b) {
  const Zt lb = b.back();
  while (!ztq_zero(a) && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Zt la = a.back();
    a = ztq_scale(a, lb);
    Ztq s = ztq_scale(b, la);
    s.insert(s.begin(), shift, Zt{});
    a = ztq_sub(std::move(a), s);
  }
  return a;
}

}  // namespace

PolyQT poly_gcd(const PolyQT& a, const PolyQT& b) {
  auto positive_leading = [](PolyQT p) {
    if (!p.is_zero() && p.leading_coeff() < 0) p = -p;
    return p;
  };
  if (a.is_zero()) return positive_leading(b);
  if (b.is_zero()) return positive_leading(a);

  if (a.terms().size() == 1 || b.terms().size() == 1) {
    // A monomial side makes the gcd a monomial: coefficient gcd times the
    // common monomial part.
    int eq = std::numeric_limits<int>::max(), et = eq;
    for (const auto& [e, c] : a.terms()) {
      eq = std::min(eq, e.eq);
      et = std::min(et, e.et);
    }
    for (const auto& [e, c] : b.terms()) {
      eq = std::min(eq, e.eq);
      et = std::min(et, e.et);
    }
    return PolyQT::monomial(
        boost::multiprecision::gcd(a.content(), b.content()), eq, et);
  }

  Ztq A = ztq_from_poly(a), B = ztq_from_poly(b);
  const Zt contA = ztq_content(A), contB = ztq_content(B);
  const Zt cont = zt_gcd(contA, contB);
  A = ztq_div_zt(A, contA);
  B = ztq_div_zt(B, contB);
  if (A.size() < B.size()) std::swap(A, B);
  while (!ztq_zero(B)) {
    Ztq R = ztq_prem(A, B);
    A = std::move(B);
    B = ztq_pp(R);
  }
  A = ztq_pp(A);
  return positive_leading(ztq_to_poly(ztq_scale(A, cont)));
}

// ---------------------------------------------------------------------------
// RatQT
// ---------------------------------------------------------------------------

RatQT::RatQT(const Rational& v)
    : num_(PolyQT::constant(boost::multiprecision::numerator(v))),
      den_(PolyQT::constant(boost::multiprecision::denominator(v))) {
  normalize();
}

RatQT::RatQT(PolyQT num) : num_(std::move(num)), den_(PolyQT::one()) {}

RatQT::RatQT(PolyQT num, PolyQT den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatQT::normalize() {
  if (den_.is_zero()) throw std::invalid_argument("division by zero");
  if (num_.is_zero()) {
    den_ = PolyQT::one();
    return;
  }
  PolyQT g = poly_gcd(num_, den_);
  if (!(g == PolyQT::one())) {
    num_ = *num_.divided_by(g);
    den_ = *den_.divided_by(g);
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatQT RatQT::make_reduced(PolyQT num, PolyQT den) {
  RatQT r;
  if (num.is_zero()) return r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  if (r.den_.leading_coeff() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatQT RatQT::q_power(long long e) {
  if (e >= 0) return RatQT(PolyQT::monomial(1, static_cast<int>(e), 0));
  RatQT r;
  r.num_ = PolyQT::one();
  r.den_ = PolyQT::monomial(1, static_cast<int>(-e), 0);
  return r;
}

RatQT RatQT::t_power(long long e) {
  if (e >= 0) return RatQT(PolyQT::monomial(1, 0, static_cast<int>(e)));
  RatQT r;
  r.num_ = PolyQT::one();
  r.den_ = PolyQT::monomial(1, 0, static_cast<int>(-e));
  return r;
}

bool RatQT::is_one() const {
  return num_ == PolyQT::one() && den_ == PolyQT::one();
}

RatQT RatQT::operator-() const {
  RatQT r = *this;
  r.num_ = -r.num_;
  return r;
}

// Sums and products of fractions already in lowest terms only need gcds of
// the small cross pieces (Knuth 4.5.1); the results below are reduced by
// construction, so no full-size gcd ever runs.

RatQT operator+(const RatQT& a, const RatQT& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const PolyQT d1 = poly_gcd(a.den_, b.den_);
  if (d1 == PolyQT::one()) {
    return RatQT::make_reduced(a.num_ * b.den_ + b.num_ * a.den_,
                               a.den_ * b.den_);
  }
  const PolyQT bd = *b.den_.divided_by(d1);
  PolyQT e = a.num_ * bd + b.num_ * *a.den_.divided_by(d1);
  if (e.is_zero()) return RatQT();
  const PolyQT d2 = poly_gcd(e, d1);
  if (!(d2 == PolyQT::one())) e = *e.divided_by(d2);
  return RatQT::make_reduced(std::move(e),
                             *a.den_.divided_by(d2) * bd);
}

RatQT operator-(const RatQT& a, const RatQT& b) { return a + (-b); }

RatQT operator*(const RatQT& a, const RatQT& b) {
  if (a.is_zero() || b.is_zero()) return RatQT();
  const PolyQT g1 = poly_gcd(a.num_, b.den_);
  const PolyQT g2 = poly_gcd(b.num_, a.den_);
  return RatQT::make_reduced(*a.num_.divided_by(g1) * *b.num_.divided_by(g2),
                             *a.den_.divided_by(g2) * *b.den_.divided_by(g1));
}

RatQT operator/(const RatQT& a, const RatQT& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero");
  if (a.is_zero()) return RatQT();
  const PolyQT g1 = poly_gcd(a.num_, b.num_);
  const PolyQT g2 = poly_gcd(b.den_, a.den_);
  return RatQT::make_reduced(*a.num_.divided_by(g1) * *b.den_.divided_by(g2),
                             *a.den_.divided_by(g2) * *b.num_.divided_by(g1));
}

RatQT RatQT::inverse() const {
  if (is_zero()) throw std::invalid_argument("division by zero");
  return RatQT(den_, num_);
}

RatQT RatQT::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatQT r = RatQT(1), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

RatQT RatQT::subst_t_q2() const {
  return RatQT(num_.subst_t_q2(), den_.subst_t_q2());
}

RatQT RatQT::subst_q_q2() const {
  return RatQT(num_.subst_q_q2(), den_.subst_q_q2());
}

RatQT RatQT::subst_swap_qt() const {
  return RatQT(num_.subst_swap_qt(), den_.subst_swap_qt());
}

RatQT RatQT::subst_q_pow(int d) const {
  return RatQT(num_.subst_q_pow(d), den_.subst_q_pow(d));
}

RatQT RatQT::subst_t_pow(int d) const {
  return RatQT(num_.subst_t_pow(d), den_.subst_t_pow(d));
}

RatQT RatQT::subst_q_zero() const {
  return RatQT(num_.subst_q_zero(), den_.subst_q_zero());
}

RatQT RatQT::subst_t_q() const {
  return RatQT(num_.subst_t_q(), den_.subst_t_q());
}

RatQT RatQT::subst_t_qinv_pow(int d) const {
  if (d < 1) throw std::invalid_argument("subst_t_qinv_pow: d must be >= 1");
  auto lift = [d](const PolyQT& p) {
    // p(q, q^{-d}) * q^{d*degt(p)} is a polynomial.
    const int bt = p.degree_t();
    PolyQT out;
    for (const auto& [e, c] : p.terms())
      out += PolyQT::monomial(c, e.eq + d * (bt - e.et), 0);
    return std::make_pair(out, bt);
  };
  auto [n, bn] = lift(num_);
  auto [dd, bd] = lift(den_);
  return RatQT(std::move(n), std::move(dd)) *
         RatQT::q_power(static_cast<long long>(d) * (bd - bn));
}

RatQT RatQT::subst_q_inv() const {
  auto lift = [](const PolyQT& p) {
    const int bq = p.degree_q();
    PolyQT out;
    for (const auto& [e, c] : p.terms())
      out += PolyQT::monomial(c, bq - e.eq, e.et);
    return std::make_pair(out, bq);
  };
  auto [n, bn] = lift(num_);
  auto [dd, bd] = lift(den_);
  return RatQT(std::move(n), std::move(dd)) *
         RatQT::q_power(static_cast<long long>(bd) - bn);
}

RatQT RatQT::subst_t_inv() const {
  auto lift = [](const PolyQT& p) {
    const int bt = p.degree_t();
    PolyQT out;
    for (const auto& [e, c] : p.terms())
      out += PolyQT::monomial(c, e.eq, bt - e.et);
    return std::make_pair(out, bt);
  };
  auto [n, bn] = lift(num_);
  auto [dd, bd] = lift(den_);
  return RatQT(std::move(n), std::move(dd)) *
         RatQT::t_power(static_cast<long long>(bd) - bn);
}

Rational RatQT::eval_q(const Rational& q0) const {
  if (!is_t_free()) throw std::domain_error("bivariate");
  const Rational d = den_.eval_q(q0);
  if (d == 0) throw std::domain_error("pole");
  return num_.eval_q(q0) / d;
}

std::string RatQT::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.terms().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

RatQT divide_exact_by_power(const RatQT& a, const PolyQT& b, int k) {
  if (b.is_zero()) throw std::invalid_argument("division by zero");
  if (k < 0) throw std::invalid_argument("divide_exact_by_power: k < 0");
  return a / RatQT(b.pow(k));
}

std::optional<std::vector<Int>> nonneg_q_coefficients(const RatQT& r) {
  if (!r.is_polynomial() || !r.num().is_t_free()) return std::nullopt;
  std::vector<Int> coeffs(r.num().degree_q() + 1, Int(0));
  if (r.is_zero()) return std::vector<Int>{};
  for (const auto& [e, c] : r.num().terms()) {
    if (c < 0) return std::nullopt;
    coeffs[e.eq] = c;
  }
  return coeffs;
}

bool is_polynomial_with_nonneg_int_coeffs(const RatQT& r) {
  return nonneg_q_coefficients(r).has_value();
}

}  // namespace macsym
