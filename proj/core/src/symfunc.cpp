#include "macsym/symfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "macsym/transition.hpp"

namespace macsym {

const FamilyLabel& FamilyLabel::f1() {
  static const FamilyLabel f{FamilyKind::M, 1, "f1"};
  return f;
}

const FamilyLabel& FamilyLabel::triv() {
  static const FamilyLabel f{FamilyKind::L, 1, "triv"};
  return f;
}

FamilyLabel FamilyLabel::M_orbit(int degree, std::string id) {
  if (degree < 1) throw std::invalid_argument("family degree must be >= 1");
  return {FamilyKind::M, degree, std::move(id)};
}

FamilyLabel FamilyLabel::L_orbit(int degree, std::string id) {
  if (degree < 1) throw std::invalid_argument("family degree must be >= 1");
  return {FamilyKind::L, degree, std::move(id)};
}

// ---------------------------------------------------------------------------
// PartitionFn
// ---------------------------------------------------------------------------

PartitionFn::PartitionFn(std::map<FamilyLabel, Partition> assign) {
  for (auto& [f, p] : assign)
    if (!p.empty()) assign_.emplace(f, p);
}

PartitionFn& PartitionFn::set(const FamilyLabel& f, const Partition& p) {
  if (p.empty())
    assign_.erase(f);
  else
    assign_[f] = p;
  return *this;
}

const Partition& PartitionFn::at(const FamilyLabel& f) const {
  static const Partition kEmpty;
  auto it = assign_.find(f);
  return it == assign_.end() ? kEmpty : it->second;
}

int PartitionFn::weight() const {
  int w = 0;
  for (const auto& [f, p] : assign_) w += f.degree * p.size();
  return w;
}

int PartitionFn::total_size() const {
  int w = 0;
  for (const auto& [f, p] : assign_) w += p.size();
  return w;
}

int PartitionFn::total_length() const {
  int w = 0;
  for (const auto& [f, p] : assign_) w += p.length();
  return w;
}

bool PartitionFn::all_of_kind(FamilyKind k) const {
  for (const auto& [f, p] : assign_)
    if (f.kind != k) return false;
  return true;
}

// ---------------------------------------------------------------------------
// SymFunc
// ---------------------------------------------------------------------------

SymFunc SymFunc::scalar(const RatQT& c) {
  SymFunc f;
  if (!c.is_zero()) f.terms_[{}] = c;
  return f;
}

SymFunc SymFunc::single(const FamilyLabel& fam, BasisLabel basis,
                        const Partition& part) {
  if (part.empty()) return one();
  SymFunc f;
  f.terms_[{Factor{fam, basis, part}}] = RatQT(1);
  return f;
}

SymFunc SymFunc::power_product(const PartitionFn& mu) {
  Term t;
  for (const auto& [f, p] : mu.assignments())
    t.push_back(Factor{f, BasisLabel::p(), p});
  SymFunc out;
  out.terms_[std::move(t)] = RatQT(1);
  return out;
}

void SymFunc::add_term(Term t, const RatQT& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(std::move(t), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [t, c] : r.terms_) c = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
  SymFunc r = a;
  r += b;
  return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
  SymFunc r = a;
  r -= b;
  return r;
}

SymFunc operator*(const RatQT& c, const SymFunc& f) {
  SymFunc r;
  if (c.is_zero()) return r;
  for (const auto& [t, tc] : f.terms()) r.terms_[t] = c * tc;
  return r;
}

int SymFunc::term_degree(const Term& t) {
  int d = 0;
  for (const auto& f : t) d += f.family.degree * f.part.size();
  return d;
}

int SymFunc::degree() const {
  if (terms_.empty()) return 0;
  int d = term_degree(terms_.begin()->first);
  for (const auto& [t, c] : terms_)
    if (term_degree(t) != d) throw std::logic_error("inhomogeneous element");
  return d;
}

bool SymFunc::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = term_degree(terms_.begin()->first);
  for (const auto& [t, c] : terms_)
    if (term_degree(t) != d) return false;
  return true;
}

bool SymFunc::has_kind(FamilyKind k) const {
  for (const auto& [t, c] : terms_)
    for (const auto& f : t)
      if (f.family.kind == k) return true;
  return false;
}

RatQT SymFunc::coefficient(const Term& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? RatQT(0) : it->second;
}

namespace {

// Expansion of one factor in the target basis; coefficients rescaled from the
// family's local parameters (q_f = q^d, t_f = t^d) to the global variables.
std::vector<std::pair<Partition, RatQT>> expand_factor(const Factor& f,
                                                       BasisLabel target) {
  if (f.basis == target) return {{f.part, RatQT(1)}};
  const int deg = f.part.size();
  auto mat = Tables::instance().transition(f.basis, target, deg);
  const auto order = partitions_of(deg);
  const int row = partition_index(f.part);
  std::vector<std::pair<Partition, RatQT>> out;
  for (int j = 0; j < static_cast<int>(order.size()); ++j) {
    RatQT c = mat->at(row, j);
    if (c.is_zero()) continue;
    if (f.family.degree > 1)
      c = c.subst_q_pow(f.family.degree).subst_t_pow(f.family.degree);
    out.emplace_back(order[j], std::move(c));
  }
  return out;
}

}  // namespace

SymFunc SymFunc::to_basis(BasisLabel target) const {
  SymFunc out;
  for (const auto& [term, coeff] : terms_) {
    std::vector<std::pair<Term, RatQT>> acc = {{Term{}, coeff}};
    for (const auto& f : term) {
      auto expansion = expand_factor(f, target);
      std::vector<std::pair<Term, RatQT>> next;
      next.reserve(acc.size() * expansion.size());
      for (const auto& [t0, c0] : acc)
        for (const auto& [part, c] : expansion) {
          Term t1 = t0;
          t1.push_back(Factor{f.family, target, part});
          next.emplace_back(std::move(t1), c0 * c);
        }
      acc = std::move(next);
    }
    for (auto& [t, c] : acc) out.add_term(std::move(t), c);
  }
  return out;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (const auto& f : t) {
      os << "*" << basis_name(f.basis.kind);
      if (f.basis.binding != Binding::none)
        os << "{" << binding_name(f.basis.binding) << "}";
      os << "[";
      for (int i = 0; i < f.part.length(); ++i)
        os << (i ? "," : "") << f.part.parts()[i];
      os << "](" << f.family.id << ")";
    }
  }
  return os.str();
}

SymFunc multiply(const SymFunc& a, const SymFunc& b) {
  const SymFunc pa = a.to_p(), pb = b.to_p();
  SymFunc out;
  for (const auto& [ta, ca] : pa.terms())
    for (const auto& [tb, cb] : pb.terms()) {
      // Merge the sorted factor lists; same family => union of partitions.
      SymFunc::Term t;
      std::size_t i = 0, j = 0;
      while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && ta[i].family < tb[j].family)) {
          t.push_back(ta[i++]);
        } else if (i == ta.size() || tb[j].family < ta[i].family) {
          t.push_back(tb[j++]);
        } else {
          std::vector<int> parts = ta[i].part.parts();
          const auto& more = tb[j].part.parts();
          parts.insert(parts.end(), more.begin(), more.end());
          std::sort(parts.begin(), parts.end(), std::greater<int>());
          t.push_back(
              Factor{ta[i].family, BasisLabel::p(), Partition(std::move(parts))});
          ++i;
          ++j;
        }
      }
      out.add_term(std::move(t), ca * cb);
    }
  return out;
}

RatQT binding_ratio(Binding b, long long n, int degree_scale) {
  const long long nd = n * degree_scale;
  switch (b) {
    case Binding::qt:
      return (RatQT::q_power(nd) - RatQT(1)) / (RatQT::t_power(nd) - RatQT(1));
    case Binding::tq:
      return (RatQT::t_power(nd) - RatQT(1)) / (RatQT::q_power(nd) - RatQT(1));
    case Binding::qq2:
      return (RatQT::q_power(nd) - RatQT(1)) /
             (RatQT::q_power(2 * nd) - RatQT(1));
    case Binding::q2q:
      return (RatQT::q_power(2 * nd) - RatQT(1)) /
             (RatQT::q_power(nd) - RatQT(1));
    case Binding::hl:
      return RatQT(-1) / (RatQT::t_power(nd) - RatQT(1));
    case Binding::hall:
      return RatQT(1);
    default:
      throw std::invalid_argument("binding_ratio: unbound basis");
  }
}

SymFunc omega(const SymFunc& f) {
  const SymFunc g = f.to_p();
  SymFunc out;
  for (const auto& [t, c] : g.terms()) {
    int size = 0, parts = 0;
    for (const auto& fac : t) {
      size += fac.part.size();
      parts += fac.part.length();
    }
    out.add_term(t, (size - parts) % 2 == 0 ? c : -c);
  }
  return out;
}

SymFunc omega_qt(const SymFunc& f, Binding b) {
  if (b != Binding::qt && b != Binding::tq && b != Binding::qq2 &&
      b != Binding::q2q)
    throw std::invalid_argument("omega_qt: unsupported binding");
  const SymFunc g = f.to_p();
  SymFunc out;
  for (const auto& [t, c] : g.terms()) {
    RatQT w = c;
    for (const auto& fac : t)
      for (int part : fac.part.parts()) {
        w *= binding_ratio(b, part, fac.family.degree);
        if (part % 2 == 0) w = -w;
      }
    out.add_term(t, w);
  }
  return out;
}

namespace {

// Shared bilinear skeleton: sum over matching p-terms of ca * cb * weight.
template <typename WeightFn>
RatQT diagonal_pairing(const SymFunc& a, const SymFunc& b, WeightFn&& weight) {
  const SymFunc pa = a.to_p(), pb = b.to_p();
  RatQT total(0);
  for (const auto& [t, ca] : pa.terms()) {
    const RatQT cb = pb.coefficient(t);
    if (cb.is_zero()) continue;
    RatQT w(1);
    for (const auto& fac : t) w *= weight(fac);
    total += ca * cb * w;
  }
  return total;
}

void require_kind(const SymFunc& f, FamilyKind allowed, const char* msg) {
  const FamilyKind other =
      allowed == FamilyKind::M ? FamilyKind::L : FamilyKind::M;
  if (f.has_kind(other)) throw std::domain_error(msg);
}

}  // namespace

RatQT inner_qt(const SymFunc& a, const SymFunc& b, Binding binding) {
  // Formal-parameter pairing on a single copy of Lambda.
  const FamilyLabel* fam = nullptr;
  for (const SymFunc* f : {&a, &b})
    for (const auto& [t, c] : f->terms())
      for (const auto& fac : t) {
        if (fam && !(*fam == fac.family))
          throw std::invalid_argument("inner_qt: mixed families");
        fam = &fac.family;
      }
  return diagonal_pairing(a, b, [&](const Factor& fac) {
    RatQT w{z_stat(fac.part)};
    for (int part : fac.part.parts()) w *= binding_ratio(binding, part, 1);
    return w;
  });
}

RatQT inner_hall(const SymFunc& a, const SymFunc& b) {
  return diagonal_pairing(
      a, b, [](const Factor& fac) { return RatQT(z_stat(fac.part)); });
}

RatQT inner_gl(const SymFunc& a, const SymFunc& b) {
  require_kind(a, FamilyKind::M, "inner_gl: L-family content");
  require_kind(b, FamilyKind::M, "inner_gl: L-family content");
  return diagonal_pairing(a, b, [](const Factor& fac) {
    RatQT w{z_stat(fac.part)};
    for (int part : fac.part.parts())
      w /= RatQT::q_power(static_cast<long long>(part) * fac.family.degree) -
           RatQT(1);
    return w;
  });
}

RatQT inner_sp(const SymFunc& a, const SymFunc& b) {
  require_kind(a, FamilyKind::M, "project first");
  require_kind(b, FamilyKind::M, "project first");
  return diagonal_pairing(a, b, [](const Factor& fac) {
    RatQT w{z_stat(fac.part)};
    for (int part : fac.part.parts())
      w /= RatQT::q_power(2LL * part * fac.family.degree) - RatQT(1);
    return w;
  });
}

RatQT inner_dual(const SymFunc& a, const SymFunc& b) {
  require_kind(a, FamilyKind::L, "inner_dual: M-family content");
  require_kind(b, FamilyKind::L, "inner_dual: M-family content");
  return diagonal_pairing(a, b, [](const Factor& fac) {
    RatQT w{z_stat(fac.part)};
    for (int part : fac.part.parts()) {
      const long long nd = static_cast<long long>(part) * fac.family.degree;
      w *= (RatQT::q_power(nd) - RatQT(1)) /
           (RatQT::q_power(2 * nd) - RatQT(1));
    }
    return w;
  });
}

SymFunc subst_q_q2_coeffs(const SymFunc& f) {
  SymFunc out;
  for (const auto& [t, c] : f.terms()) out.add_term(t, c.subst_q_q2());
  return out;
}

}  // namespace macsym
