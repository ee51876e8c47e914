#include "macsym/charmap.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace macsym {

ClassData::ClassData(PartitionFn m) : mu(std::move(m)) {
  if (!mu.all_of_kind(FamilyKind::M))
    throw std::invalid_argument("ClassData: families must be M-orbits");
  n = mu.weight();
}

ClassData ClassData::unipotent(const Partition& part) {
  PartitionFn fn;
  fn.set(FamilyLabel::f1(), part);
  return ClassData(std::move(fn));
}

CharData::CharData(PartitionFn l) : lambda(std::move(l)) {
  if (!lambda.all_of_kind(FamilyKind::L))
    throw std::invalid_argument("CharData: families must be L-orbits");
  n = lambda.weight();
}

CharData CharData::union_double() const {
  PartitionFn fn;
  for (const auto& [f, p] : lambda.assignments()) fn.set(f, p.union_double());
  return CharData(std::move(fn));
}

RatQT gl_order(int n) {
  RatQT prod(1);
  for (int i = 0; i < n; ++i)
    prod *= RatQT::q_power(n) - RatQT::q_power(i);
  return prod;
}

RatQT sp_order(int n) {
  RatQT prod = RatQT::q_power(static_cast<long long>(n) * n);
  for (int i = 1; i <= n; ++i) prod *= RatQT::q_power(2 * i) - RatQT(1);
  return prod;
}

RatQT psi_n(int n) {
  RatQT prod(1);
  for (int i = 1; i <= n; ++i) prod *= RatQT::q_power(i) - RatQT(1);
  return prod;
}

RatQT hook_product_H(const Partition& lambda, int degree_scale) {
  RatQT prod(1);
  for (const Cell& s : lambda.cells())
    prod *= RatQT::q_power(static_cast<long long>(lambda.hook(s)) *
                           degree_scale) -
            RatQT(1);
  return prod;
}

RatQT a_mu(const ClassData& mu) {
  RatQT prod = RatQT::q_power(mu.n);
  for (const auto& [f, part] : mu.mu.assignments()) {
    prod *= RatQT::q_power(2LL * f.degree * part.n_stat());
    int v = 0;
    for (int i = 0; i < part.length(); ++i) {
      if (i + 1 < part.length() && part.parts()[i] == part.parts()[i + 1])
        continue;
      // parts()[i] ends a run; multiplicity of that value:
      v = part.multiplicity(part.parts()[i]);
      for (int j = 1; j <= v; ++j)
        prod *= RatQT(1) - RatQT::q_power(-static_cast<long long>(j) * f.degree);
    }
  }
  return prod;
}

RatQT class_size(const ClassData& mu) { return gl_order(mu.n) / a_mu(mu); }

RatQT dim_irreducible(const CharData& lambda) {
  RatQT d = psi_n(lambda.n);
  for (const auto& [phi, part] : lambda.lambda.assignments()) {
    d *= RatQT::q_power(static_cast<long long>(phi.degree) *
                        part.conjugate().n_stat());
    d /= hook_product_H(part, phi.degree);
  }
  return d;
}

namespace {

// Tensor product across distinct families: factor lists merge sorted.
SymFunc tensor(const SymFunc& a, const SymFunc& b) {
  SymFunc out;
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) {
      SymFunc::Term t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      std::sort(t.begin(), t.end());
      out.add_term(std::move(t), ca * cb);
    }
  return out;
}

// q_f^{-n(mu)} P_mu(f; q_f^{-k}) expanded in the monomial basis of family f.
SymFunc scaled_hl_factor(const FamilyLabel& f, const Partition& part, int k) {
  const int d = f.degree;
  auto tab = Tables::instance().macdonald(part.size(), Binding::hl);
  const int row = partition_index(part);
  const RatQT prefactor =
      RatQT::q_power(-static_cast<long long>(k) * d * part.n_stat());
  SymFunc out;
  for (int j = 0; j < static_cast<int>(tab->order.size()); ++j) {
    RatQT c = tab->P_in_m.at(row, j);
    if (c.is_zero()) continue;
    c = c.subst_t_qinv_pow(k * d);  // t := q_f^{-k}
    out += (prefactor * c) * SymFunc::single(f, BasisLabel::m(), tab->order[j]);
  }
  return out;
}

}  // namespace

SymFunc ch_GL_indicator(const ClassData& mu) {
  SymFunc out = SymFunc::one();
  for (const auto& [f, part] : mu.mu.assignments())
    out = tensor(out, scaled_hl_factor(f, part, 1));
  return out;
}

SymFunc ch_GL_character(const CharData& lambda) {
  SymFunc::Term t;
  for (const auto& [phi, part] : lambda.lambda.assignments())
    t.push_back(Factor{phi, BasisLabel::s(), part});
  SymFunc out;
  out.add_term(std::move(t), RatQT(1));
  return out;
}

SymFunc ch_sp_indicator(const ClassData& mu) {
  SymFunc out = SymFunc::one();
  for (const auto& [f, part] : mu.mu.assignments())
    out = tensor(out, scaled_hl_factor(f, part, 2));
  return out;
}

SymFunc ch_spherical(const CharData& lambda) {
  RatQT coeff = RatQT(1) / psi_n(lambda.n).subst_q_q2();
  if (lambda.total_size() % 2 != 0) coeff = -coeff;
  SymFunc::Term t;
  for (const auto& [phi, part] : lambda.lambda.assignments()) {
    coeff *= RatQT::q_power(-static_cast<long long>(phi.degree) *
                            part.conjugate().n_stat());
    t.push_back(Factor{phi, BasisLabel::macJ(Binding::qq2), part});
  }
  SymFunc out;
  out.add_term(std::move(t), coeff);
  return out;
}

SymFunc ch_DL(const CharData& lambda) {
  const int sign = (lambda.n - lambda.lambda.total_length()) % 2;
  return (sign == 0 ? RatQT(1) : RatQT(-1)) *
         SymFunc::power_product(lambda.lambda);
}

RatQT double_coset_size(const ClassData& mu) {
  return sp_order(mu.n) * class_size(mu).subst_q_q2();
}

RatQT isometry_pair(const SymFunc& F, const SymFunc& G, int n) {
  const RatQT scale = RatQT::q_power(-n) * sp_order(n).pow(2);
  if (F.has_kind(FamilyKind::L) || G.has_kind(FamilyKind::L))
    return scale * inner_dual(F, G);
  return scale * inner_sp(F, G);
}

SymFunc mixed_product(const SymFunc& F, const SymFunc& G) {
  return multiply(F, omega(omega_qt(G, Binding::q2q)));
}

long long count_orbits_M(int d, long long q0) {
  if (d < 1 || q0 < 2) throw std::invalid_argument("count_orbits_M");
  auto moebius = [](int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p != 0) continue;
      m /= p;
      if (m % p == 0) return 0;
      result = -result;
    }
    if (m > 1) result = -result;
    return result;
  };
  Int total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = moebius(d / e);
    if (mu == 0) continue;
    Int pw = 1;
    for (int i = 0; i < e; ++i) pw *= q0;
    total += mu * pw;
  }
  total /= d;
  if (d == 1) total -= 1;  // exclude the orbit of x (M is the unit group)
  return total.convert_to<long long>();
}

namespace {

// Multisets of nonempty partitions with total size s, at most cap atoms,
// emitted as sorted atom lists (catalog order, non-decreasing index).
void partition_multisets(int s, const std::vector<Partition>& catalog,
                         std::size_t from, Int cap,
                         std::vector<Partition>& acc,
                         const std::function<void(const std::vector<Partition>&)>& emit) {
  if (s == 0) {
    emit(acc);
    return;
  }
  if (cap == 0) return;
  for (std::size_t i = from; i < catalog.size(); ++i) {
    const int sz = catalog[i].size();
    if (sz > s) continue;
    acc.push_back(catalog[i]);
    partition_multisets(s - sz, catalog, i, cap - 1, acc, emit);
    acc.pop_back();
  }
}

// Injective assignments of the multiset to `orbits` labeled orbits:
// falling factorial over the repetition factorials.
Int assignment_count(const std::vector<Partition>& atoms, const Int& orbits) {
  Int count = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) count *= orbits - Int(i);
  Int rep = 1;
  std::size_t i = 0;
  while (i < atoms.size()) {
    std::size_t j = i;
    while (j < atoms.size() && atoms[j] == atoms[i]) ++j;
    for (std::size_t k = 2; k <= j - i; ++k) rep *= Int(k);
    i = j;
  }
  return count / rep;
}

}  // namespace

std::vector<ClassShape> class_shapes(int n, long long q0) {
  std::vector<ClassShape> out;
  // Per degree d: choose a partition multiset of total size s_d; the weight
  // contribution is d * s_d.
  std::function<void(int, int, ClassShape&)> by_degree =
      [&](int d, int left, ClassShape& shape) {
        if (left == 0) {
          out.push_back(shape);
          return;
        }
        if (d > left) return;
        std::vector<Partition> catalog;
        for (int k = 1; k <= left / d; ++k)
          for (const Partition& p : partitions_of(k)) catalog.push_back(p);
        const Int orbits = d <= 20 ? Int(count_orbits_M(d, q0)) : Int(0);
        for (int s = 0; s * d <= left; ++s) {
          std::vector<Partition> acc;
          partition_multisets(
              s, catalog, 0, orbits, acc,
              [&](const std::vector<Partition>& atoms) {
                ClassShape next = shape;
                for (const Partition& p : atoms) next.atoms.emplace_back(d, p);
                next.multiplicity *= assignment_count(atoms, orbits);
                if (next.multiplicity != 0)
                  by_degree(d + 1, left - s * d, next);
              });
        }
      };
  ClassShape start;
  start.multiplicity = 1;
  by_degree(1, n, start);
  return out;
}

Int count_partition_fns(int n, long long q0) {
  Int total = 0;
  for (const ClassShape& s : class_shapes(n, q0)) total += s.multiplicity;
  return total;
}

namespace {
std::vector<std::pair<int, Partition>> sorted_atoms(
    std::vector<std::pair<int, Partition>> atoms) {
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}
}  // namespace

ClassData class_from_shape(
    const std::vector<std::pair<int, Partition>>& atoms) {
  PartitionFn fn;
  int k = 0;
  for (const auto& [d, p] : sorted_atoms(atoms)) {
    if (d == 1 && fn.at(FamilyLabel::f1()).empty()) {
      fn.set(FamilyLabel::f1(), p);
      continue;
    }
    fn.set(FamilyLabel::M_orbit(d, "f" + std::to_string(++k) + ":" +
                                       std::to_string(d)),
           p);
  }
  return ClassData(std::move(fn));
}

CharData char_from_shape(const std::vector<std::pair<int, Partition>>& atoms) {
  PartitionFn fn;
  int k = 0;
  for (const auto& [d, p] : sorted_atoms(atoms)) {
    if (d == 1 && fn.at(FamilyLabel::triv()).empty()) {
      fn.set(FamilyLabel::triv(), p);
      continue;
    }
    fn.set(FamilyLabel::L_orbit(d, "phi" + std::to_string(++k) + ":" +
                                       std::to_string(d)),
           p);
  }
  return CharData(std::move(fn));
}

}  // namespace macsym
