#include "macsym/spherical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace macsym {

UnipotentCoset UnipotentCoset::of(const Partition& mu) {
  return UnipotentCoset{mu, mu.size()};
}

UnipotentCoset UnipotentCoset::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity coset needs n >= 1");
  return of(Partition(std::vector<int>(n, 1)));
}

UnipotentCoset UnipotentCoset::transvection(int n) {
  if (n < 2) throw std::invalid_argument("transvection needs n>=2");
  std::vector<int> parts{2};
  parts.insert(parts.end(), n - 2, 1);
  return of(Partition(std::move(parts)));
}

RatQT delta_specialize(const SymFunc& F) {
  if (F.has_kind(FamilyKind::M))
    throw std::domain_error("delta_specialize: M-family content");
  const SymFunc g = F.to_p();
  RatQT total(0);
  for (const auto& [t, c] : g.terms()) {
    RatQT v = c;
    for (const auto& fac : t)
      for (int part : fac.part.parts())
        v /= RatQT::q_power(static_cast<long long>(part) * fac.family.degree) -
             RatQT(1);
    total += v;
  }
  return total;
}

SymFunc unipotent_projection(const SymFunc& F) {
  // p_n(phi) = (-1)^{nd-1} sum_{x in M_{nd}} xi(x) p~_{nd}(x), and x = 1 is
  // the only point with minimal polynomial x - 1; xi(1) = 1, so the
  // f1-component of p_n(phi) is (-1)^{nd-1} p_{nd}(f1). A product of factors
  // is pure f1 exactly when every factor contributes its f1 part, so the
  // projection is multiplicative.
  const SymFunc g = F.to_p();
  SymFunc out;
  for (const auto& [t, c] : g.terms()) {
    std::vector<int> parts;
    int sign = 0;  // parity of sum (nd - 1)
    for (const auto& fac : t)
      for (int part : fac.part.parts()) {
        const int nd = part * fac.family.degree;
        parts.push_back(nd);
        sign += nd - 1;
      }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    SymFunc::Term target;
    if (!parts.empty())
      target.push_back(Factor{FamilyLabel::f1(), BasisLabel::p(),
                              Partition(std::move(parts))});
    out.add_term(std::move(target), sign % 2 == 0 ? c : -c);
  }
  return out;
}

RatQT pair_dual_unipotent(const SymFunc& F, const SymFunc& G) {
  for (const auto& [t, c] : G.terms())
    for (const auto& fac : t)
      if (!fac.family.is_f1())
        throw std::invalid_argument(
            "pair_dual_unipotent: right argument must live on f1");
  return inner_sp(unipotent_projection(F), G);
}

RatQT value_route_A(const CharData& lambda, const UnipotentCoset& coset) {
  if (lambda.n != coset.n)
    throw std::invalid_argument("degree mismatch");
  const int n = coset.n;
  const RatQT paired = pair_dual_unipotent(
      ch_spherical(lambda), ch_sp_indicator(coset.class_data()));
  return RatQT::q_power(-n) * sp_order(n).pow(2) * paired /
         double_coset_size(coset.class_data());
}

RatQT value_route_B(const CharData& lambda, const UnipotentCoset& coset) {
  if (lambda.n != coset.n)
    throw std::invalid_argument("degree mismatch");
  const int n = coset.n;
  auto green = green_polynomials(n);
  const int mu_idx = partition_index(coset.mu);
  const int id_idx =
      partition_index(Partition(std::vector<int>(n, 1)));

  // One factor of W(lambda) per family; sum over cycle types with class-size
  // weights |class| / m! = 1 / z_rho.
  std::vector<std::pair<FamilyLabel, Partition>> support(
      lambda.lambda.assignments().begin(), lambda.lambda.assignments().end());
  std::vector<std::vector<Partition>> types;
  for (const auto& [phi, part] : support) types.push_back(partitions_of(part.size()));

  RatQT total(0);
  std::vector<int> choice(support.size(), 0);
  while (true) {
    RatQT term(1);
    std::vector<int> rho_parts;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const auto& [phi, part] = support[i];
      const Partition& rho_phi = types[i][choice[i]];
      const Partition conj = part.conjugate();
      term /= RatQT(z_stat(rho_phi));
      term *= RatQT::q_power(-static_cast<long long>(phi.degree) *
                             conj.n_stat());
      term *= c_coeff(conj, Binding::q2q).subst_q_pow(phi.degree);
      term *= d_coeff(conj, rho_phi, phi.degree);
      if ((part.size() - rho_phi.length()) % 2 != 0) term = -term;  // sgn(w)
      for (int c : rho_phi.parts()) rho_parts.push_back(c * phi.degree);
    }
    std::sort(rho_parts.begin(), rho_parts.end(), std::greater<int>());
    const Partition rho(std::move(rho_parts));
    const int rho_idx = partition_index(rho);
    // Basic-function values on unipotent cosets: Green polynomials at q^2.
    const RatQT zeta_g = green->Q.at(rho_idx, mu_idx).subst_t_q2();
    const RatQT zeta_1 = green->Q.at(rho_idx, id_idx).subst_t_q2();
    RatQT torus(1);  // |T_w^F| = prod (q^{part} - 1)
    for (int part : rho.parts()) torus *= RatQT::q_power(part) - RatQT(1);
    total += term * zeta_g / (torus * zeta_1);

    // advance the cycle-type tuple
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < static_cast<int>(types[i].size())) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
    if (choice.empty()) break;
  }
  if (lambda.total_size() % 2 != 0) total = -total;
  return total;
}

RatQT value_route_C_transvection(const CharData& lambda) {
  const int n = lambda.n;
  if (n < 2) throw std::invalid_argument("transvection needs n>=2");
  const RatQT q2n = RatQT::q_power(2 * n), q2n2 = RatQT::q_power(2 * n - 2);
  const RatQT prefactor = q2n2 * (RatQT::q_power(2) - RatQT(1)) /
                          ((q2n - RatQT(1)) * (q2n2 - RatQT(1)));
  RatQT sum(0);
  for (const auto& [phi, part] : lambda.lambda.assignments()) {
    if (phi.degree != 1) continue;
    for (const Partition& below : part.corner_removals()) {
      const RatQT ratio =
          cprime_coeff(part, Binding::qq2) / cprime_coeff(below, Binding::qq2);
      const RatQT psi = pieri_psi_prime(part, below, Binding::qq2);
      const RatQT qpow = RatQT::q_power(below.conjugate().n_stat() -
                                        part.conjugate().n_stat());
      sum += ratio * psi * qpow / (RatQT(1) - RatQT::q());
    }
  }
  const RatQT tail = (q2n - RatQT(1)) / (q2n2 * (RatQT::q_power(2) - RatQT(1)));
  return prefactor * (sum - tail);
}

namespace {

std::string cache_key(const CharData& lambda, const UnipotentCoset& coset,
                      Route route) {
  std::ostringstream os;
  for (const auto& [phi, part] : lambda.lambda.assignments()) {
    os << phi.id << "#" << phi.degree << "=";
    for (int p : part.parts()) os << p << ".";
    os << ";";
  }
  os << "|";
  for (int p : coset.mu.parts()) os << p << ".";
  os << "|" << static_cast<int>(route);
  return os.str();
}

std::shared_mutex value_cache_mu;
std::map<std::string, RatQT> value_cache;

}  // namespace

RatQT spherical_value(const CharData& lambda, const UnipotentCoset& coset,
                      Route route) {
  const std::string key = cache_key(lambda, coset, route);
  {
    std::shared_lock lk(value_cache_mu);
    auto it = value_cache.find(key);
    if (it != value_cache.end()) return it->second;
  }
  RatQT value;
  switch (route) {
    case Route::A:
      value = value_route_A(lambda, coset);
      break;
    case Route::B:
      value = value_route_B(lambda, coset);
      break;
    case Route::C:
      if (!(coset == UnipotentCoset::transvection(coset.n)))
        throw std::invalid_argument("route C is the transvection closed form");
      value = value_route_C_transvection(lambda);
      break;
  }
  std::unique_lock lk(value_cache_mu);
  value_cache.emplace(key, value);
  return value;
}

SymFunc e_f1(int k) {
  if (k == 0) return SymFunc::one();
  return SymFunc::single(FamilyLabel::f1(), BasisLabel::e(),
                         Partition({k}));
}

std::vector<PartitionFn> partition_fns_of_weight(
    int n, const std::vector<FamilyLabel>& pool) {
  std::vector<PartitionFn> out;
  PartitionFn acc;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    if (i == pool.size()) return;
    rec(i + 1, left);  // family absent
    const int d = pool[i].degree;
    for (int w = d; w <= left; w += d) {
      for (const Partition& p : partitions_of(w / d)) {
        acc.set(pool[i], p);
        rec(i + 1, left - w);
      }
      acc.set(pool[i], Partition{});
    }
  };
  rec(0, n);
  return out;
}

bool pieri_expansion_lemma_check(int n, const std::vector<FamilyLabel>& pool) {
  if (n < 2) throw std::invalid_argument("pieri_expansion_lemma_check: n >= 2");
  const SymFunc lhs = multiply(e_f1(n - 1), e_f1(1));
  for (const PartitionFn& la : partition_fns_of_weight(n, pool)) {
    // Dual-variable J_la(q,q^2).
    SymFunc::Term t;
    for (const auto& [phi, part] : la.assignments())
      t.push_back(Factor{phi, BasisLabel::macJ(Binding::qq2), part});
    SymFunc J;
    J.add_term(std::move(t), RatQT(1));

    // Stated coefficient of Jhat_la: box removals from degree-1 families.
    RatQT want(0);
    for (const auto& [phi, part] : la.assignments()) {
      if (phi.degree != 1) continue;
      for (const Partition& below : part.corner_removals()) {
        RatQT qfac(1);
        for (const auto& [psi, other] : la.assignments()) {
          const Partition& reduced = psi == phi ? below : other;
          qfac *= RatQT::q_power(-static_cast<long long>(psi.degree) *
                                 reduced.conjugate().n_stat());
        }
        const RatQT ratio = cprime_coeff(part, Binding::qq2) /
                            cprime_coeff(below, Binding::qq2);
        const RatQT psi_coeff = pieri_psi_prime(part, below, Binding::qq2);
        want += qfac * ratio * psi_coeff / (RatQT(1) - RatQT::q());
      }
    }
    if (!(pair_dual_unipotent(J, lhs) == want)) return false;
  }
  return true;
}

bool pieri_expansion_lemma_check(int n) {
  return pieri_expansion_lemma_check(n, {FamilyLabel::triv()});
}

}  // namespace macsym
