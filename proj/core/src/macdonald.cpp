#include "macsym/macdonald.hpp"

#include <stdexcept>

namespace macsym {

namespace {

// Parameter pair (A, B) of a binding as rational functions of (q, t).
std::pair<RatQT, RatQT> binding_params(Binding b) {
  switch (b) {
    case Binding::qt: return {RatQT::q(), RatQT::t()};
    case Binding::tq: return {RatQT::t(), RatQT::q()};
    case Binding::qq2: return {RatQT::q(), RatQT::q_power(2)};
    case Binding::q2q: return {RatQT::q_power(2), RatQT::q()};
    case Binding::hl: return {RatQT(0), RatQT::t()};
    case Binding::hall: return {RatQT::q(), RatQT::q()};
    default: throw std::invalid_argument("binding has no parameter pair");
  }
}

SymFunc table_row_in_m(const Partition& lambda, Binding binding,
                       const RatQT& scale) {
  if (lambda.empty()) return scale * SymFunc::one();
  auto tab = Tables::instance().macdonald(lambda.size(), binding);
  const int row = partition_index(lambda);
  SymFunc out;
  for (int j = 0; j < static_cast<int>(tab->order.size()); ++j) {
    const RatQT& c = tab->P_in_m.at(row, j);
    if (c.is_zero()) continue;
    out += (scale * c) *
           SymFunc::single(FamilyLabel::f1(), BasisLabel::m(), tab->order[j]);
  }
  return out;
}

}  // namespace

SymFunc macdonald_P(const Partition& lambda, Binding binding) {
  return table_row_in_m(lambda, binding, RatQT(1));
}

SymFunc macdonald_Q(const Partition& lambda, Binding binding) {
  return table_row_in_m(lambda, binding,
                        c_coeff(lambda, binding) / cprime_coeff(lambda, binding));
}

SymFunc macdonald_J(const Partition& lambda, Binding binding) {
  return table_row_in_m(lambda, binding, c_coeff(lambda, binding));
}

SymFunc hall_littlewood_P(const Partition& lambda) {
  return macdonald_P(lambda, Binding::hl);
}

RatQT c_coeff(const Partition& lambda, Binding binding) {
  const auto [A, B] = binding_params(binding);
  RatQT prod(1);
  for (const Cell& s : lambda.cells())
    prod *= RatQT(1) - A.pow(lambda.arm(s)) * B.pow(lambda.leg(s) + 1);
  return prod;
}

RatQT cprime_coeff(const Partition& lambda, Binding binding) {
  const auto [A, B] = binding_params(binding);
  RatQT prod(1);
  for (const Cell& s : lambda.cells())
    prod *= RatQT(1) - A.pow(lambda.arm(s) + 1) * B.pow(lambda.leg(s));
  return prod;
}

std::shared_ptr<const GreenTable> green_polynomials(int n) {
  if (n < 1) throw std::invalid_argument("green_polynomials: n must be >= 1");
  return Tables::instance().green(n);
}

RatQT green_value(const Partition& rho, const Partition& mu) {
  if (rho.size() != mu.size())
    throw std::invalid_argument("green_value: weight mismatch");
  auto tab = green_polynomials(rho.size());
  return tab->Q.at(partition_index(rho), partition_index(mu));
}

RatQT pieri_psi_prime(const Partition& lambda, const Partition& mu,
                      Binding binding) {
  auto strip = vertical_strip_cells(lambda, mu);
  if (!strip) throw std::invalid_argument("not a vertical strip");
  const auto [A, B] = binding_params(binding);
  auto b_of = [&](const Partition& nu, Cell s) {
    return (RatQT(1) - A.pow(nu.arm(s)) * B.pow(nu.leg(s) + 1)) /
           (RatQT(1) - A.pow(nu.arm(s) + 1) * B.pow(nu.leg(s)));
  };
  std::vector<bool> in_cols(lambda.part(1) + 1, false);
  std::vector<bool> in_rows(lambda.length() + 1, false);
  for (const Cell& s : *strip) {
    in_cols[s.col] = true;
    in_rows[s.row] = true;
  }
  // Cells in a strip column but not a strip row lie in both diagrams.
  RatQT prod(1);
  for (const Cell& s : lambda.cells()) {
    if (!in_cols[s.col] || in_rows[s.row]) continue;
    prod *= b_of(lambda, s) / b_of(mu, s);
  }
  return prod;
}

SymFunc skew_P(const Partition& lambda, const Partition& mu, Binding binding) {
  if (!lambda.contains(mu)) return SymFunc::zero();
  const int k = lambda.size() - mu.size();
  const SymFunc P_la = macdonald_P(lambda, binding);
  const SymFunc Q_mu = macdonald_Q(mu, binding);
  // <P_{la/mu}, Q_sigma> = <P_la, Q_mu Q_sigma> gives the P-coordinates.
  SymFunc out;
  for (const Partition& sigma : partitions_of(k)) {
    const RatQT a =
        inner_qt(P_la, multiply(Q_mu, macdonald_Q(sigma, binding)), binding);
    if (a.is_zero()) continue;
    out += a * SymFunc::single(FamilyLabel::f1(), BasisLabel::macP(binding),
                               sigma);
  }
  return out;
}

RatQT schur_expansion_C(const Partition& lambda, const Partition& mu,
                        const Partition& nu, Binding binding) {
  if (lambda.size() != mu.size() + nu.size()) return RatQT(0);
  const SymFunc skew = skew_P(lambda, mu, binding).to_basis(BasisLabel::s());
  if (nu.empty()) return skew.coefficient({});
  return skew.coefficient(
      {Factor{FamilyLabel::f1(), BasisLabel::s(), nu}});
}

RatQT d_coeff(const Partition& lambda, const Partition& rho, int degree_scale) {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("d_coeff: weight mismatch");
  if (lambda.empty()) return RatQT(1);
  const SymFunc p_form = macdonald_P(lambda, Binding::q2q).to_p();
  const RatQT a = p_form.coefficient(
      {Factor{FamilyLabel::f1(), BasisLabel::p(), rho}});
  const RatQT d = RatQT(z_stat(rho)) * a;
  return degree_scale > 1 ? d.subst_q_pow(degree_scale) : d;
}

}  // namespace macsym
