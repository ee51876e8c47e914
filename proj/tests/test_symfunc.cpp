#include <doctest.h>

#include <random>
#include <stdexcept>

#include "macsym/jsonio.hpp"
#include "macsym/symfunc.hpp"
#include "macsym/transition.hpp"
#include "oracles.hpp"

using namespace macsym;
using macsym::testing::expand_symfunc;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

SymFunc basis_elt(BasisKind b, const Partition& la) {
  return SymFunc::single(FamilyLabel::f1(), BasisLabel{b, Binding::none}, la);
}

const RatQT q = RatQT::q();
const RatQT t = RatQT::t();
const RatQT one(1);

}  // namespace

TEST_CASE("to_basis examples") {
  CHECK(basis_elt(BasisKind::e, P({2})).to_basis(BasisLabel::m()) ==
        basis_elt(BasisKind::m, P({1, 1})));
  // s_21 = (p_111 - p_3)/3
  SymFunc expect =
      RatQT(Rational(1, 3)) * basis_elt(BasisKind::p, P({1, 1, 1})) -
      RatQT(Rational(1, 3)) * basis_elt(BasisKind::p, P({3}));
  CHECK(basis_elt(BasisKind::s, P({2, 1})).to_p() == expect);
  // p_2 = s_2 - s_11
  CHECK(basis_elt(BasisKind::p, P({2})).to_basis(BasisLabel::s()) ==
        basis_elt(BasisKind::s, P({2})) - basis_elt(BasisKind::s, P({1, 1})));
}

TEST_CASE("classical conversions against the variable-expansion oracle") {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& la : partitions_of(n)) {
      for (BasisKind b : {BasisKind::e, BasisKind::h, BasisKind::s,
                          BasisKind::p, BasisKind::m}) {
        const SymFunc in_m = basis_elt(b, la).to_basis(BasisLabel::m());
        CHECK(expand_symfunc(in_m, n) == expand_symfunc(basis_elt(b, la), n));
      }
    }
  }
}

TEST_CASE("to_basis round-trips through every path") {
  const std::vector<BasisKind> ring = {BasisKind::m, BasisKind::e, BasisKind::h,
                                       BasisKind::p, BasisKind::s};
  for (int n = 1; n <= 8; ++n) {
    for (const Partition& la : partitions_of(n)) {
      SymFunc f = basis_elt(BasisKind::m, la);
      for (BasisKind b : ring) f = f.to_basis(BasisLabel{b, Binding::none});
      CHECK(f.to_basis(BasisLabel::m()) == basis_elt(BasisKind::m, la));
    }
  }
}

TEST_CASE("multiply") {
  CHECK(multiply(basis_elt(BasisKind::p, P({2})),
                 basis_elt(BasisKind::p, P({1}))) ==
        basis_elt(BasisKind::p, P({2, 1})));
  CHECK(multiply(basis_elt(BasisKind::s, P({1})),
                 basis_elt(BasisKind::s, P({1})))
            .to_basis(BasisLabel::s()) ==
        basis_elt(BasisKind::s, P({2})) + basis_elt(BasisKind::s, P({1, 1})));
  const SymFunc f = basis_elt(BasisKind::s, P({2, 1}));
  CHECK(multiply(SymFunc::one(), f) == f.to_p());
}

TEST_CASE("grading adds over multi-family products") {
  const FamilyLabel phi2 = FamilyLabel::L_orbit(2, "phi:2");
  const SymFunc a =
      SymFunc::single(FamilyLabel::triv(), BasisLabel::p(), P({2, 1}));
  const SymFunc b = SymFunc::single(phi2, BasisLabel::p(), P({2}));
  CHECK(a.degree() == 3);
  CHECK(b.degree() == 4);
  CHECK(multiply(a, b).degree() == 7);
}

TEST_CASE("inner_qt") {
  const SymFunc p1 = basis_elt(BasisKind::p, P({1}));
  const SymFunc p2 = basis_elt(BasisKind::p, P({2}));
  const SymFunc p11 = basis_elt(BasisKind::p, P({1, 1}));
  CHECK(inner_qt(p1, p1) == (q - one) / (t - one));
  CHECK(inner_qt(p2, p11) == RatQT(0));
  CHECK(inner_qt(p11, p11) ==
        RatQT(2) * (q - one) * (q - one) / ((t - one) * (t - one)));
  const SymFunc other =
      SymFunc::single(FamilyLabel::triv(), BasisLabel::p(), P({1}));
  CHECK_THROWS_AS(inner_qt(p1, other), std::invalid_argument);
}

TEST_CASE("inner_sp") {
  const SymFunc p1 = SymFunc::single(FamilyLabel::f1(), BasisLabel::p(), P({1}));
  CHECK(inner_sp(p1, p1) == one / (q * q - one));
  const SymFunc p2 = SymFunc::single(FamilyLabel::f1(), BasisLabel::p(), P({2}));
  const SymFunc p11 =
      SymFunc::single(FamilyLabel::f1(), BasisLabel::p(), P({1, 1}));
  CHECK(inner_sp(p2, p11) == RatQT(0));
  for (int m = 1; m <= 5; ++m) {
    const SymFunc pm =
        SymFunc::single(FamilyLabel::f1(), BasisLabel::p(), P({m}));
    CHECK(inner_sp(pm, pm) == RatQT(m) / (RatQT::q_power(2 * m) - one));
  }
  const SymFunc dual =
      SymFunc::single(FamilyLabel::triv(), BasisLabel::p(), P({1}));
  CHECK_THROWS_WITH_AS(inner_sp(dual, dual), "project first",
                       std::domain_error);
}

TEST_CASE("inner_dual") {
  const FamilyLabel phi = FamilyLabel::L_orbit(1, "phi");
  const FamilyLabel psi = FamilyLabel::L_orbit(1, "psi");
  const FamilyLabel phi2 = FamilyLabel::L_orbit(2, "phi:2");
  const SymFunc a = SymFunc::single(phi, BasisLabel::p(), P({1}));
  CHECK(inner_dual(a, a) == one / (q + one));
  CHECK(inner_dual(a, SymFunc::single(psi, BasisLabel::p(), P({1}))) ==
        RatQT(0));
  const SymFunc b = SymFunc::single(phi2, BasisLabel::p(), P({2}));
  CHECK(inner_dual(b, b) ==
        RatQT(2) * (RatQT::q_power(4) - one) / (RatQT::q_power(8) - one));
  const SymFunc mside =
      SymFunc::single(FamilyLabel::f1(), BasisLabel::p(), P({1}));
  CHECK_THROWS_AS(inner_dual(mside, mside), std::domain_error);
}

TEST_CASE("omega and omega_qt") {
  CHECK(omega(basis_elt(BasisKind::p, P({2}))) ==
        -basis_elt(BasisKind::p, P({2})));
  // omega s_la = s_{la'}; (2,1) is self-conjugate
  for (int n = 1; n <= 6; ++n)
    for (const Partition& la : partitions_of(n))
      CHECK(omega(basis_elt(BasisKind::s, la)).to_basis(BasisLabel::s()) ==
            basis_elt(BasisKind::s, la.conjugate()));
  const SymFunc p1 = basis_elt(BasisKind::p, P({1}));
  CHECK(omega_qt(p1, Binding::q2q) == (q + one) * p1);

  // involutions, degree <= 6
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int n = 1; n <= 6; ++n) {
    SymFunc f;
    for (const Partition& la : partitions_of(n))
      f += RatQT(coeff(rng)) * basis_elt(BasisKind::p, la);
    CHECK(omega(omega(f)) == f);
    CHECK(omega_qt(omega_qt(f, Binding::qt), Binding::tq) == f);
  }
}

TEST_CASE("Hall specialization and omega-invariance") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& la : partitions_of(n))
      for (const Partition& mu : partitions_of(n)) {
        const RatQT expect = la == mu ? RatQT(1) : RatQT(0);
        CHECK(inner_qt(basis_elt(BasisKind::s, la),
                       basis_elt(BasisKind::s, mu), Binding::hall) == expect);
        CHECK(inner_hall(basis_elt(BasisKind::s, la),
                         basis_elt(BasisKind::s, mu)) == expect);
      }

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int n = 1; n <= 6; ++n) {
    SymFunc f, g;
    for (const Partition& la : partitions_of(n)) {
      f += RatQT(coeff(rng)) * basis_elt(BasisKind::p, la);
      g += RatQT(coeff(rng)) * basis_elt(BasisKind::p, la);
    }
    CHECK(inner_hall(omega(f), omega(g)) == inner_hall(f, g));
  }
}

TEST_CASE("PartitionFn") {
  PartitionFn fn;
  fn.set(FamilyLabel::triv(), P({2, 1}));
  fn.set(FamilyLabel::L_orbit(2, "phi:2"), P({1}));
  CHECK(fn.weight() == 5);
  CHECK(fn.total_size() == 4);
  CHECK(fn.total_length() == 3);
  CHECK(fn.all_of_kind(FamilyKind::L));
  fn.set(FamilyLabel::triv(), P({}));
  CHECK(fn.weight() == 2);
}

TEST_CASE("SymFunc json round-trip and exact shape") {
  const SymFunc f =
      ((q - t) / (one - q * t)) *
      SymFunc::single(FamilyLabel::f1(), BasisLabel::p(), P({2, 1}));
  nlohmann::json j = f;
  CHECK(j.get<SymFunc>() == f);
  REQUIRE(j.contains("terms"));
  REQUIRE(j["terms"].size() == 1);
  const auto& term = j["terms"][0];
  CHECK(term.contains("coeff"));
  CHECK(term["factors"][0]["family"] ==
        nlohmann::json({{"kind", "M"}, {"deg", 1}, {"id", "f1"}}));
  CHECK(term["factors"][0]["basis"] == "p");
  CHECK(term["factors"][0]["partition"] == nlohmann::json::array({2, 1}));
}
