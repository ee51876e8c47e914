#include <doctest.h>

#include <set>
#include <stdexcept>

#include "macsym/partition.hpp"

using namespace macsym;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("construction rejects non-canonical sequences") {
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(P({-1}), std::invalid_argument);
  CHECK(P({}).empty());
  CHECK(P({}).size() == 0);
}

TEST_CASE("conjugate") {
  CHECK(P({}).conjugate() == P({}));
  CHECK(P({2, 1}).conjugate() == P({2, 1}));
  CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
  // involution over every |lambda| <= 12
  for (int n = 0; n <= 12; ++n)
    for (const Partition& la : partitions_of(n))
      CHECK(la.conjugate().conjugate() == la);
}

TEST_CASE("cell statistics") {
  const Partition la({2, 1});
  CHECK(la.arm({1, 1}) == 1);
  CHECK(la.leg({1, 1}) == 1);
  CHECK(la.hook({1, 1}) == 3);
  CHECK(P({1}).arm({1, 1}) == 0);
  CHECK(P({1}).leg({1, 1}) == 0);
  CHECK(P({1}).hook({1, 1}) == 1);
  CHECK(P({3, 1}).arm_colength({1, 2}) == 1);
  CHECK(P({3, 1}).arm({1, 2}) == 1);
  CHECK(P({3, 1}).leg({1, 2}) == 0);
  CHECK_THROWS_WITH_AS(la.arm({2, 2}), "cell not in partition",
                       std::out_of_range);

  // hook = arm + leg + 1 over every cell of every |lambda| <= 10
  for (int n = 0; n <= 10; ++n)
    for (const Partition& la2 : partitions_of(n))
      for (const Cell& s : la2.cells())
        CHECK(la2.hook(s) == la2.arm(s) + la2.leg(s) + 1);
}

TEST_CASE("n_stat") {
  CHECK(P({}).n_stat() == 0);
  CHECK(P({1, 1}).n_stat() == 1);
  for (int n = 1; n <= 9; ++n) CHECK(P({n}).n_stat() == 0);

  // n(lambda) = sum over cells of leg-colength = sum_j C(lambda'_j, 2)
  for (int n = 0; n <= 10; ++n)
    for (const Partition& la : partitions_of(n)) {
      long long by_cells = 0;
      for (const Cell& s : la.cells()) by_cells += s.row - 1;
      long long by_columns = 0;
      const Partition conj = la.conjugate();
      for (int h : conj.parts())
        by_columns += static_cast<long long>(h) * (h - 1) / 2;
      CHECK(la.n_stat() == by_cells);
      CHECK(la.n_stat() == by_columns);
    }
}

TEST_CASE("union_double") {
  CHECK(P({2}).union_double() == P({2, 2}));
  CHECK(P({}).union_double() == P({}));
  CHECK(P({2, 1}).union_double() == P({2, 2, 1, 1}));
  for (int n = 0; n <= 8; ++n)
    for (const Partition& la : partitions_of(n)) {
      const Partition dbl = la.union_double();
      CHECK(dbl.size() == 2 * la.size());
      // the conjugate is 2*lambda', so its column multiplicities (= the part
      // multiplicities of dbl) are even, and every conjugate part is even
      const Partition conj = dbl.conjugate();
      for (int h : conj.parts()) CHECK(h % 2 == 0);
      for (int v = 1; v <= dbl.part(1); ++v)
        CHECK(dbl.multiplicity(v) % 2 == 0);
    }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(P({1, 1}), P({2})));
  CHECK_FALSE(dominance_leq(P({2}), P({1, 1})));
  CHECK(dominance_leq(P({2, 2}), P({3, 1})));
  CHECK_THROWS_WITH_AS(dominance_leq(P({1}), P({2})), "incomparable weights",
                       std::invalid_argument);

  // partial order on partitions_of(n), n <= 8
  for (int n = 1; n <= 8; ++n) {
    const auto all = partitions_of(n);
    for (const auto& a : all) {
      CHECK(dominance_leq(a, a));
      for (const auto& b : all) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        for (const auto& c : all)
          if (dominance_leq(a, b) && dominance_leq(b, c))
            CHECK(dominance_leq(a, c));
      }
    }
  }
}

TEST_CASE("vertical strips") {
  auto strip = vertical_strip_cells(P({2, 1}), P({2}));
  REQUIRE(strip.has_value());
  CHECK(*strip == std::vector<Cell>{{2, 1}});
  CHECK_FALSE(vertical_strip_cells(P({2}), P({})).has_value());
  auto strip2 = vertical_strip_cells(P({1, 1}), P({1}));
  REQUIRE(strip2.has_value());
  CHECK(*strip2 == std::vector<Cell>{{2, 1}});
  CHECK_FALSE(vertical_strip_cells(P({1}), P({2})).has_value());
  CHECK(vertical_strip_cells(P({2}), P({2}))->empty());
}

TEST_CASE("partitions_of") {
  CHECK(partitions_of(0) == std::vector<Partition>{P({})});
  CHECK(partitions_of(3) ==
        std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
  CHECK(partitions_of(6).size() == 11);
  CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
  // reverse-lex: strictly decreasing in lexicographic comparison
  const auto all = partitions_of(7);
  for (std::size_t i = 0; i + 1 < all.size(); ++i)
    CHECK(all[i].parts() > all[i + 1].parts());
}

TEST_CASE("corner removals and z") {
  CHECK(P({2, 1}).corner_removals() ==
        std::vector<Partition>{P({1, 1}), P({2})});
  CHECK(P({1}).corner_removals() == std::vector<Partition>{P({})});
  CHECK(z_stat(P({})) == 1);
  CHECK(z_stat(P({1, 1})) == 2);
  CHECK(z_stat(P({2})) == 2);
  CHECK(z_stat(P({2, 1, 1})) == 4);
  CHECK(z_stat(P({3, 3})) == 18);
}
