#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace macsym::testing {

VarPoly vp_mul(const VarPoly& a, const VarPoly& b) {
  VarPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r[e] += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

VarPoly expand_m(const Partition& la, int k) {
  VarPoly r;
  if (la.length() > k) return r;
  std::vector<int> e(k, 0);
  for (int i = 0; i < la.length(); ++i) e[i] = la.parts()[i];
  std::sort(e.begin(), e.end());
  do {
    r[e] = 1;
  } while (std::next_permutation(e.begin(), e.end()));
  return r;
}

VarPoly expand_p(const Partition& la, int k) {
  VarPoly r{{std::vector<int>(k, 0), Int(1)}};
  for (int part : la.parts()) {
    VarPoly pn;
    for (int i = 0; i < k; ++i) {
      std::vector<int> e(k, 0);
      e[i] = part;
      pn[e] = 1;
    }
    r = vp_mul(r, pn);
  }
  return r;
}

namespace {

// Multiset-of-columns expansion: e_n = sum over n-subsets, h_n over
// n-multisets.
VarPoly one_eh(int n, int k, bool elementary) {
  VarPoly r;
  std::vector<int> e(k, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (left == 0) {
      r[e] += 1;
      return;
    }
    if (var == k) return;
    const int cap = elementary ? 1 : left;
    for (int take = 0; take <= cap; ++take) {
      e[var] += take;
      rec(var + 1, left - take);
      e[var] -= take;
    }
  };
  rec(0, n);
  return r;
}

}  // namespace

VarPoly expand_e(const Partition& la, int k) {
  VarPoly r{{std::vector<int>(k, 0), Int(1)}};
  for (int part : la.parts()) r = vp_mul(r, one_eh(part, k, true));
  return r;
}

VarPoly expand_h(const Partition& la, int k) {
  VarPoly r{{std::vector<int>(k, 0), Int(1)}};
  for (int part : la.parts()) r = vp_mul(r, one_eh(part, k, false));
  return r;
}

VarPoly expand_s(const Partition& la, int k) {
  VarPoly r;
  if (la.empty()) {
    r[std::vector<int>(k, 0)] = 1;
    return r;
  }
  // DFS over semistandard fillings: weakly increasing in rows, strictly
  // increasing down columns, entries in 1..k.
  std::vector<std::vector<int>> fill(la.length());
  for (int i = 0; i < la.length(); ++i) fill[i].assign(la.parts()[i], 0);
  std::function<void(int, int)> rec = [&](int row, int col) {
    if (row == la.length()) {
      std::vector<int> e(k, 0);
      for (const auto& rw : fill)
        for (int v : rw) ++e[v - 1];
      r[e] += 1;
      return;
    }
    const int next_row = col + 1 == la.parts()[row] ? row + 1 : row;
    const int next_col = col + 1 == la.parts()[row] ? 0 : col + 1;
    const int lo = std::max(col > 0 ? fill[row][col - 1] : 1,
                            row > 0 && col < la.parts()[row - 1]
                                ? fill[row - 1][col] + 1
                                : 1);
    for (int v = lo; v <= k; ++v) {
      fill[row][col] = v;
      rec(next_row, next_col);
    }
    fill[row][col] = 0;
  };
  rec(0, 0);
  return r;
}

VarPoly expand_basis(BasisKind b, const Partition& la, int k) {
  switch (b) {
    case BasisKind::m: return expand_m(la, k);
    case BasisKind::p: return expand_p(la, k);
    case BasisKind::e: return expand_e(la, k);
    case BasisKind::h: return expand_h(la, k);
    case BasisKind::s: return expand_s(la, k);
    default: throw std::invalid_argument("expand_basis: classical bases only");
  }
}

Rational as_rational(const RatQT& r) {
  if (!r.num().is_constant() || !r.den().is_constant())
    throw std::invalid_argument("as_rational: not a constant");
  return Rational(r.num().constant_value(), r.den().constant_value());
}

namespace {

long long mn_rec(std::vector<int>& beta, const std::vector<int>& rho,
                 std::size_t idx) {
  if (idx == rho.size()) return 1;
  const int r = rho[idx];
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // height of the rim hook = number of beta entries strictly between
    int crossings = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++crossings;
    const int old = beta[i];
    beta[i] = target;
    const long long sub = mn_rec(beta, rho, idx + 1);
    beta[i] = old;
    total += (crossings % 2 == 0 ? 1 : -1) * sub;
  }
  return total;
}

}  // namespace

long long mn_character(const Partition& la, const Partition& rho) {
  if (la.size() != rho.size())
    throw std::invalid_argument("mn_character: weight mismatch");
  if (la.empty()) return 1;
  const int l = la.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = la.parts()[i] + (l - 1 - i);
  return mn_rec(beta, rho.parts(), 0);
}

std::map<std::vector<int>, Rational> expand_symfunc(const SymFunc& f, int k) {
  std::map<std::vector<int>, Rational> acc;
  for (const auto& [t, c] : f.terms()) {
    VarPoly term{{std::vector<int>(k, 0), Int(1)}};
    for (const auto& fac : t)
      term = vp_mul(term, expand_basis(fac.basis.kind, fac.part, k));
    const Rational cr = as_rational(c);
    for (const auto& [e, ci] : term) {
      acc[e] += cr * Rational(ci);
      if (acc[e] == 0) acc.erase(e);
    }
  }
  return acc;
}

}  // namespace macsym::testing
