#include "macsym/positivity.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace macsym {

namespace {

struct PlacedCell {
  int row, col, value;
};

// All shapes obtained from `shape` by adding a horizontal strip of k cells,
// recorded with the strip's cells carrying `value`.
void add_horizontal_strips(
    const Partition& shape, int k, int value,
    const std::vector<PlacedCell>& placed,
    const std::function<void(const Partition&, const std::vector<PlacedCell>&)>&
        emit) {
  const int max_rows = shape.length() + 1;
  std::vector<int> next(max_rows, 0);
  std::vector<PlacedCell> cells = placed;
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row > max_rows) {
      if (left == 0) {
        std::vector<int> parts;
        for (int r = 0; r < max_rows; ++r)
          if (next[r] > 0) parts.push_back(next[r]);
        emit(Partition(parts), cells);
      }
      return;
    }
    const int base = shape.part(row);
    // Strip condition: new row r must not pass under old row r-1.
    const int hi = row == 1 ? base + left
                            : std::min(shape.part(row - 1), base + left);
    for (int len = base; len <= hi; ++len) {
      if (row > 1 && next[row - 2] < len) break;  // keep a partition shape
      next[row - 1] = len;
      const std::size_t mark = cells.size();
      for (int c = base + 1; c <= len; ++c) cells.push_back({row, c, value});
      rec(row + 1, left - (len - base));
      cells.resize(mark);
    }
    next[row - 1] = 0;
  };
  rec(1, k);
}

bool lattice_word(std::vector<PlacedCell> cells, int max_value) {
  // Reverse reading word: rows top to bottom, right to left within a row.
  std::sort(cells.begin(), cells.end(), [](const PlacedCell& a,
                                           const PlacedCell& b) {
    if (a.row != b.row) return a.row < b.row;
    return a.col > b.col;
  });
  std::vector<int> count(max_value + 1, 0);
  for (const PlacedCell& c : cells) {
    ++count[c.value];
    if (c.value > 1 && count[c.value] > count[c.value - 1]) return false;
  }
  return true;
}

void lr_expand(const Partition& la, const Partition& mu,
               const std::function<void(const Partition&)>& emit) {
  const int l = mu.length();
  std::function<void(const Partition&, const std::vector<PlacedCell>&, int)>
      rec = [&](const Partition& shape, const std::vector<PlacedCell>& cells,
                int value) {
        if (value > l) {
          if (lattice_word(cells, l)) emit(shape);
          return;
        }
        add_horizontal_strips(shape, mu.part(value), value, cells,
                              [&](const Partition& next,
                                  const std::vector<PlacedCell>& placed) {
                                rec(next, placed, value + 1);
                              });
      };
  rec(la, {}, 1);
}

}  // namespace

std::map<Partition, long long> schur_multiply(
    const std::map<Partition, long long>& a, const Partition& mu) {
  std::map<Partition, long long> out;
  for (const auto& [la, c] : a)
    lr_expand(la, mu, [&](const Partition& nu) { out[nu] += c; });
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

long long lr_coefficient(const Partition& alpha,
                         const std::vector<Partition>& factors) {
  int total = 0;
  for (const Partition& f : factors) total += f.size();
  if (total != alpha.size()) return 0;
  std::map<Partition, long long> acc{{Partition{}, 1}};
  for (const Partition& f : factors) acc = schur_multiply(acc, f);
  auto it = acc.find(alpha);
  return it == acc.end() ? 0 : it->second;
}

bool vanishing_predicate(const Partition& lambda, const Partition& mu,
                         const Partition& nu) {
  return lr_coefficient(lambda.union_double(),
                        {mu.union_double(), nu, nu}) == 0;
}

std::vector<PositivityReport> positivity_scan(
    int max_n, const std::vector<Rational>& q_list, int max_mu, int jobs) {
  // Work units are (lambda, mu) pairs; each expands the skew polynomial once
  // and reports every nu. Reports merge in index order, so output is
  // deterministic for any job count.
  struct Unit {
    Partition lambda, mu;
  };
  std::vector<Unit> units;
  for (int n = 0; n <= max_n; ++n)
    for (const Partition& la : partitions_of(n))
      for (int m = 0; m <= std::min(max_mu, n); ++m)
        for (const Partition& mu : partitions_of(m))
          units.push_back({la, mu});

  std::vector<std::vector<PositivityReport>> slots(units.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= units.size()) return;
      const auto& [la, mu] = units[i];
      const int k = la.size() - mu.size();
      SymFunc skew_s;
      if (la.contains(mu))
        skew_s = skew_P(la, mu, Binding::qq2).to_basis(BasisLabel::s());
      for (const Partition& nu : partitions_of(k)) {
        PositivityReport rep;
        rep.lambda = la;
        rep.mu = mu;
        rep.nu = nu;
        rep.coefficient =
            nu.empty() ? skew_s.coefficient({})
                       : skew_s.coefficient(
                             {Factor{FamilyLabel::f1(), BasisLabel::s(), nu}});
        rep.vanishing_predicted = vanishing_predicate(la, mu, nu);
        if (rep.vanishing_predicted && !rep.coefficient.is_zero()) {
          rep.falsified = true;
          rep.falsification = "vanishing predicate but nonzero coefficient";
        }
        for (const Rational& q0 : q_list) {
          const Rational v = rep.coefficient.eval_q(q0);
          rep.evaluations.emplace_back(q0, v);
          if (v < 0) {
            rep.falsified = true;
            rep.falsification = "negative evaluation";
          }
        }
        slots[i].push_back(std::move(rep));
      }
    }
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  std::vector<PositivityReport> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

std::optional<std::vector<Int>> haglund_check(const Partition& lambda,
                                              const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("haglund_check: weight mismatch");
  const RatQT value = c_coeff(lambda, Binding::qq2) *
                      schur_expansion_C(lambda, Partition{}, mu, Binding::qq2);
  const RatQT scaled = divide_exact_by_power(
      value, PolyQT::one() - PolyQT::q(), lambda.size());
  return nonneg_q_coefficients(scaled);
}

std::optional<std::vector<Int>> haglund_skew_check(const Partition& lambda,
                                                   const Partition& mu,
                                                   const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size())
    throw std::invalid_argument("haglund_skew_check: weight mismatch");
  // J_mu^perp J_la = c_la c'_mu P_{la/mu} by adjointness and P/Q duality.
  const RatQT value = c_coeff(lambda, Binding::qq2) *
                      cprime_coeff(mu, Binding::qq2) *
                      schur_expansion_C(lambda, mu, nu, Binding::qq2);
  const RatQT scaled = divide_exact_by_power(
      value, PolyQT::one() - PolyQT::q(), lambda.size() + mu.size());
  return nonneg_q_coefficients(scaled);
}

}  // namespace macsym
