#include "macsym/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace macsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[i - 1];
}

int Partition::multiplicity(int v) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (!parts_.empty()) {
    out.resize(parts_[0]);
    for (int c = 1; c <= parts_[0]; ++c) {
      int h = 0;
      for (int p : parts_)
        if (p >= c) ++h;
      out[c - 1] = h;
    }
  }
  return Partition(std::move(out));
}

long long Partition::n_stat() const {
  long long n = 0;
  for (int i = 0; i < length(); ++i) n += static_cast<long long>(i) * parts_[i];
  return n;
}

Partition Partition::union_double() const {
  std::vector<int> out;
  out.reserve(parts_.size() * 2);
  for (int p : parts_) {
    out.push_back(p);
    out.push_back(p);
  }
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

bool Partition::has_cell(Cell s) const {
  return s.row >= 1 && s.col >= 1 && s.row <= length() && s.col <= part(s.row);
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(size());
  for (int r = 1; r <= length(); ++r)
    for (int c = 1; c <= part(r); ++c) out.push_back({r, c});
  return out;
}

namespace {
void require_cell(const Partition& p, Cell s) {
  if (!p.has_cell(s)) throw std::out_of_range("cell not in partition");
}
}  // namespace

int Partition::arm(Cell s) const {
  require_cell(*this, s);
  return part(s.row) - s.col;
}

int Partition::leg(Cell s) const {
  require_cell(*this, s);
  int h = 0;
  for (int r = s.row + 1; r <= length(); ++r)
    if (part(r) >= s.col) ++h;
  return h;
}

int Partition::hook(Cell s) const { return arm(s) + leg(s) + 1; }

int Partition::arm_colength(Cell s) const {
  require_cell(*this, s);
  return s.col - 1;
}

std::vector<Partition> Partition::corner_removals() const {
  std::vector<Partition> out;
  for (int i = 1; i <= length(); ++i) {
    if (part(i) > part(i + 1)) {
      std::vector<int> v = parts_;
      if (--v[i - 1] == 0) v.erase(v.begin() + (i - 1));
      out.emplace_back(std::move(v));
    }
  }
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw std::invalid_argument("incomparable weights");
  long long sm = 0, sl = 0;
  int k = std::max(mu.length(), lambda.length());
  for (int i = 1; i <= k; ++i) {
    sm += mu.part(i);
    sl += lambda.part(i);
    if (sm > sl) return false;
  }
  return true;
}

std::optional<std::vector<Cell>> vertical_strip_cells(const Partition& lambda,
                                                      const Partition& mu) {
  if (!lambda.contains(mu)) return std::nullopt;
  std::vector<Cell> strip;
  for (int r = 1; r <= lambda.length(); ++r) {
    int extra = lambda.part(r) - mu.part(r);
    if (extra > 1) return std::nullopt;  // two cells in one row
    if (extra == 1) strip.push_back({r, lambda.part(r)});
  }
  return strip;
}

namespace {
void gen_partitions(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(n - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n == 0 ? 1 : n, acc, out);
  return out;
}

int partition_index(const Partition& lambda) {
  auto all = partitions_of(lambda.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == lambda) return static_cast<int>(i);
  throw std::logic_error("partition_index: not found");
}

long long z_stat(const Partition& lambda) {
  if (lambda.size() > 20) throw std::invalid_argument("z_stat: overflow guard");
  long long z = 1;
  int i = 0;
  while (i < lambda.length()) {
    int v = lambda.parts()[i];
    int m = lambda.multiplicity(v);
    for (int j = 1; j <= m; ++j) z *= static_cast<long long>(j) * v;
    i += m;
  }
  return z;
}

}  // namespace macsym
