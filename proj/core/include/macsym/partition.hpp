// Integer partition combinatorics: diagram statistics, orders and
// enumeration. Everything downstream indexes by these.
#pragma once

#include <compare>
#include <optional>
#include <vector>

namespace macsym {

/// One box of a Young diagram, 1-based in matrix (English) convention.
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0. Immutable value type; the constructor rejects
/// anything that is not already in canonical form (index data flows in from
/// files, so silent sorting would hide corruption).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// |lambda|, the number of boxes.
  int size() const;
  /// Number of parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// 1-based part access; zero past the end.
  int part(int i) const;
  /// Number of parts equal to v.
  int multiplicity(int v) const;

  Partition conjugate() const;
  /// n(lambda) = sum (i-1) lambda_i.
  long long n_stat() const;
  /// Every part repeated twice, sorted.
  Partition union_double() const;
  /// mu is contained in this diagram (mu_i <= lambda_i for all i).
  bool contains(const Partition& mu) const;

  bool has_cell(Cell s) const;
  /// All cells of the diagram, row-major.
  std::vector<Cell> cells() const;
  // Cell statistics; throw std::out_of_range("cell not in partition") when
  // the cell lies outside the diagram.
  int arm(Cell s) const;
  int leg(Cell s) const;
  int hook(Cell s) const;
  /// a'(s) = col - 1.
  int arm_colength(Cell s) const;

  /// Partitions obtained by removing one outer corner box.
  std::vector<Partition> corner_removals() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Dominance order: sum_{i<=k} mu_i <= sum_{i<=k} lambda_i for all k.
/// Throws std::invalid_argument("incomparable weights") when |mu| != |lambda|.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// Cells of lambda/mu if mu is contained in lambda and the skew shape has at
/// most one cell per row; absent otherwise.
std::optional<std::vector<Cell>> vertical_strip_cells(const Partition& lambda,
                                                      const Partition& mu);

/// All partitions of n in reverse lexicographic order ([n] first, [1^n]
/// last). This order is fixed so cached matrices are reproducible.
std::vector<Partition> partitions_of(int n);

/// Index of lambda within partitions_of(lambda.size()).
int partition_index(const Partition& lambda);

/// z_lambda = prod_i m_i! i^{m_i}; fits in 64 bits for |lambda| <= 20.
long long z_stat(const Partition& lambda);

}  // namespace macsym
