// Small dense matrices over Q(q,t); just enough exact linear algebra for
// transition tables (multiply, invert, solve). Row-vector convention
// throughout: row i of a transition matrix holds the coordinates of the
// i-th source basis element in the target basis.
#pragma once

#include <vector>

#include "macsym/ratfunc.hpp"

namespace macsym {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows) {
    for (auto& r : a_) r.assign(cols, RatQT(0));
  }
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RatQT& at(int i, int j) { return a_[i][j]; }
  const RatQT& at(int i, int j) const { return a_[i][j]; }
  const std::vector<RatQT>& row(int i) const { return a_[i]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  /// Exact inverse via Gauss-Jordan; throws std::domain_error if singular.
  Matrix inverse() const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<RatQT>> a_;
};

/// x * m for a row vector x.
std::vector<RatQT> row_times_matrix(const std::vector<RatQT>& x,
                                    const Matrix& m);

}  // namespace macsym
