#include "macsym/linalg.hpp"

#include <stdexcept>

namespace macsym {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RatQT(1);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape");
  Matrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("matrix shape");
  const int n = rows_;
  Matrix work = *this, inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!work.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("singular matrix");
    std::swap(work.a_[col], work.a_[pivot]);
    std::swap(inv.a_[col], inv.a_[pivot]);
    const RatQT p = work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      const RatQT f = work.at(r, col);
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<RatQT> row_times_matrix(const std::vector<RatQT>& x,
                                    const Matrix& m) {
  if (static_cast<int>(x.size()) != m.rows())
    throw std::invalid_argument("matrix shape");
  std::vector<RatQT> r(m.cols(), RatQT(0));
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      r[j] += x[i] * m.at(i, j);
    }
  }
  return r;
}

}  // namespace macsym
