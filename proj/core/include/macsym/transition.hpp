// Transition matrices between bases of Lambda, built exactly and memoized
// per (basis pair, degree, parameter binding). The pivot basis is p: both
// deformed inner products are diagonal there, and m<->p, e/h<->p (Newton),
// s<->h (Jacobi-Trudi) give the smallest transition set with exact entries.
#pragma once

#include <functional>
#include <future>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "macsym/linalg.hpp"
#include "macsym/symfunc.hpp"

namespace macsym {

/// Macdonald basis data at one degree and binding. Rows/columns are indexed
/// by partitions_of(degree) in reverse-lex order. P_in_m is unitriangular
/// with respect to dominance; rows are orthogonal under the bound pairing.
struct MacdonaldBasisTable {
  int degree = 0;
  Binding binding = Binding::qt;
  std::vector<Partition> order;
  Matrix P_in_m;
  Matrix m_in_P;
};

/// Green polynomials Q_rho^mu(t) at one degree, defined by
/// p_rho = sum_mu Q_rho^mu(t) t^{-n(mu)} P_mu(x; t^{-1}).
struct GreenTable {
  int degree = 0;
  std::vector<Partition> order;
  Matrix Q;  // entry (rho, mu)
};

std::string binding_name(Binding b);
Binding parse_binding(const std::string& s);
std::string basis_name(BasisKind k);
BasisKind parse_basis(const std::string& s);

/// Process-wide table store. Lookups are concurrent; a missing table is
/// computed exactly once even under concurrent first requests. Macdonald and
/// Green tables can be persisted to a versioned JSON cache file.
class Tables {
 public:
  static Tables& instance();

  /// Row lambda = from_lambda expanded in `to` coordinates, both over
  /// partitions_of(degree); entries in the local formal parameters.
  std::shared_ptr<const Matrix> transition(BasisLabel from, BasisLabel to,
                                           int degree);
  std::shared_ptr<const MacdonaldBasisTable> macdonald(int degree, Binding b);
  std::shared_ptr<const GreenTable> green(int degree);

  /// Gram-Schmidt against the bound pairing in the given processing order
  /// (indices into partitions_of(degree)); used to check that the result is
  /// independent of the linear extension of dominance. Not cached.
  static Matrix gram_schmidt_P_in_m(int degree, Binding binding,
                                    const std::vector<int>& order);

  void attach_cache(const std::string& path);
  void detach_cache();
  /// Write every built Macdonald/Green table to the attached cache file.
  bool flush();
  std::string cache_path() const;
  /// Drop all in-memory tables (testing).
  void clear_memory();

 private:
  Tables();
  ~Tables();
  Tables(const Tables&) = delete;

  template <typename T>
  using FutureMap =
      std::map<std::string, std::shared_future<std::shared_ptr<const T>>>;

  template <typename T>
  std::shared_ptr<const T> get_or_build(
      FutureMap<T>& m, const std::string& key,
      const std::function<std::shared_ptr<const T>()>& build);

  Matrix build_transition(BasisLabel from, BasisLabel to, int degree);

  mutable std::shared_mutex mu_;
  FutureMap<Matrix> matrices_;
  FutureMap<MacdonaldBasisTable> mac_;
  FutureMap<GreenTable> green_;

  struct CacheState;
  std::unique_ptr<CacheState> cache_;
};

}  // namespace macsym
