#include "macsym/transition.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "macsym/cachefile.hpp"
#include "macsym/jsonio.hpp"
#include "macsym/macdonald.hpp"

namespace macsym {

std::string binding_name(Binding b) {
  switch (b) {
    case Binding::none: return "none";
    case Binding::qt: return "qt";
    case Binding::tq: return "tq";
    case Binding::qq2: return "q,q2";
    case Binding::q2q: return "q2,q";
    case Binding::hl: return "hl";
    case Binding::hall: return "hall";
  }
  throw std::logic_error("binding_name");
}

Binding parse_binding(const std::string& s) {
  if (s == "none") return Binding::none;
  if (s == "qt") return Binding::qt;
  if (s == "tq") return Binding::tq;
  if (s == "q,q2" || s == "qq2") return Binding::qq2;
  if (s == "q2,q" || s == "q2q") return Binding::q2q;
  if (s == "hl") return Binding::hl;
  if (s == "hall") return Binding::hall;
  throw std::invalid_argument("unknown binding: " + s);
}

std::string basis_name(BasisKind k) {
  switch (k) {
    case BasisKind::m: return "m";
    case BasisKind::e: return "e";
    case BasisKind::h: return "h";
    case BasisKind::p: return "p";
    case BasisKind::s: return "s";
    case BasisKind::P: return "P";
    case BasisKind::Q: return "Q";
    case BasisKind::J: return "J";
  }
  throw std::logic_error("basis_name");
}

BasisKind parse_basis(const std::string& s) {
  if (s == "m") return BasisKind::m;
  if (s == "e") return BasisKind::e;
  if (s == "h") return BasisKind::h;
  if (s == "p") return BasisKind::p;
  if (s == "s") return BasisKind::s;
  if (s == "P") return BasisKind::P;
  if (s == "Q") return BasisKind::Q;
  if (s == "J") return BasisKind::J;
  throw std::invalid_argument("unknown basis: " + s);
}

namespace {

std::string label_key(BasisLabel b) {
  std::string k = basis_name(b.kind);
  if (b.binding != Binding::none) k += "@" + binding_name(b.binding);
  return k;
}

// p-expansions as sparse maps keyed by partitions of any degree.
using PExp = std::map<Partition, RatQT>;

PExp pexp_mul(const PExp& a, const PExp& b) {
  PExp r;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      std::vector<int> parts = pa.parts();
      const auto& more = pb.parts();
      parts.insert(parts.end(), more.begin(), more.end());
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      RatQT c = ca * cb;
      auto [it, fresh] = r.emplace(Partition(std::move(parts)), c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

void pexp_add_scaled(PExp& a, const PExp& b, const RatQT& c) {
  for (const auto& [p, cb] : b) {
    auto [it, fresh] = a.emplace(p, cb * c);
    if (!fresh) {
      it->second += cb * c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

// e_n (sign (-1)^{i-1}) or h_n (all +) in the p basis via Newton's identity.
PExp eh_one_row(int n, bool elementary) {
  if (n == 0) return {{Partition{}, RatQT(1)}};
  std::vector<PExp> rows(n + 1);
  rows[0] = {{Partition{}, RatQT(1)}};
  for (int k = 1; k <= n; ++k) {
    PExp acc;
    for (int i = 1; i <= k; ++i) {
      RatQT c = RatQT(1) / RatQT(k);
      if (elementary && i % 2 == 0) c = -c;
      for (const auto& [rho, cr] : rows[k - i]) {
        std::vector<int> parts = rho.parts();
        parts.push_back(i);
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        RatQT add = cr * c;
        auto [it, fresh] = acc.emplace(Partition(std::move(parts)), add);
        if (!fresh) {
          it->second += add;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
    rows[k] = std::move(acc);
  }
  return rows[n];
}

Matrix pexp_rows_to_matrix(const std::vector<PExp>& rows,
                           const std::vector<Partition>& order) {
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(order.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [rho, c] : rows[i]) {
      for (std::size_t j = 0; j < order.size(); ++j)
        if (order[j] == rho) {
          m.at(static_cast<int>(i), static_cast<int>(j)) = c;
          break;
        }
    }
  return m;
}

// Product basis rows (e_lambda / h_lambda) in p coordinates.
Matrix build_eh_in_p(int n, bool elementary) {
  const auto order = partitions_of(n);
  std::vector<PExp> single(n + 1);
  for (int k = 0; k <= n; ++k) single[k] = eh_one_row(k, elementary);
  std::vector<PExp> rows;
  rows.reserve(order.size());
  for (const auto& lam : order) {
    PExp acc = {{Partition{}, RatQT(1)}};
    for (int part : lam.parts()) acc = pexp_mul(acc, single[part]);
    rows.push_back(std::move(acc));
  }
  return pexp_rows_to_matrix(rows, order);
}

// p_mu in the monomial basis via the multiply-by-p_r rule: the coefficient
// of m_mu in p_r m_lambda is the multiplicity in mu of the changed part.
Matrix build_p_in_m(int n) {
  const auto order = partitions_of(n);
  using MExp = std::map<Partition, Int>;
  std::vector<MExp> rows;
  rows.reserve(order.size());
  for (const auto& mu : order) {
    MExp acc = {{Partition{}, Int(1)}};
    for (int r : mu.parts()) {
      MExp next;
      auto bump = [&next](Partition target, const Int& c, int changed) {
        const Int add = c * target.multiplicity(changed);
        auto [it, fresh] = next.emplace(std::move(target), add);
        if (!fresh) it->second += add;
      };
      for (const auto& [lam, c] : acc) {
        {
          std::vector<int> parts = lam.parts();
          parts.push_back(r);
          std::sort(parts.begin(), parts.end(), std::greater<int>());
          bump(Partition(std::move(parts)), c, r);
        }
        std::vector<int> distinct;
        for (int v : lam.parts())
          if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
        for (int a : distinct) {
          std::vector<int> parts = lam.parts();
          parts.erase(std::find(parts.begin(), parts.end(), a));
          parts.push_back(a + r);
          std::sort(parts.begin(), parts.end(), std::greater<int>());
          bump(Partition(std::move(parts)), c, a + r);
        }
      }
      acc = std::move(next);
    }
    rows.push_back(std::move(acc));
  }
  Matrix m(static_cast<int>(order.size()), static_cast<int>(order.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [lam, c] : rows[i])
      m.at(static_cast<int>(i), partition_index(lam)) = RatQT(c);
  return m;
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}), expanded by the first
// row with memoization over column subsets.
Matrix build_s_in_p(int n) {
  const auto order = partitions_of(n);
  std::vector<PExp> hrow(n + 1);
  for (int k = 0; k <= n; ++k) hrow[k] = eh_one_row(k, false);

  std::vector<PExp> rows;
  rows.reserve(order.size());
  for (const auto& lam : order) {
    const int l = lam.length();
    if (l == 0) {
      rows.push_back({{Partition{}, RatQT(1)}});
      continue;
    }
    std::map<unsigned, PExp> memo;  // columns still unused, rows row..l used
    // det over rows r..l-1 (0-based) and the column set `mask`.
    std::function<const PExp&(int, unsigned)> det = [&](int r,
                                                        unsigned mask) -> const PExp& {
      auto it = memo.find(mask);
      if (it != memo.end()) return it->second;
      PExp acc;
      int pos = 0;
      for (int j = 0; j < l; ++j) {
        if (!(mask & (1u << j))) continue;
        const int idx = lam.part(r + 1) - (r + 1) + (j + 1);
        if (idx >= 0 && idx <= n) {
          const PExp* sub;
          static const PExp kOne = {{Partition{}, RatQT(1)}};
          if (r + 1 == l)
            sub = &kOne;
          else
            sub = &det(r + 1, mask & ~(1u << j));
          if (!hrow[idx].empty() && !sub->empty()) {
            PExp prod = pexp_mul(hrow[idx], *sub);
            pexp_add_scaled(acc, prod, pos % 2 == 0 ? RatQT(1) : RatQT(-1));
          }
        }
        ++pos;
      }
      return memo.emplace(mask, std::move(acc)).first->second;
    };
    const unsigned full = (l >= 32) ? 0u : ((1u << l) - 1);
    if (l >= 32) throw std::invalid_argument("build_s_in_p: degree too large");
    rows.push_back(det(0, full));
  }
  return pexp_rows_to_matrix(rows, order);
}

}  // namespace

// ---------------------------------------------------------------------------
// Gram-Schmidt for the Macdonald basis
// ---------------------------------------------------------------------------

Matrix Tables::gram_schmidt_P_in_m(int degree, Binding binding,
                                   const std::vector<int>& order) {
  const auto parts = partitions_of(degree);
  const int N = static_cast<int>(parts.size());
  auto m2p = Tables::instance().transition(BasisLabel::m(), BasisLabel::p(),
                                           degree);
  auto p2m = Tables::instance().transition(BasisLabel::p(), BasisLabel::m(),
                                           degree);
  std::vector<RatQT> w(N);
  for (int j = 0; j < N; ++j) {
    RatQT weight{z_stat(parts[j])};
    for (int part : parts[j].parts()) weight *= binding_ratio(binding, part, 1);
    w[j] = weight;
  }
  auto dot = [&](const std::vector<RatQT>& u, const std::vector<RatQT>& v) {
    RatQT s(0);
    for (int j = 0; j < N; ++j)
      if (!u[j].is_zero() && !v[j].is_zero()) s += u[j] * v[j] * w[j];
    return s;
  };

  std::vector<std::vector<RatQT>> P(N);
  std::vector<RatQT> norms(N);
  std::vector<int> done;
  for (int idx : order) {
    std::vector<RatQT> v = m2p->row(idx);
    for (int k : done) {
      const RatQT c = dot(v, P[k]) / norms[k];
      if (c.is_zero()) continue;
      for (int j = 0; j < N; ++j)
        if (!P[k][j].is_zero()) v[j] -= c * P[k][j];
    }
    norms[idx] = dot(v, v);
    if (norms[idx].is_zero())
      throw std::domain_error("degenerate pairing in Gram-Schmidt");
    P[idx] = std::move(v);
    done.push_back(idx);
  }

  Matrix out(N, N);
  for (int i = 0; i < N; ++i) {
    auto row = row_times_matrix(P[i], *p2m);
    for (int j = 0; j < N; ++j) out.at(i, j) = std::move(row[j]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

struct Tables::CacheState {
  std::string path;
  nlohmann::json loaded;  // entries previously read from disk
};

Tables::Tables() = default;
Tables::~Tables() = default;

Tables& Tables::instance() {
  static Tables t;
  return t;
}

template <typename T>
std::shared_ptr<const T> Tables::get_or_build(
    FutureMap<T>& m, const std::string& key,
    const std::function<std::shared_ptr<const T>()>& build) {
  std::shared_future<std::shared_ptr<const T>> fut;
  {
    std::shared_lock lk(mu_);
    auto it = m.find(key);
    if (it != m.end()) fut = it->second;
  }
  if (!fut.valid()) {
    std::promise<std::shared_ptr<const T>> prom;
    bool builder = false;
    {
      std::unique_lock lk(mu_);
      auto it = m.find(key);
      if (it == m.end()) {
        fut = prom.get_future().share();
        m.emplace(key, fut);
        builder = true;
      } else {
        fut = it->second;
      }
    }
    if (builder) {
      try {
        prom.set_value(build());
      } catch (...) {
        prom.set_exception(std::current_exception());
      }
    }
  }
  return fut.get();
}

std::shared_ptr<const Matrix> Tables::transition(BasisLabel from, BasisLabel to,
                                                 int degree) {
  if (degree < 0) throw std::invalid_argument("transition: negative degree");
  const std::string key =
      label_key(from) + ">" + label_key(to) + "|" + std::to_string(degree);
  return get_or_build<Matrix>(matrices_, key, [=, this]() {
    return std::make_shared<const Matrix>(build_transition(from, to, degree));
  });
}

// Build X -> Y through the pivot p. Canonical pieces are themselves cached
// under their own keys, so composition stays cheap.
Matrix Tables::build_transition(BasisLabel from, BasisLabel to, int degree) {
  const int N = static_cast<int>(partitions_of(degree).size());
  if (from == to || degree == 0) return Matrix::identity(N);

  auto x_in_p = [&](BasisLabel b) -> Matrix {
    switch (b.kind) {
      case BasisKind::p:
        return Matrix::identity(N);
      case BasisKind::m:
        return transition(BasisLabel::p(), BasisLabel::m(), degree)->inverse();
      case BasisKind::e:
        return build_eh_in_p(degree, true);
      case BasisKind::h:
        return build_eh_in_p(degree, false);
      case BasisKind::s:
        return build_s_in_p(degree);
      case BasisKind::P:
      case BasisKind::Q:
      case BasisKind::J: {
        auto tab = macdonald(degree, b.binding);
        Matrix pm = tab->P_in_m;
        if (b.kind != BasisKind::P) {
          const auto order = partitions_of(degree);
          for (int i = 0; i < N; ++i) {
            RatQT scale = b.kind == BasisKind::J
                              ? c_coeff(order[i], b.binding)
                              : c_coeff(order[i], b.binding) /
                                    cprime_coeff(order[i], b.binding);
            for (int j = 0; j < N; ++j) pm.at(i, j) *= scale;
          }
        }
        return pm * *transition(BasisLabel::m(), BasisLabel::p(), degree);
      }
    }
    throw std::logic_error("x_in_p");
  };

  auto p_in_y = [&](BasisLabel b) -> Matrix {
    switch (b.kind) {
      case BasisKind::p:
        return Matrix::identity(N);
      case BasisKind::m:
        return build_p_in_m(degree);
      case BasisKind::e:
      case BasisKind::h:
      case BasisKind::s:
        return transition(b, BasisLabel::p(), degree)->inverse();
      case BasisKind::P:
      case BasisKind::Q:
      case BasisKind::J: {
        auto tab = macdonald(degree, b.binding);
        Matrix pm =
            *transition(BasisLabel::p(), BasisLabel::m(), degree) * tab->m_in_P;
        if (b.kind != BasisKind::P) {
          const auto order = partitions_of(degree);
          for (int j = 0; j < N; ++j) {
            RatQT scale = b.kind == BasisKind::J
                              ? c_coeff(order[j], b.binding).inverse()
                              : cprime_coeff(order[j], b.binding) /
                                    c_coeff(order[j], b.binding);
            for (int i = 0; i < N; ++i) pm.at(i, j) *= scale;
          }
        }
        return pm;
      }
    }
    throw std::logic_error("p_in_y");
  };

  if (from.kind == BasisKind::p) return p_in_y(to);
  if (to.kind == BasisKind::p) return x_in_p(from);
  return x_in_p(from) * p_in_y(to);
}

std::shared_ptr<const MacdonaldBasisTable> Tables::macdonald(int degree,
                                                             Binding b) {
  if (b == Binding::none)
    throw std::invalid_argument("macdonald: binding required");
  const std::string key = "mac|" + std::to_string(degree) + "|" + binding_name(b);
  return get_or_build<MacdonaldBasisTable>(mac_, key, [=, this]() {
    {
      std::unique_lock lk(mu_);
      if (cache_ && cache_->loaded.contains(key)) {
        try {
          auto tab = std::make_shared<MacdonaldBasisTable>();
          from_json(cache_->loaded.at(key), *tab);
          if (tab->degree == degree && tab->binding == b)
            return std::shared_ptr<const MacdonaldBasisTable>(tab);
        } catch (const std::exception&) {
          // corrupt entry: fall through and rebuild
        }
      }
    }
    auto tab = std::make_shared<MacdonaldBasisTable>();
    tab->degree = degree;
    tab->binding = b;
    tab->order = partitions_of(degree);
    const int N = static_cast<int>(tab->order.size());
    // Process from the bottom of dominance upward; reverse-lex reversed is a
    // linear extension of dominance.
    std::vector<int> order(N);
    for (int i = 0; i < N; ++i) order[i] = N - 1 - i;
    tab->P_in_m = gram_schmidt_P_in_m(degree, b, order);
    tab->m_in_P = tab->P_in_m.inverse();
    return std::shared_ptr<const MacdonaldBasisTable>(tab);
  });
}

std::shared_ptr<const GreenTable> Tables::green(int degree) {
  if (degree < 1) throw std::invalid_argument("green: degree must be >= 1");
  const std::string key = "green|" + std::to_string(degree);
  return get_or_build<GreenTable>(green_, key, [=, this]() {
    {
      std::unique_lock lk(mu_);
      if (cache_ && cache_->loaded.contains(key)) {
        try {
          auto tab = std::make_shared<GreenTable>();
          from_json(cache_->loaded.at(key), *tab);
          if (tab->degree == degree)
            return std::shared_ptr<const GreenTable>(tab);
        } catch (const std::exception&) {
          // corrupt entry: fall through and rebuild
        }
      }
    }
    auto tab = std::make_shared<GreenTable>();
    tab->degree = degree;
    tab->order = partitions_of(degree);
    const int N = static_cast<int>(tab->order.size());
    auto hl = macdonald(degree, Binding::hl);
    Matrix B(N, N);
    for (int i = 0; i < N; ++i) {
      const RatQT scale = RatQT::t_power(-tab->order[i].n_stat());
      for (int j = 0; j < N; ++j)
        B.at(i, j) = hl->P_in_m.at(i, j).subst_t_inv() * scale;
    }
    const Matrix A = *transition(BasisLabel::p(), BasisLabel::m(), degree);
    tab->Q = A * B.inverse();
    return std::shared_ptr<const GreenTable>(tab);
  });
}

void Tables::attach_cache(const std::string& path) {
  std::unique_lock lk(mu_);
  cache_ = std::make_unique<CacheState>();
  cache_->path = path;
  cache_->loaded = CacheFile::load(path);
}

void Tables::detach_cache() {
  std::unique_lock lk(mu_);
  cache_.reset();
}

std::string Tables::cache_path() const {
  std::shared_lock lk(mu_);
  return cache_ ? cache_->path : std::string();
}

bool Tables::flush() {
  std::unique_lock lk(mu_);
  if (!cache_) return false;
  nlohmann::json entries = cache_->loaded;
  for (auto& [key, fut] : mac_) {
    if (fut.wait_for(std::chrono::seconds(0)) != std::future_status::ready)
      continue;
    nlohmann::json j;
    to_json(j, *fut.get());
    entries[key] = std::move(j);
  }
  for (auto& [key, fut] : green_) {
    if (fut.wait_for(std::chrono::seconds(0)) != std::future_status::ready)
      continue;
    nlohmann::json j;
    to_json(j, *fut.get());
    entries[key] = std::move(j);
  }
  cache_->loaded = entries;
  return CacheFile::save(cache_->path, entries);
}

void Tables::clear_memory() {
  std::unique_lock lk(mu_);
  matrices_.clear();
  mac_.clear();
  green_.clear();
}

}  // namespace macsym
