#pragma once
// Factorial Schur Q-functions Q_lambda(x|a) in n variables.
//
// Construction: classical one-row Q_k(x) from monomial symmetric functions,
// factorial one-rows as a-linear combinations of those, two-row functions by
// the quadratic expansion with correction coefficients f_{k,l}^{r,s}(a), and
// general shapes as the Pfaffian of two-row entries. The Nimmo-type ratio of
// Pfaffians is kept as an independent point-evaluation oracle.

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactpoly.hpp"
#include "indexcomb.hpp"
#include "pfaffian.hpp"

namespace lgschub {

struct InvalidShape : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};
/// The sampled evaluation point makes a denominator vanish; resample.
struct DegeneratePoint : std::domain_error {
  using std::domain_error::domain_error;
};

struct QContext {
  int n = 1;                      // number of x-variables
  int amax = Monomial::kMaxA;     // largest a-index that may appear
};

/// Images of the shift parameters a_j (j >= 1). a_1 is always 0.
using ParamMap = std::function<Poly(int)>;

inline ParamMap symbolic_params(int amax = Monomial::kMaxA) {
  return [amax](int j) -> Poly {
    if (j > amax) throw IndexOutOfRange("a_" + std::to_string(j) + " exceeds amax=" + std::to_string(amax));
    return Poly::a(j);
  };
}

/// (x|a)^k = (x - a_1)(x - a_2)...(x - a_k), with a_1 = 0.
inline Poly falling_product(const Poly& x, int k, const ParamMap& a = symbolic_params()) {
  if (k < 0) throw std::invalid_argument("falling_product needs k >= 0");
  Poly p = 1;
  for (int i = 1; i <= k; ++i) p *= x - (i == 1 ? Poly{} : a(i));
  return p;
}

/// Partitions of k with at most maxlen parts, parts non-increasing.
inline std::vector<std::vector<int>> partitions_of(int k, int maxlen) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    if (int(cur.size()) == maxlen) return;
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

/// Schur's Q_k(x_1..x_n) = sum over partitions mu of k of 2^{l(mu)} m_mu.
inline Poly classical_Q_onerow(int k, const QContext& ctx) {
  if (k < 0) throw std::invalid_argument("classical_Q_onerow needs k >= 0");
  if (k == 0) return 1;
  Poly q;
  for (const auto& mu : partitions_of(k, ctx.n)) {
    Integer w;
    mpz_ui_pow_ui(w.get_mpz_t(), 2, mu.size());
    q += sym_m(mu, ctx.n) * w;
  }
  return q;
}

/// The family {Q_lambda} for one choice of x-values and parameter images.
/// The generic family uses x_1..x_n and symbolic a_j; a specialized family
/// substitutes x_i -> xs[i] and a_j -> params(j) before any Pfaffian is
/// formed, which agrees with substituting into the generic result because
/// every step is a ring operation.
class QFunctions {
 public:
  explicit QFunctions(const QContext& ctx) : n_(ctx.n), params_(symbolic_params(ctx.amax)) {}

  QFunctions(int n, std::vector<Poly> xs, ParamMap params)
      : n_(n), params_(std::move(params)), x_images_(std::move(xs)) {
    if (int(x_images_->size()) != n_) throw std::invalid_argument("need one image per x-variable");
  }

  int n() const { return n_; }

  const Poly& a(int j) {
    auto it = a_cache_.find(j);
    if (it != a_cache_.end()) return it->second;
    return a_cache_.emplace(j, j <= 1 ? Poly{} : params_(j)).first->second;
  }

  std::vector<Poly> a_list(int first, int last) {
    std::vector<Poly> v;
    for (int j = first; j <= last; ++j) v.push_back(a(j));
    return v;
  }

  /// Classical Q_k at the family's x-values.
  const Poly& classical(int k) {
    if (k < 0) throw std::invalid_argument("negative one-row index");
    auto it = classical_.find(k);
    if (it != classical_.end()) return it->second;
    Poly q = classical_Q_onerow(k, QContext{n_});
    if (x_images_) {
      Substitution sub;
      for (int i = 1; i <= n_; ++i) sub.set(VarId::x(i), (*x_images_)[i - 1]);
      q = substitute(q, sub);
    }
    return classical_.emplace(k, std::move(q)).first->second;
  }

  /// Q_k(x|a) = sum_{j=0}^{k-1} (-1)^j e_j(a_2..a_k) Q_{k-j}(x); Q_0 = 1.
  const Poly& onerow(int k) {
    if (k < 0) throw std::invalid_argument("negative one-row index");
    auto it = onerow_.find(k);
    if (it != onerow_.end()) return it->second;
    Poly q;
    if (k == 0) {
      q = 1;
    } else {
      auto as = a_list(2, k);
      for (int j = 0; j < k; ++j) {
        Poly e = sym_e(j, as);
        if (e.is_zero()) continue;
        Poly t = e * classical(k - j);
        q += (j % 2) ? -t : t;
      }
    }
    return onerow_.emplace(k, std::move(q)).first->second;
  }

  /// f_{k,l}^{r,s}(a) = (-1)^{l-s} sum_j 2 h_{k+l-r-s-j}(a_{k+1..r+1}) e_j(a_{s+2..l}).
  Poly f(int k, int l, int r, int s) {
    if (!(k >= l && l >= 0) || r < k || r > k + l - 1 || s < 0 || s > k + l - 1 - r)
      throw IndexOutOfRange("f coefficient index out of range: k=" + std::to_string(k) + " l=" +
                            std::to_string(l) + " r=" + std::to_string(r) + " s=" + std::to_string(s));
    auto hs = a_list(k + 1, r + 1);
    auto es = a_list(s + 2, l);
    int top = k + l - r - s;
    Poly sum;
    for (int j = 0; j <= top; ++j) {
      Poly e = sym_e(j, es);
      if (e.is_zero()) continue;
      sum += sym_h(top - j, hs) * e;
    }
    sum = sum * 2;
    return ((l - s) % 2) ? -sum : sum;
  }

  /// Right-hand side of the two-row expansion, for k >= l >= 0:
  /// Q_kQ_l + 2 sum_{i=1}^{l} (-1)^i Q_{k+i}Q_{l-i} + sum_{r,s} f_{k,l}^{r,s} Q_rQ_s.
  /// For k = l this is the left side of the square relation.
  Poly two_row_expansion(int k, int l) {
    if (!(k >= l && l >= 0)) throw InvalidShape("two-row expansion needs k >= l >= 0");
    Poly q = onerow(k) * onerow(l);
    for (int i = 1; i <= l; ++i) {
      Poly t = onerow(k + i) * onerow(l - i) * 2;
      q += (i % 2) ? -t : t;
    }
    for (int r = k; r <= k + l - 1; ++r)
      for (int s = 0; s <= k + l - 1 - r; ++s) {
        Poly c = f(k, l, r, s);
        if (!c.is_zero()) q += c * onerow(r) * onerow(s);
      }
    return q;
  }

  /// Q_{k,l}(x|a) with the Pfaffian-entry conventions: Q_{k,0} = Q_k,
  /// Q_{k,k} = 0 and Q_{l,k} = -Q_{k,l}.
  Poly entry(int k, int l) {
    if (k < 0 || l < 0) throw InvalidShape("negative row length");
    if (k == l) return {};
    if (k < l) return -entry(l, k);
    if (l == 0) return onerow(k);
    auto key = std::make_pair(k, l);
    auto it = tworow_.find(key);
    if (it != tworow_.end()) return it->second;
    return tworow_.emplace(key, two_row_expansion(k, l)).first->second;
  }

  /// Q_lambda(x|a) = Pf(Q_{lambda_i, lambda_j}), lambda padded by a 0 to even length.
  Poly operator()(std::span<const int> parts) {
    std::vector<int> p(parts.begin(), parts.end());
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] <= 0 || (i && p[i] >= p[i - 1]))
        throw InvalidShape("not a strict partition: " + detail::join(p));
    if (p.empty()) return 1;
    if (p.size() == 1) return onerow(p[0]);
    if (p.size() == 2) return entry(p[0], p[1]);
    if (p.size() % 2) p.push_back(0);
    SkewMatrix<Poly> m(int(p.size()));
    for (int i = 0; i < m.size(); ++i)
      for (int j = i + 1; j < m.size(); ++j) m.set(i, j, entry(p[i], p[j]));
    return pfaffian(m, Poly(1));
  }

  /// P_lambda = Q_lambda / 2^{l(lambda)}.
  Poly schur_P(std::span<const int> parts) {
    int len = 0;
    for (int v : parts) len += v > 0;
    Integer w;
    mpz_ui_pow_ui(w.get_mpz_t(), 2, len);
    return (*this)(parts).divided_by(w);
  }

 private:
  int n_;
  ParamMap params_;
  std::optional<std::vector<Poly>> x_images_;
  std::map<int, Poly> a_cache_;
  std::map<int, Poly> classical_;
  std::map<int, Poly> onerow_;
  std::map<std::pair<int, int>, Poly> tworow_;
};

inline Poly factorial_Q_onerow(int k, const QContext& ctx) { return QFunctions(ctx).onerow(k); }

inline Poly f_coeff(int k, int l, int r, int s, const QContext& ctx) { return QFunctions(ctx).f(k, l, r, s); }

inline Poly factorial_Q_tworow(int k, int l, const QContext& ctx) {
  if (l == 0) return factorial_Q_onerow(k, ctx);
  if (k <= l) throw InvalidShape("two-row shape needs k > l");
  return QFunctions(ctx).entry(k, l);
}

inline Poly factorial_Q(std::span<const int> parts, const QContext& ctx) { return QFunctions(ctx)(parts); }

inline Poly factorial_Q(const StrictPartition& l, const QContext& ctx) { return factorial_Q(l.parts(), ctx); }

/// Left side of the square relation; identically zero for k >= 1.
inline Poly square_relation(int k, const QContext& ctx) {
  if (k < 1) throw std::invalid_argument("square_relation needs k >= 1");
  return QFunctions(ctx).two_row_expansion(k, k);
}

// ---------------------------------------------------------------------------
// Nimmo-type oracle

/// Exact value of Q_lambda(x|a) at x = xpt, a_j = apt[j-2] (a_1 = 0),
/// from Pf(A_lambda) / D_n with A(x) = ((x_i - x_j)/(x_i + x_j)) and the
/// block B_lambda = ((x_i|a)^{lambda_{k-j+1}}).
inline Rat nimmo_eval(std::span<const int> parts, std::span<const Rat> xpt, std::span<const Rat> apt) {
  std::vector<int> lam;
  for (int v : parts)
    if (v > 0) lam.push_back(v);
  const int n = int(xpt.size());
  const int k = int(lam.size());
  if (k > n) throw InvalidShape("nimmo_eval needs l(lambda) <= n");
  for (std::size_t i = 1; i < lam.size(); ++i)
    if (lam[i] >= lam[i - 1]) throw InvalidShape("not a strict partition");
  for (int i = 0; i < n; ++i) {
    if (sgn(xpt[i]) == 0) throw DegeneratePoint("x_i = 0");
    for (int j = i + 1; j < n; ++j)
      if (xpt[i] == xpt[j] || sgn(Rat(xpt[i] + xpt[j])) == 0) throw DegeneratePoint("x_i = +-x_j");
  }
  auto param = [&](int j) -> Rat {
    if (j == 1) return 0;
    if (j - 2 >= int(apt.size())) throw IndexOutOfRange("not enough parameter values");
    return apt[j - 2];
  };
  auto falling = [&](const Rat& x, int e) {
    Rat p = 1;
    for (int i = 1; i <= e; ++i) p *= x - param(i);
    return p;
  };

  std::vector<Rat> xs(xpt.begin(), xpt.end());
  if ((n + k) % 2) xs.push_back(0);
  const int m = int(xs.size());
  SkewMatrix<Rat> a(m + k);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) a.set(i, j, Rat(xs[i] - xs[j]) / Rat(xs[i] + xs[j]));
    for (int c = 0; c < k; ++c) a.set(i, m + c, falling(xs[i], lam[k - c - 1]));
  }
  Rat pf = pfaffian(a, Rat(1));
  Rat dn = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dn *= Rat(xpt[i] - xpt[j]) / Rat(xpt[i] + xpt[j]);
  Rat q = pf / dn;
  q *= Rat(Integer(1) << k);
  return q;
}

// ---------------------------------------------------------------------------
// Identities binding the constructions. Each returns LHS - RHS.

/// (P_(1)(x) - sum_j a_{lambda_j + 1}) P_lambda - sum_{lambda' -> lambda} P_lambda',
/// lambda' strict of length <= n with one more box.
inline Poly pieri_defect(std::span<const int> parts, const QContext& ctx) {
  QFunctions q(ctx);
  std::vector<int> lam(parts.begin(), parts.end());
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  Poly factor = q.schur_P(std::vector<int>{1});
  for (int v : lam) factor -= q.a(v + 1);
  Poly lhs = factor * q.schur_P(lam);
  Poly rhs;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (i > 0 && lam[i] + 1 >= lam[i - 1]) continue;
    auto next = lam;
    ++next[i];
    rhs += q.schur_P(next);
  }
  if (int(lam.size()) < ctx.n && (lam.empty() || lam.back() > 1)) {
    auto next = lam;
    next.push_back(1);
    rhs += q.schur_P(next);
  }
  return lhs - rhs;
}

/// Q_{k+1,l} + Q_{k,l+1} + (a_{k+1} + a_{l+1}) Q_{k,l}
///   - [Q_k Q_{l+1} - Q_{k+1} Q_l + (a_{l+1} - a_{k+1}) Q_k Q_l],  k > l > 0.
inline Poly rectangle_defect(int k, int l, const QContext& ctx) {
  if (!(k > l && l > 0)) throw InvalidShape("rectangle relation needs k > l > 0");
  QFunctions q(ctx);
  Poly lhs = q.entry(k + 1, l) + q.entry(k, l + 1) + (q.a(k + 1) + q.a(l + 1)) * q.entry(k, l);
  Poly rhs = q.onerow(k) * q.onerow(l + 1) - q.onerow(k + 1) * q.onerow(l) +
             (q.a(l + 1) - q.a(k + 1)) * q.onerow(k) * q.onerow(l);
  return lhs - rhs;
}

/// Truncated power series in z with polynomial coefficients.
class Series {
 public:
  explicit Series(int order) : c_(order + 1) {}
  int order() const { return int(c_.size()) - 1; }
  Poly& operator[](int i) { return c_[i]; }
  const Poly& operator[](int i) const { return c_[i]; }

  friend Series operator*(const Series& l, const Series& r) {
    Series s(l.order());
    for (int i = 0; i <= l.order(); ++i) {
      if (l[i].is_zero()) continue;
      for (int j = 0; i + j <= l.order(); ++j)
        if (!r[j].is_zero()) s[i + j] += l[i] * r[j];
    }
    return s;
  }

  /// 1 / (1 - c z) = sum_m c^m z^m
  static Series geometric(const Poly& c, int order) {
    Series s(order);
    s[0] = 1;
    for (int m = 1; m <= order; ++m) s[m] = s[m - 1] * c;
    return s;
  }

  /// 1 + c z
  static Series linear(const Poly& c, int order) {
    Series s(order);
    s[0] = 1;
    if (order >= 1) s[1] = c;
    return s;
  }

 private:
  std::vector<Poly> c_;
};

/// Coefficients of z^0..z^order of
///   sum_k Q_k(x|a) z^k / prod_{j=1}^k (1 - a_{j+1} z)  -  prod_i (1 + x_i z)/(1 - x_i z).
inline std::vector<Poly> genfun_defects(const QContext& ctx, int order) {
  QFunctions q(ctx);
  Series lhs(order), weight(order);
  weight[0] = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) weight = weight * Series::geometric(q.a(k + 1), order);
    const Poly& qk = q.onerow(k);
    for (int m = 0; k + m <= order; ++m)
      if (!weight[m].is_zero()) lhs[k + m] += qk * weight[m];
  }
  Series rhs(order);
  rhs[0] = 1;
  for (int i = 1; i <= ctx.n; ++i)
    rhs = rhs * Series::linear(Poly::x(i), order) * Series::geometric(Poly::x(i), order);
  std::vector<Poly> out;
  for (int m = 0; m <= order; ++m) out.push_back(lhs[m] - rhs[m]);
  return out;
}

}  // namespace lgschub
