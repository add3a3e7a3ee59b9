#pragma once
// Restrictions of equivariant Schubert classes of LG_n to torus fixed
// points, computed as specialized factorial Q-functions, together with the
// closed forms, the fixed-point recurrence and the structure constants.

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "exactpoly.hpp"
#include "indexcomb.hpp"
#include "pfaffian.hpp"
#include "qfun.hpp"

namespace lgschub {

/// a_1 = 0, a_j = x_{n-j+2} for 2 <= j <= n+1, a_j = 0 beyond.
struct Specialization {
  int n;

  Poly a(int j) const {
    if (j >= 2 && j <= n + 1) return Poly::x(n - j + 2);
    return {};
  }
  ParamMap params() const {
    return [n = n](int j) { return Specialization{n}.a(j); };
  }
  Substitution a_substitution(int amax = Monomial::kMaxA) const {
    Substitution s;
    for (int j = Monomial::kMinA; j <= amax; ++j) s.set(VarId::a(j), a(j));
    return s;
  }
};

/// x_i -> delta_i x_i for the mask delta of mu.
inline Substitution x_mu(const StrictPartition& mu) {
  auto mask = strict_to_mask(mu);
  Substitution s;
  for (int i = 1; i <= mu.n(); ++i) s.set(VarId::x(i), mask.bits[i - 1] ? Poly::x(i) : Poly{});
  return s;
}

inline std::vector<Poly> x_mu_images(const StrictPartition& mu) {
  auto mask = strict_to_mask(mu);
  std::vector<Poly> xs;
  for (int i = 1; i <= mu.n(); ++i) xs.push_back(mask.bits[i - 1] ? Poly::x(i) : Poly{});
  return xs;
}

/// Substitutes x_mu first, then a -> x_<n>. The two stages touch disjoint
/// variable kinds, so composing them never feeds stage-two output back into
/// stage one.
inline Poly specialize(const Poly& q, const StrictPartition& mu) {
  Poly stage1 = substitute(q, x_mu(mu));
  return substitute(stage1, Specialization{mu.n()}.a_substitution());
}

/// The factorial Q-family specialized at the fixed point mu.
inline QFunctions fixed_point_family(const StrictPartition& mu) {
  return QFunctions(mu.n(), x_mu_images(mu), Specialization{mu.n()}.params());
}

/// sigma(lambda)|_mu = Q_lambda(x_mu | x_<n>).
inline Poly restrict(const StrictPartition& lambda, const StrictPartition& mu) {
  if (lambda.n() != mu.n()) throw InvalidIndexObject("partitions live in different n");
  return fixed_point_family(mu)(lambda.parts());
}

inline Poly restrict(const StrictPartition& lambda, const StrictPartition& mu, int n) {
  if (lambda.n() != n || mu.n() != n) throw InvalidIndexObject("partitions do not live in n");
  return restrict(lambda, mu);
}

/// 2 sum_i delta_i x_i.
inline Poly divisor_restriction(const StrictPartition& mu) {
  auto mask = strict_to_mask(mu);
  Poly p;
  for (int i = 1; i <= mu.n(); ++i)
    if (mask.bits[i - 1]) p += Poly::x(i) * 2;
  return p;
}

/// Product over the boxes (i, j) of the shifted diagram of
/// (x_{w(i)} - x_{bar w(j)}), where x_{bar v} = -x_v.
inline Poly diagonal_product(const StrictPartition& lambda) {
  const int n = lambda.n();
  auto w = strict_to_perm(lambda);
  auto signed_x = [n](int v) { return v <= n ? Poly::x(v) : -Poly::x(2 * n + 1 - v); };
  Poly p = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = i; j <= i + lambda.part(i - 1) - 1; ++j)
      p *= signed_x(w(i)) - signed_x(2 * n + 1 - w(j));
  return p;
}

// ---------------------------------------------------------------------------

/// sigma(lambda)|_mu for all lambda, mu in SP_n. Immutable once built.
class RestrictionTable {
 public:
  static RestrictionTable build(int n, int parallelism = 1) {
    RestrictionTable t(n);
    const int size = int(t.index_.size());
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int mi = next++; mi < size; mi = next++) {
        auto family = fixed_point_family(t.index_[mi]);
        for (int li = 0; li < size; ++li) t.entries_[std::size_t(li) * size + mi] = family(t.index_[li].parts());
      }
    };
    parallelism = std::clamp(parallelism, 1, size);
    if (parallelism == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int i = 0; i < parallelism; ++i) pool.emplace_back(worker);
    }
    return t;
  }

  int n() const { return n_; }
  const std::vector<StrictPartition>& index() const { return index_; }
  int size() const { return int(index_.size()); }

  int position(const StrictPartition& l) const {
    if (l.n() != n_) throw InvalidIndexObject("partition lives in a different n");
    unsigned key = 0;
    for (int v : l.parts()) key |= 1u << (v - 1);
    return pos_[key];
  }

  const Poly& at(int li, int mi) const { return entries_[std::size_t(li) * size() + mi]; }
  const Poly& operator()(const StrictPartition& l, const StrictPartition& m) const {
    return at(position(l), position(m));
  }

  /// The restriction vector (sigma(lambda)|_mu)_mu in enumeration order.
  std::vector<Poly> row(const StrictPartition& l) const {
    int li = position(l);
    std::vector<Poly> r;
    for (int mi = 0; mi < size(); ++mi) r.push_back(at(li, mi));
    return r;
  }

 private:
  explicit RestrictionTable(int n) : n_(n), index_(enumerate(n)), pos_(std::size_t(1) << n) {
    entries_.resize(index_.size() * index_.size());
    for (int i = 0; i < int(index_.size()); ++i) {
      unsigned key = 0;
      for (int v : index_[i].parts()) key |= 1u << (v - 1);
      pos_[key] = i;
    }
  }

  int n_;
  std::vector<StrictPartition> index_;
  std::vector<int> pos_;
  std::vector<Poly> entries_;
};

// ---------------------------------------------------------------------------
// Fixed-point recurrence oracle

/// Values of sigma(lambda)|_mu at x = xpt for every lambda (enumeration
/// order), derived only from the divisor restrictions and the Chevalley
/// multiplicities: the diagonal value is an unknown t, values propagate down
/// from the top via d(lambda, mu) s_lambda = sum c(lambda, lambda') s_lambda',
/// and t is fixed by s_empty = 1.
inline std::vector<Rat> recurrence_solve(const StrictPartition& mu, std::span<const Rat> xpt) {
  const int n = mu.n();
  if (int(xpt.size()) != n) throw std::invalid_argument("point needs n coordinates");
  auto index = enumerate(n);
  auto div_at = [&](const StrictPartition& l) {
    auto mask = strict_to_mask(l);
    Rat s = 0;
    for (int i = 0; i < n; ++i)
      if (mask.bits[i]) s += 2 * xpt[i];
    return s;
  };
  std::map<std::vector<int>, int> pos;
  for (int i = 0; i < int(index.size()); ++i) pos[index[i].parts()] = i;

  const Rat div_mu = div_at(mu);
  std::vector<Rat> coef(index.size());
  for (int i = int(index.size()) - 1; i >= 0; --i) {
    const auto& l = index[i];
    Rat sum = 0;
    for (const auto& c : covers(l)) sum += c.multiplicity * coef[pos.at(c.target.parts())];
    if (l == mu) {
      if (sgn(sum) != 0) throw std::logic_error("recurrence inconsistent at the diagonal " + mu.str());
      coef[i] = 1;
      continue;
    }
    Rat d = div_mu - div_at(l);
    if (sgn(d) == 0) throw DegeneratePoint("d(" + l.str() + ", " + mu.str() + ") vanishes at the sample point");
    coef[i] = sum / d;
  }
  if (sgn(coef[0]) == 0) throw std::logic_error("recurrence gives zero at the empty partition");
  Rat t = 1 / coef[0];
  for (auto& c : coef) c *= t;
  return coef;
}

// ---------------------------------------------------------------------------
// Structure constants

struct StructureConstantFailure : std::logic_error {
  using std::logic_error::logic_error;
};

/// c^u_{w,v} for all u (enumeration order, zero entries included), solved
/// by a triangular sweep over the fixed points u >= w, v and verified at
/// every fixed point.
inline std::vector<Poly> structure_constants(const StrictPartition& w, const StrictPartition& v,
                                             const RestrictionTable& table) {
  const auto& index = table.index();
  const int size = table.size();
  const int wi = table.position(w), vi = table.position(v);
  std::vector<Poly> c(size);
  std::vector<int> solved;
  for (int ui = 0; ui < size; ++ui) {
    const auto& u = index[ui];
    if (!contains(w, u) || !contains(v, u) || u.size() > w.size() + v.size()) continue;
    Poly rhs = table.at(wi, ui) * table.at(vi, ui);
    for (int s : solved)
      if (!c[s].is_zero()) rhs -= c[s] * table.at(s, ui);
    c[ui] = exact_div(rhs, table.at(ui, ui));
    solved.push_back(ui);
  }
  for (int mi = 0; mi < size; ++mi) {
    Poly lhs = table.at(wi, mi) * table.at(vi, mi);
    Poly rhs;
    for (int s : solved)
      if (!c[s].is_zero()) rhs += c[s] * table.at(s, mi);
    if (lhs != rhs)
      throw StructureConstantFailure("product " + w.str() + "*" + v.str() + " fails at fixed point " +
                                     index[mi].str());
  }
  return c;
}

/// All c^u_{w,v}, indexed (w, v, u) by enumeration position.
class StructureConstants {
 public:
  static StructureConstants build(const RestrictionTable& table) {
    StructureConstants sc;
    sc.n_ = table.n();
    sc.size_ = table.size();
    sc.c_.resize(std::size_t(sc.size_) * sc.size_);
    for (int w = 0; w < sc.size_; ++w)
      for (int v = w; v < sc.size_; ++v) {
        auto row = structure_constants(table.index()[w], table.index()[v], table);
        sc.c_[std::size_t(w) * sc.size_ + v] = row;
        sc.c_[std::size_t(v) * sc.size_ + w] = std::move(row);
      }
    return sc;
  }
  int n() const { return n_; }
  const std::vector<Poly>& products(int w, int v) const { return c_[std::size_t(w) * size_ + v]; }
  const Poly& operator()(int w, int v, int u) const { return products(w, v)[u]; }

 private:
  int n_ = 0;
  int size_ = 0;
  std::vector<std::vector<Poly>> c_;
};

// ---------------------------------------------------------------------------
// Positivity in the simple-root basis

/// p rewritten in beta_i = x_i - x_{i+1} (i < n), beta_n = 2x_n. Monomials
/// use the x_i slot for beta_i.
struct BetaExpansion {
  std::vector<std::pair<Monomial, Rat>> terms;

  bool integral() const {
    return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second.get_den() == 1; });
  }
  bool nonnegative_integral() const {
    return std::all_of(terms.begin(), terms.end(),
                       [](const auto& t) { return t.second.get_den() == 1 && sgn(t.second) >= 0; });
  }
  Rat coefficient(const Monomial& m) const {
    for (const auto& [tm, c] : terms)
      if (tm == m) return c;
    return 0;
  }
  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms) {
      if (!s.empty()) s += " + ";
      s += c.get_str();
      for (const auto& [v, e] : m.factors()) s += "*b" + std::to_string(v.index) + (e > 1 ? "^" + std::to_string(e) : "");
    }
    return s;
  }
};

inline BetaExpansion beta_expand(const Poly& p, int n) {
  // x_i = sum_{j=i}^{n-1} beta_j + beta_n / 2; substitute 2 x_i and divide
  // each term by 2^degree afterwards.
  Substitution sub;
  for (int i = 1; i <= n; ++i) {
    Poly img = Poly::x(n);
    for (int j = i; j < n; ++j) img += Poly::x(j) * 2;
    sub.set(VarId::x(i), img);
  }
  if (p.has_kind(VarId::Kind::A)) throw std::invalid_argument("beta_expand takes polynomials in x only");
  Poly scaled = substitute(p, sub);
  BetaExpansion out;
  for (const auto& [m, c] : scaled.terms()) {
    Rat r(c, Integer(1) << m.degree());
    r.canonicalize();
    out.terms.emplace_back(m, r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Giambelli

/// Restriction vector of sigma(lambda) against Pf(sigma(lambda_i, lambda_j)),
/// entrywise at every fixed point.
inline bool giambelli_check(const StrictPartition& lambda, const RestrictionTable& table) {
  const int n = table.n();
  std::vector<int> p = lambda.parts();
  if (p.size() % 2) p.push_back(0);
  const int li = table.position(lambda);
  for (int mi = 0; mi < table.size(); ++mi) {
    Poly rhs;
    if (p.empty()) {
      rhs = 1;
    } else {
      SkewMatrix<Poly> m(int(p.size()));
      for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
          m.set(i, j, table.at(table.position(StrictPartition(n, {p[i], p[j]})), mi));
      rhs = pfaffian(m, Poly(1));
    }
    if (rhs != table.at(li, mi)) return false;
  }
  return true;
}

}  // namespace lgschub
