#pragma once
// The ring S[X_1..X_n] / <X_{1,1}, ..., X_{n,n}> presenting the equivariant
// cohomology of LG_n, with X_k -> sigma(k).

#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "equivariant.hpp"
#include "exactpoly.hpp"
#include "indexcomb.hpp"
#include "pfaffian.hpp"
#include "qfun.hpp"

namespace lgschub {

class XMonomial {
 public:
  static constexpr int kMax = 12;

  XMonomial() = default;
  static XMonomial generator(int k) {
    XMonomial m;
    m.e_.at(k - 1) = 1;
    return m;
  }
  /// X^lambda = prod_{i in lambda} X_i.
  static XMonomial strict(const StrictPartition& l) {
    XMonomial m;
    for (int v : l.parts()) m.e_[v - 1] = 1;
    return m;
  }

  int exponent(int k) const { return e_[k - 1]; }
  int degree() const {
    int d = 0;
    for (int v : e_) d += v;
    return d;
  }
  bool is_one() const { return degree() == 0; }
  bool is_strict() const {
    for (int v : e_)
      if (v > 1) return false;
    return true;
  }
  /// Strict partition of a strict monomial.
  StrictPartition partition(int n) const {
    std::vector<int> parts;
    for (int k = kMax; k >= 1; --k)
      if (e_[k - 1]) parts.push_back(k);
    return StrictPartition(n, std::move(parts));
  }
  /// Smallest k with e_k >= 2, or 0.
  int first_square() const {
    for (int k = 1; k <= kMax; ++k)
      if (e_[k - 1] >= 2) return k;
    return 0;
  }

  friend XMonomial operator*(const XMonomial& l, const XMonomial& r) {
    XMonomial m;
    for (int i = 0; i < kMax; ++i) m.e_[i] = l.e_[i] + r.e_[i];
    return m;
  }
  /// l / X_k^2; needs e_k >= 2.
  XMonomial without_square(int k) const {
    XMonomial m = *this;
    m.e_[k - 1] -= 2;
    return m;
  }

  friend bool operator==(const XMonomial&, const XMonomial&) = default;

  std::string str() const {
    std::string s;
    for (int k = kMax; k >= 1; --k) {
      if (!e_[k - 1]) continue;
      if (!s.empty()) s += "*";
      s += "X" + std::to_string(k);
      if (e_[k - 1] > 1) s += "^" + std::to_string(e_[k - 1]);
    }
    return s.empty() ? "1" : s;
  }

  std::vector<int> exponents(int n) const { return {e_.begin(), e_.begin() + n}; }

 private:
  std::array<int, kMax> e_{};
};

/// The order of the presentation: higher degree wins; at equal degree the
/// first differing exponent decides, smaller exponent being larger. So
/// X_1 < X_2 < ... < X_n and X_1^2 > X_2.
inline bool grevlex_less(const XMonomial& l, const XMonomial& r) {
  if (l.degree() != r.degree()) return l.degree() < r.degree();
  for (int k = 1; k <= XMonomial::kMax; ++k)
    if (l.exponent(k) != r.exponent(k)) return l.exponent(k) > r.exponent(k);
  return false;
}

struct GrevlexGreater {
  bool operator()(const XMonomial& l, const XMonomial& r) const { return grevlex_less(r, l); }
};

/// Polynomial in X_1..X_n with coefficients in Z[x_1..x_n], terms held in
/// descending order.
class XPoly {
 public:
  using Terms = std::map<XMonomial, Poly, GrevlexGreater>;

  XPoly() = default;
  XPoly(const Poly& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(XMonomial{}, c);
  }
  XPoly(long c) : XPoly(Poly(c)) {}  // NOLINT(google-explicit-constructor)

  /// X_j with X_0 = 1 and X_j = 0 for j > n.
  static XPoly X(int j, int n) {
    if (j < 0) throw std::invalid_argument("negative generator index");
    if (j == 0) return 1;
    if (j > n) return {};
    XPoly p;
    p.terms_.emplace(XMonomial::generator(j), Poly(1));
    return p;
  }
  static XPoly monomial(const XMonomial& m, const Poly& c) {
    XPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Poly coefficient(const XMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Poly{} : it->second;
  }

  bool is_strict() const {
    for (const auto& [m, c] : terms_)
      if (!m.is_strict()) return false;
    return true;
  }

  void add_term(const XMonomial& m, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  XPoly operator-() const {
    XPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  XPoly& operator+=(const XPoly& r) {
    for (const auto& [m, c] : r.terms_) add_term(m, c);
    return *this;
  }
  XPoly& operator-=(const XPoly& r) {
    for (const auto& [m, c] : r.terms_) add_term(m, -c);
    return *this;
  }
  friend XPoly operator+(XPoly l, const XPoly& r) { return l += r; }
  friend XPoly operator-(XPoly l, const XPoly& r) { return l -= r; }
  friend XPoly operator*(const XPoly& l, const XPoly& r) {
    XPoly out;
    for (const auto& [ml, cl] : l.terms_)
      for (const auto& [mr, cr] : r.terms_) out.add_term(ml * mr, cl * cr);
    return out;
  }
  XPoly& operator*=(const XPoly& r) { return *this = *this * r; }
  friend XPoly operator*(const XPoly& l, const Poly& c) {
    XPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, cl] : l.terms_) out.terms_.emplace(m, cl * c);
    return out;
  }
  friend bool operator==(const XPoly&, const XPoly&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = to_string(c);
      bool neg = c.size() == 1 && sgn(c.leading_term().second) < 0;
      if (neg) cs = to_string(-c);
      if (!first) s += neg ? " - " : " + ";
      else if (neg) s += "-";
      first = false;
      if (m.is_one()) {
        s += c.size() > 1 ? "(" + cs + ")" : cs;
      } else if (cs == "1") {
        s += m.str();
      } else {
        s += (c.size() > 1 ? "(" + cs + ")" : cs) + "*" + m.str();
      }
    }
    return s;
  }

  nlohmann::ordered_json to_json(int n) const {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : terms_) terms.push_back({{"X", m.exponents(n)}, {"coeff", lgschub::to_json(c)}});
    return {{"terms", terms}};
  }

 private:
  Terms terms_;
};

// ---------------------------------------------------------------------------

/// X_{k,l} = X_kX_l + 2 sum_{i=1}^{min(n-k,l)} (-1)^i X_{k+i}X_{l-i}
///         + sum_{r=k}^{min(n,k+l-1)} sum_s f_{k,l}^{r,s}(iota_n a) X_rX_s.
inline XPoly relation_X(int k, int l, int n) {
  if (!(n >= k && k >= l && l >= 0)) throw InvalidShape("relation_X needs n >= k >= l >= 0");
  QFunctions q(n, x_vars(n), Specialization{n}.params());
  XPoly p = XPoly::X(k, n) * XPoly::X(l, n);
  for (int i = 1; i <= std::min(n - k, l); ++i) {
    XPoly t = XPoly::X(k + i, n) * XPoly::X(l - i, n) * Poly(2);
    p += (i % 2) ? -t : t;
  }
  for (int r = k; r <= std::min(n, k + l - 1); ++r)
    for (int s = 0; s <= k + l - 1 - r; ++s) {
      Poly c = q.f(k, l, r, s);
      if (!c.is_zero()) p += XPoly::X(r, n) * XPoly::X(s, n) * c;
    }
  return p;
}

/// Reduces p to a combination of strict monomials by repeatedly rewriting
/// X_k^2 = X_k^2 - X_{k,k} in the largest non-strict monomial. `steps`, if
/// given, receives the number of rewrites.
inline XPoly normal_form(const XPoly& p, int n, long* steps = nullptr) {
  std::vector<XPoly> squares;  // X_k^2 - X_{k,k}
  for (int k = 1; k <= n; ++k) squares.push_back(XPoly::X(k, n) * XPoly::X(k, n) - relation_X(k, k, n));
  XPoly cur = p;
  long count = 0;
  for (;;) {
    auto it = cur.terms().begin();
    while (it != cur.terms().end() && it->first.is_strict()) ++it;
    if (it == cur.terms().end()) break;
    XMonomial m = it->first;
    Poly c = it->second;
    int k = m.first_square();
    if (k > n) throw std::invalid_argument("generator index exceeds n");
    cur -= XPoly::monomial(m, c);
    cur += XPoly::monomial(m.without_square(k), c) * squares[k - 1];
    ++count;
  }
  if (steps) *steps = count;
  return cur;
}

/// X_lambda = Pf(X_{lambda_i, lambda_j}), with X_{k,0} = X_k.
inline XPoly pfaffian_X(const StrictPartition& lambda) {
  const int n = lambda.n();
  std::vector<int> p = lambda.parts();
  if (p.empty()) return 1;
  if (p.size() % 2) p.push_back(0);
  SkewMatrix<XPoly> m(int(p.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) m.set(i, j, relation_X(p[i], p[j], n));
  return pfaffian(m, XPoly(1));
}

/// Restriction vector of the image of p under X_i -> sigma(i).
inline std::vector<Poly> phi_vector(const XPoly& p, const RestrictionTable& table) {
  const int n = table.n();
  std::vector<Poly> out(table.size());
  for (int mi = 0; mi < table.size(); ++mi) {
    std::vector<Poly> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(table.at(table.position(StrictPartition(n, {i})), mi));
    for (const auto& [m, c] : p.terms()) {
      Poly t = c;
      for (int i = 1; i <= n && !t.is_zero(); ++i)
        if (m.exponent(i)) t *= gens[i - 1].pow(m.exponent(i));
      for (int i = n + 1; i <= XMonomial::kMax; ++i)
        if (m.exponent(i)) throw std::invalid_argument("generator index exceeds n");
      out[mi] += t;
    }
  }
  return out;
}

/// Rank over Q of a matrix of rationals.
inline int rational_rank(std::vector<std::vector<Rat>> a) {
  int rank = 0;
  const int rows = int(a.size());
  const int cols = rows ? int(a[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (sgn(a[r][c]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      Rat f = a[r][c] / a[rank][c];
      for (int cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

/// Rank of the restriction vectors of the strict monomials X^lambda,
/// evaluated at x = xpt.
inline int strict_monomial_rank(const RestrictionTable& table, std::span<const Rat> xpt) {
  const int n = table.n();
  Point pt;
  for (int i = 1; i <= n; ++i) pt.set(VarId::x(i), xpt[i - 1]);
  std::vector<std::vector<Rat>> rows;
  for (const auto& l : table.index()) {
    auto v = phi_vector(XPoly::monomial(XMonomial::strict(l), 1), table);
    std::vector<Rat> r;
    for (const auto& e : v) r.push_back(eval_at(e, pt));
    rows.push_back(std::move(r));
  }
  return rational_rank(std::move(rows));
}

// ---------------------------------------------------------------------------

/// Per-n data: normal forms of the Pfaffians X_lambda, which are
/// unitriangular over the strict monomials, and the inverse change of basis.
class Presentation {
 public:
  static const Presentation& get(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Presentation>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot.reset(new Presentation(n));
    return *slot;
  }

  int n() const { return n_; }
  const std::vector<StrictPartition>& index() const { return index_; }

  /// normal_form(X_lambda), lambda by enumeration position.
  const XPoly& pfaffian_normal_form(int li) const { return pfaff_[li]; }

  /// X^mu = sum_lambda inverse(mu)[lambda] X_lambda.
  const std::vector<Poly>& inverse(int mi) const { return inverse_[mi]; }

  /// Coordinates of a strict-monomial combination in the basis X_lambda.
  std::vector<Poly> pfaffian_coordinates(const XPoly& strict_combination) const {
    std::vector<Poly> out(index_.size());
    for (const auto& [m, c] : strict_combination.terms()) {
      if (!m.is_strict()) throw std::invalid_argument("expected strict monomials only");
      int mi = position(m);
      for (std::size_t li = 0; li < index_.size(); ++li)
        if (!inverse_[mi][li].is_zero()) out[li] += c * inverse_[mi][li];
    }
    return out;
  }

  /// Coordinates of X_w * X_v in the basis X_lambda.
  std::vector<Poly> product(int wi, int vi) const {
    return pfaffian_coordinates(normal_form(pfaff_[wi] * pfaff_[vi], n_));
  }

  /// True iff every normal form is X^lambda plus strictly smaller strict terms.
  bool unitriangular() const {
    for (std::size_t li = 0; li < index_.size(); ++li) {
      const auto& nf = pfaff_[li];
      if (nf.is_zero() || !nf.is_strict()) return false;
      const auto& [lead, c] = *nf.terms().begin();
      if (!(lead == XMonomial::strict(index_[li])) || c != Poly(1)) return false;
    }
    return true;
  }

 private:
  explicit Presentation(int n) : n_(n), index_(enumerate(n)) {
    for (const auto& l : index_) pfaff_.push_back(normal_form(pfaffian_X(l), n));
    // X^lambda = X_lambda - sum_{mu < lambda} b_{lambda mu} X^mu, solved in
    // increasing order.
    std::vector<int> order(index_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return grevlex_less(XMonomial::strict(index_[a]), XMonomial::strict(index_[b]));
    });
    inverse_.assign(index_.size(), std::vector<Poly>(index_.size()));
    for (int li : order) {
      auto& row = inverse_[li];
      row[li] = 1;
      for (const auto& [m, c] : pfaff_[li].terms()) {
        int mi = position(m);
        if (mi == li) continue;
        for (std::size_t k = 0; k < index_.size(); ++k)
          if (!inverse_[mi][k].is_zero()) row[k] -= c * inverse_[mi][k];
      }
    }
  }

  int position(const XMonomial& m) const {
    unsigned key = 0;
    for (int k = 1; k <= n_; ++k)
      if (m.exponent(k)) key |= 1u << (k - 1);
    for (std::size_t i = 0; i < index_.size(); ++i) {
      unsigned ki = 0;
      for (int v : index_[i].parts()) ki |= 1u << (v - 1);
      if (ki == key) return int(i);
    }
    throw std::invalid_argument("monomial is not strict in n");
  }

  int n_;
  std::vector<StrictPartition> index_;
  std::vector<XPoly> pfaff_;
  std::vector<std::vector<Poly>> inverse_;
};

// ---------------------------------------------------------------------------

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parses expressions over X1..Xn, x1..xn, integers, + - * and parentheses.
inline XPoly parse_xpoly(const std::string& text, int n) {
  struct Parser {
    const std::string& s;
    int n;
    std::size_t pos = 0;

    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) {
      throw ParseError(what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }
    int number() {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected a number");
      if (pos - start > 9) fail("number too long");
      return std::stoi(s.substr(start, pos - start));
    }
    XPoly expr() {
      XPoly p = term();
      for (;;) {
        skip();
        if (pos < s.size() && s[pos] == '+') {
          ++pos;
          p += term();
        } else if (pos < s.size() && s[pos] == '-') {
          ++pos;
          p -= term();
        } else {
          return p;
        }
      }
    }
    XPoly term() {
      XPoly p = factor();
      for (;;) {
        skip();
        if (pos < s.size() && s[pos] == '*') {
          ++pos;
          p *= factor();
        } else {
          return p;
        }
      }
    }
    XPoly factor() {
      skip();
      if (pos >= s.size()) fail("unexpected end");
      char c = s[pos];
      if (c == '-') {
        ++pos;
        return -factor();
      }
      if (c == '(') {
        ++pos;
        XPoly p = expr();
        skip();
        if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
        ++pos;
        return p;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) return XPoly(long(number()));
      if (c == 'X' || c == 'x') {
        ++pos;
        int i = number();
        if (i < 1 || i > n) fail("index out of range 1.." + std::to_string(n));
        return c == 'X' ? XPoly::X(i, n) : XPoly(Poly::x(i));
      }
      fail(std::string("unexpected character '") + c + "'");
    }
  };
  Parser p{text, n};
  XPoly out = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

}  // namespace lgschub
