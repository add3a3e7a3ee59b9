#pragma once
// Exact sparse multivariate polynomials over Z in the variables
// x_1..x_n and a_2, a_3, ...; a_1 is the constant 0 and never a variable.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace lgschub {

using Integer = mpz_class;
using Rat = mpq_class;

/// Raised when an exact division leaves a remainder.
struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

struct VarId {
  enum class Kind : std::uint8_t { X, A };
  Kind kind = Kind::X;
  int index = 1;

  static VarId x(int i) { return {Kind::X, i}; }
  static VarId a(int j) { return {Kind::A, j}; }

  std::string name() const {
    return (kind == Kind::X ? "x" : "a") + std::to_string(index);
  }

  // Canonical order: every x before every a, ascending index.
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Parses "x3" / "a2"; throws std::invalid_argument otherwise.
inline VarId parse_var(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'x' && s[0] != 'a'))
    throw std::invalid_argument("bad variable name: " + s);
  std::size_t pos = 0;
  int idx = std::stoi(s.substr(1), &pos);
  if (pos + 1 != s.size()) throw std::invalid_argument("bad variable name: " + s);
  return s[0] == 'x' ? VarId::x(idx) : VarId::a(idx);
}

class Monomial {
 public:
  static constexpr int kMaxX = 12;
  static constexpr int kMinA = 2;
  static constexpr int kMaxA = 21;
  static constexpr int kSlots = kMaxX + (kMaxA - kMinA + 1);

  Monomial() = default;

  static int slot(VarId v) {
    if (v.kind == VarId::Kind::X) {
      if (v.index < 1 || v.index > kMaxX)
        throw std::out_of_range("x index out of supported range: " + v.name());
      return v.index - 1;
    }
    if (v.index < kMinA || v.index > kMaxA)
      throw std::out_of_range("a index out of supported range: " + v.name());
    return kMaxX + v.index - kMinA;
  }

  static VarId var_at(int s) {
    return s < kMaxX ? VarId::x(s + 1) : VarId::a(s - kMaxX + kMinA);
  }

  static Monomial var(VarId v, unsigned e = 1) {
    Monomial m;
    if (e > 255) throw std::overflow_error("exponent overflow");
    m.exps_[slot(v)] = static_cast<std::uint8_t>(e);
    m.degree_ = static_cast<std::uint16_t>(e);
    return m;
  }

  unsigned exponent(VarId v) const { return exps_[slot(v)]; }
  unsigned exponent_at(int s) const { return exps_[s]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Nonzero exponents in canonical variable order.
  std::vector<std::pair<VarId, unsigned>> factors() const {
    std::vector<std::pair<VarId, unsigned>> out;
    for (int s = 0; s < kSlots; ++s)
      if (exps_[s]) out.emplace_back(var_at(s), exps_[s]);
    return out;
  }

  bool divides(const Monomial& other) const {
    for (int s = 0; s < kSlots; ++s)
      if (exps_[s] > other.exps_[s]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& l, const Monomial& r) {
    Monomial m;
    for (int s = 0; s < kSlots; ++s) {
      unsigned e = unsigned(l.exps_[s]) + r.exps_[s];
      if (e > 255) throw std::overflow_error("exponent overflow");
      m.exps_[s] = static_cast<std::uint8_t>(e);
    }
    m.degree_ = static_cast<std::uint16_t>(l.degree_ + r.degree_);
    return m;
  }

  /// Requires r.divides(l).
  friend Monomial operator/(const Monomial& l, const Monomial& r) {
    Monomial m;
    for (int s = 0; s < kSlots; ++s) m.exps_[s] = static_cast<std::uint8_t>(l.exps_[s] - r.exps_[s]);
    m.degree_ = static_cast<std::uint16_t>(l.degree_ - r.degree_);
    return m;
  }

  static Monomial gcd(const Monomial& l, const Monomial& r) {
    Monomial m;
    unsigned d = 0;
    for (int s = 0; s < kSlots; ++s) {
      m.exps_[s] = std::min(l.exps_[s], r.exps_[s]);
      d += m.exps_[s];
    }
    m.degree_ = static_cast<std::uint16_t>(d);
    return m;
  }

  friend bool operator==(const Monomial& l, const Monomial& r) {
    return l.degree_ == r.degree_ && l.exps_ == r.exps_;
  }

  // Graded lexicographic: higher degree is larger; ties broken by the first
  // variable (canonical order) whose exponent differs, larger exponent wins.
  friend std::strong_ordering operator<=>(const Monomial& l, const Monomial& r) {
    if (l.degree_ != r.degree_) return l.degree_ <=> r.degree_;
    int c = std::memcmp(l.exps_.data(), r.exps_.data(), kSlots);
    return c <=> 0;
  }

  std::size_t hash() const {
    std::uint64_t w[4];
    static_assert(sizeof(w) == kSlots);
    std::memcpy(w, exps_.data(), kSlots);
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (auto x : w) {
      h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

 private:
  std::array<std::uint8_t, kSlots> exps_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class Poly {
 public:
  using Term = std::pair<Monomial, Integer>;

  Poly() = default;
  Poly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(Monomial{}, Integer(c));
  }
  Poly(const Integer& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(Monomial{}, c);
  }

  static Poly var(VarId v) { return monomial(Monomial::var(v), 1); }
  static Poly x(int i) { return var(VarId::x(i)); }
  /// a_1 is identically zero.
  static Poly a(int j) { return j == 1 ? Poly{} : var(VarId::a(j)); }

  static Poly monomial(const Monomial& m, const Integer& c) {
    Poly p;
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
  }

  /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
  static Poly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& l, const Term& r) { return l.first > r.first; });
    Poly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  Integer constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return 0;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : int(terms_.front().first.degree()); }

  bool is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return int(t.first.degree()) == d; });
  }

  bool has_kind(VarId::Kind k) const {
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.factors())
        if (v.kind == k) return true;
    return false;
  }

  std::vector<VarId> variables() const {
    std::array<bool, Monomial::kSlots> seen{};
    for (const auto& [m, c] : terms_)
      for (int s = 0; s < Monomial::kSlots; ++s)
        if (m.exponent_at(s)) seen[s] = true;
    std::vector<VarId> out;
    for (int s = 0; s < Monomial::kSlots; ++s)
      if (seen[s]) out.push_back(Monomial::var_at(s));
    return out;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  friend Poly operator+(const Poly& l, const Poly& r) { return merge(l, r, false); }
  friend Poly operator-(const Poly& l, const Poly& r) { return merge(l, r, true); }
  Poly& operator+=(const Poly& r) { return *this = merge(*this, r, false); }
  Poly& operator-=(const Poly& r) { return *this = merge(*this, r, true); }

  friend Poly operator*(const Poly& l, const Poly& r) {
    if (l.is_zero() || r.is_zero()) return {};
    if (r.size() == 1) return l.times_term(r.terms_[0].first, r.terms_[0].second);
    if (l.size() == 1) return r.times_term(l.terms_[0].first, l.terms_[0].second);
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(l.size() * r.size(), 1u << 20));
    for (const auto& [ml, cl] : l.terms_)
      for (const auto& [mr, cr] : r.terms_) {
        auto& slot = acc[ml * mr];
        mpz_addmul(slot.get_mpz_t(), cl.get_mpz_t(), cr.get_mpz_t());
      }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) terms.emplace_back(m, std::move(c));
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    Poly p;
    p.terms_ = std::move(terms);
    return p;
  }
  Poly& operator*=(const Poly& r) { return *this = *this * r; }

  friend Poly operator*(const Poly& l, const Integer& c) {
    if (c == 0) return {};
    Poly p = l;
    for (auto& t : p.terms_) t.second *= c;
    return p;
  }
  friend Poly operator*(const Integer& c, const Poly& l) { return l * c; }
  friend Poly operator*(const Poly& l, long c) { return l * Integer(c); }
  friend Poly operator*(long c, const Poly& l) { return l * Integer(c); }

  Poly times_term(const Monomial& m, const Integer& c) const {
    if (c == 0) return {};
    Poly p;
    p.terms_.reserve(terms_.size());
    for (const auto& [mm, cc] : terms_) p.terms_.emplace_back(mm * m, cc * c);
    return p;  // multiplying by a monomial preserves the order
  }

  Poly pow(unsigned e) const {
    Poly result = 1, base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// Divides every coefficient by c; throws NotDivisible on a remainder.
  Poly divided_by(const Integer& c) const {
    if (c == 0) throw std::domain_error("division by zero");
    Poly p = *this;
    for (auto& t : p.terms_) {
      if (!mpz_divisible_p(t.second.get_mpz_t(), c.get_mpz_t()))
        throw NotDivisible("coefficient not divisible by " + c.get_str());
      mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
    }
    return p;
  }

  /// gcd of the coefficients, carrying the sign of the leading coefficient.
  Integer content() const {
    Integer g = 0;
    for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (!terms_.empty() && terms_.front().second < 0) g = -g;
    return g;
  }

  Monomial monomial_gcd() const {
    if (terms_.empty()) return {};
    Monomial g = terms_.front().first;
    for (const auto& t : terms_) g = Monomial::gcd(g, t.first);
    return g;
  }

  /// The coefficient of m (0 when absent).
  Integer coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first > k; });
    return (it != terms_.end() && it->first == m) ? it->second : Integer(0);
  }

  friend bool operator==(const Poly& l, const Poly& r) { return l.terms_ == r.terms_; }

 private:
  static Poly merge(const Poly& l, const Poly& r, bool subtract) {
    Poly p;
    p.terms_.reserve(l.size() + r.size());
    auto i = l.terms_.begin(), j = r.terms_.begin();
    while (i != l.terms_.end() || j != r.terms_.end()) {
      if (j == r.terms_.end() || (i != l.terms_.end() && i->first > j->first)) {
        p.terms_.push_back(*i++);
      } else if (i == l.terms_.end() || j->first > i->first) {
        p.terms_.emplace_back(j->first, subtract ? Integer(-j->second) : j->second);
        ++j;
      } else {
        Integer c = subtract ? Integer(i->second - j->second) : Integer(i->second + j->second);
        if (c != 0) p.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return p;
  }

  std::vector<Term> terms_;  // strictly descending in grlex, no zero coefficients
};

/// Exact quotient p / q. Throws NotDivisible if q does not divide p.
inline Poly exact_div(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("exact_div by zero polynomial");
  if (p.is_zero()) return {};
  const auto& [lm, lc] = q.leading_term();
  if (q.size() == 1) {
    std::vector<Poly::Term> out;
    out.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
      if (!lm.divides(m) || !mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t()))
        throw NotDivisible("monomial divisor does not divide");
      Integer qc;
      mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
      out.emplace_back(m / lm, std::move(qc));
    }
    return Poly::from_terms(std::move(out));
  }
  std::map<Monomial, Integer, std::greater<>> rem;
  for (const auto& t : p.terms()) rem.emplace(t.first, t.second);
  std::vector<Poly::Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lm.divides(it->first) || !mpz_divisible_p(it->second.get_mpz_t(), lc.get_mpz_t()))
      throw NotDivisible("polynomial division leaves a remainder");
    Monomial qm = it->first / lm;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lc.get_mpz_t());
    for (const auto& [m, c] : q.terms()) {
      auto [slot, inserted] = rem.try_emplace(m * qm, 0);
      mpz_submul(slot->second.get_mpz_t(), c.get_mpz_t(), qc.get_mpz_t());
      if (slot->second == 0) rem.erase(slot);
    }
    quotient.emplace_back(qm, std::move(qc));
  }
  return Poly::from_terms(std::move(quotient));
}

/// Simultaneous substitution of variables by polynomials. Variables without
/// an image are left unchanged.
class Substitution {
 public:
  Substitution& set(VarId v, Poly image) {
    images_[Monomial::slot(v)] = std::move(image);
    return *this;
  }
  const Poly* image(VarId v) const {
    const auto& o = images_[Monomial::slot(v)];
    return o ? &*o : nullptr;
  }
  const std::optional<Poly>& image_at(int s) const { return images_[s]; }

 private:
  std::array<std::optional<Poly>, Monomial::kSlots> images_;
};

inline Poly substitute(const Poly& p, const Substitution& sub) {
  // Fast path: every relevant image is zero or a single term.
  bool monomial_images = true;
  for (int s = 0; s < Monomial::kSlots && monomial_images; ++s) {
    const auto& img = sub.image_at(s);
    if (img && img->size() > 1) monomial_images = false;
  }
  if (monomial_images) {
    std::vector<Poly::Term> out;
    out.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
      Monomial nm;
      Integer nc = c;
      bool zero = false;
      for (int s = 0; s < Monomial::kSlots && !zero; ++s) {
        unsigned e = m.exponent_at(s);
        if (!e) continue;
        const auto& img = sub.image_at(s);
        if (!img) {
          nm = nm * Monomial::var(Monomial::var_at(s), e);
        } else if (img->is_zero()) {
          zero = true;
        } else {
          const auto& [im, ic] = img->leading_term();
          for (unsigned k = 0; k < e; ++k) nm = nm * im;
          Integer pw;
          mpz_pow_ui(pw.get_mpz_t(), ic.get_mpz_t(), e);
          nc *= pw;
        }
      }
      if (!zero) out.emplace_back(nm, std::move(nc));
    }
    return Poly::from_terms(std::move(out));
  }
  std::map<std::pair<int, unsigned>, Poly> powers;
  auto power = [&](int s, unsigned e) -> const Poly& {
    auto key = std::make_pair(s, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const auto& img = sub.image_at(s);
    Poly base = img ? *img : Poly::var(Monomial::var_at(s));
    return powers.emplace(key, base.pow(e)).first->second;
  };
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  for (const auto& [m, c] : p.terms()) {
    Poly t = c;
    for (int s = 0; s < Monomial::kSlots && !t.is_zero(); ++s)
      if (unsigned e = m.exponent_at(s)) t *= power(s, e);
    for (const auto& [tm, tc] : t.terms()) acc[tm] += tc;
  }
  std::vector<Poly::Term> out;
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, std::move(c));
  return Poly::from_terms(std::move(out));
}

/// An assignment of exact rational values to variables.
class Point {
 public:
  Point& set(VarId v, Rat value) {
    values_[Monomial::slot(v)] = std::move(value);
    return *this;
  }
  const Rat& value(VarId v) const { return value_at(Monomial::slot(v)); }
  const Rat& value_at(int s) const {
    if (!values_[s]) throw std::out_of_range("point has no value for " + Monomial::var_at(s).name());
    return *values_[s];
  }
  bool has(VarId v) const { return values_[Monomial::slot(v)].has_value(); }

 private:
  std::array<std::optional<Rat>, Monomial::kSlots> values_;
};

inline Rat eval_at(const Poly& p, const Point& pt) {
  Rat sum = 0;
  std::array<std::vector<Rat>, Monomial::kSlots> pow_cache;
  for (const auto& [m, c] : p.terms()) {
    Rat t = c;
    for (int s = 0; s < Monomial::kSlots; ++s) {
      unsigned e = m.exponent_at(s);
      if (!e) continue;
      auto& cache = pow_cache[s];
      if (cache.empty()) cache.push_back(1);
      while (cache.size() <= e) cache.push_back(cache.back() * pt.value_at(s));
      t *= cache[e];
    }
    sum += t;
  }
  return sum;
}

/// Elementary symmetric polynomial e_j(vars).
inline Poly sym_e(int j, std::span<const Poly> vars) {
  if (j < 0) return {};
  std::vector<Poly> dp(j + 1);
  dp[0] = 1;
  for (const auto& v : vars)
    for (int k = j; k >= 1; --k)
      if (!dp[k - 1].is_zero()) dp[k] += dp[k - 1] * v;
  return dp[j];
}

/// Complete homogeneous symmetric polynomial h_j(vars).
inline Poly sym_h(int j, std::span<const Poly> vars) {
  if (j < 0) return {};
  std::vector<Poly> dp(j + 1);
  dp[0] = 1;
  for (const auto& v : vars)
    for (int k = 1; k <= j; ++k)
      if (!dp[k - 1].is_zero()) dp[k] += dp[k - 1] * v;
  return dp[j];
}

/// Monomial symmetric polynomial m_lambda(x_1..x_n).
inline Poly sym_m(std::span<const int> parts, int n) {
  std::vector<int> exps;
  for (int p : parts)
    if (p > 0) exps.push_back(p);
  if (int(exps.size()) > n) return {};
  exps.resize(n, 0);
  std::sort(exps.begin(), exps.end());
  std::vector<Poly::Term> terms;
  do {
    Monomial m;
    for (int i = 0; i < n; ++i)
      if (exps[i]) m = m * Monomial::var(VarId::x(i + 1), exps[i]);
    terms.emplace_back(m, 1);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return Poly::from_terms(std::move(terms));
}

inline std::vector<Poly> x_vars(int n) {
  std::vector<Poly> v;
  for (int i = 1; i <= n; ++i) v.push_back(Poly::x(i));
  return v;
}

/// a_first, ..., a_last (empty when first > last; a_1 contributes 0).
inline std::vector<Poly> a_range(int first, int last) {
  std::vector<Poly> v;
  for (int j = first; j <= last; ++j) v.push_back(Poly::a(j));
  return v;
}

// ---------------------------------------------------------------------------
// Text forms

inline std::string monomial_string(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

/// Plain form, e.g. "2*x1^2 - a2*x1 + 1".
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer mag = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += monomial_string(m);
    }
  }
  return s;
}

inline std::string latex_var(VarId v) {
  std::string idx = std::to_string(v.index);
  std::string base = v.kind == VarId::Kind::X ? "x" : "a";
  return base + "_" + (idx.size() > 1 ? "{" + idx + "}" : idx);
}

inline std::string latex_monomial(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    s += latex_var(v);
    if (e > 1) {
      std::string es = std::to_string(e);
      s += "^" + (es.size() > 1 ? "{" + es + "}" : es);
    }
  }
  return s;
}

inline std::string latex_sum(const Poly& p) {
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer mag = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? "-" : "+";
    first = false;
    if (m.is_one())
      s += mag.get_str();
    else
      s += (mag != 1 ? mag.get_str() : "") + latex_monomial(m);
  }
  return s;
}

/// LaTeX with the integer content and common monomial pulled out,
/// e.g. 4x_1^2x_2+4x_1x_2^2 renders as "4x_1x_2(x_1+x_2)".
inline std::string to_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  if (p.size() == 1) return latex_sum(p);
  Integer c = p.content();
  Monomial g = p.monomial_gcd();
  Poly rest = exact_div(p, Poly::monomial(g, c));
  std::string prefix;
  if (c == -1)
    prefix = "-";
  else if (c != 1)
    prefix = c.get_str();
  prefix += latex_monomial(g);
  if (prefix.empty()) return latex_sum(rest);
  return prefix + "(" + latex_sum(rest) + ")";
}

/// Reads the to_string form back: sums of products of integers and
/// variables x<i> / a<j>, with ^, unary minus and parentheses.
inline Poly parse_poly(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> Poly {
    throw std::invalid_argument(what + " at position " + std::to_string(pos) + " in \"" + text + "\"");
  };
  auto digits = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  std::function<Poly()> sum, factor;
  factor = [&]() -> Poly {
    skip();
    if (pos >= text.size()) return fail("unexpected end");
    Poly base;
    char c = text[pos];
    if (c == '-') {
      ++pos;
      return -factor();
    }
    if (c == '(') {
      ++pos;
      base = sum();
      skip();
      if (pos >= text.size() || text[pos] != ')') return fail("expected ')'");
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = Poly(Integer(digits()));
    } else if (c == 'x' || c == 'a') {
      ++pos;
      std::string idx = digits();
      if (idx.empty() || idx.size() > 3) return fail("bad variable index");
      base = c == 'x' ? Poly::x(std::stoi(idx)) : Poly::a(std::stoi(idx));
    } else {
      return fail(std::string("unexpected character '") + c + "'");
    }
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      std::string e = digits();
      if (e.empty() || e.size() > 4) return fail("bad exponent");
      base = base.pow(unsigned(std::stoul(e)));
    }
    return base;
  };
  auto product = [&]() -> Poly {
    Poly p = factor();
    for (skip(); pos < text.size() && text[pos] == '*'; skip()) {
      ++pos;
      p *= factor();
    }
    return p;
  };
  sum = [&]() -> Poly {
    Poly p = product();
    for (skip(); pos < text.size() && (text[pos] == '+' || text[pos] == '-'); skip()) {
      bool minus = text[pos++] == '-';
      Poly t = product();
      p = minus ? p - t : p + t;
    }
    return p;
  };
  Poly p = sum();
  skip();
  if (pos != text.size()) fail("trailing input");
  return p;
}

// ---------------------------------------------------------------------------
// JSON: {"vars": [...], "terms": [{"coeff": "<bigint>", "exps": [...]}]}

inline nlohmann::ordered_json to_json(const Poly& p) {
  nlohmann::ordered_json j;
  auto vars = p.variables();
  j["vars"] = nlohmann::ordered_json::array();
  for (auto v : vars) j["vars"].push_back(v.name());
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["coeff"] = c.get_str();
    t["exps"] = nlohmann::ordered_json::array();
    for (auto v : vars) t["exps"].push_back(m.exponent(v));
    j["terms"].push_back(std::move(t));
  }
  return j;
}

template <class Json>
Poly poly_from_json(const Json& j) {
  std::vector<VarId> vars;
  for (const auto& v : j.at("vars")) vars.push_back(parse_var(v.template get<std::string>()));
  std::vector<Poly::Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto& exps = t.at("exps");
    if (exps.size() != vars.size()) throw std::invalid_argument("exps length does not match vars");
    Monomial m;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      int e = exps[i].template get<int>();
      if (e < 0) throw std::invalid_argument("negative exponent");
      if (e) m = m * Monomial::var(vars[i], e);
    }
    terms.emplace_back(m, Integer(t.at("coeff").template get<std::string>()));
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace lgschub
