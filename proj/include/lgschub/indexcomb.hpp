#pragma once
// The four equivalent index sets of the Lagrangian Grassmannian LG_n:
// minimal coset representatives (signed permutations increasing on 1..n),
// symmetric Young diagrams in the n x n square, 0/1 masks of length n, and
// strict partitions inside the staircase (n, n-1, ..., 1).

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgschub {

struct InvalidIndexObject : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {
inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}
}  // namespace detail

/// A strict partition contained in the staircase of size n.
class StrictPartition {
 public:
  StrictPartition() = default;
  StrictPartition(int n, std::vector<int> parts) : n_(n), parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (n_ < 1) throw InvalidIndexObject("ambient n must be positive");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw InvalidIndexObject("parts must be positive: " + detail::join(parts_));
      if (i && parts_[i] >= parts_[i - 1])
        throw InvalidIndexObject("parts must be strictly decreasing: " + detail::join(parts_));
    }
    if (!parts_.empty() && parts_[0] > n_)
      throw InvalidIndexObject("largest part exceeds n=" + std::to_string(n_) + ": " + detail::join(parts_));
  }

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int length() const { return int(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  /// The i-th part (0-based), zero past the end.
  int part(int i) const { return i < length() ? parts_[i] : 0; }

  std::string str() const { return "(" + detail::join(parts_) + ")"; }

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

 private:
  int n_ = 1;
  std::vector<int> parts_;
};

/// Enumeration order: by |lambda|, then lexicographically descending.
inline bool enumeration_less(const StrictPartition& l, const StrictPartition& r) {
  if (l.size() != r.size()) return l.size() < r.size();
  return std::lexicographical_compare(r.parts().begin(), r.parts().end(), l.parts().begin(),
                                      l.parts().end());
}

/// Minimal coset representative w, stored as w(1) < ... < w(n) in {1..2n};
/// a value v > n is the barred letter of 2n+1-v.
class SignedPerm {
 public:
  SignedPerm(int n, std::vector<int> images) : n_(n), images_(std::move(images)) {
    if (n_ < 1 || int(images_.size()) != n_)
      throw InvalidIndexObject("permutation needs exactly n images: " + detail::join(images_));
    std::vector<bool> used(n_ + 1, false);
    for (int i = 0; i < n_; ++i) {
      int v = images_[i];
      if (v < 1 || v > 2 * n_) throw InvalidIndexObject("image out of range: " + detail::join(images_));
      if (i && v <= images_[i - 1])
        throw InvalidIndexObject("images must be increasing: " + detail::join(images_));
      int letter = v <= n_ ? v : 2 * n_ + 1 - v;
      if (used[letter])
        throw InvalidIndexObject("contains both a letter and its bar: " + detail::join(images_));
      used[letter] = true;
    }
  }

  int n() const { return n_; }
  const std::vector<int>& images() const { return images_; }
  int operator()(int i) const { return images_[i - 1]; }

  /// e.g. "1 3 4 5̄ 2̄" (combining macron over barred letters).
  std::string barred() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (i) s += ' ';
      int v = images_[i];
      if (v <= n_)
        s += std::to_string(v);
      else
        s += std::to_string(2 * n_ + 1 - v) + "\u0304";
    }
    return s;
  }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

 private:
  int n_;
  std::vector<int> images_;
};

struct BitMask {
  std::vector<int> bits;

  explicit BitMask(std::vector<int> b) : bits(std::move(b)) {
    if (bits.empty()) throw InvalidIndexObject("mask must have length n >= 1");
    for (int x : bits)
      if (x != 0 && x != 1) throw InvalidIndexObject("mask entries must be 0 or 1: " + detail::join(bits));
  }
  int n() const { return int(bits.size()); }
  friend bool operator==(const BitMask&, const BitMask&) = default;
};

/// Symmetric Young diagram (d_1 >= ... >= d_n), equal to its own transpose.
struct SymDiagram {
  std::vector<int> rows;

  explicit SymDiagram(std::vector<int> r) : rows(std::move(r)) {
    int n = int(rows.size());
    if (n < 1) throw InvalidIndexObject("diagram must have n >= 1 rows");
    for (int i = 0; i < n; ++i) {
      if (rows[i] < 0 || rows[i] > n) throw InvalidIndexObject("row out of range: " + detail::join(rows));
      if (i && rows[i] > rows[i - 1]) throw InvalidIndexObject("rows must be weakly decreasing: " + detail::join(rows));
    }
    for (int i = 1; i <= n; ++i) {
      int col = int(std::count_if(rows.begin(), rows.end(), [i](int d) { return d >= i; }));
      if (col != rows[i - 1]) throw InvalidIndexObject("diagram is not symmetric: " + detail::join(rows));
    }
  }
  int n() const { return int(rows.size()); }

  /// Boxes (i, j) with 1 <= i <= j <= d_i.
  int shifted_box_count() const {
    int c = 0;
    for (int i = 1; i <= n(); ++i) c += std::max(0, rows[i - 1] - i + 1);
    return c;
  }

  friend bool operator==(const SymDiagram&, const SymDiagram&) = default;
};

// ---------------------------------------------------------------------------
// Bijections

inline SymDiagram perm_to_diagram(const SignedPerm& w) {
  std::vector<int> d(w.n());
  for (int i = 1; i <= w.n(); ++i) d[i - 1] = w.n() + i - w(i);
  return SymDiagram(std::move(d));
}

inline SignedPerm diagram_to_perm(const SymDiagram& d) {
  std::vector<int> w(d.n());
  for (int i = 1; i <= d.n(); ++i) w[i - 1] = d.n() + i - d.rows[i - 1];
  return SignedPerm(d.n(), std::move(w));
}

inline StrictPartition diagram_to_strict(const SymDiagram& d) {
  std::vector<int> parts;
  for (int i = 1; i <= d.n(); ++i)
    if (d.rows[i - 1] >= i) parts.push_back(d.rows[i - 1] - i + 1);
  return StrictPartition(d.n(), std::move(parts));
}

inline SymDiagram strict_to_diagram(const StrictPartition& l) {
  int n = l.n();
  std::vector<std::vector<bool>> box(n, std::vector<bool>(n, false));
  for (int i = 0; i < l.length(); ++i)
    for (int j = i; j < i + l.part(i); ++j) {
      if (j >= n) throw InvalidIndexObject("partition does not fit the square: " + l.str());
      box[i][j] = box[j][i] = true;
    }
  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = int(std::count(box[i].begin(), box[i].end(), true));
  return SymDiagram(std::move(rows));
}

inline BitMask perm_to_mask(const SignedPerm& w) {
  std::vector<int> bits(w.n(), 0);
  for (int v : w.images())
    if (v <= w.n()) bits[v - 1] = 1;
  return BitMask(std::move(bits));
}

inline SignedPerm mask_to_perm(const BitMask& m) {
  int n = m.n();
  std::vector<int> images;
  for (int i = 1; i <= n; ++i) images.push_back(m.bits[i - 1] ? i : 2 * n + 1 - i);
  std::sort(images.begin(), images.end());
  return SignedPerm(n, std::move(images));
}

inline StrictPartition perm_to_strict(const SignedPerm& w) { return diagram_to_strict(perm_to_diagram(w)); }
inline SignedPerm strict_to_perm(const StrictPartition& l) { return diagram_to_perm(strict_to_diagram(l)); }
inline BitMask strict_to_mask(const StrictPartition& l) { return perm_to_mask(strict_to_perm(l)); }
inline StrictPartition mask_to_strict(const BitMask& m) { return perm_to_strict(mask_to_perm(m)); }
inline BitMask diagram_to_mask(const SymDiagram& d) { return perm_to_mask(diagram_to_perm(d)); }
inline SymDiagram mask_to_diagram(const BitMask& m) { return perm_to_diagram(mask_to_perm(m)); }

// ---------------------------------------------------------------------------
// Order and covers

/// All 2^n elements of SP_n in enumeration order.
inline std::vector<StrictPartition> enumerate(int n) {
  if (n < 1) throw InvalidIndexObject("n must be positive");
  std::vector<StrictPartition> out;
  for (unsigned s = 0; s < (1u << n); ++s) {
    std::vector<int> parts;
    for (int v = n; v >= 1; --v)
      if (s & (1u << (v - 1))) parts.push_back(v);
    out.emplace_back(n, std::move(parts));
  }
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

/// lambda_i <= mu_i for all i; the Bruhat order on the corresponding cosets.
inline bool contains(const StrictPartition& l, const StrictPartition& m) {
  if (l.n() != m.n()) throw InvalidIndexObject("partitions live in different n");
  if (l.length() > m.length()) return false;
  for (int i = 0; i < l.length(); ++i)
    if (l.part(i) > m.part(i)) return false;
  return true;
}

struct Cover {
  StrictPartition target;
  int multiplicity;  // Chevalley multiplicity c(w, w'), 1 or 2
};

/// lambda' in SP_n with lambda inside lambda' and one more box.
inline std::vector<Cover> covers(const StrictPartition& l) {
  std::vector<Cover> out;
  const auto& p = l.parts();
  for (int i = 0; i < l.length(); ++i) {
    int v = p[i] + 1;
    if (v > l.n() || (i > 0 && v >= p[i - 1])) continue;
    auto q = p;
    q[i] = v;
    out.push_back({StrictPartition(l.n(), std::move(q)), 2});
  }
  if (l.empty() || p.back() > 1) {
    auto q = p;
    q.push_back(1);
    out.push_back({StrictPartition(l.n(), std::move(q)), 1});
  }
  std::sort(out.begin(), out.end(),
            [](const Cover& a, const Cover& b) { return enumeration_less(a.target, b.target); });
  return out;
}

/// Classifies the move lambda -> lambda' on symmetric diagrams: a single new
/// diagonal box (root 2e_i) gives 1, a new off-diagonal pair (root e_i+e_j)
/// gives 2. Returns 0 if the diagrams do not differ by either move.
inline int diagram_move_multiplicity(const StrictPartition& l, const StrictPartition& lp) {
  auto d = strict_to_diagram(l).rows, dp = strict_to_diagram(lp).rows;
  int n = l.n();
  std::vector<std::pair<int, int>> added;
  for (int i = 0; i < n; ++i) {
    if (dp[i] < d[i]) return 0;
    for (int j = d[i]; j < dp[i]; ++j) added.emplace_back(i, j);
  }
  if (added.size() == 1 && added[0].first == added[0].second) return 1;
  if (added.size() == 2 && added[0].first != added[0].second && added[0].first == added[1].second &&
      added[0].second == added[1].first)
    return 2;
  return 0;
}

}  // namespace lgschub
