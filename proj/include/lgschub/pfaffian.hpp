#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lgschub {

struct OddSize : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Skew-symmetric matrix storing only the strict upper triangle.
/// T must default-construct to its zero element.
template <class T>
class SkewMatrix {
 public:
  explicit SkewMatrix(int size) : size_(size), upper_(std::size_t(size) * size) {}

  int size() const { return size_; }

  /// Sets e(i, j) for i < j (0-based); e(j, i) is implied.
  void set(int i, int j, T value) {
    if (i >= j) throw std::invalid_argument("SkewMatrix::set needs i < j");
    upper_[std::size_t(i) * size_ + j] = std::move(value);
  }

  /// e(i, j) for i < j.
  const T& upper(int i, int j) const { return upper_[std::size_t(i) * size_ + j]; }

  T at(int i, int j) const {
    if (i == j) return T{};
    if (i < j) return upper(i, j);
    return -upper(j, i);
  }

 private:
  int size_;
  std::vector<T> upper_;
};

/// Pfaffian by first-row expansion, memoized on the set of remaining
/// indices:  Pf = sum_j (-1)^k e(first, j) Pf(minor without first, j),
/// with k the position of j among the remaining indices after the first.
template <class T>
T pfaffian(const SkewMatrix<T>& m, const T& one) {
  const int size = m.size();
  if (size % 2) throw OddSize("Pfaffian of an odd-size matrix");
  if (size == 0) return one;
  if (size > 30) throw std::invalid_argument("Pfaffian size too large");
  const T zero{};
  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::uint32_t set) -> T {
    if (set == 0) return one;
    auto it = memo.find(set);
    if (it != memo.end()) return it->second;
    int first = __builtin_ctz(set);
    std::uint32_t rest = set & (set - 1);
    T total{};
    int k = 0;
    for (std::uint32_t r = rest; r; r &= r - 1, ++k) {
      int j = __builtin_ctz(r);
      const T& e = m.upper(first, j);
      if (e == zero) continue;
      T term = e * self(self, rest & ~(1u << j));
      if (k % 2)
        total = total - term;
      else
        total = total + term;
    }
    memo.emplace(set, total);
    return total;
  };
  return rec(rec, size == 32 ? ~0u : ((1u << size) - 1));
}

}  // namespace lgschub
