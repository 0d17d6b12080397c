#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

/// Element of S_n in one-line notation; values are 1-based.
/// Composition is right-to-left: (u * v)(i) = u(v(i)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    const int n = size();
    inverse_.assign(one_line_.size(), 0);
    for (int i = 1; i <= n; ++i) {
      const int v = one_line_[static_cast<std::size_t>(i - 1)];
      if (v < 1 || v > n || inverse_[static_cast<std::size_t>(v - 1)] != 0) {
        throw OutOfRange("not a permutation of 1.." + std::to_string(n));
      }
      inverse_[static_cast<std::size_t>(v - 1)] = i;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  /// The longest element w_0 : i -> n + 1 - i.
  static Permutation longest(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v));
  }

  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  int inv(int i) const { return inverse_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const noexcept { return one_line_; }

  Permutation inverse() const { return Permutation(inverse_); }

  friend Permutation operator*(const Permutation& u, const Permutation& v) {
    std::vector<int> out(v.one_line_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = u(v.one_line_[i]);
    return Permutation(std::move(out));
  }

  /// Right multiplication by w_0, i.e. reversal of the one-line word.
  Permutation times_longest() const {
    return Permutation(std::vector<int>(one_line_.rbegin(), one_line_.rend()));
  }

  /// Embeds into S_{offset + size() + tail}, acting on
  /// {offset+1, ..., offset+size()} and fixing everything else.
  Permutation embedded(int offset, int total) const {
    std::vector<int> v(static_cast<std::size_t>(total));
    std::iota(v.begin(), v.end(), 1);
    for (int i = 1; i <= size(); ++i) v[static_cast<std::size_t>(offset + i - 1)] = offset + (*this)(i);
    return Permutation(std::move(v));
  }

  std::string to_string() const {
    std::string s;
    const bool wide = size() > 9;
    for (std::size_t i = 0; i < one_line_.size(); ++i) {
      if (wide && i) s += ',';
      s += std::to_string(one_line_[i]);
    }
    return s;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.one_line_ == b.one_line_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.one_line_ <=> b.one_line_;
  }

 private:
  std::vector<int> one_line_;
  std::vector<int> inverse_;
};

/// All of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace hecke
