#pragma once

// Type A_{n-1} root data in simple-root coordinates.
//
// Orientation: alpha_{i,j} = e_i - e_j for i < j, so that
// alpha_{i,j} = alpha_i + ... + alpha_{j-1} and the simple roots are
// alpha_i = alpha_{i,i+1}.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

/// A weight lambda = sum_k a_k alpha_k, stored as its simple-root
/// coordinates (a_1, ..., a_{n-1}).
struct WeightVector {
  std::vector<int> a;

  WeightVector() = default;
  explicit WeightVector(std::vector<int> coords) : a(std::move(coords)) {}
  WeightVector(std::initializer_list<int> coords) : a(coords) {}

  std::size_t rank() const noexcept { return a.size(); }
  int operator[](std::size_t k) const { return a[k]; }
  int& operator[](std::size_t k) { return a[k]; }

  bool is_zero() const {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
  }
  int total() const {
    int s = 0;
    for (int x : a) s += x;
    return s;
  }

  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

/// Positive root alpha_{i,j}, 1 <= i < j <= n.
struct RootVector {
  int i = 0;
  int j = 0;
  std::vector<int> coords;  // 0/1 indicator of [i, j-1], length n-1

  friend bool operator==(const RootVector&, const RootVector&) = default;
};

inline RootVector make_root(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) {
    throw OutOfRange("alpha_{" + std::to_string(i) + "," + std::to_string(j) +
                     "} is not a positive root of A_" + std::to_string(n - 1));
  }
  RootVector r{i, j, std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
  for (int k = i; k < j; ++k) r.coords[static_cast<std::size_t>(k - 1)] = 1;
  return r;
}

class RootSystemA {
 public:
  /// The root system A_{n-1}; roots in the order (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).
  explicit RootSystemA(int n) : n_(n) {
    if (n < 2) throw RankTooSmall("type A needs n >= 2, got " + std::to_string(n));
    roots_.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) roots_.push_back(make_root(n, i, j));
    }
  }

  int n() const noexcept { return n_; }
  int rank() const noexcept { return n_ - 1; }
  const std::vector<RootVector>& positive_roots() const noexcept { return roots_; }
  std::size_t num_roots() const noexcept { return roots_.size(); }

  /// Position of alpha_{i,j} in the canonical order.
  std::size_t index_of(int i, int j) const {
    if (!(1 <= i && i < j && j <= n_)) {
      throw OutOfRange("no positive root alpha_{" + std::to_string(i) + "," +
                       std::to_string(j) + "}");
    }
    // Rows 1..i-1 contribute (n-1) + (n-2) + ... + (n-i+1) roots.
    const int before = (i - 1) * n_ - (i - 1) * i / 2;
    return static_cast<std::size_t>(before + (j - i - 1));
  }

 private:
  int n_;
  std::vector<RootVector> roots_;
};

inline RootSystemA build_type_a(int n) { return RootSystemA(n); }

/// lambda(b) = sum_i b_i alpha_{i,n}; its simple-root coordinates are the
/// prefix sums of b.
inline WeightVector lambda_from_hooks(std::span<const int> b) {
  WeightVector out;
  out.a.reserve(b.size());
  int acc = 0;
  for (int x : b) {
    acc += x;
    out.a.push_back(acc);
  }
  return out;
}

inline std::vector<int> hooks_from_lambda(const WeightVector& lambda) {
  std::vector<int> b;
  b.reserve(lambda.rank());
  int prev = 0;
  for (int x : lambda.a) {
    b.push_back(x - prev);
    prev = x;
  }
  return b;
}

inline bool in_positive_cone(const WeightVector& lambda) {
  return std::all_of(lambda.a.begin(), lambda.a.end(), [](int x) { return x >= 0; });
}

inline void require_rank(const WeightVector& lambda, int n) {
  if (lambda.rank() != static_cast<std::size_t>(n - 1)) {
    throw DimensionMismatch("weight has " + std::to_string(lambda.rank()) +
                            " coordinates, A_" + std::to_string(n - 1) + " needs " +
                            std::to_string(n - 1));
  }
}

inline std::string to_string(const WeightVector& lambda) {
  std::string s;
  for (std::size_t k = 0; k < lambda.rank(); ++k) {
    if (k) s += ',';
    s += std::to_string(lambda[k]);
  }
  return s;
}

}  // namespace hecke
