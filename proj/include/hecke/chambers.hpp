#pragma once

// The chambers a^m_{n-1} = {a_1 >= ... >= a_{n-m} <= ... <= a_{n-1}} of the
// positive root cone, exact cone-containment tests, and the permutation
// sets W^m_{n-1} = {w : a^m_{n-1} inside C(|w alpha_1|, ..., |w alpha_{n-1}|)}.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hecke/laurent.hpp"
#include "hecke/permutation.hpp"
#include "hecke/roots.hpp"

namespace hecke {

struct ChamberLabel {
  int n = 2;
  int m = 1;

  friend auto operator<=>(const ChamberLabel&, const ChamberLabel&) = default;
};

inline void validate(const ChamberLabel& label) {
  if (label.n < 2) throw RankTooSmall("chamber needs n >= 2, got " + std::to_string(label.n));
  if (label.m < 1 || label.m > label.n - 1) {
    throw OutOfRange("chamber index m=" + std::to_string(label.m) + " outside [1, " +
                     std::to_string(label.n - 1) + "]");
  }
}

/// Cone generators alpha_{1,2}, ..., alpha_{1,n-m}, alpha_{n-1,n}, ...,
/// alpha_{n-m+1,n}, alpha_{1,n}.
inline std::vector<RootVector> chamber_generators(const ChamberLabel& label) {
  validate(label);
  const int n = label.n;
  const int m = label.m;
  std::vector<RootVector> gens;
  for (int j = 2; j <= n - m; ++j) gens.push_back(make_root(n, 1, j));
  for (int i = n - 1; i >= n - m + 1; --i) gens.push_back(make_root(n, i, n));
  gens.push_back(make_root(n, 1, n));
  return gens;
}

enum class ChamberStatus { Interior, Boundary, OutsidePositiveCone, NoChamber };

struct ChamberClassification {
  ChamberStatus status = ChamberStatus::NoChamber;
  int m = 0;                   // set iff status == Interior
  std::vector<int> boundary;   // chambers whose closure holds lambda, iff Boundary

  bool interior() const noexcept { return status == ChamberStatus::Interior; }

  std::string to_string() const {
    switch (status) {
      case ChamberStatus::Interior:
        return "interior(m=" + std::to_string(m) + ")";
      case ChamberStatus::Boundary: {
        std::string s = "boundary{";
        for (std::size_t k = 0; k < boundary.size(); ++k) {
          if (k) s += ',';
          s += std::to_string(boundary[k]);
        }
        return s + "}";
      }
      case ChamberStatus::OutsidePositiveCone:
        return "outside_Q+";
      case ChamberStatus::NoChamber:
        return "inside_Q+_no_chamber";
    }
    return "?";
  }

  friend bool operator==(const ChamberClassification&, const ChamberClassification&) = default;
};

namespace detail {

// a_1 (>|>=) ... (>|>=) a_{n-m} (<|<=) ... (<|<=) a_{n-1}, 0-based turn = n-m-1.
inline bool chain_holds(const std::vector<int>& a, std::size_t turn, bool strict) {
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    const int lhs = a[k];
    const int rhs = a[k + 1];
    if (k < turn) {
      if (strict ? !(lhs > rhs) : !(lhs >= rhs)) return false;
    } else {
      if (strict ? !(lhs < rhs) : !(lhs <= rhs)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Interior(m) needs the strict chain for that m and a positive turning
/// coordinate; weak chains (or a zero turn) give Boundary.
inline ChamberClassification classify_chamber(const WeightVector& lambda) {
  if (lambda.rank() == 0) throw RankTooSmall("weight of A_0");
  ChamberClassification out;
  if (!in_positive_cone(lambda)) {
    out.status = ChamberStatus::OutsidePositiveCone;
    return out;
  }
  const int n = static_cast<int>(lambda.rank()) + 1;
  for (int m = 1; m <= n - 1; ++m) {
    const auto turn = static_cast<std::size_t>(n - m - 1);
    if (lambda[turn] > 0 && detail::chain_holds(lambda.a, turn, true)) {
      out.status = ChamberStatus::Interior;
      out.m = m;
      return out;
    }
  }
  for (int m = 1; m <= n - 1; ++m) {
    if (detail::chain_holds(lambda.a, static_cast<std::size_t>(n - m - 1), false)) {
      out.boundary.push_back(m);
    }
  }
  out.status = out.boundary.empty() ? ChamberStatus::NoChamber : ChamberStatus::Boundary;
  return out;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> mat) {
  const std::size_t dim = mat.size();
  if (dim == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (mat[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < dim && mat[swap_row][k] == 0) ++swap_row;
      if (swap_row == dim) return 0;
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j) {
        mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
      }
    }
    prev = mat[k][k];
  }
  return sign * mat[dim - 1][dim - 1];
}

/// True iff every generator of the closed chamber has non-negative
/// coordinates in the given basis (solved exactly by Cramer's rule).
inline bool cone_contains_chamber(const ChamberLabel& label, std::span<const RootVector> basis) {
  validate(label);
  const auto dim = static_cast<std::size_t>(label.n - 1);
  if (basis.size() != dim) {
    throw DimensionMismatch("basis has " + std::to_string(basis.size()) + " vectors, rank is " +
                            std::to_string(dim));
  }
  for (const auto& v : basis) {
    if (v.coords.size() != dim) throw DimensionMismatch("basis vector of wrong length");
  }

  auto matrix_with = [&](std::size_t replaced, const std::vector<int>* column) {
    std::vector<std::vector<BigInt>> mat(dim, std::vector<BigInt>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
      const auto& src = (column != nullptr && col == replaced) ? *column : basis[col].coords;
      for (std::size_t row = 0; row < dim; ++row) mat[row][col] = src[row];
    }
    return mat;
  };

  const BigInt det = bareiss_determinant(matrix_with(0, nullptr));
  if (det == 0) throw SingularBasis("cone basis is linearly dependent");

  for (const auto& gen : chamber_generators(label)) {
    for (std::size_t col = 0; col < dim; ++col) {
      const BigInt numer = bareiss_determinant(matrix_with(col, &gen.coords));
      if (numer != 0 && (numer < 0) != (det < 0)) return false;
    }
  }
  return true;
}

/// {|w alpha_1|, ..., |w alpha_{n-1}|}.
inline std::vector<RootVector> image_of_simple_roots(const Permutation& w) {
  const int n = w.size();
  std::vector<RootVector> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    const int x = w(i);
    const int y = w(i + 1);
    out.push_back(make_root(n, std::min(x, y), std::max(x, y)));
  }
  return out;
}

/// W^m_{n-1} built recursively: the block product W^1 x W^{m-1}_{m-1} on
/// {1..n-m} and {n-m+1..n}, together with its right translate by w_0.
inline std::vector<Permutation> wset(int n, int m) {
  validate({n, m});
  if (n == 2) return {Permutation({1, 2}), Permutation({2, 1})};

  const int left_size = n - m;
  const int right_size = m;
  const std::vector<Permutation> left =
      left_size >= 2 ? wset(left_size, 1) : std::vector<Permutation>{Permutation::identity(1)};
  const std::vector<Permutation> right = right_size >= 2
                                             ? wset(right_size, right_size - 1)
                                             : std::vector<Permutation>{Permutation::identity(1)};

  std::vector<Permutation> out;
  out.reserve(2 * left.size() * right.size());
  for (const auto& u : left) {
    const Permutation u_big = u.embedded(0, n);
    for (const auto& v : right) {
      const Permutation block = u_big * v.embedded(left_size, n);
      out.push_back(block);
      out.push_back(block.times_longest());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// W^m_{n-1} by testing the cone condition on all n! permutations.
inline std::vector<Permutation> wset_direct(int n, int m) {
  const ChamberLabel label{n, m};
  validate(label);
  std::vector<Permutation> out;
  for (auto& w : all_permutations(n)) {
    const auto basis = image_of_simple_roots(w);
    if (cone_contains_chamber(label, basis)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace hecke
