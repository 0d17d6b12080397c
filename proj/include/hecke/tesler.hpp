#pragma once

// Tesler matrices: upper-triangular non-negative integer matrices with a
// prescribed hook-sum vector b_i = sum_{j>=i} m_{ij} - sum_{j<i} m_{ji}.
// They are in bijection with Kostant partitions of lambda(b) through
// r_{alpha_{i,j}} = m_{ij} (i < j) and r_{alpha_{i,n}} = m_{ii}.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hecke/kostant.hpp"
#include "hecke/laurent.hpp"
#include "hecke/roots.hpp"

namespace hecke {

struct TeslerMatrix {
  // Square, zero below the diagonal.
  std::vector<std::vector<int>> entries;

  std::size_t size() const noexcept { return entries.size(); }
  int operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }

  std::vector<int> hook_sums() const {
    std::vector<int> b(size(), 0);
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = i; j < size(); ++j) b[i] += entries[i][j];
      for (std::size_t j = 0; j < i; ++j) b[i] -= entries[j][i];
    }
    return b;
  }

  friend auto operator<=>(const TeslerMatrix&, const TeslerMatrix&) = default;
};

/// Every Tesler matrix with hook sums b, in row-major lexicographic order.
///
/// Rows are filled top to bottom. When row i is reached its column inflow
/// is fixed, so the row total s_i = b_i + inflow is known; off-diagonal
/// entries range over compositions of at most s_i and the diagonal takes
/// the remainder.
inline std::vector<TeslerMatrix> enumerate_tesler(std::span<const int> b) {
  const std::size_t r = b.size();
  std::vector<TeslerMatrix> out;
  if (r == 0) return out;
  TeslerMatrix cur{std::vector<std::vector<int>>(r, std::vector<int>(r, 0))};

  std::function<void(std::size_t)> fill_row;
  std::function<void(std::size_t, std::size_t, int)> fill_entry;

  fill_row = [&](std::size_t i) {
    if (i == r) {
      out.push_back(cur);
      return;
    }
    int inflow = 0;
    for (std::size_t j = 0; j < i; ++j) inflow += cur.entries[j][i];
    const int total = b[i] + inflow;
    if (total < 0) return;
    fill_entry(i, i + 1, total);
  };

  fill_entry = [&](std::size_t i, std::size_t j, int remaining) {
    if (j == r) {
      cur.entries[i][i] = remaining;
      fill_row(i + 1);
      cur.entries[i][i] = 0;
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur.entries[i][j] = v;
      fill_entry(i, j + 1, remaining - v);
    }
    cur.entries[i][j] = 0;
  };

  fill_row(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline KostantPartition tesler_to_kostant(const TeslerMatrix& mat) {
  const int n = static_cast<int>(mat.size()) + 1;
  const RootSystemA sys(n);
  KostantPartition p{std::vector<int>(sys.num_roots(), 0)};
  for (std::size_t i = 0; i < mat.size(); ++i) {
    for (std::size_t j = i; j < mat.size(); ++j) {
      const int v = mat(i, j);
      if (v < 0) throw OutOfRange("Tesler matrix entries must be non-negative");
      const int row = static_cast<int>(i) + 1;
      const int col = (i == j) ? n : static_cast<int>(j) + 1;
      p.multiplicities[sys.index_of(row, col)] = v;
    }
  }
  return p;
}

/// wt(M) = product of wt(m_ij) over all entries.
inline LaurentPoly tesler_weight(const TeslerMatrix& mat) {
  LaurentPoly out(1);
  for (std::size_t i = 0; i < mat.size(); ++i) {
    for (std::size_t j = i; j < mat.size(); ++j) {
      if (mat(i, j) != 0) out *= wt(mat(i, j));
    }
  }
  return out;
}

/// (-(1-q)(1-t))^{n-1} at t = q^{-1}, which equals (q - 2 + q^{-1})^{n-1}.
inline LaurentPoly tesler_denominator(int n) {
  return lp_pow(LaurentPoly{{1, 1}, {0, -2}, {-1, 1}}, static_cast<unsigned>(n - 1));
}

struct TeslerSum {
  std::size_t count = 0;                  // |T(b)|
  LaurentPoly raw;                        // sum_M wt(M)
  std::optional<LaurentPoly> normalized;  // P_b(q, q^{-1}) when the division is exact

  bool divisible() const noexcept { return normalized.has_value(); }
};

/// raw = sum over T(b) of wt(M), and P_b(q, q^{-1}) = raw / (-(1-q)(1-q^{-1}))^{n-1}
/// when that quotient is a Laurent polynomial.
inline TeslerSum tesler_weighted_sum(std::span<const int> b) {
  TeslerSum out;
  for (const auto& mat : enumerate_tesler(b)) {
    ++out.count;
    out.raw += tesler_weight(mat);
  }
  const int n = static_cast<int>(b.size()) + 1;
  try {
    out.normalized = lp_exact_div(out.raw, tesler_denominator(n));
  } catch (const NonDivisible&) {
    out.normalized.reset();
  }
  return out;
}

}  // namespace hecke
