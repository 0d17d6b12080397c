#pragma once

// Truncated expansion of the generating function
//
//   eta(t) = prod_{alpha > 0} (1 - t^alpha)^2 / ((1 - q^{-1} t^alpha)(1 - q t^alpha))
//
// as a power series in t_k = t(alpha_k), geometric factors expanded as
// 1/(1-x) = sum x^i. The coefficient of t^lambda is tau(theta_{-lambda}).

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hecke/laurent.hpp"
#include "hecke/roots.hpp"

namespace hecke {

using Exponent = std::vector<int>;

class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t num_vars, int degree_cap)
      : num_vars_(num_vars), degree_cap_(degree_cap) {
    if (degree_cap < 0) throw OutOfRange("negative truncation degree");
  }

  static TruncatedSeries one(std::size_t num_vars, int degree_cap) {
    TruncatedSeries s(num_vars, degree_cap);
    s.add_term(Exponent(num_vars, 0), LaurentPoly(1));
    return s;
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  int degree_cap() const noexcept { return degree_cap_; }
  const std::map<Exponent, LaurentPoly>& coeffs() const noexcept { return coeffs_; }

  /// Adds c * t^e; terms beyond the cap are dropped.
  void add_term(const Exponent& e, const LaurentPoly& c) {
    if (e.size() != num_vars_) throw DimensionMismatch("exponent of wrong length");
    if (c.is_zero() || degree(e) > degree_cap_) return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  LaurentPoly coefficient(const Exponent& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? LaurentPoly() : it->second;
  }

  /// Product truncated at the smaller of the two caps.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.num_vars_ != b.num_vars_) throw DimensionMismatch("series in different variables");
    TruncatedSeries out(a.num_vars_, std::min(a.degree_cap_, b.degree_cap_));
    Exponent e(a.num_vars_);
    for (const auto& [ea, ca] : a.coeffs_) {
      const int da = degree(ea);
      for (const auto& [eb, cb] : b.coeffs_) {
        if (da + degree(eb) > out.degree_cap_) continue;
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  /// The same series truncated at a lower cap.
  TruncatedSeries truncated(int cap) const {
    TruncatedSeries out(num_vars_, std::min(cap, degree_cap_));
    for (const auto& [e, c] : coeffs_) out.add_term(e, c);
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  static int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

 private:
  std::size_t num_vars_;
  int degree_cap_;
  std::map<Exponent, LaurentPoly> coeffs_;
};

/// Number of monomials of total degree <= cap in num_vars variables.
inline std::size_t simplex_size(std::size_t num_vars, int cap) {
  // C(cap + num_vars, num_vars), computed incrementally to stay exact.
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t c = 1;
  for (std::size_t k = 1; k <= num_vars; ++k) {
    const std::size_t factor = static_cast<std::size_t>(cap) + k;
    if (c > kMax / factor) return kMax;
    c = c * factor / k;
  }
  return c;
}

/// sum_{k=0}^{K} c^k t^{k v}, truncated; c = q^step.
inline TruncatedSeries geometric_series(const std::vector<int>& v, int q_step, int cap) {
  TruncatedSeries s(v.size(), cap);
  const int stride = TruncatedSeries::degree(v);
  Exponent e(v.size(), 0);
  for (int k = 0; k * stride <= cap; ++k) {
    for (std::size_t i = 0; i < v.size(); ++i) e[i] = k * v[i];
    s.add_term(e, LaurentPoly::q(k * q_step));
    if (stride == 0) break;
  }
  return s;
}

/// 1 - t^v
inline TruncatedSeries one_minus_monomial(const std::vector<int>& v, int cap) {
  TruncatedSeries s = TruncatedSeries::one(v.size(), cap);
  s.add_term(v, LaurentPoly(-1));
  return s;
}

constexpr std::size_t kDefaultMaxSeriesTerms = 5'000'000;

/// r+(eta) for A_{n-1}, truncated at total degree D.
inline TruncatedSeries eta_series(int n, int degree_cap,
                                  std::size_t max_terms = kDefaultMaxSeriesTerms) {
  const RootSystemA sys(n);
  if (degree_cap < 0) throw OutOfRange("negative truncation degree");
  const auto vars = static_cast<std::size_t>(n - 1);
  if (simplex_size(vars, degree_cap) > max_terms) {
    throw ResourceLimit("series for n=" + std::to_string(n) + ", D=" +
                        std::to_string(degree_cap) + " exceeds " + std::to_string(max_terms) +
                        " coefficients");
  }
  TruncatedSeries acc = TruncatedSeries::one(vars, degree_cap);
  for (const auto& root : sys.positive_roots()) {
    acc = acc * one_minus_monomial(root.coords, degree_cap);
    acc = acc * one_minus_monomial(root.coords, degree_cap);
    acc = acc * geometric_series(root.coords, 1, degree_cap);
    acc = acc * geometric_series(root.coords, -1, degree_cap);
  }
  return acc;
}

/// Coefficient of t^lambda. Zero outside Q+; OutOfTruncation when the
/// total degree of lambda exceeds the cap.
inline LaurentPoly series_coefficient(const TruncatedSeries& s, const WeightVector& lambda) {
  if (lambda.rank() != s.num_vars()) {
    throw DimensionMismatch("weight rank " + std::to_string(lambda.rank()) +
                            " does not match series in " + std::to_string(s.num_vars()) +
                            " variables");
  }
  if (!in_positive_cone(lambda)) return {};
  if (lambda.total() > s.degree_cap()) {
    throw OutOfTruncation("lambda=(" + to_string(lambda) + ") has degree " +
                          std::to_string(lambda.total()) + " > cap " +
                          std::to_string(s.degree_cap()));
  }
  return s.coefficient(lambda.a);
}

}  // namespace hecke
