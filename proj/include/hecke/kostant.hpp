#pragma once

// Kostant partitions and the trace tau(theta_{-lambda}) as a weighted sum
// over them.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "hecke/laurent.hpp"
#include "hecke/roots.hpp"

namespace hecke {

/// Multiplicity r_alpha per positive root, in canonical root order.
struct KostantPartition {
  std::vector<int> multiplicities;

  friend auto operator<=>(const KostantPartition&, const KostantPartition&) = default;
};

/// wt(0) = 1, wt(r) = q^{-r} (q-1)^2 [r]_{q^2} for r >= 1.
inline LaurentPoly wt(int r) {
  if (r < 0) throw NegativeIndex("wt(" + std::to_string(r) + ")");
  if (r == 0) return LaurentPoly(1);
  static const LaurentPoly q_minus_one_sq = LaurentPoly{{2, 1}, {1, -2}, {0, 1}};
  return (q_minus_one_sq * q_integer(r, 2)).shifted(-r);
}

/// Sum over the roots of r_alpha * alpha, in simple-root coordinates.
inline WeightVector weight_of(const RootSystemA& sys, const KostantPartition& p) {
  WeightVector out(std::vector<int>(static_cast<std::size_t>(sys.rank()), 0));
  const auto& roots = sys.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (int c = roots[k].i; c < roots[k].j; ++c) {
      out[static_cast<std::size_t>(c - 1)] += p.multiplicities[k];
    }
  }
  return out;
}

inline LaurentPoly partition_weight(const KostantPartition& p) {
  LaurentPoly out(1);
  for (int r : p.multiplicities) {
    if (r != 0) out *= wt(r);
  }
  return out;
}

namespace detail {

// Largest multiplicity root k can take inside the residual vector mu.
inline int max_multiplicity(const RootVector& root, const std::vector<int>& mu) {
  int bound = std::numeric_limits<int>::max();
  for (int c = root.i; c < root.j; ++c) bound = std::min(bound, mu[static_cast<std::size_t>(c - 1)]);
  return bound;
}

// Roots from position k onward start at root(k).i or later, so every
// coordinate before that must already be exhausted.
inline bool prefix_exhausted(const RootVector& root, const std::vector<int>& mu) {
  for (int c = 1; c < root.i; ++c) {
    if (mu[static_cast<std::size_t>(c - 1)] != 0) return false;
  }
  return true;
}

inline void subtract_root(std::vector<int>& mu, const RootVector& root, int r) {
  for (int c = root.i; c < root.j; ++c) mu[static_cast<std::size_t>(c - 1)] -= r;
}

}  // namespace detail

/// All Kostant partitions of lambda, lexicographically increasing in the
/// multiplicity vector. Empty when lambda is outside Q+.
inline std::vector<KostantPartition> enumerate_kostant(const RootSystemA& sys,
                                                       const WeightVector& lambda) {
  require_rank(lambda, sys.n());
  std::vector<KostantPartition> out;
  if (!in_positive_cone(lambda)) return out;

  const auto& roots = sys.positive_roots();
  std::vector<int> mult(roots.size(), 0);
  std::vector<int> mu = lambda.a;

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == roots.size()) {
      if (std::all_of(mu.begin(), mu.end(), [](int x) { return x == 0; })) {
        out.push_back({mult});
      }
      return;
    }
    if (!detail::prefix_exhausted(roots[k], mu)) return;
    const int bound = detail::max_multiplicity(roots[k], mu);
    for (int r = 0; r <= bound; ++r) {
      mult[k] = r;
      detail::subtract_root(mu, roots[k], r);
      rec(k + 1);
      detail::subtract_root(mu, roots[k], -r);
    }
    mult[k] = 0;
  };
  rec(0);
  return out;
}

/// Trace by enumerating every partition and summing weight products.
inline LaurentPoly trace_kostant_naive(const RootSystemA& sys, const WeightVector& lambda) {
  LaurentPoly sum;
  for (const auto& p : enumerate_kostant(sys, lambda)) sum += partition_weight(p);
  return sum;
}

/// Memoized evaluation of tau(theta_{-lambda}) via
///   f(k, mu) = sum_{r >= 0} wt(r) f(k+1, mu - r alpha_k),
/// f(N, 0) = 1, f(N, mu) = 0 otherwise. The memo depends only on the root
/// system, so one evaluator amortizes across many weights of the same rank.
///
/// Not thread-safe; give each worker its own instance.
class KostantEvaluator {
 public:
  explicit KostantEvaluator(int n) : sys_(n), memo_(sys_.num_roots()) {}

  const RootSystemA& system() const noexcept { return sys_; }

  LaurentPoly trace(const WeightVector& lambda) {
    require_rank(lambda, sys_.n());
    if (!in_positive_cone(lambda)) return {};
    return eval(0, lambda.a);
  }

  std::size_t memo_size() const {
    std::size_t s = 0;
    for (const auto& m : memo_) s += m.size();
    return s;
  }

 private:
  const LaurentPoly& weight(int r) {
    while (static_cast<int>(wts_.size()) <= r) wts_.push_back(wt(static_cast<int>(wts_.size())));
    return wts_[static_cast<std::size_t>(r)];
  }

  LaurentPoly eval(std::size_t k, const std::vector<int>& mu) {
    const auto& roots = sys_.positive_roots();
    if (k == roots.size()) {
      const bool zero = std::all_of(mu.begin(), mu.end(), [](int x) { return x == 0; });
      return zero ? LaurentPoly(1) : LaurentPoly();
    }
    if (!detail::prefix_exhausted(roots[k], mu)) return {};
    if (auto it = memo_[k].find(mu); it != memo_[k].end()) return it->second;

    LaurentPoly total;
    std::vector<int> rest = mu;
    const int bound = detail::max_multiplicity(roots[k], mu);
    for (int r = 0; r <= bound; ++r) {
      LaurentPoly tail = eval(k + 1, rest);
      if (!tail.is_zero()) total += r == 0 ? tail : weight(r) * tail;
      detail::subtract_root(rest, roots[k], 1);
    }
    memo_[k].emplace(mu, total);
    return total;
  }

  RootSystemA sys_;
  std::vector<std::map<std::vector<int>, LaurentPoly>> memo_;
  std::vector<LaurentPoly> wts_;
};

/// tau(theta_{-lambda}); zero outside Q+, one at lambda = 0.
inline LaurentPoly trace_kostant(const RootSystemA& sys, const WeightVector& lambda) {
  KostantEvaluator eval(sys.n());
  return eval.trace(lambda);
}

}  // namespace hecke
