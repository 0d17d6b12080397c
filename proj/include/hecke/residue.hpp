#pragma once

// Trace of theta_{-lambda} for lambda in the interior of a^m_{n-1} as a
// signed sum over residual points p_w, w in W^m_{n-1}:
//
//   tau = (sum_w (-1)^{eps(w)} q^{e_w(lambda)}) * (q-1)^n / (q^n - 1),
//   e_w(lambda) = -sum_i a_i (w^{-1}(i+1) - w^{-1}(i)).

#include <cstddef>
#include <utility>
#include <vector>

#include "hecke/chambers.hpp"
#include "hecke/laurent.hpp"
#include "hecke/permutation.hpp"
#include "hecke/roots.hpp"

namespace hecke {

/// Number of simple roots kept positive by w (ascents of the one-line word).
inline int epsilon(const Permutation& w) {
  int count = 0;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) < w(i + 1)) ++count;
  }
  return count;
}

/// Exponent e with e^{-lambda(p_w)} = q^e.
inline int pw_exponent(const Permutation& w, const WeightVector& lambda) {
  require_rank(lambda, w.size());
  int e = 0;
  for (int i = 1; i < w.size(); ++i) {
    e -= lambda[static_cast<std::size_t>(i - 1)] * (w.inv(i + 1) - w.inv(i));
  }
  return e;
}

struct OmegaFactor {
  LaurentPoly numerator;    // (q-1)^n
  LaurentPoly denominator;  // q^n - 1
};

inline OmegaFactor omega(int n) {
  if (n < 2) throw RankTooSmall("omega needs n >= 2, got " + std::to_string(n));
  return {lp_pow(LaurentPoly{{1, 1}, {0, -1}}, static_cast<unsigned>(n)),
          LaurentPoly{{n, 1}, {0, -1}}};
}

struct ResidueTerm {
  Permutation w;
  int sign = 1;
  int exponent = 0;
};

/// One term per w in W^m_{n-1}, in lexicographic order of w.
inline std::vector<ResidueTerm> residue_terms(int n, int m, const WeightVector& lambda) {
  std::vector<ResidueTerm> out;
  for (auto& w : wset(n, m)) {
    const int sign = epsilon(w) % 2 == 0 ? 1 : -1;
    const int e = pw_exponent(w, lambda);
    out.push_back({std::move(w), sign, e});
  }
  return out;
}

struct ResidueEvaluation {
  int m = 0;
  std::vector<ResidueTerm> terms;
  LaurentPoly signed_sum;  // sum of sign * q^exponent, before the Omega factor
  LaurentPoly trace;
};

/// Full evaluation with the intermediate terms kept. Throws
/// NotInChamberInterior unless lambda is interior to some a^m, and
/// NonDivisible if the final (q^n - 1) division leaves a remainder.
inline ResidueEvaluation evaluate_residue(int n, const WeightVector& lambda) {
  require_rank(lambda, n);
  const auto chamber = classify_chamber(lambda);
  if (!chamber.interior()) {
    throw NotInChamberInterior("lambda=(" + to_string(lambda) + ") is " + chamber.to_string());
  }
  ResidueEvaluation out;
  out.m = chamber.m;
  out.terms = residue_terms(n, chamber.m, lambda);
  for (const auto& t : out.terms) out.signed_sum += LaurentPoly::monomial(t.sign, t.exponent);
  const auto om = omega(n);
  out.trace = lp_exact_div(out.signed_sum * om.numerator, om.denominator);
  return out;
}

inline LaurentPoly trace_residue(int n, const WeightVector& lambda) {
  return evaluate_residue(n, lambda).trace;
}

}  // namespace hecke
