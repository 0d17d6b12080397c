#pragma once

// Closed product formula on the interior of a^m_{n-1}:
//
//   q^{-sum a} (q-1)^{2(n-1)} [a_{n-m}]_{q^n}
//     prod_{i=1}^{n-m-1} [(i+1) a_i - i a_{i+1}]_q
//     prod_{j=1}^{m-1}   [(j+1) a_{n-j} - j a_{n-j-1}]_q

#include <string>

#include "hecke/chambers.hpp"
#include "hecke/laurent.hpp"
#include "hecke/roots.hpp"

namespace hecke {

inline LaurentPoly trace_product(int n, const WeightVector& lambda) {
  require_rank(lambda, n);
  const auto chamber = classify_chamber(lambda);
  if (!chamber.interior()) {
    throw NotInChamberInterior("lambda=(" + to_string(lambda) + ") is " + chamber.to_string());
  }
  const int m = chamber.m;
  // 1-based access a(i) = a_i.
  auto a = [&](int i) { return lambda[static_cast<std::size_t>(i - 1)]; };
  auto guarded = [](int k) {
    // Strictly positive inside the chamber; anything else is a logic error.
    if (k <= 0) throw NegativeIndex("q-integer index " + std::to_string(k) + " in chamber interior");
    return q_integer(k);
  };

  LaurentPoly out = lp_pow(LaurentPoly{{1, 1}, {0, -1}}, static_cast<unsigned>(2 * (n - 1)));
  out = out.shifted(-lambda.total());
  out *= q_integer(a(n - m), n);
  for (int i = 1; i <= n - m - 1; ++i) out *= guarded((i + 1) * a(i) - i * a(i + 1));
  for (int j = 1; j <= m - 1; ++j) out *= guarded((j + 1) * a(n - j) - j * a(n - j - 1));
  return out;
}

}  // namespace hecke
