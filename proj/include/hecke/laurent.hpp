#pragma once

// Exact Laurent polynomials in one variable q over an integer coefficient
// ring. The default instantiation uses arbitrary-precision integers.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hecke/errors.hpp"

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;

template <class Coeff>
class BasicLaurentPoly {
 public:
  struct Term {
    int exp;
    Coeff coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  BasicLaurentPoly() = default;

  // Constant polynomial.
  BasicLaurentPoly(Coeff c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({0, std::move(c)});
  }
  template <std::integral I>
    requires(!std::same_as<I, Coeff>)
  BasicLaurentPoly(I c) : BasicLaurentPoly(Coeff(c)) {}  // NOLINT

  /// Builds from (exponent, coefficient) pairs in any order; repeated
  /// exponents are summed and zero coefficients dropped.
  BasicLaurentPoly(std::initializer_list<std::pair<int, Coeff>> terms) {
    std::vector<Term> raw;
    raw.reserve(terms.size());
    for (const auto& [e, c] : terms) raw.push_back({e, c});
    *this = from_terms(std::move(raw));
  }

  static BasicLaurentPoly from_terms(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.exp < b.exp; });
    BasicLaurentPoly out;
    for (auto& t : raw) {
      if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
        out.terms_.back().coeff += t.coeff;
        if (out.terms_.back().coeff == 0) out.terms_.pop_back();
      } else if (t.coeff != 0) {
        out.terms_.push_back(std::move(t));
      }
    }
    return out;
  }

  static BasicLaurentPoly monomial(Coeff c, int exp) {
    BasicLaurentPoly out;
    if (c != 0) out.terms_.push_back({exp, std::move(c)});
    return out;
  }

  /// q^exp
  static BasicLaurentPoly q(int exp = 1) { return monomial(Coeff(1), exp); }

  /// Terms in increasing exponent order; never contains a zero coefficient.
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Undefined on the zero polynomial.
  int min_exp() const { return terms_.front().exp; }
  int max_exp() const { return terms_.back().exp; }

  Coeff coeff(int exp) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exp,
        [](const Term& t, int e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coeff;
    return Coeff(0);
  }

  /// Multiplication by q^k.
  BasicLaurentPoly shifted(int k) const {
    BasicLaurentPoly out = *this;
    for (auto& t : out.terms_) t.exp += k;
    return out;
  }

  /// Substitution q -> q^s (s may be negative).
  BasicLaurentPoly substitute_power(int s) const {
    BasicLaurentPoly out = *this;
    for (auto& t : out.terms_) t.exp *= s;
    if (s < 0) std::reverse(out.terms_.begin(), out.terms_.end());
    if (s == 0) return from_terms(out.terms_);
    return out;
  }

  /// Substitution q -> q^-1.
  BasicLaurentPoly bar() const { return substitute_power(-1); }

  /// Value at q = 1, i.e. the coefficient sum.
  Coeff value_at_one() const {
    Coeff s = 0;
    for (const auto& t : terms_) s += t.coeff;
    return s;
  }

  BasicLaurentPoly operator-() const {
    BasicLaurentPoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  BasicLaurentPoly& operator+=(const BasicLaurentPoly& o) {
    return *this = add(*this, o, false);
  }
  BasicLaurentPoly& operator-=(const BasicLaurentPoly& o) {
    return *this = add(*this, o, true);
  }
  BasicLaurentPoly& operator*=(const BasicLaurentPoly& o) {
    return *this = *this * o;
  }

  friend BasicLaurentPoly operator+(const BasicLaurentPoly& a,
                                    const BasicLaurentPoly& b) {
    return add(a, b, false);
  }
  friend BasicLaurentPoly operator-(const BasicLaurentPoly& a,
                                    const BasicLaurentPoly& b) {
    return add(a, b, true);
  }

  friend BasicLaurentPoly operator*(const BasicLaurentPoly& a,
                                    const BasicLaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1 && b.size() == 1) {
      return monomial(a.terms_[0].coeff * b.terms_[0].coeff,
                      a.terms_[0].exp + b.terms_[0].exp);
    }
    // Schoolbook product into a dense accumulator over the exponent range.
    const int lo = a.min_exp() + b.min_exp();
    const int hi = a.max_exp() + b.max_exp();
    std::vector<Coeff> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        acc[static_cast<std::size_t>(x.exp + y.exp - lo)] += x.coeff * y.coeff;
      }
    }
    BasicLaurentPoly out;
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] != 0) {
        out.terms_.push_back({lo + static_cast<int>(i), std::move(acc[i])});
      }
    }
    return out;
  }

  friend bool operator==(const BasicLaurentPoly&,
                         const BasicLaurentPoly&) = default;

  /// Canonical text form: decreasing exponents, every term signed,
  /// "c*q^e" with the exponent-0 term as a bare coefficient, "0" for zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << ' ';
      first = false;
      Coeff mag = it->coeff < 0 ? Coeff(-it->coeff) : it->coeff;
      os << (it->coeff < 0 ? '-' : '+') << mag;
      if (it->exp != 0) os << "*q^" << it->exp;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicLaurentPoly& p) {
    return os << p.to_string();
  }

 private:
  static BasicLaurentPoly add(const BasicLaurentPoly& a,
                              const BasicLaurentPoly& b, bool negate_b) {
    BasicLaurentPoly out;
    out.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    auto push = [&](int e, Coeff c) {
      if (c != 0) out.terms_.push_back({e, std::move(c)});
    };
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
        push(i->exp, i->coeff);
        ++i;
      } else if (i == a.terms_.end() || j->exp < i->exp) {
        push(j->exp, negate_b ? Coeff(-j->coeff) : j->coeff);
        ++j;
      } else {
        push(i->exp, negate_b ? Coeff(i->coeff - j->coeff)
                              : Coeff(i->coeff + j->coeff));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

using LaurentPoly = BasicLaurentPoly<BigInt>;

template <class Coeff>
BasicLaurentPoly<Coeff> lp_mul(const BasicLaurentPoly<Coeff>& a,
                               const BasicLaurentPoly<Coeff>& b) {
  return a * b;
}

template <class Coeff>
BasicLaurentPoly<Coeff> lp_bar(const BasicLaurentPoly<Coeff>& a) {
  return a.bar();
}

/// Exact quotient num / den in the Laurent ring.
///
/// Sparse long division from the top exponent. A quotient, if it exists,
/// has exponents in [num.min - den.min, num.max - den.max]; any remainder
/// term that would need a quotient exponent below that window, or a
/// leading coefficient that does not divide, makes the division fail.
template <class Coeff>
BasicLaurentPoly<Coeff> lp_exact_div(const BasicLaurentPoly<Coeff>& num,
                                     const BasicLaurentPoly<Coeff>& den) {
  using Poly = BasicLaurentPoly<Coeff>;
  if (den.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
  if (num.is_zero()) return {};

  const int den_top = den.max_exp();
  const Coeff& den_lead = den.terms().back().coeff;
  const int floor_exp = num.min_exp() - den.min_exp();

  std::vector<typename Poly::Term> quotient;
  Poly rem = num;
  while (!rem.is_zero()) {
    const auto& top = rem.terms().back();
    const int qexp = top.exp - den_top;
    if (qexp < floor_exp || top.coeff % den_lead != 0) {
      throw NonDivisible("(" + num.to_string() + ") is not divisible by (" +
                         den.to_string() + ")");
    }
    Coeff qc = top.coeff / den_lead;
    rem -= Poly::monomial(qc, qexp) * den;
    quotient.push_back({qexp, std::move(qc)});
  }
  return Poly::from_terms(std::move(quotient));
}

/// The q-integer [k]_{q^s} = 1 + q^s + ... + q^{s(k-1)}.
inline LaurentPoly q_integer(int k, int base_power = 1) {
  if (k < 0) throw NegativeIndex("q-integer index " + std::to_string(k) + " is negative");
  if (base_power < 1) {
    throw OutOfRange("q-integer base power must be >= 1, got " +
                     std::to_string(base_power));
  }
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) terms.push_back({i * base_power, BigInt(1)});
  return LaurentPoly::from_terms(std::move(terms));
}

/// Integer power by repeated squaring.
template <class Coeff>
BasicLaurentPoly<Coeff> lp_pow(BasicLaurentPoly<Coeff> base, unsigned e) {
  BasicLaurentPoly<Coeff> out(1);
  while (e != 0) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return out;
}

}  // namespace hecke
