#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "takman/bigint.hpp"
#include "takman/error.hpp"
#include "takman/intmatrix.hpp"

namespace takman {

// Integer Laurent polynomial. Coefficients run from min_degree upward;
// the first and last stored coefficients are nonzero unless the polynomial
// is zero (empty coefficient list, min_degree 0).
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly from_coeffs(std::int64_t min_degree,
                                 std::vector<BigInt> coeffs) {
    std::size_t lead = coeffs.size();
    while (lead > 0 && coeffs[lead - 1] == 0) --lead;
    coeffs.resize(lead);
    std::size_t low = 0;
    while (low < coeffs.size() && coeffs[low] == 0) ++low;
    if (low > 0) {
      coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(low));
      min_degree += static_cast<std::int64_t>(low);
    }
    LaurentPoly p;
    if (!coeffs.empty()) {
      p.min_ = min_degree;
      p.c_ = std::move(coeffs);
    }
    return p;
  }

  static LaurentPoly constant(BigInt c) { return from_coeffs(0, {std::move(c)}); }

  static LaurentPoly monomial(BigInt c, std::int64_t degree) {
    return from_coeffs(degree, {std::move(c)});
  }

  bool is_zero() const { return c_.empty(); }
  std::int64_t min_degree() const { return min_; }
  std::int64_t max_degree() const {
    return min_ + static_cast<std::int64_t>(c_.size()) - 1;
  }
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt coefficient(std::int64_t degree) const {
    if (is_zero() || degree < min_ || degree > max_degree()) return 0;
    return c_[static_cast<std::size_t>(degree - min_)];
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::int64_t min_ = 0;
  std::vector<BigInt> c_;
};

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t lo = std::min(a.min_degree(), b.min_degree());
  std::int64_t hi = std::max(a.max_degree(), b.max_degree());
  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t d = lo; d <= hi; ++d)
    c[static_cast<std::size_t>(d - lo)] = a.coefficient(d) + b.coefficient(d);
  return LaurentPoly::from_coeffs(lo, std::move(c));
}

inline LaurentPoly negate(const LaurentPoly& p) {
  std::vector<BigInt> c = p.coeffs();
  for (BigInt& x : c) x = -x;
  return LaurentPoly::from_coeffs(p.min_degree(), std::move(c));
}

inline LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::vector<BigInt> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return LaurentPoly::from_coeffs(a.min_degree() + b.min_degree(), std::move(c));
}

// Evaluation at an integer; defined for polynomials without negative powers.
inline BigInt evaluate_at_integer(const LaurentPoly& p, const BigInt& x) {
  if (p.is_zero()) return 0;
  if (p.min_degree() < 0)
    throw invalid_input("evaluate_at_integer: negative powers of t",
                        errc::out_of_range);
  BigInt acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * x + *it;
  for (std::int64_t i = 0; i < p.min_degree(); ++i) acc *= x;
  return acc;
}

// Multiplies by the unit +-t^k that shifts min_degree to 0 and makes the
// leading coefficient positive. Idempotent.
inline LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  std::vector<BigInt> c = p.coeffs();
  if (c.back() < 0)
    for (BigInt& x : c) x = -x;
  return LaurentPoly::from_coeffs(0, std::move(c));
}

// p(1/t) * t^deg == +-p(t), i.e. the coefficient list is a palindrome up to
// overall sign. The zero polynomial counts as palindromic.
inline bool palindromic_up_to_sign(const LaurentPoly& p) {
  const std::vector<BigInt>& c = p.coeffs();
  std::vector<BigInt> r(c.rbegin(), c.rend());
  if (r == c) return true;
  for (BigInt& x : r) x = -x;
  return r == c;
}

// (t^n - 1) / (t - 1) = 1 + t + ... + t^(n-1), n >= 2.
inline LaurentPoly cyclotomic_quotient(std::int64_t n) {
  if (n < 2)
    throw invalid_input("cyclotomic_quotient requires n >= 2",
                        errc::out_of_range);
  return LaurentPoly::from_coeffs(0, std::vector<BigInt>(static_cast<std::size_t>(n), 1));
}

// Resultant of two ordinary polynomials (min_degree 0, both nonzero) as the
// determinant of their Sylvester matrix, computed fraction-free.
inline BigInt resultant(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw invalid_input("resultant of the zero polynomial", errc::generic);
  if (f.min_degree() != 0 || g.min_degree() != 0)
    throw invalid_input("resultant: shift inputs to min_degree 0 first",
                        errc::out_of_range);
  const std::size_t df = static_cast<std::size_t>(f.max_degree());
  const std::size_t dg = static_cast<std::size_t>(g.max_degree());
  IntMatrix s(df + dg, df + dg);
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t i = 0; i <= df; ++i)
      s.at(r, r + i) = f.coeffs()[df - i];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t i = 0; i <= dg; ++i)
      s.at(dg + r, r + i) = g.coeffs()[dg - i];
  return determinant(std::move(s));
}

// Canonical text form, ascending degree: e.g. `1 - 3*t + t^2`.
inline std::string poly_to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const BigInt& c = p.coeffs()[i];
    if (c == 0) continue;
    std::int64_t d = p.min_degree() + static_cast<std::int64_t>(i);
    BigInt ac = abs(c);
    std::string term;
    if (d == 0) {
      term = ac.str();
    } else {
      if (ac != 1) term = ac.str() + "*";
      term += "t";
      if (d != 1) term += "^" + std::to_string(d);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace takman
