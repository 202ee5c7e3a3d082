#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace takman {

using BigInt = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;

// Quotient rounded toward negative infinity.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// Nearest integer to a/b; exact halves are rounded toward zero.
inline BigInt round_div_half_to_zero(BigInt a, BigInt b) {
  if (b < 0) {
    a = -a;
    b = -b;
  }
  BigInt q = floor_div(a, b);
  BigInt r = a - q * b;  // 0 <= r < b
  BigInt twice = 2 * r;
  if (twice > b) return q + 1;
  if (twice < b) return q;
  return q >= 0 ? q : q + 1;  // tie: pick the candidate closer to zero
}

struct ExtendedGcd {
  BigInt g;  // gcd(a, b) >= 0
  BigInt x;
  BigInt y;  // a*x + b*y = g
};

inline ExtendedGcd extended_gcd(BigInt a, BigInt b) {
  BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    BigInt q = a / b;
    BigInt t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  return {a, x0, y0};
}

// Inverse of a modulo n (n >= 1, gcd(a, n) = 1), reduced into [0, n).
inline BigInt mod_inverse(const BigInt& a, const BigInt& n) {
  ExtendedGcd e = extended_gcd(a, n);
  BigInt r = e.x % n;
  if (r < 0) r += n;
  return r;
}

}  // namespace takman
