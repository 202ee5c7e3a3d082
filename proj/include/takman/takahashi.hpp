#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "takman/error.hpp"
#include "takman/intmatrix.hpp"
#include "takman/presentation.hpp"
#include "takman/twobridge.hpp"
#include "takman/word.hpp"

namespace takman {

// Rational surgery data on the 2nm-component chain link: coefficient
// p_{k,j}/q_{k,j} on component c_{2k-1,j} and r_{k,j}/s_{k,j} on c_{2k,j},
// k = 1..n, j = 1..m. Stored 0-based, index k*m + j.
struct SurgeryData {
  std::size_t n = 1;
  std::size_t m = 1;
  std::vector<std::int64_t> p, q, r, s;  // n*m entries each

  std::size_t idx(std::size_t k, std::size_t j) const { return k * m + j; }

  void validate() const {
    if (n < 1 || m < 1)
      throw invalid_input("surgery data needs n >= 1 and m >= 1");
    const std::size_t total = n * m;
    if (p.size() != total || q.size() != total || r.size() != total ||
        s.size() != total)
      throw invalid_input("surgery data arrays must each hold n*m entries");
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < m; ++j) {
        auto where = [&](const char* name) {
          return std::string(name) + " at (k=" + std::to_string(k + 1) +
                 ", j=" + std::to_string(j + 1) + ")";
        };
        if (p[idx(k, j)] < 0)
          throw invalid_input("negative " + where("p"), errc::sign_constraint);
        if (r[idx(k, j)] < 0)
          throw invalid_input("negative " + where("r"), errc::sign_constraint);
        if (std::gcd(p[idx(k, j)], q[idx(k, j)]) != 1)
          throw invalid_input("non-coprime " + where("p/q"), errc::non_coprime);
        if (std::gcd(r[idx(k, j)], s[idx(k, j)]) != 1)
          throw invalid_input("non-coprime " + where("r/s"), errc::non_coprime);
      }
  }
};

// n-periodic surgery data: one coefficient column per j, repeated for all k.
struct PeriodicSurgeryData {
  std::size_t n = 1;
  std::size_t m = 1;
  std::vector<std::int64_t> p, q, r, s;  // m entries each

  void validate() const {
    if (n < 1 || m < 1)
      throw invalid_input("surgery data needs n >= 1 and m >= 1");
    if (p.size() != m || q.size() != m || r.size() != m || s.size() != m)
      throw invalid_input("periodic surgery data arrays must each hold m entries");
    for (std::size_t j = 0; j < m; ++j) {
      if (p[j] < 0 || r[j] < 0)
        throw invalid_input("negative p or r at j=" + std::to_string(j + 1),
                            errc::sign_constraint);
      if (std::gcd(p[j], q[j]) != 1 || std::gcd(r[j], s[j]) != 1)
        throw invalid_input("non-coprime coefficient pair at j=" +
                                std::to_string(j + 1),
                            errc::non_coprime);
    }
  }

  SurgeryData periodize() const {
    validate();
    SurgeryData d;
    d.n = n;
    d.m = m;
    d.p.reserve(n * m);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < m; ++j) {
        d.p.push_back(p[j]);
        d.q.push_back(q[j]);
        d.r.push_back(r[j]);
        d.s.push_back(s[j]);
      }
    return d;
  }
};

namespace detail {

// Generator/component index for a_{i,j}: first subscript lives in Z/2n
// (represented 1..2n), second is literal 1..m. 0-based result.
inline std::size_t chain_index(std::int64_t i, std::int64_t j, std::size_t n,
                               std::size_t m) {
  const std::int64_t two_n = static_cast<std::int64_t>(2 * n);
  std::int64_t i0 = (i - 1) % two_n;
  if (i0 < 0) i0 += two_n;
  return static_cast<std::size_t>(i0) * m + static_cast<std::size_t>(j - 1);
}

// Coefficient subscript k lives in Z/n (represented 1..n). 0-based result.
inline std::size_t coeff_index(std::int64_t k, std::size_t n) {
  std::int64_t k0 = (k - 1) % static_cast<std::int64_t>(n);
  if (k0 < 0) k0 += static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(k0);
}

inline std::vector<std::string> chain_generator_names(std::size_t n,
                                                      std::size_t m) {
  std::vector<std::string> names;
  names.reserve(2 * n * m);
  for (std::size_t i = 1; i <= 2 * n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      names.push_back("a[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  return names;
}

}  // namespace detail

// Balanced presentation of the fundamental group of the surgered manifold:
// 2nm generators a_{i,j} and 2nm relators
//   a_{2k-1,j}^{-p_{k,j}} = a_{2k-2,j}^{s_{k-1,j}} ... a_{2k-2,m}^{s_{k-1,m}}
//                           a_{2k,m}^{-s_{k,m}} ... a_{2k,j}^{-s_{k,j}}
//   a_{2k,j}^{-r_{k,j}}   = a_{2k+1,j}^{q_{k+1,j}} ... a_{2k+1,1}^{q_{k+1,1}}
//                           a_{2k-1,1}^{-q_{k,1}} ... a_{2k-1,j}^{-q_{k,j}}
// stored as lhs * rhs^-1, freely reduced.
inline Presentation takahashi_presentation(const SurgeryData& d) {
  d.validate();
  const std::int64_t n = static_cast<std::int64_t>(d.n);
  const std::int64_t m = static_cast<std::int64_t>(d.m);
  auto gen = [&](std::int64_t i, std::int64_t j) {
    return static_cast<GenRef>(detail::chain_index(i, j, d.n, d.m));
  };
  auto co = [&](std::int64_t k, std::int64_t j) {
    return detail::coeff_index(k, d.n) * d.m + static_cast<std::size_t>(j - 1);
  };

  Presentation out;
  out.generators = detail::chain_generator_names(d.n, d.m);

  for (std::int64_t k = 1; k <= n; ++k)
    for (std::int64_t j = 1; j <= m; ++j) {
      std::vector<Syllable> rhs;
      for (std::int64_t jj = j; jj <= m; ++jj)
        rhs.push_back({gen(2 * k - 2, jj), d.s[co(k - 1, jj)]});
      for (std::int64_t jj = m; jj >= j; --jj)
        rhs.push_back({gen(2 * k, jj), -d.s[co(k, jj)]});
      Word lhs{{gen(2 * k - 1, j), -d.p[co(k, j)]}};
      out.relators.push_back(concat(lhs, invert(Word::from_raw(rhs))));
    }
  for (std::int64_t k = 1; k <= n; ++k)
    for (std::int64_t j = 1; j <= m; ++j) {
      std::vector<Syllable> rhs;
      for (std::int64_t jj = j; jj >= 1; --jj)
        rhs.push_back({gen(2 * k + 1, jj), d.q[co(k + 1, jj)]});
      for (std::int64_t jj = 1; jj <= j; ++jj)
        rhs.push_back({gen(2 * k - 1, jj), -d.q[co(k, jj)]});
      Word lhs{{gen(2 * k, j), -d.r[co(k, j)]}};
      out.relators.push_back(concat(lhs, invert(Word::from_raw(rhs))));
    }
  return out;
}

// Same presentation written directly from the n-periodic coefficients
// (no k-shift on the exponents). Agrees with takahashi_presentation of the
// periodized data as an ordered relator list.
inline Presentation periodic_takahashi_presentation(const PeriodicSurgeryData& d) {
  d.validate();
  const std::int64_t n = static_cast<std::int64_t>(d.n);
  const std::int64_t m = static_cast<std::int64_t>(d.m);
  auto gen = [&](std::int64_t i, std::int64_t j) {
    return static_cast<GenRef>(detail::chain_index(i, j, d.n, d.m));
  };

  Presentation out;
  out.generators = detail::chain_generator_names(d.n, d.m);

  for (std::int64_t k = 1; k <= n; ++k)
    for (std::int64_t j = 1; j <= m; ++j) {
      std::vector<Syllable> rhs;
      for (std::int64_t jj = j; jj <= m; ++jj)
        rhs.push_back({gen(2 * k - 2, jj), d.s[static_cast<std::size_t>(jj - 1)]});
      for (std::int64_t jj = m; jj >= j; --jj)
        rhs.push_back({gen(2 * k, jj), -d.s[static_cast<std::size_t>(jj - 1)]});
      Word lhs{{gen(2 * k - 1, j), -d.p[static_cast<std::size_t>(j - 1)]}};
      out.relators.push_back(concat(lhs, invert(Word::from_raw(rhs))));
    }
  for (std::int64_t k = 1; k <= n; ++k)
    for (std::int64_t j = 1; j <= m; ++j) {
      std::vector<Syllable> rhs;
      for (std::int64_t jj = j; jj >= 1; --jj)
        rhs.push_back({gen(2 * k + 1, jj), d.q[static_cast<std::size_t>(jj - 1)]});
      for (std::int64_t jj = 1; jj <= j; ++jj)
        rhs.push_back({gen(2 * k - 1, jj), -d.q[static_cast<std::size_t>(jj - 1)]});
      Word lhs{{gen(2 * k, j), -d.r[static_cast<std::size_t>(j - 1)]}};
      out.relators.push_back(concat(lhs, invert(Word::from_raw(rhs))));
    }
  return out;
}

namespace detail {

inline std::size_t wirt_x(std::int64_t k, std::int64_t j, std::size_t n,
                          std::size_t m) {
  return coeff_index(k, n) * m + static_cast<std::size_t>(j - 1);
}

inline std::size_t wirt_y(std::int64_t k, std::int64_t j, std::size_t n,
                          std::size_t m) {
  return n * m + coeff_index(k, n) * m + static_cast<std::size_t>(j - 1);
}

}  // namespace detail

inline std::vector<std::string> wirtinger_generator_names(std::size_t n,
                                                          std::size_t m) {
  std::vector<std::string> names;
  names.reserve(2 * n * m);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t j = 1; j <= m; ++j)
      names.push_back("x[" + std::to_string(k) + "][" + std::to_string(j) + "]");
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t j = 1; j <= m; ++j)
      names.push_back("y[" + std::to_string(k) + "][" + std::to_string(j) + "]");
  return names;
}

// Longitudes of the chain-link components, as words in the meridians:
//   h_{k,j} = y_{k-1,j} ... y_{k-1,m} y_{k,m}^-1 ... y_{k,j}^-1
//   l_{k,j} = x_{k+1,j} ... x_{k+1,1} x_{k,1}^-1 ... x_{k,j}^-1
// (first subscripts mod n; both words freely reduced, so at n = 1 the
// wrap k-1 = k = k+1 collapses them to the empty word).
struct LongitudePair {
  Word h;  // longitude of c_{2k-1,j}, a word in the y meridians
  Word l;  // longitude of c_{2k,j}, a word in the x meridians
};

inline std::vector<LongitudePair> chain_longitudes(std::size_t n,
                                                   std::size_t m) {
  if (n < 1 || m < 1) throw invalid_input("chain link needs n, m >= 1");
  const std::int64_t mm = static_cast<std::int64_t>(m);
  std::vector<LongitudePair> out;
  out.reserve(n * m);
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n); ++k)
    for (std::int64_t j = 1; j <= mm; ++j) {
      std::vector<Syllable> h;
      for (std::int64_t jj = j; jj <= mm; ++jj)
        h.push_back({static_cast<GenRef>(detail::wirt_y(k - 1, jj, n, m)), 1});
      for (std::int64_t jj = mm; jj >= j; --jj)
        h.push_back({static_cast<GenRef>(detail::wirt_y(k, jj, n, m)), -1});
      std::vector<Syllable> l;
      for (std::int64_t jj = j; jj >= 1; --jj)
        l.push_back({static_cast<GenRef>(detail::wirt_x(k + 1, jj, n, m)), 1});
      for (std::int64_t jj = 1; jj <= j; ++jj)
        l.push_back({static_cast<GenRef>(detail::wirt_x(k, jj, n, m)), -1});
      out.push_back({Word::from_raw(h), Word::from_raw(l)});
    }
  return out;
}

// Wirtinger presentation of the chain-link complement: one meridian per
// component and one conjugation relator per component, written as
// h^-1 x h x^-1 and l^-1 y l y^-1.
inline Presentation chain_wirtinger_presentation(std::size_t n, std::size_t m) {
  std::vector<LongitudePair> lng = chain_longitudes(n, m);
  Presentation out;
  out.generators = wirtinger_generator_names(n, m);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t j = 1; j <= m; ++j) {
      const Word& h = lng[(k - 1) * m + (j - 1)].h;
      Word x{{static_cast<GenRef>(detail::wirt_x(static_cast<std::int64_t>(k),
                                                 static_cast<std::int64_t>(j), n, m)),
              1}};
      out.relators.push_back(concat({invert(h), x, h, invert(x)}));
    }
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t j = 1; j <= m; ++j) {
      const Word& l = lng[(k - 1) * m + (j - 1)].l;
      Word y{{static_cast<GenRef>(detail::wirt_y(static_cast<std::int64_t>(k),
                                                 static_cast<std::int64_t>(j), n, m)),
              1}};
      out.relators.push_back(concat({invert(l), y, l, invert(y)}));
    }
  return out;
}

// Wirtinger presentation plus the 2nm Dehn-filling relators
// x_{k,j}^{p} h_{k,j}^{q} and y_{k,j}^{r} l_{k,j}^{s}. Presents the same
// group as takahashi_presentation, with twice as many relators.
inline Presentation wirtinger_surgery_presentation(const SurgeryData& d) {
  d.validate();
  Presentation out = chain_wirtinger_presentation(d.n, d.m);
  std::vector<LongitudePair> lng = chain_longitudes(d.n, d.m);
  for (std::size_t k = 0; k < d.n; ++k)
    for (std::size_t j = 0; j < d.m; ++j) {
      Word x{{static_cast<GenRef>(k * d.m + j), 1}};
      out.relators.push_back(concat(power(x, d.p[d.idx(k, j)]),
                                    power(lng[k * d.m + j].h, d.q[d.idx(k, j)])));
    }
  for (std::size_t k = 0; k < d.n; ++k)
    for (std::size_t j = 0; j < d.m; ++j) {
      Word y{{static_cast<GenRef>(d.n * d.m + k * d.m + j), 1}};
      out.relators.push_back(concat(power(y, d.r[d.idx(k, j)]),
                                    power(lng[k * d.m + j].l, d.s[d.idx(k, j)])));
    }
  return out;
}

// Integers (u, v) with q*u - p*v = 1, for coprime p, q. Deterministic:
// least |u|, ties toward the smaller u.
struct BezoutPair {
  std::int64_t u = 0;
  std::int64_t v = 0;
};

inline BezoutPair bezout_coefficients(std::int64_t p, std::int64_t q) {
  ExtendedGcd e = extended_gcd(q, p);
  if (e.g != 1)
    throw invalid_input("bezout_coefficients: gcd(" + std::to_string(p) + ", " +
                            std::to_string(q) + ") != 1",
                        errc::non_coprime);
  BigInt u = e.x;
  BigInt v = -e.y;
  if (p != 0) {
    BigInt pa = p < 0 ? BigInt(-p) : BigInt(p);
    BigInt lo = u % pa;
    if (lo < 0) lo += pa;      // residue in [0, |p|)
    BigInt hi = lo - pa;       // residue in [-|p|, 0)
    if (abs(hi) < abs(lo) || (abs(hi) == abs(lo) && hi < lo))
      u = hi;
    else
      u = lo;
    v = (BigInt(q) * u - 1) / p;
  } else {
    v = 0;  // q = +-1; any v solves, 0 is least
  }
  return {u.convert_to<std::int64_t>(), v.convert_to<std::int64_t>()};
}

// Linking matrix of the chain link, component order
// c_{1,1},...,c_{1,m},c_{2,1},...,c_{2n,m}. Entries are read off the
// longitude words: lk(A, B) = exponent sum of B's meridian in A's
// longitude. Symmetric with zero diagonal for n >= 2; identically zero at
// n = 1, where the wrapped longitudes cancel.
inline IntMatrix linking_matrix(std::size_t n, std::size_t m) {
  std::vector<LongitudePair> lng = chain_longitudes(n, m);
  const std::size_t total = 2 * n * m;
  IntMatrix lk(total, total);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t row_odd = detail::chain_index(static_cast<std::int64_t>(2 * k - 1),
                                                static_cast<std::int64_t>(j), n, m);
      std::size_t row_even = detail::chain_index(static_cast<std::int64_t>(2 * k),
                                                 static_cast<std::int64_t>(j), n, m);
      const LongitudePair& pair = lng[(k - 1) * m + (j - 1)];
      std::vector<std::int64_t> hs = exponent_sums(pair.h, total);
      std::vector<std::int64_t> ls = exponent_sums(pair.l, total);
      for (std::size_t kk = 1; kk <= n; ++kk)
        for (std::size_t jj = 1; jj <= m; ++jj) {
          std::size_t xg = detail::wirt_x(static_cast<std::int64_t>(kk),
                                          static_cast<std::int64_t>(jj), n, m);
          std::size_t yg = detail::wirt_y(static_cast<std::int64_t>(kk),
                                          static_cast<std::int64_t>(jj), n, m);
          std::size_t comp_odd = detail::chain_index(
              static_cast<std::int64_t>(2 * kk - 1), static_cast<std::int64_t>(jj), n, m);
          std::size_t comp_even = detail::chain_index(
              static_cast<std::int64_t>(2 * kk), static_cast<std::int64_t>(jj), n, m);
          lk.at(row_odd, comp_odd) += hs[xg];
          lk.at(row_odd, comp_even) += hs[yg];
          lk.at(row_even, comp_odd) += ls[xg];
          lk.at(row_even, comp_even) += ls[yg];
        }
    }
  return lk;
}

// First-homology presentation matrix of the surgered manifold from the
// framed linking matrix: row i = p_i*e_i + q_i*(linking row i).
inline IntMatrix surgery_homology_matrix(const SurgeryData& d) {
  d.validate();
  IntMatrix lk = linking_matrix(d.n, d.m);
  const std::size_t total = 2 * d.n * d.m;
  IntMatrix out(total, total);
  for (std::size_t k = 0; k < d.n; ++k)
    for (std::size_t j = 0; j < d.m; ++j) {
      std::size_t row_odd = (2 * k) * d.m + j;
      std::size_t row_even = (2 * k + 1) * d.m + j;
      for (std::size_t c = 0; c < total; ++c) {
        out.at(row_odd, c) = BigInt(d.q[d.idx(k, j)]) * lk.at(row_odd, c);
        out.at(row_even, c) = BigInt(d.s[d.idx(k, j)]) * lk.at(row_even, c);
      }
      out.at(row_odd, row_odd) += d.p[d.idx(k, j)];
      out.at(row_even, row_even) += d.r[d.idx(k, j)];
    }
  return out;
}

// The order-n rotation of the chain, realized on generators:
// a_{i,j} -> a_{i+2 mod 2n, j}.
inline ShiftMap takahashi_shift(std::size_t n, std::size_t m) {
  ShiftMap sh;
  sh.image.resize(2 * n * m);
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      sh.image[i * m + j] = static_cast<GenRef>(((i + 2) % (2 * n)) * m + j);
  return sh;
}

// Surgery data of the n-fold cyclic branched cover of the two-bridge knot
// with even Conway form [-2q_1, 2s_1, ..., -2q_m, 2s_m]:
// p_j = r_j = 1, q_j = -c_{2j-1}/2, s_j = c_{2j}/2.
inline PeriodicSurgeryData cover_surgery_data(const ConwayEven& c,
                                              std::size_t n) {
  c.validate();
  PeriodicSurgeryData d;
  d.n = n;
  d.m = c.m();
  d.p.assign(d.m, 1);
  d.r.assign(d.m, 1);
  d.q = c.q_values();
  d.s = c.s_values();
  d.validate();
  return d;
}

// --- surgery data file format --------------------------------------------
//
//   n: 3
//   m: 2
//   pq: (5,2) (7,3) ; (1,-1) (1,1) ; (3,2) (2,1)
//   rs: (3,1) (4,1) ; (1,1) (1,-1) ; (2,1) (5,3)
//
// Rows separated by `;` are k = 1..n; pairs within a row are j = 1..m.

inline std::string surgery_data_to_text(const SurgeryData& d) {
  auto line = [&](const std::vector<std::int64_t>& a,
                  const std::vector<std::int64_t>& b) {
    std::string out;
    for (std::size_t k = 0; k < d.n; ++k) {
      if (k > 0) out += " ;";
      for (std::size_t j = 0; j < d.m; ++j)
        out += " (" + std::to_string(a[d.idx(k, j)]) + "," +
               std::to_string(b[d.idx(k, j)]) + ")";
    }
    return out;
  };
  return "n: " + std::to_string(d.n) + "\nm: " + std::to_string(d.m) +
         "\npq:" + line(d.p, d.q) + "\nrs:" + line(d.r, d.s) + "\n";
}

namespace detail {

inline void parse_pair_rows(std::string_view body, std::size_t n, std::size_t m,
                            std::vector<std::int64_t>& first,
                            std::vector<std::int64_t>& second,
                            const char* label) {
  first.assign(n * m, 0);
  second.assign(n * m, 0);
  std::size_t k = 0, j = 0, pos = 0;
  auto fail = [&](const std::string& why) {
    throw invalid_input(std::string(label) + " line: " + why, errc::parse);
  };
  while (pos < body.size()) {
    char ch = body[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
    } else if (ch == ';') {
      if (j != m) fail("row " + std::to_string(k + 1) + " has " +
                       std::to_string(j) + " pairs, expected " + std::to_string(m));
      ++k;
      j = 0;
      ++pos;
    } else if (ch == '(') {
      std::size_t close = body.find(')', pos);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      std::string inner(body.substr(pos + 1, close - pos - 1));
      std::size_t comma = inner.find(',');
      if (comma == std::string::npos) fail("pair without comma: (" + inner + ")");
      if (k >= n || j >= m) fail("more pairs than n*m");
      try {
        first[k * m + j] = std::stoll(inner.substr(0, comma));
        second[k * m + j] = std::stoll(inner.substr(comma + 1));
      } catch (const std::exception&) {
        fail("bad integer in pair (" + inner + ")");
      }
      ++j;
      pos = close + 1;
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }
  if (k != n - 1 || j != m)
    fail("expected " + std::to_string(n) + " rows of " + std::to_string(m) +
         " pairs");
}

}  // namespace detail

inline SurgeryData parse_surgery_data(std::string_view text) {
  std::size_t n = 0, m = 0;
  std::string_view pq_body, rs_body;
  bool have_n = false, have_m = false, have_pq = false, have_rs = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    if (line.empty()) continue;
    auto value_of = [&](std::string_view l, std::size_t& out) {
      try {
        out = static_cast<std::size_t>(std::stoull(std::string(l)));
      } catch (const std::exception&) {
        throw invalid_input("bad integer in surgery data header", errc::parse);
      }
    };
    if (line.rfind("n:", 0) == 0) {
      value_of(line.substr(2), n);
      have_n = true;
    } else if (line.rfind("m:", 0) == 0) {
      value_of(line.substr(2), m);
      have_m = true;
    } else if (line.rfind("pq:", 0) == 0) {
      pq_body = line.substr(3);
      have_pq = true;
    } else if (line.rfind("rs:", 0) == 0) {
      rs_body = line.substr(3);
      have_rs = true;
    } else {
      throw invalid_input("unrecognized surgery data line '" + std::string(line) + "'",
                          errc::parse);
    }
  }
  if (!have_n || !have_m || !have_pq || !have_rs)
    throw invalid_input("surgery data needs n:, m:, pq: and rs: lines",
                        errc::parse);
  if (n < 1 || m < 1)
    throw invalid_input("surgery data needs n >= 1 and m >= 1", errc::parse);

  SurgeryData d;
  d.n = n;
  d.m = m;
  detail::parse_pair_rows(pq_body, n, m, d.p, d.q, "pq");
  detail::parse_pair_rows(rs_body, n, m, d.r, d.s, "rs");
  d.validate();
  return d;
}

}  // namespace takman
