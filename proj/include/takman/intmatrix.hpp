#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "takman/bigint.hpp"
#include "takman/error.hpp"

namespace takman {

// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(std::span<const BigInt> d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> e_;
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw invalid_input("multiply: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

// Fraction-free (Bareiss) determinant. Exact, square matrices only.
inline BigInt determinant(IntMatrix m) {
  if (m.rows() != m.cols())
    throw invalid_input("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  BigInt d = m.at(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

struct SmithForm {
  std::vector<BigInt> invariant_factors;  // d_1 | d_2 | ... | d_r, each >= 1
  std::size_t rank = 0;                   // = invariant_factors.size()
  // Unimodular transforms with left * M * right diagonal, when requested.
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;
};

// Smith normal form by elimination; each round pivots on the nonzero entry
// of least absolute value in the trailing block.
inline SmithForm smith_normal_form(const IntMatrix& input,
                                   bool with_transforms = false) {
  IntMatrix a = input;
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  IntMatrix u, v;
  if (with_transforms) {
    u = IntMatrix::identity(nr);
    v = IntMatrix::identity(nc);
  }

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < nc; ++j) std::swap(a.at(x, j), a.at(y, j));
    if (with_transforms)
      for (std::size_t j = 0; j < nr; ++j) std::swap(u.at(x, j), u.at(y, j));
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < nr; ++i) std::swap(a.at(i, x), a.at(i, y));
    if (with_transforms)
      for (std::size_t i = 0; i < nc; ++i) std::swap(v.at(i, x), v.at(i, y));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t j = 0; j < nc; ++j) a.at(dst, j) += c * a.at(src, j);
    if (with_transforms)
      for (std::size_t j = 0; j < nr; ++j) u.at(dst, j) += c * u.at(src, j);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t i = 0; i < nr; ++i) a.at(i, dst) += c * a.at(i, src);
    if (with_transforms)
      for (std::size_t i = 0; i < nc; ++i) v.at(i, dst) += c * v.at(i, src);
  };
  auto negate_row = [&](std::size_t x) {
    for (std::size_t j = 0; j < nc; ++j) a.at(x, j) = -a.at(x, j);
    if (with_transforms)
      for (std::size_t j = 0; j < nr; ++j) u.at(x, j) = -u.at(x, j);
  };

  std::size_t t = 0;
  const std::size_t tmax = nr < nc ? nr : nc;
  while (t < tmax) {
    std::size_t pi = nr, pj = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (a.at(i, j) != 0 &&
            (pi == nr || abs(a.at(i, j)) < abs(a.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == nr) break;  // trailing block is zero
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool dirty = false;
    for (std::size_t i = t + 1; i < nr; ++i) {
      if (a.at(i, t) == 0) continue;
      BigInt q = a.at(i, t) / a.at(t, t);
      if (q != 0) add_row(i, t, -q);
      if (a.at(i, t) != 0) dirty = true;
    }
    for (std::size_t j = t + 1; j < nc; ++j) {
      if (a.at(t, j) == 0) continue;
      BigInt q = a.at(t, j) / a.at(t, t);
      if (q != 0) add_col(j, t, -q);
      if (a.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;  // residues smaller than the pivot appeared

    // The pivot must divide every entry of the trailing block before it can
    // become an invariant factor.
    bool fixed = false;
    for (std::size_t i = t + 1; i < nr && !fixed; ++i)
      for (std::size_t j = t + 1; j < nc && !fixed; ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          add_row(t, i, 1);
          fixed = true;
        }
    if (fixed) continue;

    if (a.at(t, t) < 0) negate_row(t);
    ++t;
  }

  SmithForm out;
  out.rank = t;
  out.invariant_factors.reserve(t);
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(a.at(i, i));
  if (with_transforms) {
    out.left = std::move(u);
    out.right = std::move(v);
  }
  return out;
}

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
  std::vector<BigInt> torsion;  // divisibility chain, every factor > 1
  std::size_t free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  bool finite() const { return free_rank == 0; }

  // Group order; empty when the group is infinite.
  std::optional<BigInt> order() const {
    if (!finite()) return std::nullopt;
    BigInt n = 1;
    for (const BigInt& d : torsion) n *= d;
    return n;
  }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Cokernel of a relation matrix (rows = relators, cols = generators).
inline AbelianGroup cokernel(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  AbelianGroup g;
  for (const BigInt& d : s.invariant_factors)
    if (d > 1) g.torsion.push_back(d);
  g.free_rank = m.cols() - s.rank;
  return g;
}

// Text form `Z^r + Z/d1 + Z/d2 + ...`; `0` for the trivial group.
inline std::string to_string(const AbelianGroup& g) {
  std::string out;
  if (g.free_rank > 0) out = "Z^" + std::to_string(g.free_rank);
  for (const BigInt& d : g.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace takman
