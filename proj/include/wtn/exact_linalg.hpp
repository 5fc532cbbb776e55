#pragma once

// Exact integer linear algebra: Smith and Hermite normal forms, ranks,
// multiplicities of torus homomorphisms and subtorus membership of torsion points.
//
// Matrix convention: an integer matrix C = (c_ij) stands for the homomorphism of tori
// gamma_C whose pull-back on characters has C as its matrix, i.e. column j of C holds the
// exponent vector of the j-th coordinate of gamma_C. Torsion points are written in the
// dual (cocharacter) coordinates, on which gamma_C acts by the transpose of C.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtn/matrix.hpp"
#include "wtn/number_theory.hpp"

namespace wtn {

struct SmithDecomposition {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix S;  // diagonal, same shape as the source
  IntMatrix V;  // unimodular, cols x cols
  std::vector<Integer> invariant_factors;  // nonzero diagonal of S, each dividing the next

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

namespace detail {

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Position of a nonzero entry of least absolute value in the block [t.., t..].
inline bool find_min_entry(const IntMatrix& S, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < S.rows(); ++i)
    for (std::size_t j = t; j < S.cols(); ++j) {
      if (S(i, j) == 0) continue;
      Integer a = abs_value(S(i, j));
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace detail

/// Smith normal form U*A*V = S with unimodular U, V and canonical (positive,
/// divisibility-ordered) invariant factors.
inline SmithDecomposition smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  SmithDecomposition d{IntMatrix::identity(m), A, IntMatrix::identity(n), {}};
  IntMatrix& U = d.U;
  IntMatrix& S = d.S;
  IntMatrix& V = d.V;

  const std::size_t diag = std::min(m, n);
  for (std::size_t t = 0; t < diag; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!detail::find_min_entry(S, t, pi, pj)) break;
    for (;;) {
      S.swap_rows(t, pi);
      U.swap_rows(t, pi);
      S.swap_cols(t, pj);
      V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = S(i, t) / S(t, t);
        if (q != 0) {
          S.add_row_multiple(i, t, -q);
          U.add_row_multiple(i, t, -q);
        }
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = S(t, j) / S(t, t);
        if (q != 0) {
          S.add_col_multiple(j, t, -q);
          V.add_col_multiple(j, t, -q);
        }
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) {
        detail::find_min_entry(S, t, pi, pj);
        continue;
      }
      // The pivot must divide the remaining block; otherwise fold an offending row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            S.add_row_multiple(t, i, Integer(1));
            U.add_row_multiple(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
      detail::find_min_entry(S, t, pi, pj);
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
    d.invariant_factors.push_back(S(t, t));
  }
  return d;
}

inline std::vector<Integer> invariant_factors(const IntMatrix& A) {
  return smith_normal_form(A).invariant_factors;
}

/// Row-style Hermite normal form H = U*A: echelon form with positive pivots and the
/// entries above each pivot reduced into [0, pivot).
struct HermiteDecomposition {
  IntMatrix U;
  IntMatrix H;
  std::vector<std::size_t> pivot_columns;
};

inline HermiteDecomposition hermite_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  HermiteDecomposition h{IntMatrix::identity(m), A, {}};
  IntMatrix& H = h.H;
  IntMatrix& U = h.U;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    // Euclid down the column until a single nonzero entry remains at `row`.
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i)
        if (H(i, col) != 0 && (best == m || detail::abs_value(H(i, col)) < detail::abs_value(H(best, col))))
          best = i;
      if (best == m) break;
      H.swap_rows(row, best);
      U.swap_rows(row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (H(i, col) == 0) continue;
        Integer q = H(i, col) / H(row, col);
        H.add_row_multiple(i, row, -q);
        U.add_row_multiple(i, row, -q);
        if (H(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (H(row, col) == 0) continue;
    if (H(row, col) < 0) {
      H.negate_row(row);
      U.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q = H(i, col) / H(row, col);
      if (H(i, col) - q * H(row, col) < 0) q -= 1;
      if (q != 0) {
        H.add_row_multiple(i, row, -q);
        U.add_row_multiple(i, row, -q);
      }
    }
    h.pivot_columns.push_back(col);
    ++row;
  }
  return h;
}

/// Rank over the rationals (fraction-free elimination).
inline std::size_t rank(IntMatrix A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t piv = m;
    for (std::size_t i = r; i < m; ++i)
      if (A(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv == m) continue;
    A.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) A(i, j) = (A(r, col) * A(i, j) - A(i, col) * A(r, j)) / prev;
      A(i, col) = 0;
    }
    prev = A(r, col);
    ++r;
  }
  return r;
}

/// Determinant by Bareiss elimination.
inline Integer determinant(IntMatrix A) {
  if (!A.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (A(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv == n) return 0;
      A.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) A(i, j) = (A(k, k) * A(i, j) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

/// Number of connected components of ker(gamma_A): the product of the nonzero invariant
/// factors in characteristic 0, its p'-part in characteristic p. The empty product is 1.
inline Integer multiplicity(const IntMatrix& A, FieldChar ch = {}) {
  Integer product = 1;
  for (const auto& f : invariant_factors(A)) product *= f;
  return p_prime_part(product, ch);
}

/// Basis of the saturated right kernel {y in Z^n : A y = 0}.
inline std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& A) {
  const auto d = smith_normal_form(A);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t j = d.rank(); j < A.cols(); ++j) basis.push_back(d.V.column(j));
  return basis;
}

/// Whether the N-torsion point with cocharacter coordinates `lambda` lies in the image
/// subtorus of gamma_C. Characters vanishing on the image form the (saturated) right
/// kernel of C, and a subtorus is cut out by the characters vanishing on it.
inline bool torsion_membership(const IntMatrix& C, const std::vector<Integer>& lambda, const Integer& N) {
  if (!C.is_square()) throw std::invalid_argument("torsion_membership: matrix must be square");
  if (lambda.size() != C.cols())
    throw std::invalid_argument("torsion_membership: point has " + std::to_string(lambda.size()) +
                                " coordinates, matrix acts on rank " + std::to_string(C.cols()));
  if (N < 1) throw std::invalid_argument("torsion_membership: modulus must be positive");
  for (const auto& y : kernel_basis(C)) {
    Integer pairing = 0;
    for (std::size_t j = 0; j < y.size(); ++j) pairing += y[j] * lambda[j];
    if (pairing % N != 0) return false;
  }
  return true;
}

}  // namespace wtn
