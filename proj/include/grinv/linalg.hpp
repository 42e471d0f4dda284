#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "grinv/error.hpp"
#include "grinv/mat.hpp"

namespace grinv {

template <Scalar T>
struct Rref {
  Mat<T> matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. The pivot in each column is the first row at
/// or below the current one with a nonzero entry; no magnitude pivoting.
template <Scalar T>
Rref<T> rref(Mat<T> m) {
  Rref<T> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    T inv = inverse(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_exact_zero(m(i, col))) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.matrix = std::move(m);
  return out;
}

template <Scalar T>
std::size_t rank(const Mat<T>& m) {
  return rref(m).rank;
}

/// Canonical kernel basis: one column per free variable f, with entry 1 at f,
/// 0 at the other free variables and pivot entries read off the RREF.
template <Scalar T>
Mat<T> nullspace_basis(const Mat<T>& m) {
  Rref<T> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Mat<T> basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = T(1);
    for (std::size_t i = 0; i < r.rank; ++i) basis(r.pivots[i], k) = -r.matrix(i, free[k]);
  }
  return basis;
}

/// Solves a * x = b for square invertible a.
template <Scalar T>
Mat<T> solve(const Mat<T>& a, const Mat<T>& b) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "solve needs a square matrix");
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "solve right-hand side rows");
  const std::size_t n = a.rows();
  Rref<T> r = rref(hcat({a, b}));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) {
    throw Error(ErrorKind::Singular, "matrix of size " + std::to_string(n) + " is singular");
  }
  return r.matrix.block(0, n, n, b.cols());
}

template <Scalar T>
Mat<T> inverse(const Mat<T>& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "inverse needs a square matrix");
  return solve(m, Mat<T>::identity(m.rows()));
}

template <Scalar T>
T trace(const Mat<T>& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "trace needs a square matrix");
  T t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Product of the letters named by `word`, in order.
template <Scalar T>
Mat<T> word_product(std::span<const Mat<T>> letters, std::span<const std::size_t> word) {
  if (word.empty()) throw Error(ErrorKind::IndexOutOfRange, "empty word");
  for (auto idx : word) {
    if (idx >= letters.size()) {
      throw Error(ErrorKind::IndexOutOfRange, "letter index " + std::to_string(idx) + " out of range");
    }
  }
  Mat<T> prod = letters[word[0]];
  for (std::size_t k = 1; k < word.size(); ++k) prod = prod * letters[word[k]];
  return prod;
}

template <Scalar T>
T trace_word(std::span<const Mat<T>> letters, std::span<const std::size_t> word) {
  return trace(word_product(letters, word));
}

}  // namespace grinv
