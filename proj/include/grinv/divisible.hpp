#pragma once

// Invariants for n = r*d: normalize the first r planes to the coordinate
// splitting, take generalized double ratios of the remaining blocks, and
// use traces of words in the resulting d x d letters.

#include <cstddef>
#include <optional>

#include "grinv/grassmann.hpp"
#include "grinv/invariants.hpp"
#include "grinv/mat.hpp"

namespace grinv {

/// D(A11 A12; A21 A22) = A11 A21^-1 A22 A12^-1 for a 2d x 2d matrix split
/// into d x d blocks.
template <Scalar T>
Mat<T> double_ratio(const Mat<T>& m);

template <Scalar T>
Mat<T> double_ratio(const Mat<T>& a11, const Mat<T>& a12, const Mat<T>& a21, const Mat<T>& a22);

/// D_ij: the double ratio of blocks (1,1), (1,j), (i,1), (i,j) of a matrix
/// made of d x d blocks. i and j are 1-based block indices, i, j >= 2.
template <Scalar T>
Mat<T> block_ratio(const Mat<T>& m, std::size_t d, std::size_t i, std::size_t j);

/// A^-1 B where M = (A B) and A is the leading rd x rd block.
template <Scalar T>
Mat<T> phi_left(const Mat<T>& m, std::size_t r, std::size_t d);

/// The (r-1) x (s-r-1) grid of d x d letters G_ij, i = 2..r, j = 2..s-r.
template <Scalar T>
struct ReducedDivisible {
  std::size_t r = 0, d = 0, s = 0;
  std::vector<Mat<T>> letters;  // row-major over (i, j)

  std::size_t grid_rows() const { return r - 1; }
  std::size_t grid_cols() const { return s - r - 1; }
  const Mat<T>& at(std::size_t i, std::size_t j) const { return letters.at(index(i, j)); }
  Mat<T>& at(std::size_t i, std::size_t j) { return letters.at(index(i, j)); }
  friend bool operator==(const ReducedDivisible&, const ReducedDivisible&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i < 2 || i > r || j < 2 || j > s - r) throw Error(ErrorKind::IndexOutOfRange, "letter index");
    return (i - 2) * grid_cols() + (j - 2);
  }
};

/// Letters of the stacked n x sd matrix; requires s > r + 1. Singular
/// blocks are reported as Degenerate with the failing block named.
template <Scalar T>
ReducedDivisible<T> matrix_data(const Mat<T>& stacked, std::size_t r, std::size_t d, std::size_t s);

ReducedDivisible<Rat> matrix_data(const Config& c);

/// The configuration in block normal form: coordinate planes E_1..E_r, the
/// all-identity column E_{r+1}, and column r+j carrying the letters G_ij.
Config embed(const ReducedDivisible<Rat>& rd);

/// Letters with ids "G_i_j"; empty when s <= r + 1.
template <Scalar T>
LetterSet<T> divisible_letters(const Mat<T>& stacked, std::size_t r, std::size_t d, std::size_t s);

/// (r-1)(s-r-1) when s > r + 1, else 0.
std::size_t divisible_letter_count(std::size_t r, std::size_t s);

InvariantVector divisible_invariants(const Config& c, std::optional<std::size_t> max_len = std::nullopt);

}  // namespace grinv
