#include "grinv/divisible.hpp"

#include <string>

#include "grinv/linalg.hpp"

namespace grinv {

template <Scalar T>
Mat<T> double_ratio(const Mat<T>& a11, const Mat<T>& a12, const Mat<T>& a21, const Mat<T>& a22) {
  return a11 * solve(a21, a22) * inverse(a12);
}

template <Scalar T>
Mat<T> double_ratio(const Mat<T>& m) {
  if (!m.is_square() || m.rows() % 2 != 0) {
    throw Error(ErrorKind::ShapeMismatch, "double ratio needs a 2d x 2d matrix");
  }
  const std::size_t d = m.rows() / 2;
  return double_ratio(m.block(0, 0, d, d), m.block(0, d, d, d), m.block(d, 0, d, d), m.block(d, d, d, d));
}

template <Scalar T>
Mat<T> block_ratio(const Mat<T>& m, std::size_t d, std::size_t i, std::size_t j) {
  if (d == 0 || m.rows() % d != 0 || m.cols() % d != 0) {
    throw Error(ErrorKind::ShapeMismatch, "matrix is not made of d x d blocks");
  }
  if (i < 2 || j < 2 || i > m.rows() / d || j > m.cols() / d) {
    throw Error(ErrorKind::IndexOutOfRange,
                "block (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  auto blk = [&](std::size_t bi, std::size_t bj) { return m.block((bi - 1) * d, (bj - 1) * d, d, d); };
  return double_ratio(blk(1, 1), blk(1, j), blk(i, 1), blk(i, j));
}

template <Scalar T>
Mat<T> phi_left(const Mat<T>& m, std::size_t r, std::size_t d) {
  const std::size_t n = r * d;
  if (m.rows() != n || m.cols() < n) throw Error(ErrorKind::ShapeMismatch, "phi_left shape");
  return solve(m.cols_range(0, n), m.cols_range(n, m.cols() - n));
}

template <Scalar T>
ReducedDivisible<T> matrix_data(const Mat<T>& stacked, std::size_t r, std::size_t d, std::size_t s) {
  if (stacked.rows() != r * d || stacked.cols() != s * d) {
    throw Error(ErrorKind::ShapeMismatch, "stacked matrix shape does not match (r, d, s)");
  }
  if (s <= r + 1) throw Error(ErrorKind::IndexOutOfRange, "letter grid needs s > r + 1");
  Mat<T> phi;
  try {
    phi = phi_left(stacked, r, d);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::Singular) throw;
    throw Error(ErrorKind::Degenerate, "the first r subspaces do not form a direct sum");
  }
  ReducedDivisible<T> out{r, d, s, {}};
  out.letters.reserve((r - 1) * (s - r - 1));
  for (std::size_t i = 2; i <= r; ++i) {
    for (std::size_t j = 2; j <= s - r; ++j) {
      try {
        out.letters.push_back(block_ratio(phi, d, i, j));
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::Singular) throw;
        throw Error(ErrorKind::Degenerate, "double ratio G_" + std::to_string(i) + "_" + std::to_string(j) +
                                               " hits a singular block");
      }
    }
  }
  return out;
}

ReducedDivisible<Rat> matrix_data(const Config& c) {
  CaseTag tag = classify_case(c.n(), c.d());
  if (tag.kind != CaseKind::Divisible) throw Error(ErrorKind::UnsupportedCase, "not a divisible case");
  return matrix_data(c.stacked(), tag.r, c.d(), c.s());
}

Config embed(const ReducedDivisible<Rat>& rd) {
  const std::size_t r = rd.r, d = rd.d, s = rd.s, n = r * d;
  if (r < 2 || s <= r + 1 || rd.letters.size() != (r - 1) * (s - r - 1)) {
    throw Error(ErrorKind::ShapeMismatch, "letter grid does not match (r, s)");
  }
  const MatQ eye = MatQ::identity(d);
  std::vector<Subspace> subspaces;
  subspaces.reserve(s);
  for (std::size_t k = 0; k < r; ++k) {
    MatQ b(n, d);
    b.set_block(k * d, 0, eye);
    subspaces.emplace_back(std::move(b));
  }
  MatQ diag(n, d);
  for (std::size_t k = 0; k < r; ++k) diag.set_block(k * d, 0, eye);
  subspaces.emplace_back(std::move(diag));
  for (std::size_t j = 2; j <= s - r; ++j) {
    MatQ b(n, d);
    b.set_block(0, 0, eye);
    for (std::size_t i = 2; i <= r; ++i) {
      const MatQ& letter = rd.at(i, j);
      if (letter.rows() != d || letter.cols() != d) throw Error(ErrorKind::ShapeMismatch, "letter size");
      if (rank(letter) < d) throw Error(ErrorKind::Singular, "letter is not invertible");
      b.set_block((i - 1) * d, 0, letter);
    }
    subspaces.emplace_back(std::move(b));
  }
  return Config(n, d, std::move(subspaces));
}

std::size_t divisible_letter_count(std::size_t r, std::size_t s) {
  return s > r + 1 ? (r - 1) * (s - r - 1) : 0;
}

template <Scalar T>
LetterSet<T> divisible_letters(const Mat<T>& stacked, std::size_t r, std::size_t d, std::size_t s) {
  LetterSet<T> out;
  if (s <= r + 1) return out;
  ReducedDivisible<T> rd = matrix_data(stacked, r, d, s);
  for (std::size_t i = 2; i <= r; ++i)
    for (std::size_t j = 2; j <= s - r; ++j)
      out.push("G_" + std::to_string(i) + "_" + std::to_string(j), rd.at(i, j));
  return out;
}

InvariantVector divisible_invariants(const Config& c, std::optional<std::size_t> max_len) {
  CaseTag tag = classify_case(c.n(), c.d());
  if (tag.kind != CaseKind::Divisible) throw Error(ErrorKind::UnsupportedCase, "not a divisible case");
  LetterSet<Rat> letters = divisible_letters(c.stacked(), tag.r, c.d(), c.s());
  return make_invariant_vector(tag, c.d(), max_len, letters);
}

#define GRINV_INSTANTIATE(T)                                                                   \
  template Mat<T> double_ratio(const Mat<T>&);                                                 \
  template Mat<T> double_ratio(const Mat<T>&, const Mat<T>&, const Mat<T>&, const Mat<T>&);    \
  template Mat<T> block_ratio(const Mat<T>&, std::size_t, std::size_t, std::size_t);           \
  template Mat<T> phi_left(const Mat<T>&, std::size_t, std::size_t);                           \
  template ReducedDivisible<T> matrix_data(const Mat<T>&, std::size_t, std::size_t, std::size_t); \
  template LetterSet<T> divisible_letters(const Mat<T>&, std::size_t, std::size_t, std::size_t);

GRINV_INSTANTIATE(Rat)
GRINV_INSTANTIATE(Jet)

#undef GRINV_INSTANTIATE

}  // namespace grinv
