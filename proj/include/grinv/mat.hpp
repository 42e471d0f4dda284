#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grinv/error.hpp"
#include "grinv/jet.hpp"
#include "grinv/rat.hpp"

namespace grinv {

/// Scalars the elimination kernels run over: exact rationals and jets.
template <class T>
concept Scalar = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { inverse(a) } -> std::convertible_to<T>;
};

/// Dense row-major matrix.
template <Scalar T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorKind::ShapeMismatch, "entry count does not match shape");
    }
  }
  Mat(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Mat diagonal(std::span<const T> diag) {
    Mat m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::span<const T> entries() const { return data_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
      throw Error(ErrorKind::IndexOutOfRange, "block exceeds matrix bounds");
    }
    Mat out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }
  Mat rows_range(std::size_t r0, std::size_t nr) const { return block(r0, 0, nr, cols_); }
  Mat cols_range(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }

  void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
      throw Error(ErrorKind::IndexOutOfRange, "block exceeds matrix bounds");
    }
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!grinv::is_zero(x)) return false;
    return true;
  }

  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Mat& operator*=(const T& c) {
    for (auto& x : data_) x *= c;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Mat operator*(const T& c, Mat a) { return a *= c; }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "product shape mismatch");
    Mat out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_exact_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorKind::ShapeMismatch, "elementwise shape mismatch");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatQ = Mat<Rat>;
using MatJ = Mat<Jet>;

template <Scalar T>
Mat<T> hcat(std::span<const Mat<T>> parts) {
  if (parts.empty()) return {};
  std::size_t rows = parts.front().rows(), cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw Error(ErrorKind::ShapeMismatch, "hcat row mismatch");
    cols += p.cols();
  }
  Mat<T> out(rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

template <Scalar T>
Mat<T> hcat(std::initializer_list<Mat<T>> parts) {
  return hcat(std::span<const Mat<T>>(parts.begin(), parts.size()));
}

template <Scalar T>
Mat<T> vcat(std::span<const Mat<T>> parts) {
  if (parts.empty()) return {};
  std::size_t cols = parts.front().cols(), rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw Error(ErrorKind::ShapeMismatch, "vcat column mismatch");
    rows += p.rows();
  }
  Mat<T> out(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

template <Scalar T>
Mat<T> vcat(std::initializer_list<Mat<T>> parts) {
  return vcat(std::span<const Mat<T>>(parts.begin(), parts.size()));
}

/// Embeds a rational matrix into jets with zero derivative.
inline MatJ lift(const MatQ& m) {
  std::vector<Jet> entries(m.entries().begin(), m.entries().end());
  return MatJ(m.rows(), m.cols(), std::move(entries));
}

inline MatQ values(const MatJ& m) {
  std::vector<Rat> out;
  out.reserve(m.entries().size());
  for (const auto& j : m.entries()) out.push_back(j.value);
  return MatQ(m.rows(), m.cols(), std::move(out));
}

inline MatQ derivs(const MatJ& m) {
  std::vector<Rat> out;
  out.reserve(m.entries().size());
  for (const auto& j : m.entries()) out.push_back(j.deriv);
  return MatQ(m.rows(), m.cols(), std::move(out));
}

}  // namespace grinv
