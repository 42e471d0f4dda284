#include "grinv/odd.hpp"

#include <string>

#include "grinv/divisible.hpp"
#include "grinv/linalg.hpp"

namespace grinv {

namespace {

/// Block row k (0-based) of an n x m matrix made of e-row blocks.
template <Scalar T>
Mat<T> row_block(const Mat<T>& m, std::size_t e, std::size_t k) {
  return m.rows_range(k * e, e);
}

template <Scalar T>
void require_zero(const Mat<T>& m, const std::string& what) {
  if (!m.is_zero()) throw Error(ErrorKind::ZeroPatternViolation, what + " is not zero");
}

/// The e-dimensional part of span(n_cols) where the given row block
/// vanishes, as an n x e matrix normalized so that `pivot_block` is E.
template <Scalar T>
Mat<T> column_with_zero_block(const Mat<T>& n_cols, std::size_t e, std::size_t zero_block,
                              std::size_t pivot_block, const std::string& what) {
  Mat<T> kernel = nullspace_basis(row_block(n_cols, e, zero_block));
  if (kernel.cols() != e) {
    throw Error(ErrorKind::WrongKernelDimension, what + ": kernel of dimension " + std::to_string(kernel.cols()));
  }
  Mat<T> col = n_cols * kernel;
  return col * inverse(row_block(col, e, pivot_block));
}

template <Scalar T>
std::vector<Mat<T>> split_rows(const Mat<T>& m, std::size_t e) {
  std::vector<Mat<T>> out;
  for (std::size_t k = 0; k * e < m.rows(); ++k) out.push_back(row_block(m, e, k));
  return out;
}

}  // namespace

template <Scalar T>
Mat<T> NormalizedColumns<T>::block(std::size_t i) const {
  return vcat({Mat<T>::identity(2 * e), bottoms.at(i - 1)});
}

template <Scalar T>
NormalizedColumns<T> column_normalize(const Mat<T>& stacked, std::size_t n, std::size_t d, std::size_t s) {
  if (d % 2 != 0 || n <= d || stacked.rows() != n || stacked.cols() != s * d) {
    throw Error(ErrorKind::ShapeMismatch, "column_normalize expects n x 2es with n > 2e");
  }
  NormalizedColumns<T> nc{n, d / 2, {}};
  nc.bottoms.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    Mat<T> blk = stacked.cols_range(i * d, d);
    try {
      nc.bottoms.push_back(blk.rows_range(d, n - d) * inverse(blk.rows_range(0, d)));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::Singular) throw;
      throw Error(ErrorKind::Singular, "top of block " + std::to_string(i + 1) + " is not invertible");
    }
  }
  return nc;
}

template <Scalar T>
Frame3e<T> frame_3e(const NormalizedColumns<T>& nc) {
  const std::size_t e = nc.e;
  if (nc.n != 3 * e || nc.s() < 3) throw Error(ErrorKind::ShapeMismatch, "frame_3e needs n = 3e and s >= 3");
  const Mat<T> eye = Mat<T>::identity(e);
  const Mat<T> rhs = vcat({eye, eye});
  constexpr std::size_t pairs[3][2] = {{1, 2}, {3, 1}, {2, 3}};
  Frame3e<T> f;
  f.H = Mat<T>(3 * e, 3 * e);
  for (std::size_t k = 0; k < 3; ++k) {
    auto [p, q] = pairs[k];
    Mat<T> sys = vcat({hcat({nc.c(p), nc.d(p)}), hcat({nc.c(q), nc.d(q)})});
    Mat<T> xy = solve(sys, rhs);
    f.x[k] = xy.rows_range(0, e);
    f.y[k] = xy.rows_range(e, e);
    f.H.set_block(0, k * e, f.x[k]);
    f.H.set_block(e, k * e, f.y[k]);
    f.H.set_block(2 * e, k * e, eye);
  }
  f.H_inv = inverse(f.H);
  return f;
}

template <Scalar T>
std::vector<Mat<T>> alpha_blocks(const NormalizedColumns<T>& nc, const Frame3e<T>& frame) {
  const std::size_t e = nc.e;
  std::vector<Mat<T>> out;
  for (std::size_t i = 4; i <= nc.s(); ++i) {
    Mat<T> blk = frame.H_inv * nc.block(i);
    Mat<T> normalized = blk * inverse(blk.rows_range(0, 2 * e));
    out.push_back(normalized.block(2 * e, 0, e, e));
    out.push_back(normalized.block(2 * e, e, e, e));
  }
  return out;
}

template <Scalar T>
LetterSet<T> sigma_data(const NormalizedColumns<T>& nc, const Frame3e<T>& frame) {
  LetterSet<T> out;
  if (nc.s() <= 4) return out;
  std::vector<Mat<T>> alpha = alpha_blocks(nc, frame);
  const Mat<T> inv7 = inverse(alpha[0]);
  const Mat<T> inv8 = inverse(alpha[1]);
  for (std::size_t i = 5; i <= nc.s(); ++i) {
    const std::size_t k = 2 * (i - 4);
    out.push("sigma_" + std::to_string(2 * i - 1), alpha[k] * inv7);
    out.push("sigma_" + std::to_string(2 * i), alpha[k + 1] * inv8);
  }
  return out;
}

template <Scalar T>
std::vector<Mat<T>> nullspace_component(const NormalizedColumns<T>& nc, std::span<const std::size_t> members,
                                        std::size_t target) {
  const std::size_t e = nc.e;
  if (members.empty()) throw Error(ErrorKind::IndexOutOfRange, "no member blocks");
  std::vector<Mat<T>> diffs;
  for (auto m : members) {
    if (m < 1 || m > nc.s() || target < 1 || target > nc.s()) {
      throw Error(ErrorKind::IndexOutOfRange, "block index out of range");
    }
    diffs.push_back(nc.bottoms[m - 1] - nc.bottoms[target - 1]);
  }
  Mat<T> kernel = nullspace_basis(hcat(std::span<const Mat<T>>(diffs)));
  if (kernel.cols() != e) {
    throw Error(ErrorKind::WrongKernelDimension, "intersection with block " + std::to_string(target) +
                                                     " has dimension " + std::to_string(kernel.cols()) +
                                                     ", expected " + std::to_string(e));
  }
  return split_rows(kernel, 2 * e);
}

template <Scalar T>
Mat<T> intersection_representative(const NormalizedColumns<T>& nc, std::span<const std::size_t> members,
                                   std::span<const Mat<T>> components) {
  if (members.size() != components.size()) throw Error(ErrorKind::ShapeMismatch, "one component per member");
  Mat<T> rep(nc.n, nc.e);
  for (std::size_t k = 0; k < members.size(); ++k) rep += nc.block(members[k]) * components[k];
  return rep;
}

template <Scalar T>
FrameOdd<T> frame_odd(const NormalizedColumns<T>& nc, std::size_t r) {
  const std::size_t e = nc.e;
  if (r < 2 || nc.n != (2 * r + 1) * e) throw Error(ErrorKind::ShapeMismatch, "frame_odd needs n = (2r+1)e, r >= 2");
  if (nc.s() < r + 2) throw Error(ErrorKind::IndexOutOfRange, "frame_odd needs s >= r + 2");
  std::vector<std::size_t> first_r, mixed;
  for (std::size_t i = 1; i <= r; ++i) first_r.push_back(i);
  for (std::size_t i = 1; i < r; ++i) mixed.push_back(i);
  mixed.push_back(r + 1);

  FrameOdd<T> f;
  f.X = nullspace_component(nc, first_r, r + 1);
  f.Y = nullspace_component(nc, first_r, r + 2);
  f.Z = nullspace_component(nc, mixed, r + 2).back();

  f.H = Mat<T>(nc.n, nc.n);
  for (std::size_t i = 1; i <= r; ++i) {
    Mat<T> blk = nc.block(i);
    f.H.set_block(0, (2 * i - 2) * e, blk * f.X[i - 1]);
    f.H.set_block(0, (2 * i - 1) * e, blk * f.Y[i - 1]);
  }
  f.H.set_block(0, 2 * r * e, nc.block(r + 1) * f.Z);
  f.H_inv = inverse(f.H);
  return f;
}

template <Scalar T>
ReducedOdd<T> reduce_odd(const NormalizedColumns<T>& nc, const FrameOdd<T>& frame) {
  const std::size_t e = nc.e;
  const std::size_t r = frame.X.size();
  const std::size_t rows = 2 * r + 1;
  for (std::size_t i = 1; i <= r; ++i) {
    Mat<T> blk = frame.H_inv * nc.block(i);
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == 2 * i - 2 || k == 2 * i - 1) continue;
      require_zero(row_block(blk, e, k), "block row " + std::to_string(k + 1) + " of H^-1 M_" + std::to_string(i));
    }
  }

  ReducedOdd<T> red;
  red.r = r;
  red.e = e;

  const Mat<T> block_r1 = frame.H_inv * nc.block(r + 1);
  // First e columns of block r+1: the chi' slot, identity at block row 2r+1.
  {
    Mat<T> kernel = nullspace_basis(block_r1.rows_range(0, 2 * r * e));
    if (kernel.cols() != e) {
      throw Error(ErrorKind::ZeroPatternViolation, "block r+1 does not contain the last frame column");
    }
  }
  red.a = split_rows(column_with_zero_block(block_r1, e, 2 * r, 0, "a-column"), e);
  for (std::size_t k = 1; k < rows; k += 2) require_zero(red.a[k], "a_" + std::to_string(k + 1));
  require_zero(red.a[2 * r], "a_" + std::to_string(2 * r + 1));

  const Mat<T> block_r2 = frame.H_inv * nc.block(r + 2);
  std::vector<Mat<T>> b = split_rows(column_with_zero_block(block_r2, e, 2 * r, 1, "b-column"), e);
  for (std::size_t k = 0; k < rows; k += 2) {
    require_zero(b[k], "b_" + std::to_string(k + 1) + "," + std::to_string(r + 2));
  }
  std::vector<Mat<T>> c = split_rows(column_with_zero_block(block_r2, e, 2 * r - 1, 2 * r, "c-column"), e);
  require_zero(c[2 * r - 2], "c_" + std::to_string(2 * r - 1) + "," + std::to_string(r + 2));
  require_zero(c[2 * r - 1], "c_" + std::to_string(2 * r) + "," + std::to_string(r + 2));
  red.b.push_back(std::move(b));
  red.c.push_back(std::move(c));

  for (std::size_t j = r + 3; j <= nc.s(); ++j) {
    Mat<T> blk = frame.H_inv * nc.block(j);
    Mat<T> normalized = blk * inverse(blk.rows_range(0, 2 * e));
    red.b.push_back(split_rows(normalized.cols_range(0, e), e));
    red.c.push_back(split_rows(normalized.cols_range(e, e), e));
  }
  return red;
}

template <Scalar T>
LetterSet<T> letters_odd(const ReducedOdd<T>& red, std::size_t s) {
  const std::size_t r = red.r;
  const auto& a = red.a;
  const auto& b = red.b_col(r + 2);
  const auto& c = red.c_col(r + 2);
  // alpha: A -> A', the graph of the E_1-part of W''. Letters living on A'
  // are pulled back to A by conjugating with alpha.
  const Mat<T> alpha = c[1] * inverse(c[0]);
  const Mat<T> alpha_inv = inverse(alpha);

  LetterSet<T> out;
  std::size_t z = 0;
  for (std::size_t j = 2; j + 1 <= r; ++j) {
    out.push("Z_" + std::to_string(++z), double_ratio(a[0], c[0], a[2 * j - 2], c[2 * j - 2]));
    out.push("Z_" + std::to_string(++z), alpha_inv * double_ratio(b[1], c[1], b[2 * j - 1], c[2 * j - 1]) * alpha);
  }

  // E_{r+1}-row letters carry the chi' normalization c_{2r+1} back to A.
  const Mat<T> last_row = c[0] * inverse(c[2 * r]);
  for (std::size_t i = r + 3; i <= s; ++i) {
    const auto& bi = red.b_col(i);
    const auto& ci = red.c_col(i);
    std::size_t m = 0;
    auto id = [&] { return "Theta_" + std::to_string(i) + "_" + std::to_string(++m); };
    for (std::size_t k = 3; k <= 2 * r + 1; ++k) {
      const Mat<T>& bk = bi[k - 1];
      const Mat<T>& ck = ci[k - 1];
      if (k == 2 * r + 1) {
        out.push(id(), last_row * bk);
        out.push(id(), last_row * ck * alpha);
      } else if (k % 2 == 1) {
        out.push(id(), bk);
        out.push(id(), ck * alpha);
      } else {
        out.push(id(), alpha_inv * bk);
        out.push(id(), alpha_inv * ck * alpha);
      }
    }
  }
  return out;
}

std::size_t odd_letter_count(std::size_t r, std::size_t s) {
  if (r == 1) return s > 4 ? 2 * (s - 4) : 0;
  return s > r + 1 ? 2 * r - 4 + (4 * r - 2) * (s - r - 2) : 0;
}

template <Scalar T>
LetterSet<T> odd_letters(const Mat<T>& stacked, std::size_t r, std::size_t e, std::size_t s) {
  if (odd_letter_count(r, s) == 0) return {};
  const std::size_t n = (2 * r + 1) * e;
  try {
    NormalizedColumns<T> nc = column_normalize(stacked, n, 2 * e, s);
    if (r == 1) return sigma_data(nc, frame_3e(nc));
    return letters_odd(reduce_odd(nc, frame_odd(nc, r)), s);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::Singular || err.kind() == ErrorKind::WrongKernelDimension) {
      throw Error(ErrorKind::Degenerate, err.what());
    }
    throw;
  }
}

InvariantVector odd_invariants(const Config& c, std::optional<std::size_t> max_len) {
  CaseTag tag = classify_case(c.n(), c.d());
  if (tag.kind != CaseKind::OddMultiple) throw Error(ErrorKind::UnsupportedCase, "not an odd-multiple case");
  LetterSet<Rat> letters = odd_letters(c.stacked(), tag.r, tag.e, c.s());
  return make_invariant_vector(tag, tag.e, max_len, letters);
}

#define GRINV_INSTANTIATE(T)                                                                                 \
  template struct NormalizedColumns<T>;                                                                      \
  template NormalizedColumns<T> column_normalize(const Mat<T>&, std::size_t, std::size_t, std::size_t);      \
  template Frame3e<T> frame_3e(const NormalizedColumns<T>&);                                                 \
  template std::vector<Mat<T>> alpha_blocks(const NormalizedColumns<T>&, const Frame3e<T>&);                 \
  template LetterSet<T> sigma_data(const NormalizedColumns<T>&, const Frame3e<T>&);                          \
  template std::vector<Mat<T>> nullspace_component(const NormalizedColumns<T>&, std::span<const std::size_t>, \
                                                   std::size_t);                                            \
  template Mat<T> intersection_representative(const NormalizedColumns<T>&, std::span<const std::size_t>,     \
                                              std::span<const Mat<T>>);                                      \
  template FrameOdd<T> frame_odd(const NormalizedColumns<T>&, std::size_t);                                  \
  template ReducedOdd<T> reduce_odd(const NormalizedColumns<T>&, const FrameOdd<T>&);                        \
  template LetterSet<T> letters_odd(const ReducedOdd<T>&, std::size_t);                                      \
  template LetterSet<T> odd_letters(const Mat<T>&, std::size_t, std::size_t, std::size_t);

GRINV_INSTANTIATE(Rat)
GRINV_INSTANTIATE(Jet)

#undef GRINV_INSTANTIATE

}  // namespace grinv
