#pragma once

// Invariants for n = (2r+1)e, d = 2e.
//
// Every block is first normalized to (E'; C_i) with E' the 2e x 2e identity.
// For r = 1 the pairwise intersections of the first three planes give a
// frame H; after H^-1 M each later block is normalized to (E 0; 0 E; a b)
// and the letters are a_i a_4^-1, b_i b_4^-1 for blocks i >= 5.
//
// For r >= 2 the frame H is assembled from the intersections
//   W   = E_{r+1} cap (E_1 + ... + E_r)            (columns X_i)
//   W'  = E_{r+2} cap (E_1 + ... + E_r)            (columns Y_i)
//   W'' = E_{r+2} cap (E_1 + ... + E_{r-1} + E_{r+1})  (its E_{r+1} part)
// In H-coordinates the residual symmetry is diag(g,h,g,h,...,g,h,k); the
// mixed column of block r+2 fixes h and k in terms of g, so every letter is
// expressed in the frame of A = (first block row) and transforms by
// conjugation with a single g.

#include <cstddef>
#include <optional>
#include <vector>

#include "grinv/grassmann.hpp"
#include "grinv/invariants.hpp"
#include "grinv/mat.hpp"

namespace grinv {

template <Scalar T>
struct NormalizedColumns {
  std::size_t n = 0, e = 0;
  std::vector<Mat<T>> bottoms;  // C_i = B_i A_i^-1, (n - 2e) x 2e

  std::size_t s() const { return bottoms.size(); }
  /// (E'; C_i), 1-based i.
  Mat<T> block(std::size_t i) const;
  /// For n = 3e: C_i = (c_i d_i) with e x e halves.
  Mat<T> c(std::size_t i) const { return bottoms.at(i - 1).cols_range(0, e); }
  Mat<T> d(std::size_t i) const { return bottoms.at(i - 1).cols_range(e, e); }
};

/// Right-normalizes every n x 2e block so its top 2e x 2e part is identity.
/// Throws Singular naming the block whose top is not invertible.
template <Scalar T>
NormalizedColumns<T> column_normalize(const Mat<T>& stacked, std::size_t n, std::size_t d, std::size_t s);

template <Scalar T>
struct Frame3e {
  Mat<T> x[3], y[3];
  Mat<T> H;
  Mat<T> H_inv;
};

/// (x_k; y_k) solve [[c_a, d_a], [c_b, d_b]] (x; y) = (E; E) for the pairs
/// (1,2), (3,1), (2,3), so c_a x + d_a y = E and (x; y; E) lies in both
/// planes. H = [[x1 x2 x3], [y1 y2 y3], [E E E]].
template <Scalar T>
Frame3e<T> frame_3e(const NormalizedColumns<T>& nc);

/// a_7, a_8, ..., a_{2s}: bottom e x e blocks of H^-1 M_i after
/// right-normalizing its top 2e x 2e part, for blocks i = 4..s.
template <Scalar T>
std::vector<Mat<T>> alpha_blocks(const NormalizedColumns<T>& nc, const Frame3e<T>& frame);

/// sigma_9 .. sigma_{2s} (ids "sigma_j"), empty for s <= 4.
template <Scalar T>
LetterSet<T> sigma_data(const NormalizedColumns<T>& nc, const Frame3e<T>& frame);

/// Solves sum_m (C_m - C_target) X_m = 0 over 1-based member blocks. The
/// canonical kernel basis must have exactly e columns (WrongKernelDimension
/// otherwise); it is returned split into one 2e x e block per member. The
/// span of sum_m (E'; C_m) X_m is target cap (sum of members).
template <Scalar T>
std::vector<Mat<T>> nullspace_component(const NormalizedColumns<T>& nc, std::span<const std::size_t> members,
                                        std::size_t target);

/// The n x e matrix sum_m (E'; C_m) X_m representing the intersection.
template <Scalar T>
Mat<T> intersection_representative(const NormalizedColumns<T>& nc, std::span<const std::size_t> members,
                                   std::span<const Mat<T>> components);

template <Scalar T>
struct FrameOdd {
  std::vector<Mat<T>> X, Y;  // r blocks each, 2e x e
  Mat<T> Z;                  // E_{r+1} component of W'', 2e x e
  Mat<T> H;                  // columns (E';C_1)X_1, (E';C_1)Y_1, ..., (E';C_r)Y_r, (E';C_{r+1})Z
  Mat<T> H_inv;
};

template <Scalar T>
FrameOdd<T> frame_odd(const NormalizedColumns<T>& nc, std::size_t r);

/// Blocks of H^-1 M after normalization. a, b_{.,r+2}, c_{.,r+2} are the
/// normalized columns of blocks r+1 and r+2 (a_1 = E, b_2 = E,
/// c_{2r+1} = E); for j >= r+3 the pair (b_{.,j} c_{.,j}) is block j with
/// its top 2e x 2e part normalized to identity. Vectors hold 2r+1 e x e
/// blocks indexed from 0 (so a[1] is a_2).
template <Scalar T>
struct ReducedOdd {
  std::size_t r = 0, e = 0;
  std::vector<Mat<T>> a;
  std::vector<std::vector<Mat<T>>> b, c;  // index j - (r+2)

  const std::vector<Mat<T>>& b_col(std::size_t j) const { return b.at(j - (r + 2)); }
  const std::vector<Mat<T>>& c_col(std::size_t j) const { return c.at(j - (r + 2)); }
};

/// Computes H^-1 M, normalizes blocks r+1.. and checks that the identity
/// pattern of blocks 1..r and the vanishing of a_2, a_4, ..., a_{2r},
/// a_{2r+1}, b_{1,r+2}, b_{3,r+2}, ..., b_{2r+1,r+2} and
/// c_{2r-1,r+2}, c_{2r,r+2} hold exactly (ZeroPatternViolation otherwise).
template <Scalar T>
ReducedOdd<T> reduce_odd(const NormalizedColumns<T>& nc, const FrameOdd<T>& frame);

/// Z_1..Z_{2r-4} from the mixed column of block r+2 and Theta_i_1..
/// Theta_i_{4r-2} for i = r+3..s.
template <Scalar T>
LetterSet<T> letters_odd(const ReducedOdd<T>& red, std::size_t s);

/// Full pipeline from the stacked matrix; empty letters in the ranges where
/// the configuration space is almost homogeneous.
template <Scalar T>
LetterSet<T> odd_letters(const Mat<T>& stacked, std::size_t r, std::size_t e, std::size_t s);

/// 2(s-4) for r = 1, s > 4; 2r-4+(4r-2)(s-r-2) for r > 1, s > r+1; else 0.
std::size_t odd_letter_count(std::size_t r, std::size_t s);

InvariantVector odd_invariants(const Config& c, std::optional<std::size_t> max_len = std::nullopt);

}  // namespace grinv
