#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grinv/mat.hpp"

namespace grinv {

/// Column-RREF representative of span(basis): the transpose of the row
/// RREF of basis^T. Throws RankDeficient if the columns are dependent.
MatQ column_canonical_form(const MatQ& basis);

/// A d-dimensional subspace of Q^n, held as an n x d full-column-rank basis.
/// A zero-column basis represents the zero subspace.
class Subspace {
 public:
  explicit Subspace(MatQ basis);

  const MatQ& basis() const { return basis_; }
  std::size_t ambient() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }

  /// Equality as subspaces (same span), not as bases.
  bool same_span(const Subspace& other) const;

 private:
  MatQ basis_;
};

Subspace canonicalize(const Subspace& v);
Subspace intersect(const Subspace& a, const Subspace& b);
/// a + b, canonical.
Subspace span_sum(const Subspace& a, const Subspace& b);

/// An ordered s-tuple of d-planes in Q^n.
class Config {
 public:
  Config(std::size_t n, std::size_t d, std::vector<Subspace> subspaces);

  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  std::size_t s() const { return subspaces_.size(); }
  const std::vector<Subspace>& subspaces() const { return subspaces_; }
  const Subspace& operator[](std::size_t i) const { return subspaces_.at(i); }

  /// The n x (s*d) matrix M = (V_1 ... V_s) of concatenated bases.
  MatQ stacked() const;
  static Config from_stacked(const MatQ& m, std::size_t d);

  /// Subspace-wise span equality.
  bool same_subspaces(const Config& other) const;
  /// Basis-wise equality.
  friend bool operator==(const Config& a, const Config& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.stacked() == b.stacked();
  }

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<Subspace> subspaces_;
};

enum class CaseKind { Divisible, OddMultiple, Unsupported };

/// Divisible: n = r*d, r >= 2. OddMultiple: d = 2e, n = (2r+1)e, r >= 1.
struct CaseTag {
  CaseKind kind = CaseKind::Unsupported;
  std::size_t r = 0;
  std::size_t e = 0;  // only meaningful for OddMultiple

  bool supported() const { return kind != CaseKind::Unsupported; }
  /// d for Divisible, e for OddMultiple: the size of the letter matrices.
  std::size_t letter_size(std::size_t d) const { return kind == CaseKind::Divisible ? d : e; }
  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

std::string to_string(const CaseTag& tag);

CaseTag classify_case(std::size_t n, std::size_t d);

/// True iff every genericity condition used by the matching pipeline holds.
/// For the odd case this runs the pipeline and reports whether all of its
/// inversions and kernel-dimension checks succeed.
bool general_position(const Config& c, const CaseTag& tag);
bool general_position(const Config& c);

inline constexpr int kSamplingAttempts = 100;

/// Deterministic integer-entry sampler (SplitMix64 stream seeded by `seed`,
/// entries uniform in [-bound, bound], row-major per subspace). Resamples
/// until general_position holds, at most kSamplingAttempts times.
Config sample_config(std::size_t n, std::size_t d, std::size_t s, std::uint64_t seed, std::int64_t bound);

Config act_left(const MatQ& g, const Config& c);
Config act_right(std::span<const MatQ> h, const Config& c);

/// Integer-entry invertible matrix, entries in [-bound, bound].
MatQ random_invertible(std::size_t n, std::uint64_t seed, std::int64_t bound);

}  // namespace grinv
