#include "grinv/grassmann.hpp"

#include "grinv/divisible.hpp"
#include "grinv/linalg.hpp"
#include "grinv/odd.hpp"
#include "grinv/rng.hpp"

namespace grinv {

namespace {

/// Column-RREF basis of the column span, dropping dependent columns.
MatQ column_span_basis(const MatQ& m) {
  Rref<Rat> r = rref(m.transpose());
  return r.matrix.rows_range(0, r.rank).transpose();
}

bool is_direct_sum(const MatQ& stacked, std::size_t blocks, std::size_t d) {
  return rank(stacked.cols_range(0, blocks * d)) == blocks * d;
}

bool divisible_general_position(const Config& c, std::size_t r) {
  const std::size_t d = c.d(), s = c.s();
  const MatQ m = c.stacked();
  if (!is_direct_sum(m, std::min(r, s), d)) return false;
  if (s <= r) return true;
  MatQ phi;
  try {
    phi = phi_left(m, r, d);
  } catch (const Error&) {
    return false;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s - r; ++j)
      if (rank(phi.block(i * d, j * d, d, d)) < d) return false;
  return true;
}

bool all_invertible(const LetterSet<Rat>& letters) {
  for (const auto& m : letters.mats)
    if (rank(m) < m.rows()) return false;
  return true;
}

bool odd_general_position(const Config& c, std::size_t r, std::size_t e) {
  const std::size_t s = c.s(), n = c.n();
  const MatQ m = c.stacked();
  if (!is_direct_sum(m, std::min(r, s), 2 * e)) return false;
  try {
    NormalizedColumns<Rat> nc = column_normalize(m, n, 2 * e, s);
    std::vector<std::size_t> first_r;
    for (std::size_t i = 1; i <= r; ++i) first_r.push_back(i);
    for (std::size_t t = r + 1; t <= s; ++t) {
      for (const auto& x : nullspace_component(nc, first_r, t))
        if (rank(x) < e) return false;
    }
    if (r == 1) {
      if (s < 3) return true;
      Frame3e<Rat> frame = frame_3e(nc);
      for (const auto& a : alpha_blocks(nc, frame))
        if (rank(a) < e) return false;
      return all_invertible(sigma_data(nc, frame));
    }
    if (s < r + 2) return true;
    ReducedOdd<Rat> red = reduce_odd(nc, frame_odd(nc, r));
    return all_invertible(letters_odd(red, s));
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

MatQ column_canonical_form(const MatQ& basis) {
  MatQ out = column_span_basis(basis);
  if (out.cols() < basis.cols()) {
    throw Error(ErrorKind::RankDeficient, "basis columns are linearly dependent");
  }
  return out;
}

Subspace::Subspace(MatQ basis) : basis_(std::move(basis)) {
  if (rank(basis_) < basis_.cols()) {
    throw Error(ErrorKind::RankDeficient, "basis columns are linearly dependent");
  }
}

bool Subspace::same_span(const Subspace& other) const {
  return ambient() == other.ambient() && dim() == other.dim() &&
         column_canonical_form(basis_) == column_canonical_form(other.basis_);
}

Subspace canonicalize(const Subspace& v) {
  MatQ canon = column_canonical_form(v.basis());
  if (canon.cols() == 0) return Subspace(MatQ(v.ambient(), 0));
  return Subspace(std::move(canon));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorKind::ShapeMismatch, "subspaces in different ambient spaces");
  const std::size_t n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(MatQ(n, 0));
  MatQ kernel = nullspace_basis(hcat({a.basis(), -b.basis()}));
  if (kernel.cols() == 0) return Subspace(MatQ(n, 0));
  MatQ w = a.basis() * kernel.rows_range(0, a.dim());
  return Subspace(column_canonical_form(w));
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorKind::ShapeMismatch, "subspaces in different ambient spaces");
  MatQ basis = column_span_basis(hcat({a.basis(), b.basis()}));
  if (basis.cols() == 0) return Subspace(MatQ(a.ambient(), 0));
  return Subspace(std::move(basis));
}

Config::Config(std::size_t n, std::size_t d, std::vector<Subspace> subspaces)
    : n_(n), d_(d), subspaces_(std::move(subspaces)) {
  if (subspaces_.empty()) throw Error(ErrorKind::ShapeMismatch, "a configuration needs at least one subspace");
  for (const auto& v : subspaces_) {
    if (v.ambient() != n_ || v.dim() != d_) {
      throw Error(ErrorKind::ShapeMismatch, "every subspace must be given by an n x d basis");
    }
  }
}

MatQ Config::stacked() const {
  std::vector<MatQ> parts;
  parts.reserve(subspaces_.size());
  for (const auto& v : subspaces_) parts.push_back(v.basis());
  return hcat(std::span<const MatQ>(parts));
}

Config Config::from_stacked(const MatQ& m, std::size_t d) {
  if (d == 0 || m.cols() % d != 0) throw Error(ErrorKind::ShapeMismatch, "columns not a multiple of d");
  std::vector<Subspace> subspaces;
  for (std::size_t i = 0; i < m.cols() / d; ++i) subspaces.emplace_back(m.cols_range(i * d, d));
  return Config(m.rows(), d, std::move(subspaces));
}

bool Config::same_subspaces(const Config& other) const {
  if (n_ != other.n_ || d_ != other.d_ || s() != other.s()) return false;
  for (std::size_t i = 0; i < s(); ++i)
    if (!subspaces_[i].same_span(other.subspaces_[i])) return false;
  return true;
}

std::string to_string(const CaseTag& tag) {
  switch (tag.kind) {
    case CaseKind::Divisible: return "Divisible{r=" + std::to_string(tag.r) + "}";
    case CaseKind::OddMultiple:
      return "OddMultiple{r=" + std::to_string(tag.r) + ", e=" + std::to_string(tag.e) + "}";
    case CaseKind::Unsupported: return "Unsupported";
  }
  return "Unsupported";
}

CaseTag classify_case(std::size_t n, std::size_t d) {
  if (d == 0 || n <= d) return {};
  if (n % d == 0) return {CaseKind::Divisible, n / d, 0};
  if (d % 2 == 0) {
    const std::size_t e = d / 2;
    if (n % e == 0 && (n / e) % 2 == 1) return {CaseKind::OddMultiple, (n / e - 1) / 2, e};
  }
  return {};
}

bool general_position(const Config& c, const CaseTag& tag) {
  switch (tag.kind) {
    case CaseKind::Divisible: return divisible_general_position(c, tag.r);
    case CaseKind::OddMultiple: return odd_general_position(c, tag.r, tag.e);
    case CaseKind::Unsupported: return false;
  }
  return false;
}

bool general_position(const Config& c) { return general_position(c, classify_case(c.n(), c.d())); }

Config sample_config(std::size_t n, std::size_t d, std::size_t s, std::uint64_t seed, std::int64_t bound) {
  const CaseTag tag = classify_case(n, d);
  if (!tag.supported()) {
    throw Error(ErrorKind::UnsupportedCase, "(n, d) = (" + std::to_string(n) + ", " + std::to_string(d) + ")");
  }
  if (bound < 1 || s < 1) throw Error(ErrorKind::ShapeMismatch, "sampling needs bound >= 1 and s >= 1");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kSamplingAttempts; ++attempt) {
    std::vector<Subspace> subspaces;
    bool full_rank = true;
    for (std::size_t k = 0; k < s; ++k) {
      MatQ b(n, d);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) b(i, j) = Rat(rng.uniform(-bound, bound));
      if (rank(b) < d) {
        full_rank = false;
        continue;
      }
      subspaces.emplace_back(std::move(b));
    }
    if (!full_rank) continue;
    Config c(n, d, std::move(subspaces));
    if (general_position(c, tag)) return c;
  }
  throw Error(ErrorKind::DegenerateSamplingExhausted,
              "no general-position configuration after " + std::to_string(kSamplingAttempts) + " attempts");
}

Config act_left(const MatQ& g, const Config& c) {
  if (g.rows() != c.n() || g.cols() != c.n()) throw Error(ErrorKind::ShapeMismatch, "g must be n x n");
  if (rank(g) < c.n()) throw Error(ErrorKind::Singular, "g is not invertible");
  std::vector<Subspace> out;
  for (const auto& v : c.subspaces()) out.emplace_back(g * v.basis());
  return Config(c.n(), c.d(), std::move(out));
}

Config act_right(std::span<const MatQ> h, const Config& c) {
  if (h.size() != c.s()) throw Error(ErrorKind::ShapeMismatch, "one right factor per subspace");
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < c.s(); ++i) {
    if (h[i].rows() != c.d() || h[i].cols() != c.d()) throw Error(ErrorKind::ShapeMismatch, "h_i must be d x d");
    if (rank(h[i]) < c.d()) throw Error(ErrorKind::Singular, "h_" + std::to_string(i + 1) + " is not invertible");
    out.emplace_back(c[i].basis() * h[i]);
  }
  return Config(c.n(), c.d(), std::move(out));
}

MatQ random_invertible(std::size_t n, std::uint64_t seed, std::int64_t bound) {
  SplitMix64 rng(seed);
  while (true) {
    MatQ g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = Rat(rng.uniform(-bound, bound));
    if (rank(g) == n) return g;
  }
}

}  // namespace grinv
