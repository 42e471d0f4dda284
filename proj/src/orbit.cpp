#include "grinv/orbit.hpp"

#include "grinv/divisible.hpp"
#include "grinv/linalg.hpp"
#include "grinv/odd.hpp"

namespace grinv {

namespace {

CaseTag supported_tag(const Config& c) {
  CaseTag tag = classify_case(c.n(), c.d());
  if (!tag.supported()) {
    throw Error(ErrorKind::UnsupportedCase,
                "(n, d) = (" + std::to_string(c.n()) + ", " + std::to_string(c.d()) + ") has no construction");
  }
  return tag;
}

}  // namespace

template <Scalar T>
LetterSet<T> case_letters(const Mat<T>& stacked, const CaseTag& tag, std::size_t d, std::size_t s) {
  switch (tag.kind) {
    case CaseKind::Divisible: return divisible_letters(stacked, tag.r, d, s);
    case CaseKind::OddMultiple: return odd_letters(stacked, tag.r, tag.e, s);
    case CaseKind::Unsupported: break;
  }
  throw Error(ErrorKind::UnsupportedCase, "unsupported case");
}

template LetterSet<Rat> case_letters(const Mat<Rat>&, const CaseTag&, std::size_t, std::size_t);
template LetterSet<Jet> case_letters(const Mat<Jet>&, const CaseTag&, std::size_t, std::size_t);

InvariantVector invariant_vector(const Config& c, std::optional<std::size_t> max_len) {
  CaseTag tag = supported_tag(c);
  return tag.kind == CaseKind::Divisible ? divisible_invariants(c, max_len) : odd_invariants(c, max_len);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::Distinct: return "Distinct";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Verdict same_orbit_test(const Config& a, const Config& b, std::optional<std::size_t> max_len) {
  CaseTag tag = supported_tag(a);
  supported_tag(b);
  if (a.n() != b.n() || a.d() != b.d() || a.s() != b.s()) {
    throw Error(ErrorKind::ShapeMismatch, "configurations have different (n, d, s)");
  }
  if (!general_position(a, tag) || !general_position(b, tag)) return Verdict::Inconclusive;
  InvariantVector va = invariant_vector(a, max_len);
  InvariantVector vb = invariant_vector(b, max_len);
  if (!va.comparable(vb)) throw Error(ErrorKind::ShapeMismatch, "invariant vectors are not comparable");
  return va.values == vb.values ? Verdict::Equivalent : Verdict::Distinct;
}

std::size_t letter_count(std::size_t n, std::size_t d, std::size_t s) {
  CaseTag tag = classify_case(n, d);
  switch (tag.kind) {
    case CaseKind::Divisible: return divisible_letter_count(tag.r, s);
    case CaseKind::OddMultiple: return odd_letter_count(tag.r, s);
    case CaseKind::Unsupported: break;
  }
  throw Error(ErrorKind::UnsupportedCase, "unsupported case");
}

long conjugation_quotient_formula(std::size_t k, std::size_t m) {
  const long mm = static_cast<long>(m * m);
  return static_cast<long>(k) * mm - (mm - 1);
}

long configuration_count_formula(std::size_t n, std::size_t d, std::size_t s) {
  const long nl = static_cast<long>(n), dl = static_cast<long>(d);
  return static_cast<long>(s) * dl * (nl - dl) - (nl * nl - 1);
}

std::size_t expected_quotient_dim(std::size_t n, std::size_t d, std::size_t s) {
  const std::size_t k = letter_count(n, d, s);
  const std::size_t m = classify_case(n, d).letter_size(d);
  if (k == 0) return 0;
  if (k == 1) return m;
  return static_cast<std::size_t>(conjugation_quotient_formula(k, m));
}

std::size_t jacobian_rank(const Config& c, std::optional<std::size_t> max_len) {
  CaseTag tag = supported_tag(c);
  if (!general_position(c, tag)) throw Error(ErrorKind::Degenerate, "configuration is not in general position");
  const std::size_t d = c.d(), s = c.s();
  const std::size_t k = letter_count(c.n(), d, s);
  if (k == 0) return 0;
  const std::size_t m = tag.letter_size(d);
  const std::vector<Word> words = enumerate_words(k, effective_max_len(max_len, m));

  const MatJ base = lift(c.stacked());
  MatQ jac(words.size(), base.rows() * base.cols());
  std::size_t direction = 0;
  for (std::size_t i = 0; i < base.rows(); ++i) {
    for (std::size_t j = 0; j < base.cols(); ++j, ++direction) {
      MatJ perturbed = base;
      perturbed(i, j).deriv = Rat(1);
      LetterSet<Jet> letters = case_letters(perturbed, tag, d, s);
      std::vector<Jet> vals = evaluate_words<Jet>(letters.mats, words);
      for (std::size_t w = 0; w < vals.size(); ++w) jac(w, direction) = vals[w].deriv;
    }
  }
  return rank(jac);
}

}  // namespace grinv
