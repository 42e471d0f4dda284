#include "grinv/invariants.hpp"

#include <algorithm>
#include <limits>

namespace grinv {

namespace {

bool is_least_rotation(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t shift = 1; shift < n; ++shift) {
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t a = w[k], b = w[(k + shift) % n];
      if (b < a) return false;
      if (b > a) break;
    }
  }
  return true;
}

}  // namespace

std::vector<Word> enumerate_words(std::size_t alphabet_size, std::size_t max_len) {
  std::vector<Word> out;
  if (alphabet_size == 0) return out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    Word w(len, 0);
    while (true) {
      if (is_least_rotation(w)) out.push_back(w);
      std::size_t k = len;
      while (k > 0 && w[k - 1] + 1 == alphabet_size) w[--k] = 0;
      if (k == 0) break;
      ++w[k - 1];
    }
  }
  return out;
}

std::size_t default_max_len(std::size_t letter_size) {
  if (letter_size >= 63) return std::numeric_limits<std::size_t>::max();
  return (std::size_t{1} << letter_size) - 1;
}

std::size_t effective_max_len(std::optional<std::size_t> requested, std::size_t letter_size) {
  std::size_t bound = default_max_len(letter_size);
  return requested ? std::min(*requested, bound) : bound;
}

InvariantVector make_invariant_vector(const CaseTag& tag, std::size_t letter_size,
                                      std::optional<std::size_t> max_len, const LetterSet<Rat>& letters) {
  InvariantVector v;
  v.tag = tag;
  v.letter_size = letter_size;
  v.max_word_len = effective_max_len(max_len, letter_size);
  v.letters = letters.ids;
  v.words = enumerate_words(letters.size(), v.max_word_len);
  v.values = evaluate_words<Rat>(letters.mats, v.words);
  return v;
}

}  // namespace grinv
