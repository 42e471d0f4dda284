#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grinv/grassmann.hpp"
#include "grinv/linalg.hpp"

namespace grinv {

using Word = std::vector<std::size_t>;

/// All words of length 1..max_len over {0..alphabet_size-1}, one per
/// cyclic-rotation class (its lexicographically least rotation), listed by
/// length and then lexicographically.
std::vector<Word> enumerate_words(std::size_t alphabet_size, std::size_t max_len);

/// 2^m - 1: the word-length bound below which traces generate the invariants
/// of m x m matrices under simultaneous conjugation.
std::size_t default_max_len(std::size_t letter_size);

/// min(requested, default_max_len(letter_size)); the default when unset.
std::size_t effective_max_len(std::optional<std::size_t> requested, std::size_t letter_size);

/// Ordered letters produced by one of the normal-form pipelines.
template <Scalar T>
struct LetterSet {
  std::vector<std::string> ids;
  std::vector<Mat<T>> mats;

  std::size_t size() const { return mats.size(); }
  bool empty() const { return mats.empty(); }
  void push(std::string id, Mat<T> m) {
    ids.push_back(std::move(id));
    mats.push_back(std::move(m));
  }
};

/// Trace of every word, reusing the product of each word's longest proper
/// prefix when it has already been formed.
template <Scalar T>
std::vector<T> evaluate_words(std::span<const Mat<T>> letters, std::span<const Word> words) {
  std::map<Word, Mat<T>> prefix_products;
  std::vector<T> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    Mat<T> prod;
    std::size_t start = 0;
    for (std::size_t len = w.size() - 1; len > 0; --len) {
      auto it = prefix_products.find(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len)));
      if (it != prefix_products.end()) {
        prod = it->second;
        start = len;
        break;
      }
    }
    if (start == 0) {
      prod = word_product(letters, std::span<const std::size_t>(w.data(), 1));
      start = 1;
    }
    for (std::size_t k = start; k < w.size(); ++k) {
      if (w[k] >= letters.size()) throw Error(ErrorKind::IndexOutOfRange, "letter index out of range");
      prod = prod * letters[w[k]];
      prefix_products.emplace(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k + 1)), prod);
    }
    out.push_back(trace(prod));
  }
  return out;
}

/// Ordered (word, exact trace) pairs for one configuration.
struct InvariantVector {
  CaseTag tag;
  std::size_t letter_size = 0;
  std::size_t max_word_len = 0;
  std::vector<std::string> letters;
  std::vector<Word> words;
  std::vector<Rat> values;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }

  /// Same case, alphabet and word list, so values compare positionally.
  bool comparable(const InvariantVector& o) const {
    return tag == o.tag && letter_size == o.letter_size && letters == o.letters && words == o.words;
  }
  friend bool operator==(const InvariantVector& a, const InvariantVector& b) {
    return a.comparable(b) && a.values == b.values;
  }
};

/// Builds the vector from rational letters.
InvariantVector make_invariant_vector(const CaseTag& tag, std::size_t letter_size,
                                      std::optional<std::size_t> max_len, const LetterSet<Rat>& letters);

}  // namespace grinv
