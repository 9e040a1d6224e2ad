#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace conway {

/// A word over single-character symbols; the empty string is epsilon.
using Word = std::string;

/// Text form of a word: "eps" for the empty word, otherwise the symbols.
std::string format_word(std::string_view word);

/// Inverse of format_word; "" and "eps" both denote the empty word.
Word parse_word(std::string_view text);

/// All words of length <= max_len over an ordered alphabet, numbered in
/// shortlex order (by length, then lexicographically by alphabet position).
///
/// The rank of a word is independent of max_len, so truncating a dense
/// coefficient table to a shorter length is a prefix copy.
class WordSpace {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  static constexpr std::size_t kMaxWords = std::size_t{1} << 22;

  WordSpace(std::string alphabet, std::size_t max_len);

  const std::string& alphabet() const { return alphabet_; }
  std::size_t max_len() const { return max_len_; }
  std::size_t size() const { return offset_.back(); }

  /// Rank of the first word of length `len`; first_of_length(len + 1) ends the run.
  std::size_t first_of_length(std::size_t len) const { return offset_[len]; }
  std::size_t length(std::size_t rank) const { return length_[rank]; }

  /// Position of `symbol` in the alphabet, or npos.
  std::size_t letter_index(char symbol) const;

  /// Rank of `word`; throws AlphabetMismatch for foreign symbols and
  /// WordTooLong when the word exceeds max_len.
  std::size_t rank(std::string_view word) const;
  Word word(std::size_t rank) const;

  /// Rank of the concatenation, or npos when it is longer than max_len.
  std::size_t concat(std::size_t left, std::size_t right) const {
    const std::size_t len = length_[left] + length_[right];
    if (len > max_len_) return npos;
    return offset_[len] + digits_[left] * power_[length_[right]] + digits_[right];
  }

  /// Rank of the prefix / suffix of the given length.
  std::size_t prefix(std::size_t rank, std::size_t len) const {
    return offset_[len] + digits_[rank] / power_[length_[rank] - len];
  }
  std::size_t suffix(std::size_t rank, std::size_t len) const {
    return offset_[len] + digits_[rank] % power_[len];
  }

  /// Rank of the mirror image of the word.
  std::size_t reversed(std::size_t rank) const;

  friend bool operator==(const WordSpace& a, const WordSpace& b) {
    return a.max_len_ == b.max_len_ && a.alphabet_ == b.alphabet_;
  }

 private:
  std::string alphabet_;
  std::size_t max_len_;
  std::vector<std::size_t> offset_;  // max_len + 2 entries
  std::vector<std::size_t> power_;   // k^len
  std::vector<std::size_t> length_;  // per rank
  std::vector<std::size_t> digits_;  // base-k value per rank
};

}  // namespace conway
