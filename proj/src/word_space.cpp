#include "conway/word_space.hpp"

#include "conway/error.hpp"

namespace conway {

std::string format_word(std::string_view word) { return word.empty() ? "eps" : std::string(word); }

Word parse_word(std::string_view text) {
  if (text == "eps") return {};
  return Word(text);
}

WordSpace::WordSpace(std::string alphabet, std::size_t max_len) : alphabet_(std::move(alphabet)), max_len_(max_len) {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    for (std::size_t j = i + 1; j < alphabet_.size(); ++j)
      if (alphabet_[i] == alphabet_[j])
        throw AlphabetMismatch("alphabet \"" + alphabet_ + "\" repeats symbol '" + alphabet_[i] + "'");

  const std::size_t k = alphabet_.size();
  offset_.assign(1, 0);
  power_.assign(1, 1);
  for (std::size_t len = 0; len <= max_len_; ++len) {
    if (offset_.back() + power_[len] > kMaxWords)
      throw Error("word space over \"" + alphabet_ + "\" up to length " + std::to_string(max_len_) + " is too large");
    offset_.push_back(offset_.back() + power_[len]);
    power_.push_back(power_[len] * k);
  }

  length_.resize(size());
  digits_.resize(size());
  for (std::size_t len = 0; len <= max_len_; ++len)
    for (std::size_t r = offset_[len]; r < offset_[len + 1]; ++r) {
      length_[r] = len;
      digits_[r] = r - offset_[len];
    }
}

std::size_t WordSpace::letter_index(char symbol) const {
  const auto pos = alphabet_.find(symbol);
  return pos == std::string::npos ? npos : pos;
}

std::size_t WordSpace::rank(std::string_view word) const {
  if (word.size() > max_len_)
    throw WordTooLong("word \"" + std::string(word) + "\" is longer than " + std::to_string(max_len_));
  std::size_t digits = 0;
  for (char symbol : word) {
    const std::size_t d = letter_index(symbol);
    if (d == npos)
      throw AlphabetMismatch("symbol '" + std::string(1, symbol) + "' is not in alphabet \"" + alphabet_ + "\"");
    digits = digits * alphabet_.size() + d;
  }
  return offset_[word.size()] + digits;
}

Word WordSpace::word(std::size_t rank) const {
  const std::size_t len = length_[rank];
  Word w(len, '?');
  std::size_t digits = digits_[rank];
  for (std::size_t i = len; i-- > 0;) {
    w[i] = alphabet_[digits % alphabet_.size()];
    digits /= alphabet_.size();
  }
  return w;
}

std::size_t WordSpace::reversed(std::size_t rank) const {
  const std::size_t len = length_[rank];
  const std::size_t k = alphabet_.size();
  std::size_t digits = digits_[rank];
  std::size_t mirrored = 0;
  for (std::size_t i = 0; i < len; ++i) {
    mirrored = mirrored * k + digits % k;
    digits /= k;
  }
  return offset_[len] + mirrored;
}

}  // namespace conway
