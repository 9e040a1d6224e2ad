#pragma once

// Truncated formal power series S<<Sigma*>> over a coefficient semiring.
//
// A series stores one coefficient per word of length <= L in shortlex order.
// The length-L truncation is a congruence for sum and product, and the star
// of a proper series is determined degreewise, so every operation here is
// exact on the stored words.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conway/error.hpp"
#include "conway/semiring.hpp"
#include "conway/word_space.hpp"

namespace conway {

template <class V>
class Series {
 public:
  Series(std::shared_ptr<const WordSpace> space, std::vector<V> coeffs)
      : space_(std::move(space)), coeffs_(std::move(coeffs)) {}

  const WordSpace& space() const { return *space_; }
  const std::shared_ptr<const WordSpace>& space_ptr() const { return space_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient by shortlex rank.
  const V& operator[](std::size_t rank) const { return coeffs_[rank]; }
  V& operator[](std::size_t rank) { return coeffs_[rank]; }

 private:
  std::shared_ptr<const WordSpace> space_;
  std::vector<V> coeffs_;
};

/// The partial star semiring of truncated series; D = proper series.
template <StarSemiring C>
class SeriesSemiring {
 public:
  using coefficient_type = typename C::value_type;
  using value_type = Series<coefficient_type>;

  static constexpr std::size_t kDefaultMaxLen = 6;
  static constexpr std::size_t kDefaultMaxIndex = 8;

  SeriesSemiring(C coefficients, std::string alphabet, std::size_t max_len = kDefaultMaxLen)
      : c_(std::move(coefficients)), space_(std::make_shared<const WordSpace>(std::move(alphabet), max_len)) {}
  SeriesSemiring(C coefficients, std::shared_ptr<const WordSpace> space)
      : c_(std::move(coefficients)), space_(std::move(space)) {}

  const C& coefficients() const { return c_; }
  const WordSpace& words() const { return *space_; }
  const std::shared_ptr<const WordSpace>& space_ptr() const { return space_; }
  const std::string& alphabet() const { return space_->alphabet(); }
  std::size_t max_len() const { return space_->max_len(); }

  /// Same coefficients and alphabet, shorter truncation.
  SeriesSemiring with_max_len(std::size_t max_len) const { return SeriesSemiring(c_, alphabet(), max_len); }

  std::string name() const {
    return std::string(c_.name()) + "<<" + alphabet() + "*>>/" + std::to_string(max_len());
  }

  value_type zero() const { return value_type(space_, std::vector<coefficient_type>(space_->size(), c_.zero())); }
  value_type one() const { return inject(c_.one()); }

  value_type inject(const coefficient_type& x) const {
    value_type s = zero();
    s[0] = x;
    return s;
  }

  value_type letter(char symbol) const { return monomial(Word(1, symbol), c_.one()); }

  value_type monomial(std::string_view word, const coefficient_type& x) const {
    value_type s = zero();
    s[space_->rank(word)] = x;
    return s;
  }

  coefficient_type coefficient(const value_type& s, std::string_view word) const {
    require_space(s);
    return s[space_->rank(word)];
  }

  coefficient_type constant_term(const value_type& s) const {
    require_space(s);
    return s[0];
  }

  /// The series with its epsilon coefficient cleared.
  value_type proper_part(const value_type& s) const {
    require_space(s);
    value_type r = s;
    r[0] = c_.zero();
    return r;
  }

  value_type add(const value_type& s, const value_type& t) const {
    require_space(s);
    require_space(t);
    value_type r = s;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c_.add(r[i], t[i]);
    return r;
  }

  /// Cauchy product: (st, w) = sum over uv = w of (s,u)(t,v).
  value_type mul(const value_type& s, const value_type& t) const {
    require_space(s);
    require_space(t);
    const WordSpace& ws = *space_;
    const std::vector<std::size_t> right = support(t);
    value_type r = zero();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (is_zero(c_, s[i])) continue;
      const std::size_t room = ws.max_len() - ws.length(i);
      for (std::size_t j : right) {
        if (ws.length(j) > room) break;
        const std::size_t w = ws.concat(i, j);
        r[w] = c_.add(r[w], c_.mul(s[i], t[j]));
      }
    }
    return r;
  }

  bool eq(const value_type& s, const value_type& t) const {
    require_space(s);
    require_space(t);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!c_.eq(s[i], t[i])) return false;
    return true;
  }

  /// First word, in shortlex order, on which s and t differ.
  std::optional<Word> first_difference(const value_type& s, const value_type& t) const {
    require_space(s);
    require_space(t);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!c_.eq(s[i], t[i])) return space_->word(i);
    return std::nullopt;
  }

  bool is_proper(const value_type& s) const { return is_zero(c_, constant_term(s)); }
  bool in_star_domain(const value_type& s) const { return is_proper(s); }
  value_type star(const value_type& s) const { return proper_star(s); }
  bool direct_sum_property() const { return true; }

  /// s* for proper s: the unique solution of t = s.t + 1, solved word by word
  /// in shortlex order since (t, w) only involves (t, v) for proper suffixes v.
  value_type proper_star(const value_type& s) const {
    if (!is_proper(s)) throw NotProper("star of a series with constant term " + c_.format(s[0]));
    const WordSpace& ws = *space_;
    value_type t = zero();
    t[0] = c_.one();
    for (std::size_t w = 1; w < t.size(); ++w) {
      const std::size_t len = ws.length(w);
      coefficient_type acc = c_.zero();
      for (std::size_t p = 1; p <= len; ++p) {
        const coefficient_type& head = s[ws.prefix(w, p)];
        if (is_zero(c_, head)) continue;
        acc = c_.add(acc, c_.mul(head, t[ws.suffix(w, len - p)]));
      }
      t[w] = acc;
    }
    return t;
  }

  /// Star of a cycle-free series: the smallest k <= max_index with s^k proper
  /// is used in (s^k)* (s^(k-1) + ... + s + 1).
  value_type cycle_free_star(const value_type& s, std::size_t max_index = kDefaultMaxIndex) const {
    const auto k = cycle_index(s, max_index);
    if (!k)
      throw NotCycleFree("no power s^k with k <= " + std::to_string(max_index) + " is proper; constant term " +
                         c_.format(constant_term(s)));
    return cycle_free_star_with_index(s, *k);
  }

  /// (s^k)* (s^(k-1) + ... + 1) for a given k >= 1 with s^k proper.
  value_type cycle_free_star_with_index(const value_type& s, std::size_t k) const {
    if (k == 0) throw NotCycleFree("cycle index must be at least 1");
    value_type power = one();
    value_type partial = zero();
    for (std::size_t i = 0; i < k; ++i) {
      partial = add(partial, power);
      power = mul(power, s);
    }
    if (!is_proper(power)) throw NotCycleFree("s^" + std::to_string(k) + " is not proper");
    return mul(proper_star(power), partial);
  }

  /// Smallest k in [1, max_index] with (s, eps)^k = 0, if any.
  std::optional<std::size_t> cycle_index(const value_type& s, std::size_t max_index) const {
    const coefficient_type x = constant_term(s);
    coefficient_type power = x;
    for (std::size_t k = 1; k <= max_index; ++k) {
      if (is_zero(c_, power)) return k;
      power = c_.mul(power, x);
    }
    return std::nullopt;
  }

  /// Star over a coefficient semiring with total star: writing s = x + a with
  /// x the constant term, s* = (x*.a)* . x*.
  value_type total_star(const value_type& s) const {
    if constexpr (requires { C::has_total_star(); }) {
      if constexpr (C::has_total_star()) {
        const value_type x_star = inject(c_.star(constant_term(s)));
        return mul(proper_star(mul(x_star, proper_part(s))), x_star);
      }
    }
    throw CoefficientStarUndefined("coefficient semiring " + std::string(c_.name()) + " has no total star");
  }

  /// Drops every word longer than max_len; max_len must not exceed the current bound.
  value_type truncate(const value_type& s, std::size_t max_len) const {
    require_space(s);
    if (max_len > this->max_len())
      throw WordTooLong("cannot extend a series truncated at " + std::to_string(this->max_len()));
    auto space = std::make_shared<const WordSpace>(alphabet(), max_len);
    std::vector<coefficient_type> coeffs;
    coeffs.reserve(space->size());
    for (std::size_t i = 0; i < space->size(); ++i) coeffs.push_back(s[i]);
    return value_type(std::move(space), std::move(coeffs));
  }

  /// Ranks of the nonzero coefficients, ascending.
  std::vector<std::size_t> support(const value_type& s) const {
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!is_zero(c_, s[i])) ranks.push_back(i);
    return ranks;
  }

  /// Polynomial form, e.g. "2 + x + 3xy"; "0" for the zero series.
  std::string format(const value_type& s) const {
    std::string out;
    for (std::size_t i : support(s)) {
      if (!out.empty()) out += " + ";
      const std::string c = c_.format(s[i]);
      if (i == 0) out += c;
      else out += (c_.eq(s[i], c_.one()) ? "" : c) + space_->word(i);
    }
    return out.empty() ? "0" : out;
  }

  /// One `word<TAB>coefficient` line per nonzero coefficient, shortlex order.
  std::string dump(const value_type& s) const {
    std::string out;
    for (std::size_t i : support(s)) out += format_word(space_->word(i)) + "\t" + c_.format(s[i]) + "\n";
    return out;
  }

 private:
  void require_space(const value_type& s) const {
    if (s.space_ptr() != space_ && !(s.space() == *space_))
      throw AlphabetMismatch("series over \"" + s.space().alphabet() + "\" truncated at " +
                             std::to_string(s.space().max_len()) + " used in " + name());
  }

  C c_;
  std::shared_ptr<const WordSpace> space_;
};

/// Extends a coefficient morphism h_coeff and a letter assignment h_letter to
/// the unique semiring morphism on polynomials:
///   p  |->  sum_w h_coeff((p, w)) . h_letter(w_1) ... h_letter(w_k).
///
/// Every occurring coefficient image must commute with every occurring letter
/// image in the target; this is checked and reported as CommutationViolated.
template <StarSemiring C, StarSemiring T, class CoeffMap, class LetterMap>
typename T::value_type extend_morphism(const SeriesSemiring<C>& source, const typename SeriesSemiring<C>::value_type& p,
                                       const T& target, CoeffMap h_coeff, LetterMap h_letter) {
  using TV = typename T::value_type;
  const WordSpace& ws = source.words();
  const std::vector<std::size_t> supp = source.support(p);

  std::vector<std::optional<TV>> letter_image(ws.alphabet().size());
  for (std::size_t r : supp)
    for (char symbol : ws.word(r)) {
      auto& slot = letter_image[ws.letter_index(symbol)];
      if (!slot) slot = h_letter(symbol);
    }

  TV result = target.zero();
  for (std::size_t r : supp) {
    const TV coeff = h_coeff(p[r]);
    for (std::size_t l = 0; l < letter_image.size(); ++l) {
      if (!letter_image[l]) continue;
      if (!target.eq(target.mul(coeff, *letter_image[l]), target.mul(*letter_image[l], coeff)))
        throw CommutationViolated("image of coefficient " + source.coefficients().format(p[r]) +
                                  " does not commute with the image of letter '" + std::string(1, ws.alphabet()[l]) +
                                  "'");
    }
    TV term = coeff;
    for (char symbol : ws.word(r)) term = target.mul(term, *letter_image[ws.letter_index(symbol)]);
    result = target.add(result, term);
  }
  return result;
}

}  // namespace conway
