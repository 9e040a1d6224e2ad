#pragma once

// Weighted automata (alpha, A, beta) over (S0, Sigma), where S0 is a
// coefficient semiring embedded as constant series and A is letter-linear.
// Behaviors are computed in the truncated series matrix algebra; the run
// semantics in coefficient_by_paths is an independent route to the same values.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conway/error.hpp"
#include "conway/matrix.hpp"
#include "conway/semiring.hpp"
#include "conway/series.hpp"

namespace conway {

/// sum_sigma c_sigma . sigma, listing only nonzero coefficients.
template <class V>
struct LinearCombination {
  std::vector<std::pair<char, V>> terms;
};

template <StarSemiring C>
class Automaton {
 public:
  using value_type = typename C::value_type;
  using matrix_type = Matrix<value_type>;

  /// `letters[k]` is the dim x dim matrix of coefficients of alphabet[k] in
  /// the transition matrix. With `zero_alpha_beta` set, alpha.beta = 0 is
  /// verified and the automaton may enter the plus and scaling constructions.
  Automaton(C s0, std::string alphabet, matrix_type alpha, std::vector<matrix_type> letters, matrix_type beta,
            bool zero_alpha_beta)
      : s0_(std::move(s0)),
        alphabet_(std::move(alphabet)),
        alpha_(std::move(alpha)),
        letters_(std::move(letters)),
        beta_(std::move(beta)),
        zero_alpha_beta_(zero_alpha_beta) {
    const std::size_t n = alpha_.cols();
    if (alpha_.rows() != 1 || beta_.cols() != 1 || beta_.rows() != n)
      throw ShapeMismatch("initial vector must be 1x" + std::to_string(n) + " and final vector " + std::to_string(n) +
                          "x1");
    if (letters_.size() != alphabet_.size())
      throw ShapeMismatch("expected one transition matrix per letter of \"" + alphabet_ + "\"");
    for (const auto& m : letters_)
      if (m.rows() != n || m.cols() != n) throw ShapeMismatch("transition matrix does not match dimension");
    if (zero_alpha_beta_ && !alpha_beta_vanishes())
      throw PreconditionViolated("initial times final vector is " + s0_.format(alpha_beta()) + ", not 0");
  }

  const C& coefficients() const { return s0_; }
  const std::string& alphabet() const { return alphabet_; }
  std::size_t dim() const { return alpha_.cols(); }
  const matrix_type& alpha() const { return alpha_; }
  const matrix_type& beta() const { return beta_; }
  const matrix_type& letter_matrix(std::size_t letter) const { return letters_[letter]; }
  const std::vector<matrix_type>& letter_matrices() const { return letters_; }
  bool zero_alpha_beta() const { return zero_alpha_beta_; }

  value_type alpha_beta() const { return MatrixAlgebra<C>(s0_).mul(alpha_, beta_)(0, 0); }
  bool alpha_beta_vanishes() const { return is_zero(s0_, alpha_beta()); }

  LinearCombination<value_type> transition(std::size_t from, std::size_t to) const {
    LinearCombination<value_type> lc;
    for (std::size_t k = 0; k < alphabet_.size(); ++k)
      if (!is_zero(s0_, letters_[k](from, to))) lc.terms.emplace_back(alphabet_[k], letters_[k](from, to));
    return lc;
  }

 private:
  C s0_;
  std::string alphabet_;
  matrix_type alpha_;
  std::vector<matrix_type> letters_;
  matrix_type beta_;
  bool zero_alpha_beta_;
};

namespace detail {

template <StarSemiring C>
void require_zero_alpha_beta(const Automaton<C>& a, const char* op) {
  if (!a.zero_alpha_beta())
    throw PreconditionViolated(std::string(op) + " needs an automaton whose initial times final vector is 0");
}

template <StarSemiring C>
void require_same_alphabet(const Automaton<C>& a, const Automaton<C>& b) {
  if (a.alphabet() != b.alphabet())
    throw AlphabetMismatch("automata over \"" + a.alphabet() + "\" and \"" + b.alphabet() + "\"");
}

}  // namespace detail

/// A_0 = (0, 0, 0) of dimension 1.
template <StarSemiring C>
Automaton<C> zero_automaton(const C& s0, const std::string& alphabet) {
  MatrixAlgebra<C> m(s0);
  return Automaton<C>(s0, alphabet, m.zero(1, 1), std::vector(alphabet.size(), m.zero(1, 1)), m.zero(1, 1), true);
}

/// A_a = ((1 0), (0 a / 0 0), (0 / 1)), behavior a.
template <StarSemiring C>
Automaton<C> letter_automaton(const C& s0, const std::string& alphabet, char symbol) {
  const auto pos = alphabet.find(symbol);
  if (pos == std::string::npos)
    throw UnknownLetter("letter '" + std::string(1, symbol) + "' is not in alphabet \"" + alphabet + "\"");
  MatrixAlgebra<C> m(s0);
  std::vector letters(alphabet.size(), m.zero(2, 2));
  letters[pos](0, 1) = s0.one();
  auto beta = m.zero(2, 1);
  beta(1, 0) = s0.one();
  return Automaton<C>(s0, alphabet, m.unit_row(2, 0), std::move(letters), std::move(beta), true);
}

/// ((alpha1, alpha2), diag(A1, A2), (beta1; beta2)).
template <StarSemiring C>
Automaton<C> aut_sum(const Automaton<C>& a1, const Automaton<C>& a2) {
  detail::require_zero_alpha_beta(a1, "automaton sum");
  detail::require_zero_alpha_beta(a2, "automaton sum");
  detail::require_same_alphabet(a1, a2);
  MatrixAlgebra<C> m(a1.coefficients());
  const std::size_t n1 = a1.dim(), n2 = a2.dim();
  std::vector<Matrix<typename C::value_type>> letters;
  for (std::size_t k = 0; k < a1.alphabet().size(); ++k)
    letters.push_back(
        m.assemble(a1.letter_matrix(k), m.zero(n1, n2), m.zero(n2, n1), a2.letter_matrix(k)));
  return Automaton<C>(a1.coefficients(), a1.alphabet(),
                      m.hcat(a1.alpha(), a2.alpha()), std::move(letters),
                      m.vcat(a1.beta(), a2.beta()), true);
}

/// ((alpha1, 0), (A1  beta1.alpha2.A2 / 0  A2), (beta1.alpha2.beta2; beta2)).
///
/// The general form is kept even though alpha2.beta2 = 0 would simplify the
/// final vector.
template <StarSemiring C>
Automaton<C> aut_prod(const Automaton<C>& a1, const Automaton<C>& a2) {
  detail::require_zero_alpha_beta(a1, "automaton product");
  detail::require_zero_alpha_beta(a2, "automaton product");
  detail::require_same_alphabet(a1, a2);
  MatrixAlgebra<C> m(a1.coefficients());
  const std::size_t n1 = a1.dim(), n2 = a2.dim();
  const auto link = m.mul(a1.beta(), a2.alpha());  // beta1.alpha2, n1 x n2
  std::vector<Matrix<typename C::value_type>> letters;
  for (std::size_t k = 0; k < a1.alphabet().size(); ++k)
    letters.push_back(m.assemble(a1.letter_matrix(k), m.mul(link, a2.letter_matrix(k)), m.zero(n2, n1),
                                 a2.letter_matrix(k)));
  return Automaton<C>(a1.coefficients(), a1.alphabet(),
                      m.hcat(a1.alpha(), m.zero(1, n2)), std::move(letters),
                      m.vcat(m.mul(link, a2.beta()), a2.beta()), true);
}

/// (alpha, A + beta.alpha.A, beta); behavior |A|+.
template <StarSemiring C>
Automaton<C> aut_plus(const Automaton<C>& a) {
  detail::require_zero_alpha_beta(a, "automaton plus");
  MatrixAlgebra<C> m(a.coefficients());
  const auto loop = m.mul(a.beta(), a.alpha());  // beta.alpha, n x n
  std::vector<Matrix<typename C::value_type>> letters;
  for (const auto& am : a.letter_matrices()) letters.push_back(m.add(am, m.mul(loop, am)));
  return Automaton<C>(a.coefficients(), a.alphabet(), a.alpha(), std::move(letters), a.beta(), true);
}

/// (x.alpha, A, beta); behavior x.|A|.
template <StarSemiring C>
Automaton<C> scale_left(const typename C::value_type& x, const Automaton<C>& a) {
  detail::require_zero_alpha_beta(a, "left scaling");
  MatrixAlgebra<C> m(a.coefficients());
  return Automaton<C>(a.coefficients(), a.alphabet(), m.scale_left(x, a.alpha()), a.letter_matrices(), a.beta(),
                      true);
}

/// (alpha, A, beta.x); behavior |A|.x.
template <StarSemiring C>
Automaton<C> scale_right(const Automaton<C>& a, const typename C::value_type& x) {
  detail::require_zero_alpha_beta(a, "right scaling");
  MatrixAlgebra<C> m(a.coefficients());
  return Automaton<C>(a.coefficients(), a.alphabet(), a.alpha(), a.letter_matrices(), m.scale_right(a.beta(), x),
                      true);
}

/// ((x, alpha), (0 0 / 0 A), (1; beta)) of dimension 1 + n; behavior x + |A|.
/// The result no longer carries the alpha.beta = 0 guarantee.
template <StarSemiring C>
Automaton<C> const_wrap(const typename C::value_type& x, const Automaton<C>& a) {
  const C& s0 = a.coefficients();
  MatrixAlgebra<C> m(s0);
  const std::size_t n = a.dim();
  std::vector<Matrix<typename C::value_type>> letters;
  for (const auto& am : a.letter_matrices()) letters.push_back(m.assemble(m.zero(1, 1), m.zero(1, n), m.zero(n, 1), am));
  return Automaton<C>(s0, a.alphabet(), m.hcat(Matrix<typename C::value_type>(1, 1, x), a.alpha()),
                      std::move(letters), m.vcat(m.ones(1), a.beta()),
                      false);
}

/// The transition matrix as a matrix of proper series: entry (i, j) is
/// sum_sigma A_sigma(i, j) . sigma.
template <StarSemiring C>
Matrix<typename SeriesSemiring<C>::value_type> embed_transitions(const Automaton<C>& a, const SeriesSemiring<C>& r) {
  const std::size_t n = a.dim();
  Matrix<typename SeriesSemiring<C>::value_type> t(n, n, r.zero());
  for (std::size_t k = 0; k < a.alphabet().size(); ++k) {
    const auto letter = r.letter(a.alphabet()[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(a.coefficients(), a.letter_matrix(k)(i, j)))
          t(i, j) = r.add(t(i, j), r.mul(r.inject(a.letter_matrix(k)(i, j)), letter));
  }
  return t;
}

/// |A| = alpha . A* . beta, truncated at max_len.
template <StarSemiring C>
typename SeriesSemiring<C>::value_type behavior(const Automaton<C>& a, std::size_t max_len) {
  const SeriesSemiring<C> r(a.coefficients(), a.alphabet(), max_len);
  MatrixAlgebra<SeriesSemiring<C>> m(r);
  const std::size_t n = a.dim();
  Matrix<typename SeriesSemiring<C>::value_type> alpha(1, n, r.zero()), beta(n, 1, r.zero());
  for (std::size_t i = 0; i < n; ++i) {
    alpha(0, i) = r.inject(a.alpha()(0, i));
    beta(i, 0) = r.inject(a.beta()(i, 0));
  }
  return m.mul(m.mul(alpha, m.star(embed_transitions(a, r))), beta)(0, 0);
}

/// Run-weight semantics: alpha . A_{w1} ... A_{wk} . beta with A_sigma the
/// coefficient matrix of sigma.
template <StarSemiring C>
typename C::value_type coefficient_by_paths(const Automaton<C>& a, std::string_view word) {
  MatrixAlgebra<C> m(a.coefficients());
  Matrix<typename C::value_type> row = a.alpha();
  for (char symbol : word) {
    const auto pos = a.alphabet().find(symbol);
    if (pos == std::string::npos)
      throw UnknownLetter("letter '" + std::string(1, symbol) + "' is not in alphabet \"" + a.alphabet() + "\"");
    row = m.mul(row, a.letter_matrix(pos));
  }
  return m.mul(row, a.beta())(0, 0);
}

}  // namespace conway
