#pragma once

// Reference computations used only by the tests. Each takes a different route
// from the library code it is compared against.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "conway/automaton.hpp"
#include "conway/matrix.hpp"
#include "conway/semiring.hpp"
#include "conway/series.hpp"

namespace oracle {

using namespace conway;

/// Iterates t <- s.t + r `steps` times from `start`.
template <class Ring>
typename Ring::value_type iterate(const Ring& r, const typename Ring::value_type& s, const typename Ring::value_type& rhs,
                                  typename Ring::value_type start, std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) start = r.add(r.mul(s, start), rhs);
  return start;
}

/// Iterates X <- A.X + B `steps` times from `start`.
template <class Ring>
Matrix<typename Ring::value_type> iterate(const MatrixAlgebra<Ring>& m, const Matrix<typename Ring::value_type>& a,
                                          const Matrix<typename Ring::value_type>& b,
                                          Matrix<typename Ring::value_type> start, std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) start = m.add(m.mul(a, start), b);
  return start;
}

/// Solution of t = s.t + 1 for proper s by L+1 iterations from 0.
template <class C>
typename SeriesSemiring<C>::value_type star_by_iteration(const SeriesSemiring<C>& r,
                                                         const typename SeriesSemiring<C>::value_type& s) {
  return iterate(r, s, r.one(), r.zero(), r.max_len() + 1);
}

/// A* for a proper-entry A by L+1 iterations of X <- A.X + E from 0.
template <class C>
Matrix<typename SeriesSemiring<C>::value_type> matrix_star_by_iteration(
    const SeriesSemiring<C>& r, const Matrix<typename SeriesSemiring<C>::value_type>& a) {
  const MatrixAlgebra<SeriesSemiring<C>> m(r);
  return iterate(m, a, m.identity(a.rows()), m.zero(a.rows(), a.rows()), r.max_len() + 1);
}

/// Sum of s^0 .. s^L.
template <class C>
typename SeriesSemiring<C>::value_type star_by_powers(const SeriesSemiring<C>& r,
                                                      const typename SeriesSemiring<C>::value_type& s) {
  auto power = r.one(), total = r.zero();
  for (std::size_t n = 0; n <= r.max_len(); ++n) {
    total = r.add(total, power);
    power = r.mul(power, s);
  }
  return total;
}

/// Matrix star by the doubly recursive block formula with the last
/// row/column split off; both a* and (a + b.d*.c)* are computed recursively.
template <class Ring>
Matrix<typename Ring::value_type> literal_block_star(const MatrixAlgebra<Ring>& m,
                                                     const Matrix<typename Ring::value_type>& x) {
  const std::size_t n = x.rows();
  if (n == 0) return x;
  if (n == 1) return Matrix<typename Ring::value_type>(1, 1, m.scalars().star(x(0, 0)));
  const std::size_t k = n - 1;
  const auto a = m.block(x, 0, 0, k, k), b = m.block(x, 0, k, k, 1), c = m.block(x, k, 0, 1, k),
             d = m.block(x, k, k, 1, 1);
  const auto a_star = literal_block_star(m, a);
  const auto d_star = literal_block_star(m, d);
  const auto alpha = literal_block_star(m, m.add(a, m.mul(m.mul(b, d_star), c)));
  const auto delta = literal_block_star(m, m.add(d, m.mul(m.mul(c, a_star), b)));
  return m.assemble(alpha, m.mul(m.mul(alpha, b), d_star), m.mul(m.mul(delta, c), a_star), delta);
}

/// Series with every word reversed.
template <class C>
typename SeriesSemiring<C>::value_type reverse(const SeriesSemiring<C>& r, const typename SeriesSemiring<C>::value_type& s) {
  auto out = r.zero();
  for (std::size_t w = 0; w < s.size(); ++w) out[r.words().reversed(w)] = s[w];
  return out;
}

template <class C>
Matrix<typename SeriesSemiring<C>::value_type> reverse_entries(const SeriesSemiring<C>& r,
                                                               Matrix<typename SeriesSemiring<C>::value_type> a) {
  for (auto& e : a.entries()) e = reverse(r, e);
  return a;
}

/// Coefficient of `word` summed over every explicit path of the automaton.
template <class C>
typename C::value_type coefficient_by_enumeration(const Automaton<C>& a, const std::string& word) {
  const C& s0 = a.coefficients();
  const std::size_t n = a.dim();
  typename C::value_type total = s0.zero();
  std::function<void(std::size_t, std::size_t, typename C::value_type)> walk = [&](std::size_t state, std::size_t pos,
                                                                                   typename C::value_type weight) {
    if (pos == word.size()) {
      total = s0.add(total, s0.mul(weight, a.beta()(state, 0)));
      return;
    }
    const auto& m = a.letter_matrix(a.alphabet().find(word[pos]));
    for (std::size_t next = 0; next < n; ++next)
      if (!is_zero(s0, m(state, next))) walk(next, pos + 1, s0.mul(weight, m(state, next)));
  };
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(s0, a.alpha()(0, i))) walk(i, 0, a.alpha()(0, i));
  return total;
}

/// All words over `alphabet` of length <= max_len in shortlex order.
inline std::vector<std::string> words_up_to(const std::string& alphabet, std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t begin = 0, len = 0; len < max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    begin = end;
  }
  return out;
}

/// Least solution of x = a.x + 1 in natInf by iterating from 0; a sequence
/// still increasing after `rounds` steps is read as diverging to infinity.
inline ExtNat natinf_least_star(ExtNat a, std::size_t rounds = 200) {
  const NatInfSemiring s;
  ExtNat x{0, false};
  for (std::size_t i = 0; i < rounds; ++i) {
    ExtNat next;
    try {
      next = s.add(s.mul(a, x), s.one());
    } catch (const Overflow&) {
      return ExtNat::inf();
    }
    if (s.eq(next, x)) return x;
    x = next;
  }
  return ExtNat::inf();
}

}  // namespace oracle
