#pragma once

// Rational expressions over (S0, Sigma): syntax, direct evaluation into
// truncated series, and compilation to automata. Evaluation and compilation
// are two independent routes to the same series.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "conway/automaton.hpp"
#include "conway/error.hpp"
#include "conway/random.hpp"
#include "conway/report.hpp"
#include "conway/semiring.hpp"
#include "conway/series.hpp"

namespace conway {

class RatExpr {
 public:
  enum class Kind { Const, Letter, Add, Mul, Plus, Star };

  static RatExpr constant(std::uint64_t value);
  static RatExpr letter(char symbol);
  static RatExpr add(RatExpr left, RatExpr right);
  static RatExpr mul(RatExpr left, RatExpr right);
  static RatExpr plus(RatExpr operand);
  static RatExpr star(RatExpr operand);

  Kind kind() const { return node_->kind; }
  /// Const only: the natural-number literal, mapped into S0 by n -> n.1.
  std::uint64_t value() const { return node_->value; }
  /// Letter only.
  char symbol() const { return node_->symbol; }
  /// Add/Mul: left operand; Plus/Star: the operand.
  const RatExpr& left() const { return *node_->left; }
  const RatExpr& right() const { return *node_->right; }
  const RatExpr& operand() const { return *node_->left; }

  /// Height of the tree; leaves have depth 0.
  std::size_t depth() const;
  std::size_t size() const;

  /// Text in the input grammar, parenthesised only where needed, so that
  /// parse(to_string()) rebuilds the same tree.
  std::string to_string() const;

  friend bool operator==(const RatExpr& a, const RatExpr& b);

 private:
  struct Node {
    Kind kind;
    std::uint64_t value = 0;
    char symbol = 0;
    std::shared_ptr<const RatExpr> left;
    std::shared_ptr<const RatExpr> right;
  };
  explicit RatExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Grammar (whitespace insignificant):
///   expr := prod ('+' prod)*      prod := post ('.' post)*
///   post := atom ('^*' | '^+')*   atom := LETTER | NAT | '(' expr ')'
/// LETTER is a lowercase character of `alphabet`. Throws SyntaxError.
RatExpr parse_expression(std::string_view text, std::string_view alphabet);

// ---------------------------------------------------------------------------

/// The S0-part x of the value x + a of `e` under the direct-sum split of
/// S<<Sigma*>> into constants and proper series. Plus and star need a
/// zero S0-part in their operand; otherwise IllStarred.
template <NaturalEmbedding C>
typename C::value_type decompose(const RatExpr& e, const C& s0) {
  switch (e.kind()) {
    case RatExpr::Kind::Const:
      return s0.from_nat(e.value());
    case RatExpr::Kind::Letter:
      return s0.zero();
    case RatExpr::Kind::Add:
      return s0.add(decompose(e.left(), s0), decompose(e.right(), s0));
    case RatExpr::Kind::Mul:
      return s0.mul(decompose(e.left(), s0), decompose(e.right(), s0));
    case RatExpr::Kind::Plus:
    case RatExpr::Kind::Star: {
      const auto x = decompose(e.operand(), s0);
      if (!is_zero(s0, x))
        throw IllStarred("operand of " + std::string(e.kind() == RatExpr::Kind::Plus ? "^+" : "^*") +
                         " has constant part " + s0.format(x) + " in " + e.to_string());
      return e.kind() == RatExpr::Kind::Plus ? s0.zero() : s0.one();
    }
  }
  return s0.zero();
}

/// True when every plus/star node wraps an operand with zero S0-part.
template <NaturalEmbedding C>
bool is_well_starred(const RatExpr& e, const C& s0) {
  try {
    decompose(e, s0);
    return true;
  } catch (const IllStarred&) {
    return false;
  }
}

/// Structural evaluation with the series operations.
template <NaturalEmbedding C>
typename SeriesSemiring<C>::value_type eval_series(const RatExpr& e, const SeriesSemiring<C>& r) {
  const C& s0 = r.coefficients();
  switch (e.kind()) {
    case RatExpr::Kind::Const:
      return r.inject(s0.from_nat(e.value()));
    case RatExpr::Kind::Letter:
      if (r.words().letter_index(e.symbol()) == WordSpace::npos)
        throw UnknownLetter("letter '" + std::string(1, e.symbol()) + "' is not in alphabet \"" + r.alphabet() + "\"");
      return r.letter(e.symbol());
    case RatExpr::Kind::Add:
      return r.add(eval_series(e.left(), r), eval_series(e.right(), r));
    case RatExpr::Kind::Mul:
      return r.mul(eval_series(e.left(), r), eval_series(e.right(), r));
    case RatExpr::Kind::Plus:
    case RatExpr::Kind::Star: {
      const auto v = eval_series(e.operand(), r);
      if (!r.is_proper(v))
        throw IllStarred("operand of " + std::string(e.kind() == RatExpr::Kind::Plus ? "^+" : "^*") +
                         " has constant part " + s0.format(r.constant_term(v)) + " in " + e.to_string());
      const auto v_star = r.proper_star(v);
      return e.kind() == RatExpr::Kind::Plus ? r.mul(v, v_star) : v_star;
    }
  }
  return r.zero();
}

namespace detail {

/// x + |rat| with alpha.beta = 0 in `rat`; `rat_zero` marks a proper part
/// known to be zero because it was built from constants only.
template <StarSemiring C>
struct RatAutomaton {
  typename C::value_type constant;
  Automaton<C> rat;
  bool rat_zero;
};

template <NaturalEmbedding C>
RatAutomaton<C> compile_rat(const RatExpr& e, const C& s0, const std::string& alphabet) {
  switch (e.kind()) {
    case RatExpr::Kind::Const:
      return {s0.from_nat(e.value()), zero_automaton(s0, alphabet), true};
    case RatExpr::Kind::Letter:
      return {s0.zero(), letter_automaton(s0, alphabet, e.symbol()), false};
    case RatExpr::Kind::Add: {
      auto l = compile_rat(e.left(), s0, alphabet);
      auto r = compile_rat(e.right(), s0, alphabet);
      return {s0.add(l.constant, r.constant), aut_sum(l.rat, r.rat), l.rat_zero && r.rat_zero};
    }
    case RatExpr::Kind::Mul: {
      // (x1 + a1)(x2 + a2) = x1x2 + (x1.a2 + a1.x2 + a1.a2)
      auto l = compile_rat(e.left(), s0, alphabet);
      auto r = compile_rat(e.right(), s0, alphabet);
      const auto x = s0.mul(l.constant, r.constant);
      if (l.rat_zero) return {x, scale_left(l.constant, r.rat), r.rat_zero};
      if (r.rat_zero) return {x, scale_right(l.rat, r.constant), false};
      Automaton<C> a = aut_prod(l.rat, r.rat);
      if (!is_zero(s0, l.constant)) a = aut_sum(scale_left(l.constant, r.rat), a);
      if (!is_zero(s0, r.constant)) a = aut_sum(a, scale_right(l.rat, r.constant));
      return {x, std::move(a), false};
    }
    case RatExpr::Kind::Plus:
    case RatExpr::Kind::Star: {
      auto inner = compile_rat(e.operand(), s0, alphabet);
      if (!is_zero(s0, inner.constant))
        throw IllStarred("operand of " + std::string(e.kind() == RatExpr::Kind::Plus ? "^+" : "^*") +
                         " has constant part " + s0.format(inner.constant) + " in " + e.to_string());
      // a* = 1 + a+
      return {e.kind() == RatExpr::Kind::Plus ? s0.zero() : s0.one(), aut_plus(inner.rat), inner.rat_zero};
    }
  }
  throw Error("unreachable expression kind");
}

}  // namespace detail

/// Automaton whose behavior is the value of `e`. A nonzero constant part is
/// attached last with const_wrap.
template <NaturalEmbedding C>
Automaton<C> compile(const RatExpr& e, const C& s0, const std::string& alphabet) {
  auto parts = detail::compile_rat(e, s0, alphabet);
  if (is_zero(s0, parts.constant)) return std::move(parts.rat);
  return const_wrap(parts.constant, parts.rat);
}

struct RoundTripVerdict {
  bool pass = true;
  std::optional<Word> word;  // first differing word on failure
  std::string detail;
  std::size_t dim = 0;  // dimension of the compiled automaton
};

/// Compares evaluation, the compiled automaton's behavior and the run-weight
/// semantics of that automaton on every word up to max_len.
template <NaturalEmbedding C>
RoundTripVerdict kleene_round_trip(const RatExpr& e, const C& s0, const std::string& alphabet, std::size_t max_len) {
  const SeriesSemiring<C> r(s0, alphabet, max_len);
  const auto direct = eval_series(e, r);
  const Automaton<C> aut = compile(e, s0, alphabet);
  const auto via_matrix = behavior(aut, max_len);
  RoundTripVerdict verdict;
  verdict.dim = aut.dim();
  for (std::size_t w = 0; w < direct.size(); ++w) {
    const Word word = r.words().word(w);
    const auto via_paths = coefficient_by_paths(aut, word);
    if (!s0.eq(direct[w], via_matrix[w]) || !s0.eq(direct[w], via_paths)) {
      verdict.pass = false;
      verdict.word = word;
      verdict.detail = "eval " + s0.format(direct[w]) + ", behavior " + s0.format(via_matrix[w]) + ", paths " +
                       s0.format(via_paths);
      break;
    }
  }
  return verdict;
}

/// Random well-starred expression of depth <= max_depth with constants in
/// [0, max_const]. Plus/star nodes whose operand is ill-starred are re-rolled.
template <NaturalEmbedding C>
RatExpr random_expression(Rng& rng, const C& s0, const std::string& alphabet, std::size_t max_depth,
                          std::uint64_t max_const) {
  auto leaf = [&]() {
    if (alphabet.empty() || rng.chance(1, 3)) return RatExpr::constant(rng.between(0, max_const));
    return RatExpr::letter(alphabet[rng.below(alphabet.size())]);
  };
  if (max_depth == 0 || rng.chance(1, 3)) return leaf();
  switch (rng.below(4)) {
    case 0:
      return RatExpr::add(random_expression(rng, s0, alphabet, max_depth - 1, max_const),
                          random_expression(rng, s0, alphabet, max_depth - 1, max_const));
    case 1:
      return RatExpr::mul(random_expression(rng, s0, alphabet, max_depth - 1, max_const),
                          random_expression(rng, s0, alphabet, max_depth - 1, max_const));
    default: {
      const bool is_plus = rng.chance(1, 2);
      for (int attempt = 0; attempt < 16; ++attempt) {
        RatExpr operand = random_expression(rng, s0, alphabet, max_depth - 1, max_const);
        if (!is_well_starred(operand, s0) || !is_zero(s0, decompose(operand, s0))) continue;
        return is_plus ? RatExpr::plus(std::move(operand)) : RatExpr::star(std::move(operand));
      }
      return leaf();
    }
  }
}

/// Kleene round trip over `cases` seeded random expressions.
template <NaturalEmbedding C>
CheckReport check_kleene(const C& s0, const std::string& alphabet, std::size_t max_len, std::uint64_t seed,
                         std::size_t cases, std::size_t max_depth = 5, std::uint64_t max_const = 3) {
  CheckReport report{"kleene", 0, 0, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    Rng rng = Rng::for_case(seed, 0x6b6c, i);
    const RatExpr e = random_expression(rng, s0, alphabet, max_depth, max_const);
    ++report.cases;
    ++report.checks;
    try {
      const auto verdict = kleene_round_trip(e, s0, alphabet, max_len);
      if (!verdict.pass)
        report.failures.push_back({i, "kleene round trip", e.to_string(), verdict.detail, "",
                                   format_word(*verdict.word), max_len});
    } catch (const Error& err) {
      report.failures.push_back({i, "kleene round trip", e.to_string(), err.what(), "", "", max_len});
    }
  }
  return report;
}

}  // namespace conway
