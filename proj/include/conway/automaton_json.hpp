#pragma once

// JSON interchange form of automata:
//   {"semiring": "nat", "alphabet": ["x","y"], "dim": n,
//    "alpha": [...], "beta": [...],
//    "transitions": [{"from": i, "to": j, "letter": "x", "coeff": c}, ...]}
// Indices are 0-based and absent transitions have coefficient 0.

#include <string>

#include "conway/automaton.hpp"
#include "conway/error.hpp"
#include "conway/semiring.hpp"
#include "json.hpp"

namespace conway {

using nlohmann::json;

// Coefficient codecs. bool: 0/1 (true/false accepted); nat: unsigned integer;
// natinf: unsigned integer or "inf"; natmat2: [[a,b],[c,d]].

inline json value_to_json(const BooleanSemiring&, Boolean v) { return v.value ? 1 : 0; }
inline json value_to_json(const NatSemiring&, std::uint64_t v) { return v; }
inline json value_to_json(const NatInfSemiring&, ExtNat v) { return v.infinite ? json("inf") : json(v.value); }
inline json value_to_json(const NatMat2Semiring&, const Nat2x2& v) {
  return json::array({json::array({v.e[0], v.e[1]}), json::array({v.e[2], v.e[3]})});
}

namespace detail {

inline std::uint64_t json_nat(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw FormatError("expected a natural number, got " + j.dump());
  return j.get<std::uint64_t>();
}

}  // namespace detail

inline Boolean value_from_json(const BooleanSemiring&, const json& j) {
  if (j.is_boolean()) return {j.get<bool>()};
  const auto n = detail::json_nat(j);
  if (n > 1) throw FormatError("boolean coefficient must be 0 or 1, got " + j.dump());
  return {n == 1};
}
inline std::uint64_t value_from_json(const NatSemiring&, const json& j) { return detail::json_nat(j); }
inline ExtNat value_from_json(const NatInfSemiring&, const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtNat::inf();
  return {detail::json_nat(j), false};
}
inline Nat2x2 value_from_json(const NatMat2Semiring&, const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() || j[1].size() != 2)
    throw FormatError("natmat2 coefficient must be [[a,b],[c,d]], got " + j.dump());
  return {{detail::json_nat(j[0][0]), detail::json_nat(j[0][1]), detail::json_nat(j[1][0]), detail::json_nat(j[1][1])}};
}

template <StarSemiring C>
json automaton_to_json(const Automaton<C>& a) {
  const C& s0 = a.coefficients();
  json alphabet = json::array();
  for (char c : a.alphabet()) alphabet.push_back(std::string(1, c));
  json alpha = json::array(), beta = json::array(), transitions = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    alpha.push_back(value_to_json(s0, a.alpha()(0, i)));
    beta.push_back(value_to_json(s0, a.beta()(i, 0)));
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [letter, coeff] : a.transition(i, j).terms)
        transitions.push_back(
            {{"from", i}, {"to", j}, {"letter", std::string(1, letter)}, {"coeff", value_to_json(s0, coeff)}});
  return {{"semiring", s0.name()}, {"alphabet", std::move(alphabet)}, {"dim", a.dim()},
          {"alpha", std::move(alpha)}, {"beta", std::move(beta)}, {"transitions", std::move(transitions)}};
}

/// Reads an automaton over `s0`; the "semiring" field must name s0. Repeated
/// transitions with the same endpoints and letter are summed. The alpha.beta = 0
/// flag is set exactly when it holds. Throws FormatError.
template <StarSemiring C>
Automaton<C> automaton_from_json(const json& j, const C& s0) {
  try {
    if (!j.is_object()) throw FormatError("automaton must be a JSON object");
    const std::string semiring = j.at("semiring").get<std::string>();
    if (semiring != s0.name()) throw FormatError("automaton is over \"" + semiring + "\", expected " + s0.name());
    std::string alphabet;
    for (const auto& letter : j.at("alphabet")) {
      const auto text = letter.get<std::string>();
      if (text.size() != 1) throw FormatError("alphabet entries must be single characters, got \"" + text + "\"");
      if (alphabet.find(text[0]) != std::string::npos) throw FormatError("alphabet repeats '" + text + "'");
      alphabet += text;
    }
    const std::size_t n = detail::json_nat(j.at("dim"));
    const json& alpha_j = j.at("alpha");
    const json& beta_j = j.at("beta");
    if (!alpha_j.is_array() || alpha_j.size() != n || !beta_j.is_array() || beta_j.size() != n)
      throw FormatError("alpha and beta must have dim = " + std::to_string(n) + " entries");

    MatrixAlgebra<C> m(s0);
    auto alpha = m.zero(1, n);
    auto beta = m.zero(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      alpha(0, i) = value_from_json(s0, alpha_j[i]);
      beta(i, 0) = value_from_json(s0, beta_j[i]);
    }
    std::vector letters(alphabet.size(), m.zero(n, n));
    for (const auto& t : j.at("transitions")) {
      const std::size_t from = detail::json_nat(t.at("from"));
      const std::size_t to = detail::json_nat(t.at("to"));
      if (from >= n || to >= n) throw FormatError("transition " + t.dump() + " leaves the state range");
      const auto letter = t.at("letter").get<std::string>();
      const auto pos = letter.size() == 1 ? alphabet.find(letter[0]) : std::string::npos;
      if (pos == std::string::npos) throw FormatError("transition letter \"" + letter + "\" is not in the alphabet");
      letters[pos](from, to) = s0.add(letters[pos](from, to), value_from_json(s0, t.at("coeff")));
    }
    const bool vanishes = is_zero(s0, m.mul(alpha, beta)(0, 0));
    return Automaton<C>(s0, alphabet, std::move(alpha), std::move(letters), std::move(beta), vanishes);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed automaton: ") + e.what());
  }
}

}  // namespace conway
