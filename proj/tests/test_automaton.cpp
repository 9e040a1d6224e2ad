#include "conway/automaton.hpp"

#include "conway/automaton_json.hpp"
#include "conway/random.hpp"
#include "conway/verify.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conway;

namespace {

const NatSemiring nat;
const std::string ab = "xy";
using Ring = SeriesSemiring<NatSemiring>;
using Aut = Automaton<NatSemiring>;

Aut ax() { return letter_automaton(nat, ab, 'x'); }
Aut ay() { return letter_automaton(nat, ab, 'y'); }
Aut a0() { return zero_automaton(nat, ab); }

// Behavior matches the expected series and both path oracles on every word.
void check_behavior(const Aut& a, const Ring& r, const Ring::value_type& expected) {
  const auto b = behavior(a, r.max_len());
  CHECK(r.eq(b, expected));
  for (const auto& w : oracle::words_up_to(ab, r.max_len())) {
    CHECK(coefficient_by_paths(a, w) == r.coefficient(expected, w));
    if (a.dim() <= 8) CHECK(oracle::coefficient_by_enumeration(a, w) == r.coefficient(expected, w));
  }
}

Aut dim1(std::uint64_t x_weight) {
  const MatrixAlgebra m(nat);
  std::vector letters{Matrix<std::uint64_t>(1, 1, x_weight), m.zero(1, 1)};
  return Aut(nat, ab, m.identity(1), letters, m.identity(1), false);
}

}  // namespace

TEST_CASE("basic automata") {
  const Ring r(nat, ab, 4);
  check_behavior(a0(), r, r.zero());
  check_behavior(ax(), r, r.letter('x'));
  CHECK(ax().dim() == 2);
  CHECK(a0().dim() == 1);
  CHECK(coefficient_by_paths(ax(), "x") == 1);
  CHECK(coefficient_by_paths(ax(), "") == 0);
  CHECK(coefficient_by_paths(a0(), "xy") == 0);
  CHECK_THROWS_AS(letter_automaton(nat, ab, 'z'), UnknownLetter);
  CHECK_THROWS_AS(coefficient_by_paths(ax(), "z"), UnknownLetter);
}

TEST_CASE("single-state automata") {
  const Ring r(nat, ab, 4);
  check_behavior(dim1(1), r, r.star(r.letter('x')));
  CHECK(coefficient_by_paths(dim1(2), "xx") == 4);
}

TEST_CASE("sum, product and plus") {
  const Ring r(nat, ab, 4);
  const auto x = r.letter('x'), y = r.letter('y');
  check_behavior(aut_sum(ax(), ay()), r, r.add(x, y));
  CHECK(aut_sum(ax(), ay()).dim() == 4);
  check_behavior(aut_prod(ax(), ay()), r, r.mul(x, y));
  check_behavior(aut_sum(a0(), a0()), r, r.zero());
  check_behavior(aut_plus(ax()), r, r.mul(x, r.star(x)));
  check_behavior(aut_plus(a0()), r, r.zero());
  const auto xy = r.mul(x, y);
  // (xy)+ as the solution of t = xy.t + xy, by iteration.
  check_behavior(aut_plus(aut_prod(ax(), ay())), r, oracle::iterate(r, xy, xy, r.zero(), r.max_len() + 1));
}

TEST_CASE("scaling and constant wrapping") {
  const Ring r(nat, ab, 4);
  const auto x = r.letter('x');
  check_behavior(scale_left(0, ax()), r, r.zero());
  check_behavior(scale_left(2, ax()), r, r.mul(r.inject(2), x));
  check_behavior(scale_right(ax(), 1), r, x);
  check_behavior(const_wrap(0, ax()), r, x);
  check_behavior(const_wrap(3, ax()), r, r.add(r.inject(3), x));
  check_behavior(const_wrap(1, a0()), r, r.one());
  CHECK_FALSE(const_wrap(3, ax()).zero_alpha_beta());
  CHECK_THROWS_AS(aut_plus(const_wrap(3, ax())), PreconditionViolated);
  CHECK_THROWS_AS(aut_sum(ax(), letter_automaton(nat, std::string("x"), 'x')), AlphabetMismatch);
}

TEST_CASE("construction preconditions") {
  const MatrixAlgebra m(nat);
  CHECK_THROWS_AS(Aut(nat, ab, m.identity(1), {m.zero(1, 1), m.zero(1, 1)}, m.identity(1), true),
                  PreconditionViolated);
  CHECK_THROWS_AS(Aut(nat, ab, m.identity(1), {m.zero(1, 1)}, m.identity(1), false), ShapeMismatch);
  CHECK_THROWS_AS(Aut(nat, ab, m.zero(1, 2), {m.zero(2, 2), m.zero(2, 2)}, m.zero(3, 1), false), ShapeMismatch);
}

TEST_CASE("random constructions keep alpha.beta = 0 and match series operations") {
  const Ring r(nat, ab, 4);
  for (std::uint64_t i = 0; i < 40; ++i) {
    Rng rng = Rng::for_case(11, 11, i);
    // Random small automaton built from letters, then combined.
    auto random_aut = [&]() {
      Aut a = rng.chance(1, 2) ? ax() : ay();
      if (rng.chance(1, 2)) a = aut_sum(a, rng.chance(1, 2) ? ax() : a0());
      if (rng.chance(1, 2)) a = scale_left(rng.between(0, 3), a);
      return a;
    };
    const Aut p = random_aut(), q = random_aut();
    const auto bp = behavior(p, 4), bq = behavior(q, 4);
    for (const Aut& built : {aut_sum(p, q), aut_prod(p, q), aut_plus(p), scale_right(q, 2)})
      CHECK(built.alpha_beta_vanishes());
    check_behavior(aut_sum(p, q), r, r.add(bp, bq));
    check_behavior(aut_prod(p, q), r, r.mul(bp, bq));
    check_behavior(aut_plus(p), r, r.mul(bp, r.star(bp)));
    check_behavior(scale_right(q, 2), r, r.mul(bq, r.inject(2)));
    check_behavior(const_wrap(3, p), r, r.add(r.inject(3), bp));
  }
}

TEST_CASE("noncommutative coefficients keep their order") {
  const NatMat2Semiring s0;
  const SeriesSemiring<NatMat2Semiring> r(s0, ab, 3);
  const Nat2x2 p{{0, 1, 0, 0}}, q{{0, 0, 1, 0}};
  const auto a = scale_right(scale_left(p, letter_automaton(s0, ab, 'x')), q);
  CHECK(r.eq(behavior(a, 3), r.mul(r.mul(r.inject(p), r.letter('x')), r.inject(q))));
  CHECK(coefficient_by_paths(a, "x") == s0.mul(p, q));
  CHECK_FALSE(s0.eq(s0.mul(p, q), s0.mul(q, p)));
}

TEST_CASE("transition view lists nonzero coefficients by letter") {
  const auto a = aut_sum(ax(), scale_left(2, ay()));
  const auto t = a.transition(0, 1);
  REQUIRE(t.terms.size() == 1);
  CHECK(t.terms[0].first == 'x');
  CHECK(a.transition(2, 3).terms.at(0).second == 1);
  CHECK(a.transition(1, 0).terms.empty());
}

TEST_CASE("JSON round trip") {
  const Ring r(nat, ab, 5);
  const auto a = const_wrap(3, aut_plus(aut_prod(ax(), scale_left(2, ay()))));
  const json j = automaton_to_json(a);
  CHECK(j["semiring"] == "nat");
  CHECK(j["dim"] == a.dim());
  const auto back = automaton_from_json(j, nat);
  CHECK(r.eq(behavior(back, 5), behavior(a, 5)));
  CHECK(automaton_to_json(back) == j);

  const NatInfSemiring ni;
  const auto inf_aut = scale_left(ExtNat::inf(), letter_automaton(ni, ab, 'y'));
  const json ji = automaton_to_json(inf_aut);
  CHECK(ji["alpha"][0] == "inf");
  CHECK(automaton_to_json(automaton_from_json(ji, ni)) == ji);

  const NatMat2Semiring m2;
  const auto mat_aut = scale_left(Nat2x2{{1, 2, 3, 4}}, letter_automaton(m2, ab, 'x'));
  CHECK(automaton_to_json(automaton_from_json(automaton_to_json(mat_aut), m2)) == automaton_to_json(mat_aut));
}

TEST_CASE("hand-written JSON of the letter automaton") {
  const json j = json::parse(R"({"semiring": "nat", "alphabet": ["x","y"], "dim": 2,
    "alpha": [1, 0], "beta": [0, 1],
    "transitions": [{"from": 0, "to": 1, "letter": "x", "coeff": 1}]})");
  const auto a = automaton_from_json(j, nat);
  CHECK(a.zero_alpha_beta());
  const Ring r(nat, ab, 3);
  CHECK(r.dump(behavior(a, 3)) == "x\t1\n");
}

TEST_CASE("malformed JSON is rejected") {
  const char* bad[] = {
      R"([1,2])",
      R"({"semiring": "bool", "alphabet": ["x"], "dim": 1, "alpha": [0], "beta": [0], "transitions": []})",
      R"({"semiring": "nat", "alphabet": ["x"], "dim": 2, "alpha": [0], "beta": [0, 0], "transitions": []})",
      R"({"semiring": "nat", "alphabet": ["x"], "dim": 1, "alpha": [-1], "beta": [0], "transitions": []})",
      R"({"semiring": "nat", "alphabet": ["xy"], "dim": 1, "alpha": [0], "beta": [0], "transitions": []})",
      R"({"semiring": "nat", "alphabet": ["x"], "dim": 1, "alpha": [0], "beta": [0],
          "transitions": [{"from": 0, "to": 1, "letter": "x", "coeff": 1}]})",
      R"({"semiring": "nat", "alphabet": ["x"], "dim": 1, "alpha": [0], "beta": [0],
          "transitions": [{"from": 0, "to": 0, "letter": "y", "coeff": 1}]})",
      R"({"semiring": "nat", "alphabet": ["x"], "dim": 1, "alpha": [0], "beta": [0]})",
  };
  for (const char* text : bad) CHECK_THROWS_AS(automaton_from_json(json::parse(text), nat), FormatError);
  CHECK_THROWS_AS(automaton_from_json(json::parse(R"({"semiring": "bool", "alphabet": ["x"], "dim": 1,
      "alpha": [2], "beta": [0], "transitions": []})"),
                                      BooleanSemiring{}),
                  FormatError);
}
