#include "conway/ratexpr.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace conway;

namespace {

const NatSemiring nat;
const std::string ab = "xy";
using Ring = SeriesSemiring<NatSemiring>;

RatExpr parse(const std::string& text) { return parse_expression(text, ab); }

}  // namespace

TEST_CASE("parser shapes") {
  CHECK(parse("x") == RatExpr::letter('x'));
  CHECK(parse("2.x^* + y") ==
        RatExpr::add(RatExpr::mul(RatExpr::constant(2), RatExpr::star(RatExpr::letter('x'))), RatExpr::letter('y')));
  CHECK(parse("x^+^*") == RatExpr::star(RatExpr::plus(RatExpr::letter('x'))));
  CHECK(parse("x + y + 1") ==
        RatExpr::add(RatExpr::add(RatExpr::letter('x'), RatExpr::letter('y')), RatExpr::constant(1)));
  CHECK(parse(" ( x . y ) ^ *") == RatExpr::star(RatExpr::mul(RatExpr::letter('x'), RatExpr::letter('y'))));
  CHECK(parse("x.y.x") == RatExpr::mul(RatExpr::mul(RatExpr::letter('x'), RatExpr::letter('y')), RatExpr::letter('x')));
}

TEST_CASE("parser errors carry positions") {
  auto position = [](const std::string& text) -> std::size_t {
    try {
      parse(text);
    } catch (const SyntaxError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position("x.(y") == 4);
  CHECK(position("x +") == 3);
  CHECK(position("z") == 0);
  CHECK(position("x^y") == 2);
  CHECK(position("x y") == 2);
  CHECK(position("") == 0);
  CHECK(position("99999999999999999999") == 0);
  CHECK(position("X") == 0);
}

TEST_CASE("printing round-trips through the parser") {
  for (const char* text : {"x", "2.x^* + y", "x^+^*", "(x + y).x", "x.(y.x)", "x + (y + 1)", "((x+2.y)^+ . x)^* + 5",
                           "(x^*)^+", "3.(x.y)^*"}) {
    const RatExpr e = parse(text);
    CHECK(parse(e.to_string()) == e);
  }
  CHECK(parse("(x + y).x").to_string() == "(x + y).x");
  CHECK(parse("x + (y + 1)").to_string() == "x + (y + 1)");
  CHECK(parse("(((x)))").to_string() == "x");
}

TEST_CASE("decompose") {
  CHECK(decompose(parse("3 + x"), nat) == 3);
  CHECK_THROWS_AS(decompose(parse("(1 + x)^+"), nat), IllStarred);
  CHECK(decompose(parse("(2.x)^*"), nat) == 1);
  CHECK(decompose(parse("(2.x)^+"), nat) == 0);
  CHECK(decompose(parse("(2 + x).(3 + y)"), nat) == 6);
  CHECK_FALSE(is_well_starred(parse("2^*"), nat));
  CHECK(is_well_starred(parse("0^*"), nat));
}

TEST_CASE("evaluation") {
  const Ring r3(nat, ab, 3);
  const auto sx = eval_series(parse("x^*"), r3);
  CHECK(r3.eq(sx, oracle::star_by_iteration(r3, r3.letter('x'))));
  CHECK(r3.dump(sx) == "eps\t1\nx\t1\nxx\t1\nxxx\t1\n");
  CHECK(r3.eq(eval_series(parse("0^*"), r3), r3.one()));
  const Ring r2(nat, ab, 2);
  const auto all = eval_series(parse("(x+y)^*"), r2);
  for (const auto& w : oracle::words_up_to(ab, 2)) CHECK(r2.coefficient(all, w) == 1);
  CHECK_THROWS_AS(eval_series(parse("2^*"), r3), IllStarred);
  CHECK_THROWS_AS(eval_series(RatExpr::letter('z'), r3), UnknownLetter);
}

TEST_CASE("decompose agrees with the constant term of the evaluation") {
  const Ring r(nat, ab, 3);
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = Rng::for_case(12, 12, i);
    const RatExpr e = random_expression(rng, nat, ab, 4, 3);
    CHECK(decompose(e, nat) == r.constant_term(eval_series(e, r)));
    CHECK(parse(e.to_string()) == e);
    CHECK(e.depth() <= 4);
  }
}

TEST_CASE("evaluation is compositional") {
  const Ring r(nat, ab, 4);
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng = Rng::for_case(13, 13, i);
    const RatExpr e1 = random_expression(rng, nat, ab, 3, 3), e2 = random_expression(rng, nat, ab, 3, 3);
    CHECK(r.eq(eval_series(RatExpr::add(e1, e2), r), r.add(eval_series(e1, r), eval_series(e2, r))));
    CHECK(r.eq(eval_series(RatExpr::mul(e1, e2), r), r.mul(eval_series(e1, r), eval_series(e2, r))));
  }
}

TEST_CASE("compilation") {
  const Ring r(nat, ab, 4);
  const auto ax = compile(parse("x"), nat, ab);
  CHECK(ax.dim() == 2);
  CHECK(r.eq(behavior(ax, 4), r.letter('x')));

  const auto sym = compile(parse("x.y + y.x"), nat, ab);
  const auto b = behavior(sym, 4);
  for (const auto& w : oracle::words_up_to(ab, 4)) {
    const std::uint64_t expect = (w == "xy" || w == "yx") ? 1 : 0;
    CHECK(r.coefficient(b, w) == expect);
    CHECK(coefficient_by_paths(sym, w) == expect);
  }

  const auto cp = compile(parse("3 + x^+"), nat, ab);
  for (const auto& w : oracle::words_up_to(ab, 4)) {
    const std::uint64_t expect = w.empty() ? 3 : (w.find('y') == std::string::npos ? 1 : 0);
    CHECK(coefficient_by_paths(cp, w) == expect);
  }
  CHECK_THROWS_AS(compile(parse("(1 + x)^*"), nat, ab), IllStarred);
}

TEST_CASE("Kleene round trip on fixed expressions") {
  for (const char* text : {"x^*", "0", "((x+2.y)^+ . x)^* + 5", "(3 + x).(2 + y^*)", "(x.(1 + y))^*",
                           "2.(x^* . y)^+ . 3 + 1", "(0.x)^*", "((x^*.y)^+)^*"}) {
    const auto verdict = kleene_round_trip(parse(text), nat, ab, 6);
    CHECK_MESSAGE(verdict.pass, text << ": " << verdict.detail);
  }
}

TEST_CASE("Kleene round trip over every coefficient semiring") {
  CHECK(check_kleene(BooleanSemiring{}, ab, 4, 0, 50).passed());
  CHECK(check_kleene(NatInfSemiring{}, ab, 4, 0, 50).passed());
  CHECK(check_kleene(NatMat2Semiring{}, ab, 4, 0, 50).passed());
  CHECK(check_kleene(nat, "xyz", 4, 1, 50).passed());
}

TEST_CASE("overflow is reported") {
  const Ring r(nat, ab, 3);
  CHECK_THROWS_AS(eval_series(parse("18446744073709551615 + 1"), r), Overflow);
}
