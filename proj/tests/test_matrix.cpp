#include "conway/matrix.hpp"

#include "conway/random.hpp"
#include "conway/series.hpp"
#include "conway/verify.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conway;

namespace {

using NatM = Matrix<std::uint64_t>;
using Ring = SeriesSemiring<NatSemiring>;
using SMat = Matrix<Ring::value_type>;

// Entrywise triple loop, no zero skipping.
NatM loop_product(const NatM& a, const NatM& b) {
  NatM c(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

SMat swap_matrix(const Ring& r) {
  SMat a(2, 2, r.zero());
  a(0, 1) = r.letter('x');
  a(1, 0) = r.letter('y');
  return a;
}

}  // namespace

TEST_CASE("matrix products over nat") {
  const MatrixAlgebra m{NatSemiring{}};
  const NatM a(2, 2, std::vector<std::uint64_t>{1, 2, 0, 1});
  const NatM b(2, 1, std::vector<std::uint64_t>{1, 3});
  CHECK(m.eq(m.mul(a, b), NatM(2, 1, std::vector<std::uint64_t>{7, 3})));
  CHECK(m.eq(m.mul(a, b), loop_product(a, b)));
  CHECK(m.eq(m.mul(m.identity(2), a), a));
  CHECK(m.eq(m.mul(m.zero(2, 2), b), m.zero(2, 1)));
  CHECK_THROWS_AS(m.mul(b, b), ShapeMismatch);
  CHECK_THROWS_AS(m.add(a, b), ShapeMismatch);
  CHECK_THROWS_AS(NatM(2, 2, std::vector<std::uint64_t>{1, 2, 3}), ShapeMismatch);
}

TEST_CASE("random nat products agree with the loop oracle") {
  const MatrixAlgebra m{NatSemiring{}};
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng = Rng::for_case(1, 1, i);
    const std::size_t p = rng.between(1, 4), q = rng.between(1, 4), s = rng.between(1, 4);
    NatM a(p, q, 0), b(q, s, 0);
    for (auto& v : a.entries()) v = rng.below(4);
    for (auto& v : b.entries()) v = rng.below(4);
    CHECK(m.eq(m.mul(a, b), loop_product(a, b)));
  }
}

TEST_CASE("star of zero matrices") {
  const MatrixAlgebra m{NatSemiring{}};
  CHECK(m.eq(m.star(m.zero(3, 3)), m.identity(3)));
  CHECK(m.eq(m.star(NatM(1, 1, 0)), NatM(1, 1, 1)));
  CHECK(m.eq(m.plus(m.zero(2, 2)), m.zero(2, 2)));
  CHECK(m.eq(m.plus(NatM(1, 1, 0)), NatM(1, 1, 0)));
  CHECK(m.eq(m.block_star(m.zero(4, 4), 2), m.identity(4)));
  CHECK(m.eq(m.dual_star(m.zero(2, 2)), m.identity(2)));
  CHECK(m.star(m.zero(0, 0)).rows() == 0);
}

TEST_CASE("star errors") {
  const MatrixAlgebra m{NatSemiring{}};
  CHECK_THROWS_AS(m.star(m.zero(2, 3)), NotSquare);
  NatM a = m.zero(3, 3);
  a(1, 2) = 5;
  try {
    m.star(a);
    FAIL("expected StarUndefined");
  } catch (const StarUndefined& e) {
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
  }
  CHECK_THROWS_AS(m.block_star(m.zero(3, 3), 0), BadSplit);
  CHECK_THROWS_AS(m.block_star(m.zero(3, 3), 3), BadSplit);
}

TEST_CASE("functional and permutation matrices") {
  const MatrixAlgebra m{NatSemiring{}};
  CHECK(m.eq(m.permutation({0, 1, 2}), m.identity(3)));
  CHECK(m.eq(m.from_function({2, 1, {0, 0}}), m.ones(2)));
  const auto swap = m.permutation({1, 0});
  CHECK(m.eq(m.mul(swap, transpose(swap)), m.identity(2)));
  CHECK_THROWS_AS(m.permutation({0, 0}), NotBijective);
  CHECK_THROWS_AS(m.from_function({2, 1, {0, 1}}), ShapeMismatch);
}

TEST_CASE("transpose") {
  const NatM a(2, 3, std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
  const auto t = transpose(a);
  CHECK(t.rows() == 3);
  CHECK(t(2, 1) == 6);
  CHECK(transpose(t).entries()[4] == 5);
}

TEST_CASE("star of [[0,x],[y,0]] over series") {
  const Ring r(NatSemiring{}, "xy", 6);
  const MatrixAlgebra m(r);
  const SMat a = swap_matrix(r);
  const SMat s = m.star(a);
  CHECK(m.eq(s, oracle::matrix_star_by_iteration(r, a)));
  const auto xy = r.mul(r.letter('x'), r.letter('y'));
  const auto yx = r.mul(r.letter('y'), r.letter('x'));
  CHECK(r.eq(s(0, 0), r.star(xy)));
  CHECK(r.eq(s(0, 1), r.mul(r.star(xy), r.letter('x'))));
  CHECK(r.eq(s(1, 0), r.mul(r.star(yx), r.letter('y'))));
  CHECK(r.eq(s(1, 1), r.star(yx)));
  CHECK(r.coefficient(s(0, 0), "xyxy") == 1);
  const SMat p = m.plus(a);
  CHECK(r.coefficient(p(0, 0), "xy") == 1);
  CHECK(r.coefficient(p(0, 0), "") == 0);
}

TEST_CASE("matrix star agrees with the iteration and literal block oracles") {
  const Ring r(NatSemiring{}, "xy", 4);
  const MatrixAlgebra m(r);
  const IdentityVerifier v(r);
  for (std::uint64_t i = 0; i < 30; ++i) {
    Rng rng = Rng::for_case(2, 2, i);
    const std::size_t n = rng.between(1, 5);
    const SMat a = v.random_matrix(rng, n, n);
    const SMat s = m.star(a);
    CHECK(m.eq(s, oracle::matrix_star_by_iteration(r, a)));
    CHECK(m.eq(s, oracle::literal_block_star(m, a)));
    for (std::size_t k = 1; k < n; ++k) CHECK(m.eq(m.block_star(a, k), s));
  }
}

TEST_CASE("dual star via word reversal") {
  const Ring r(NatSemiring{}, "xy", 5);
  const MatrixAlgebra m(r);
  const IdentityVerifier v(r);
  const SMat a0 = swap_matrix(r);
  CHECK(m.eq(m.dual_star(transpose(a0)), transpose(m.star(a0))));
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = Rng::for_case(3, 3, i);
    const std::size_t n = rng.between(1, 3);
    const SMat a = v.random_matrix(rng, n, n);
    // Over commutative coefficients reversal turns the reversed product into the product.
    const SMat via_reversal = oracle::reverse_entries(r, m.star(oracle::reverse_entries(r, transpose(a))));
    CHECK(m.eq(m.dual_star(transpose(a)), via_reversal));
    CHECK(m.eq(via_reversal, transpose(m.star(a))));
  }
}

TEST_CASE("dual star of a 1x1 commutative matrix equals the star") {
  const Ring r(NatSemiring{}, "x", 5);
  const MatrixAlgebra m(r);
  const SMat a(1, 1, r.letter('x'));
  CHECK(m.eq(m.dual_star(a), m.star(a)));
}

TEST_CASE("natmat2 entries: star over noncommutative coefficients") {
  const SeriesSemiring<NatMat2Semiring> r(NatMat2Semiring{}, "xy", 4);
  const MatrixAlgebra m(r);
  const IdentityVerifier v(r);
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = Rng::for_case(4, 4, i);
    const std::size_t n = rng.between(1, 3);
    const auto a = v.random_matrix(rng, n, n);
    CHECK(m.eq(m.star(a), oracle::matrix_star_by_iteration(r, a)));
    CHECK(m.eq(m.star(a), oracle::literal_block_star(m, a)));
  }
}
