#pragma once

// Executable checks for the star identities over truncated series: scalar
// star laws, Conway laws at scalar and matrix level, permutation and block
// identities, transpose duality, functorial star and the group identities.
//
// Every identity is a Law mapping a list of input matrices (scalars are 1x1)
// to its two sides. Sides are compared exactly; a failing case is shrunk by
// truncating its inputs to the shortest length that still fails, then by
// replacing every nonzero coefficient with 1 if the failure persists.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conway/group.hpp"
#include "conway/matrix.hpp"
#include "conway/random.hpp"
#include "conway/report.hpp"
#include "conway/semiring.hpp"
#include "conway/series.hpp"

namespace conway {

/// Nonzero coefficient with "magnitude" in [1, max].
template <NaturalEmbedding C>
typename C::value_type random_coefficient(const C& c, Rng& rng, std::uint64_t max) {
  return c.from_nat(rng.between(1, max));
}

inline Nat2x2 random_coefficient(const NatMat2Semiring&, Rng& rng, std::uint64_t max) {
  Nat2x2 v;
  do
    for (auto& e : v.e) e = rng.between(0, max);
  while (v == Nat2x2{});
  return v;
}

template <StarSemiring C>
class IdentityVerifier {
 public:
  using Ring = SeriesSemiring<C>;
  using Series = typename Ring::value_type;
  using Mat = Matrix<Series>;
  using Inputs = std::vector<Mat>;

  struct Law {
    std::string name;
    std::function<std::pair<Mat, Mat>(const Ring&, const Inputs&)> sides;
    /// Constraint the inputs must satisfy; shrinking never leaves it.
    std::function<bool(const Ring&, const Inputs&)> precondition = nullptr;
  };

  explicit IdentityVerifier(Ring ring, std::uint64_t seed = 0, std::uint64_t max_coeff = 3)
      : r_(std::move(ring)), m_(r_), seed_(seed), max_coeff_(max_coeff) {}

  const Ring& ring() const { return r_; }
  const MatrixAlgebra<Ring>& matrices() const { return m_; }

  // ---- generators --------------------------------------------------------

  /// Proper series; each word of length >= 1 carries a nonzero coefficient
  /// with probability 1/3, and one case in ten is the zero series.
  Series random_proper(Rng& rng) const {
    Series s = r_.zero();
    if (rng.chance(1, 10)) return s;
    for (std::size_t w = 1; w < s.size(); ++w)
      if (rng.chance(1, 3)) s[w] = random_coefficient(r_.coefficients(), rng, max_coeff_);
    return s;
  }

  /// Series with a nonzero constant term.
  Series random_series(Rng& rng) const {
    Series s = random_proper(rng);
    s[0] = random_coefficient(r_.coefficients(), rng, max_coeff_);
    return s;
  }

  Mat random_matrix(Rng& rng, std::size_t rows, std::size_t cols) const {
    Mat a = m_.zero(rows, cols);
    for (auto& v : a.entries()) v = random_proper(rng);
    return a;
  }

  std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) const {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    rng.shuffle(p);
    return p;
  }

  /// n x n matrix with entry (i, j) = a_{i^-1 j}.
  Mat group_matrix(const FiniteGroup& g, const std::vector<Series>& a) const {
    if (a.size() != g.order())
      throw SizeMismatch("group " + g.name() + " of order " + std::to_string(g.order()) + " needs " +
                         std::to_string(g.order()) + " series, got " + std::to_string(a.size()));
    Mat mg = m_.zero(g.order(), g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t j = 0; j < g.order(); ++j) mg(i, j) = a[g.mul(g.inv(i), j)];
    return mg;
  }

  // ---- law evaluation ----------------------------------------------------

  /// Evaluates `law` on `inputs`; on mismatch appends a shrunk failure.
  void run(CheckReport& report, std::size_t case_index, const Law& law, const Inputs& inputs) const {
    ++report.checks;
    auto outcome = evaluate(r_, law, inputs);
    if (!outcome) return;

    Inputs witness = inputs;
    std::size_t len = r_.max_len();
    for (std::size_t shorter = 0; shorter < r_.max_len(); ++shorter) {
      const Ring small = r_.with_max_len(shorter);
      Inputs cut = map_inputs(inputs, [&](const Series& s) { return r_.truncate(s, shorter); });
      if (auto o = evaluate(small, law, cut)) {
        witness = std::move(cut);
        len = shorter;
        outcome = std::move(o);
        break;
      }
    }
    const Ring at_len = r_.with_max_len(len);
    Inputs unit = map_inputs(witness, [&](Series s) {
      for (std::size_t w = 0; w < s.size(); ++w)
        if (!is_zero(r_.coefficients(), s[w])) s[w] = r_.coefficients().one();
      return s;
    });
    if (!law.precondition || law.precondition(at_len, unit))
      if (auto o = evaluate(at_len, law, unit)) {
        witness = std::move(unit);
        outcome = std::move(o);
      }

    CheckFailure f = *outcome;
    f.case_index = case_index;
    f.law = law.name;
    f.max_len = len;
    const MatrixAlgebra<Ring> fm(at_len);
    for (std::size_t i = 0; i < witness.size(); ++i) f.inputs += (i ? "; " : "") + fm.format(witness[i]);
    report.failures.push_back(std::move(f));
  }

  void run_all(CheckReport& report, std::size_t case_index, const std::vector<Law>& laws, const Inputs& inputs) const {
    for (const auto& law : laws) run(report, case_index, law, inputs);
  }

  // ---- laws --------------------------------------------------------------

  /// Inputs (a, b), both proper.
  static std::vector<Law> basic_laws() {
    return {
        {"a.a* + 1 = a*",
         [](const Ring& r, const Inputs& in) {
           const auto& a = sc(in[0]);
           return sides(r.add(r.mul(a, r.star(a)), r.one()), r.star(a));
         }},
        {"a*.a + 1 = a*",
         [](const Ring& r, const Inputs& in) {
           const auto& a = sc(in[0]);
           return sides(r.add(r.mul(r.star(a), a), r.one()), r.star(a));
         }},
        {"0* = 1", [](const Ring& r, const Inputs&) { return sides(r.star(r.zero()), r.one()); }},
        {"(ab)*a = a(ba)*",
         [](const Ring& r, const Inputs& in) {
           const auto &a = sc(in[0]), &b = sc(in[1]);
           return sides(r.mul(r.star(r.mul(a, b)), a), r.mul(a, r.star(r.mul(b, a))));
         }},
        {"a.a* = a*.a",
         [](const Ring& r, const Inputs& in) {
           const auto& a = sc(in[0]);
           return sides(r.mul(a, r.star(a)), r.mul(r.star(a), a));
         }},
        {"(a+b)* = (a*b)*a*",
         [](const Ring& r, const Inputs& in) {
           const auto &a = sc(in[0]), &b = sc(in[1]);
           return sides(r.star(r.add(a, b)), r.mul(r.star(r.mul(r.star(a), b)), r.star(a)));
         }},
    };
  }

  /// Inputs (a, b, c): a and b proper, c arbitrary.
  static std::vector<Law> conway_scalar_laws() {
    auto product_star = [](std::string name, std::size_t i, std::size_t j) {
      return Law{std::move(name), [i, j](const Ring& r, const Inputs& in) {
                   const auto &a = sc(in[i]), &b = sc(in[j]);
                   return sides(r.star(r.mul(a, b)),
                                r.add(r.one(), r.mul(r.mul(a, r.star(r.mul(b, a))), b)));
                 }};
    };
    return {
        {"sum star (a+b)* = a*(ba*)*",
         [](const Ring& r, const Inputs& in) {
           const auto &a = sc(in[0]), &b = sc(in[1]);
           return sides(r.star(r.add(a, b)), r.mul(r.star(a), r.star(r.mul(b, r.star(a)))));
         }},
        product_star("product star (ab)* = 1 + a(ba)*b", 0, 1),
        product_star("product star, right factor arbitrary", 0, 2),
        product_star("product star, left factor arbitrary", 2, 1),
    };
  }

  /// Inputs (A, B, P, Q): A, B n x n; P n x m; Q m x n; all proper-entry.
  static std::vector<Law> matrix_conway_laws() {
    return {
        {"matrix sum star (A+B)* = A*(BA*)*",
         [](const Ring& r, const Inputs& in) {
           const MatrixAlgebra<Ring> m(r);
           const auto &a = in[0], &b = in[1];
           return std::pair(m.star(m.add(a, b)), m.mul(m.star(a), m.star(m.mul(b, m.star(a)))));
         }},
        {"matrix product star (PQ)* = E + P(QP)*Q",
         [](const Ring& r, const Inputs& in) {
           const MatrixAlgebra<Ring> m(r);
           const auto &p = in[2], &q = in[3];
           return std::pair(m.star(m.mul(p, q)),
                            m.add(m.identity(p.rows()), m.mul(m.mul(p, m.star(m.mul(q, p))), q)));
         }},
        {"A* = A.A* + E",
         [](const Ring& r, const Inputs& in) {
           const MatrixAlgebra<Ring> m(r);
           const auto& a = in[0];
           return std::pair(m.star(a), m.add(m.mul(a, m.star(a)), m.identity(a.rows())));
         }},
        {"A* = A*.A + E",
         [](const Ring& r, const Inputs& in) {
           const MatrixAlgebra<Ring> m(r);
           const auto& a = in[0];
           return std::pair(m.star(a), m.add(m.mul(m.star(a), a), m.identity(a.rows())));
         }},
        {"0* = E",
         [](const Ring& r, const Inputs& in) {
           const MatrixAlgebra<Ring> m(r);
           const std::size_t n = in[0].rows();
           return std::pair(m.star(m.zero(n, n)), m.identity(n));
         }},
        {"A.A* = A*.A",
         [](const Ring& r, const Inputs& in) {
           const MatrixAlgebra<Ring> m(r);
           const auto& a = in[0];
           return std::pair(m.mul(a, m.star(a)), m.mul(m.star(a), a));
         }},
    };
  }

  /// Inputs (A, pi).
  static std::vector<Law> permutation_laws() {
    return {{"(pi.A.pi^T)* = pi.A*.pi^T", [](const Ring& r, const Inputs& in) {
               const MatrixAlgebra<Ring> m(r);
               const auto &a = in[0], &pi = in[1];
               return std::pair(m.star(m.mul(m.mul(pi, a), transpose(pi))),
                                m.mul(m.mul(pi, m.star(a)), transpose(pi)));
             }}};
  }

  /// Inputs (A), n x n. For each split k: the block formula, the alternative
  /// off-diagonal forms a*.b.(d + c.a*.b)* and d*.c.(a + b.d*.c)*, and the
  /// block form of A+.
  static std::vector<Law> block_laws(std::size_t n) {
    std::vector<Law> laws;
    for (std::size_t k = 1; k < n; ++k) {
      const std::string at = " (split " + std::to_string(k) + ")";
      laws.push_back({"block star = star" + at, [k](const Ring& r, const Inputs& in) {
                        const MatrixAlgebra<Ring> m(r);
                        return std::pair(m.block_star(in[0], k), m.star(in[0]));
                      }});
      laws.push_back({"alternative block star form" + at, [k](const Ring& r, const Inputs& in) {
                        const MatrixAlgebra<Ring> m(r);
                        const auto& a = in[0];
                        const std::size_t n = a.rows(), rest = n - k;
                        const auto aa = m.block(a, 0, 0, k, k), b = m.block(a, 0, k, k, rest),
                                   c = m.block(a, k, 0, rest, k), d = m.block(a, k, k, rest, rest);
                        const auto as = m.star(aa), ds = m.star(d);
                        const auto alpha = m.star(m.add(aa, m.mul(m.mul(b, ds), c)));
                        const auto delta = m.star(m.add(d, m.mul(m.mul(c, as), b)));
                        const auto beta = m.mul(m.mul(as, b), delta);
                        const auto gamma = m.mul(m.mul(ds, c), alpha);
                        return std::pair(m.assemble(alpha, beta, gamma, delta), m.star(a));
                      }});
      laws.push_back({"block plus form" + at, [k](const Ring& r, const Inputs& in) {
                        const MatrixAlgebra<Ring> m(r);
                        const auto& a = in[0];
                        const std::size_t n = a.rows(), rest = n - k;
                        const auto aa = m.block(a, 0, 0, k, k), b = m.block(a, 0, k, k, rest),
                                   c = m.block(a, k, 0, rest, k), d = m.block(a, k, k, rest, rest);
                        const auto as = m.star(aa), ds = m.star(d);
                        const auto top = m.add(aa, m.mul(m.mul(b, ds), c));
                        const auto bottom = m.add(d, m.mul(m.mul(c, as), b));
                        const auto block_plus =
                            m.assemble(m.plus(top), m.mul(m.mul(m.star(top), b), ds),
                                       m.mul(m.mul(m.star(bottom), c), as), m.plus(bottom));
                        return std::pair(block_plus, m.plus(a));
                      }});
    }
    return laws;
  }

  /// Inputs (A, P, Q): A square, P n x p, Q p x q.
  static std::vector<Law> duality_laws() {
    return {
        {"dual star of A^T = (A*)^T",
         [](const Ring& r, const Inputs& in) {
           const MatrixAlgebra<Ring> m(r);
           return std::pair(m.dual_star(transpose(in[0])), transpose(m.star(in[0])));
         }},
        {"(PQ)^T = Q^T o P^T",
         [](const Ring& r, const Inputs& in) {
           const MatrixAlgebra<Ring> m(r);
           return std::pair(transpose(m.mul(in[1], in[2])), m.dual_mul(transpose(in[2]), transpose(in[1])));
         }},
        {"(A^T)^T = A", [](const Ring&, const Inputs& in) { return std::pair(transpose(transpose(in[0])), in[0]); }},
    };
  }

  /// Inputs (a_1, ..., a_n) for a group of order n.
  static std::vector<Law> group_laws(const FiniteGroup& g) {
    auto group_sides = [g](const Ring& r, const Inputs& in, bool dual) {
      const MatrixAlgebra<Ring> m(r);
      const std::size_t n = g.order();
      std::vector<Series> a;
      Series total = r.zero();
      for (const auto& x : in) {
        a.push_back(sc(x));
        total = r.add(total, sc(x));
      }
      const IdentityVerifier v(r);
      const auto ms = m.star(v.group_matrix(g, a));
      const auto left = dual ? m.mul(m.mul(transpose(m.ones(n)), ms), transpose(m.unit_row(n, 0)))
                             : m.mul(m.mul(m.unit_row(n, 0), ms), m.ones(n));
      return std::pair(left, Mat(1, 1, r.star(total)));
    };
    return {
        {"group identity e1.M_G*.u = (a1+...+an)* for " + g.name(),
         [group_sides](const Ring& r, const Inputs& in) { return group_sides(r, in, false); }},
        {"dual group identity u^T.M_G*.e1^T = (a1+...+an)* for " + g.name(),
         [group_sides](const Ring& r, const Inputs& in) { return group_sides(r, in, true); }},
    };
  }

  /// Inputs (a1, a2): the order-2 group identity in closed form and its
  /// one-variable consequence.
  static std::vector<Law> order2_laws() {
    return {
        {"(a1 + a2.a1*.a2)*(1 + a2.a1*) = (a1+a2)*",
         [](const Ring& r, const Inputs& in) {
           const auto &a1 = sc(in[0]), &a2 = sc(in[1]);
           const auto a1s = r.star(a1);
           return sides(r.mul(r.star(r.add(a1, r.mul(r.mul(a2, a1s), a2))), r.add(r.one(), r.mul(a2, a1s))),
                        r.star(r.add(a1, a2)));
         }},
        {"(a^2)*(1+a) = a*",
         [](const Ring& r, const Inputs& in) {
           const auto& a = sc(in[0]);
           return sides(r.mul(r.star(r.mul(a, a)), r.add(r.one(), a)), r.star(a));
         }},
    };
  }

  /// Inputs (A, C, B) with A.C = C.B.
  static Law functorial_law() {
    return {"A.C = C.B implies A*.C = C.B*",
            [](const Ring& r, const Inputs& in) {
              const MatrixAlgebra<Ring> m(r);
              return std::pair(m.mul(m.star(in[0]), in[1]), m.mul(in[1], m.star(in[2])));
            },
            [](const Ring& r, const Inputs& in) {
              const MatrixAlgebra<Ring> m(r);
              return m.eq(m.mul(in[0], in[1]), m.mul(in[1], in[2]));
            }};
  }

  static Law intertwining_law() {
    return {"A.C = C.B", [](const Ring& r, const Inputs& in) {
              const MatrixAlgebra<Ring> m(r);
              return std::pair(m.mul(in[0], in[1]), m.mul(in[1], in[2]));
            }};
  }

  // ---- suites on given inputs -------------------------------------------

  CheckReport basic_star_laws_on(const Series& a, const Series& b) const {
    return on_inputs("basic", basic_laws(), {sm(a), sm(b)});
  }
  CheckReport conway_scalar_on(const Series& a, const Series& b, const Series& c) const {
    return on_inputs("conway", conway_scalar_laws(), {sm(a), sm(b), sm(c)});
  }
  CheckReport matrix_conway_on(const Mat& a, const Mat& b, const Mat& p, const Mat& q) const {
    return on_inputs("matrix", matrix_conway_laws(), {a, b, p, q});
  }
  CheckReport permutation_on(const Mat& a, const std::vector<std::size_t>& perm) const {
    return on_inputs("permutation", permutation_laws(), {a, m_.permutation(perm)});
  }
  CheckReport block_invariance_on(const Mat& a) const { return on_inputs("block", block_laws(a.rows()), {a}); }
  CheckReport transpose_duality_on(const Mat& a, const Mat& p, const Mat& q) const {
    return on_inputs("duality", duality_laws(), {a, p, q});
  }
  CheckReport group_identity_on(const FiniteGroup& g, const std::vector<Series>& a) const {
    Inputs in;
    for (const auto& x : a) in.push_back(sm(x));
    return on_inputs("group", group_laws(g), in);
  }
  CheckReport order2_on(const Series& a1, const Series& a2) const {
    return on_inputs("group", order2_laws(), {sm(a1), sm(a2)});
  }
  CheckReport functorial_on(const Mat& a, const Mat& c, const Mat& b) const {
    return on_inputs("functorial", {intertwining_law(), functorial_law()}, {a, c, b});
  }

  // ---- seeded random suites ---------------------------------------------

  CheckReport basic_star_laws(std::size_t cases) const {
    return random_suite("basic", cases, 1, basic_laws(), [this](Rng& rng) {
      return Inputs{sm(random_proper(rng)), sm(random_proper(rng))};
    });
  }

  CheckReport conway_scalar(std::size_t cases) const {
    return random_suite("conway", cases, 2, conway_scalar_laws(), [this](Rng& rng) {
      return Inputs{sm(random_proper(rng)), sm(random_proper(rng)), sm(random_series(rng))};
    });
  }

  /// Square sizes n and rectangular partners m drawn from [1, max_dim].
  CheckReport matrix_conway(std::size_t cases, std::size_t max_dim = 4) const {
    return random_suite("matrix", cases, 3, matrix_conway_laws(), [this, max_dim](Rng& rng) {
      const std::size_t n = rng.between(1, max_dim), k = rng.between(1, max_dim);
      return Inputs{random_matrix(rng, n, n), random_matrix(rng, n, n), random_matrix(rng, n, k),
                    random_matrix(rng, k, n)};
    });
  }

  CheckReport permutation(std::size_t cases, std::size_t n = 4) const {
    return random_suite("permutation", cases, 4, permutation_laws(), [this, n](Rng& rng) {
      return Inputs{random_matrix(rng, n, n), m_.permutation(random_permutation(rng, n))};
    });
  }

  CheckReport block_invariance(std::size_t cases, std::size_t n = 4) const {
    return random_suite("block", cases, 5, block_laws(n), [this, n](Rng& rng) {
      return Inputs{random_matrix(rng, n, n)};
    });
  }

  CheckReport transpose_duality(std::size_t cases, std::size_t max_dim = 3) const {
    return random_suite("duality", cases, 6, duality_laws(), [this, max_dim](Rng& rng) {
      const std::size_t n = rng.between(1, max_dim), p = rng.between(1, max_dim), q = rng.between(1, max_dim);
      return Inputs{random_matrix(rng, n, n), random_matrix(rng, n, p), random_matrix(rng, p, q)};
    });
  }

  /// `cases` random tuples for each group, plus the order-2 closed forms.
  CheckReport group_identity(const std::vector<FiniteGroup>& groups, std::size_t cases) const {
    CheckReport report{"group", 0, 0, {}};
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const FiniteGroup& g = groups[gi];
      report.merge(random_suite("group", cases, 0x100 + gi, group_laws(g), [this, &g](Rng& rng) {
        Inputs in;
        for (std::size_t i = 0; i < g.order(); ++i) in.push_back(sm(random_proper(rng)));
        return in;
      }));
    }
    report.merge(random_suite("group", cases, 7, order2_laws(), [this](Rng& rng) {
      return Inputs{sm(random_proper(rng)), sm(random_proper(rng))};
    }));
    return report;
  }

  /// `cases` triples from each constructive family: an all-ones column, an
  /// injective functional matrix and its transpose, and a block-diagonal
  /// matrix of two all-ones columns.
  CheckReport functorial_star(std::size_t cases) const {
    const std::vector<Law> laws{intertwining_law(), functorial_law()};
    CheckReport report{"functorial", 0, 0, {}};
    report.merge(random_suite("functorial", cases, 8, laws, [this](Rng& rng) { return ones_column_triple(rng); }));
    report.merge(random_suite("functorial", cases, 9, laws, [this](Rng& rng) { return injection_triple(rng); }));
    report.merge(
        random_suite("functorial", cases, 10, laws, [this](Rng& rng) { return injection_transpose_triple(rng); }));
    report.merge(
        random_suite("functorial", cases, 11, laws, [this](Rng& rng) { return block_diagonal_triple(rng); }));
    return report;
  }

  // ---- functorial generators --------------------------------------------

  /// (A, u_n, (b)) where every row of A sums to b.
  Inputs ones_column_triple(Rng& rng) const {
    const std::size_t n = rng.between(1, 4);
    Mat a = m_.zero(n, n);
    const Series b = distribute(rng, a, 0, 0, n, n);
    return {a, m_.ones(n), Mat(1, 1, b)};
  }

  /// (A, [E_n | 0], (A 0 / X Y)).
  Inputs injection_triple(Rng& rng) const {
    const std::size_t n = rng.between(1, 3), extra = rng.between(1, 2);
    const Mat a = random_matrix(rng, n, n);
    const Mat c = m_.hcat(m_.identity(n), m_.zero(n, extra));
    const Mat b = m_.assemble(a, m_.zero(n, extra), random_matrix(rng, extra, n), random_matrix(rng, extra, extra));
    return {a, c, b};
  }

  /// ((B P / 0 Q), (E_n / 0), B).
  Inputs injection_transpose_triple(Rng& rng) const {
    const std::size_t n = rng.between(1, 3), extra = rng.between(1, 2);
    const Mat b = random_matrix(rng, n, n);
    const Mat c = m_.vcat(m_.identity(n), m_.zero(extra, n));
    const Mat a = m_.assemble(b, random_matrix(rng, n, extra), m_.zero(extra, n), random_matrix(rng, extra, extra));
    return {a, c, b};
  }

  /// (A, diag(u_n1, u_n2), B) with B 2x2 and each block of A having constant
  /// row sums equal to the matching entry of B.
  Inputs block_diagonal_triple(Rng& rng) const {
    const std::size_t n1 = rng.between(1, 3), n2 = rng.between(1, 3);
    const std::size_t sizes[2] = {n1, n2}, starts[2] = {0, n1};
    Mat a = m_.zero(n1 + n2, n1 + n2);
    Mat b = m_.zero(2, 2);
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t q = 0; q < 2; ++q) b(p, q) = distribute(rng, a, starts[p], starts[q], sizes[p], sizes[q]);
    const Mat c = m_.assemble(m_.ones(n1), m_.zero(n1, 1), m_.zero(n2, 1), m_.ones(n2));
    return {a, c, b};
  }

 private:
  static const Series& sc(const Mat& m) { return m(0, 0); }
  static Mat sm(const Series& s) { return Mat(1, 1, s); }
  static std::pair<Mat, Mat> sides(Series left, Series right) { return {sm(left), sm(right)}; }

  template <class F>
  static Inputs map_inputs(const Inputs& inputs, F f) {
    Inputs out;
    for (const auto& mat : inputs) {
      std::vector<Series> entries;
      for (const auto& s : mat.entries()) entries.push_back(f(s));
      out.emplace_back(mat.rows(), mat.cols(), std::move(entries));
    }
    return out;
  }

  /// Fills the rows x cols block of `a` at (row, col) so that each row sums
  /// to the returned series: random proper summands are dealt to random columns.
  Series distribute(Rng& rng, Mat& a, std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const {
    std::vector<Series> parts;
    Series total = r_.zero();
    for (std::size_t t = 0, count = rng.between(1, cols + 1); t < count; ++t) {
      parts.push_back(random_proper(rng));
      total = r_.add(total, parts.back());
    }
    for (std::size_t i = 0; i < rows; ++i)
      for (const auto& part : parts) {
        Series& cell = a(row + i, col + rng.below(cols));
        cell = r_.add(cell, part);
      }
    return total;
  }

  /// Failure description, or nothing when the two sides agree.
  static std::optional<CheckFailure> evaluate(const Ring& r, const Law& law, const Inputs& inputs) {
    try {
      const auto [left, right] = law.sides(r, inputs);
      if (left.rows() != right.rows() || left.cols() != right.cols())
        return CheckFailure{0, "", "", "shape " + std::to_string(left.rows()) + "x" + std::to_string(left.cols()),
                            "shape " + std::to_string(right.rows()) + "x" + std::to_string(right.cols()), "", 0};
      std::optional<std::size_t> best_rank;
      std::size_t best_entry = 0;
      for (std::size_t e = 0; e < left.entries().size(); ++e)
        for (std::size_t w = 0; w < r.words().size(); ++w)
          if (!r.coefficients().eq(left.entries()[e][w], right.entries()[e][w])) {
            if (!best_rank || w < *best_rank) {
              best_rank = w;
              best_entry = e;
            }
            break;
          }
      if (!best_rank) return std::nullopt;
      const std::size_t i = best_entry / left.cols(), j = best_entry % left.cols();
      const std::string where = left.rows() * left.cols() > 1
                                    ? "entry (" + std::to_string(i) + "," + std::to_string(j) + "): "
                                    : "";
      return CheckFailure{0,
                          "",
                          "",
                          where + r.format(left(i, j)),
                          where + r.format(right(i, j)),
                          format_word(r.words().word(*best_rank)),
                          0};
    } catch (const Error& e) {
      return CheckFailure{0, "", "", std::string("error: ") + e.what(), "", "", 0};
    }
  }

  CheckReport on_inputs(const std::string& suite, const std::vector<Law>& laws, const Inputs& inputs) const {
    CheckReport report{suite, 1, 0, {}};
    run_all(report, 0, laws, inputs);
    return report;
  }

  template <class Gen>
  CheckReport random_suite(const std::string& suite, std::size_t cases, std::uint64_t salt,
                           const std::vector<Law>& laws, Gen gen) const {
    CheckReport report{suite, 0, 0, {}};
    for (std::size_t i = 0; i < cases; ++i) {
      Rng rng = Rng::for_case(seed_, salt, i);
      const Inputs inputs = gen(rng);
      ++report.cases;
      run_all(report, i, laws, inputs);
    }
    return report;
  }

  Ring r_;
  MatrixAlgebra<Ring> m_;
  std::uint64_t seed_;
  std::uint64_t max_coeff_;
};

}  // namespace conway
