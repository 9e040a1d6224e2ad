#pragma once

// Partial star semirings: the instance concept, the base carriers used
// throughout the library, the dual construction and a sampled axiom check.

#include <array>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "conway/error.hpp"

namespace conway {

/// A semiring instance equipped with a star defined exactly on an ideal D(S).
///
/// Instances are small immutable objects; values are plain data. All
/// operations are pure, so an instance can be shared freely.
template <class S>
concept StarSemiring = requires(const S& s, const typename S::value_type& a) {
  typename S::value_type;
  { s.name() } -> std::convertible_to<std::string>;
  { s.zero() } -> std::same_as<typename S::value_type>;
  { s.one() } -> std::same_as<typename S::value_type>;
  { s.add(a, a) } -> std::same_as<typename S::value_type>;
  { s.mul(a, a) } -> std::same_as<typename S::value_type>;
  { s.eq(a, a) } -> std::same_as<bool>;
  { s.in_star_domain(a) } -> std::same_as<bool>;
  { s.star(a) } -> std::same_as<typename S::value_type>;
  { s.direct_sum_property() } -> std::same_as<bool>;
  { s.format(a) } -> std::convertible_to<std::string>;
};

/// Instances that receive the canonical morphism N -> S (n maps to 1 + ... + 1).
template <class S>
concept NaturalEmbedding = StarSemiring<S> && requires(const S& s, std::uint64_t n) {
  { s.from_nat(n) } -> std::same_as<typename S::value_type>;
};

template <StarSemiring S>
bool is_zero(const S& s, const typename S::value_type& a) {
  return s.eq(a, s.zero());
}

/// a+ = a.a*, defined on D(S).
template <StarSemiring S>
typename S::value_type plus(const S& s, const typename S::value_type& a) {
  return s.mul(a, s.star(a));
}

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("nat addition overflows 64 bits");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("nat multiplication overflows 64 bits");
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Boolean semiring B: disjunction, conjunction, total star 1.

struct Boolean {
  bool value = false;
  friend constexpr bool operator==(Boolean, Boolean) = default;
};

class BooleanSemiring {
 public:
  using value_type = Boolean;

  std::string name() const { return "bool"; }
  Boolean zero() const { return {false}; }
  Boolean one() const { return {true}; }
  Boolean add(Boolean a, Boolean b) const { return {a.value || b.value}; }
  Boolean mul(Boolean a, Boolean b) const { return {a.value && b.value}; }
  bool eq(Boolean a, Boolean b) const { return a == b; }
  bool in_star_domain(Boolean) const { return true; }
  Boolean star(Boolean) const { return {true}; }
  bool direct_sum_property() const { return false; }
  static constexpr bool has_total_star() { return true; }
  static constexpr bool is_commutative() { return true; }

  Boolean from_nat(std::uint64_t n) const { return {n != 0}; }
  std::string format(Boolean a) const { return a.value ? "1" : "0"; }
};

// ---------------------------------------------------------------------------
// Natural numbers, 64-bit with overflow detection. D = {0}.

class NatSemiring {
 public:
  using value_type = std::uint64_t;

  std::string name() const { return "nat"; }
  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return 1; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return detail::checked_add(a, b); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return detail::checked_mul(a, b); }
  bool eq(std::uint64_t a, std::uint64_t b) const { return a == b; }
  bool in_star_domain(std::uint64_t a) const { return a == 0; }
  std::uint64_t star(std::uint64_t a) const {
    if (a != 0) throw StarUndefined("star of nat " + std::to_string(a) + " is undefined");
    return 1;
  }
  bool direct_sum_property() const { return true; }
  static constexpr bool has_total_star() { return false; }
  static constexpr bool is_commutative() { return true; }

  std::uint64_t from_nat(std::uint64_t n) const { return n; }
  std::string format(std::uint64_t a) const { return std::to_string(a); }
};

// ---------------------------------------------------------------------------
// N extended with a top element. a* is the least solution of x = ax + 1.

struct ExtNat {
  std::uint64_t value = 0;
  bool infinite = false;

  static constexpr ExtNat inf() { return {0, true}; }
  friend constexpr bool operator==(ExtNat, ExtNat) = default;
};

class NatInfSemiring {
 public:
  using value_type = ExtNat;

  std::string name() const { return "natinf"; }
  ExtNat zero() const { return {0, false}; }
  ExtNat one() const { return {1, false}; }
  ExtNat add(ExtNat a, ExtNat b) const {
    if (a.infinite || b.infinite) return ExtNat::inf();
    return {detail::checked_add(a.value, b.value), false};
  }
  ExtNat mul(ExtNat a, ExtNat b) const {
    if (is_null(a) || is_null(b)) return zero();
    if (a.infinite || b.infinite) return ExtNat::inf();
    return {detail::checked_mul(a.value, b.value), false};
  }
  bool eq(ExtNat a, ExtNat b) const { return a == b; }
  bool in_star_domain(ExtNat) const { return true; }
  ExtNat star(ExtNat a) const { return is_null(a) ? one() : ExtNat::inf(); }
  bool direct_sum_property() const { return false; }
  static constexpr bool has_total_star() { return true; }
  static constexpr bool is_commutative() { return true; }

  ExtNat from_nat(std::uint64_t n) const { return {n, false}; }
  std::string format(ExtNat a) const { return a.infinite ? "inf" : std::to_string(a.value); }

 private:
  static bool is_null(ExtNat a) { return !a.infinite && a.value == 0; }
};

// ---------------------------------------------------------------------------
// 2x2 matrices over nat: a noncommutative carrier with nilpotents.
// D = {zero matrix}.

struct Nat2x2 {
  std::array<std::uint64_t, 4> e{};  // row-major

  std::uint64_t at(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }
  friend constexpr bool operator==(const Nat2x2&, const Nat2x2&) = default;
};

class NatMat2Semiring {
 public:
  using value_type = Nat2x2;

  std::string name() const { return "natmat2"; }
  Nat2x2 zero() const { return {}; }
  Nat2x2 one() const { return {{1, 0, 0, 1}}; }
  Nat2x2 add(const Nat2x2& a, const Nat2x2& b) const {
    Nat2x2 r;
    for (std::size_t k = 0; k < 4; ++k) r.e[k] = detail::checked_add(a.e[k], b.e[k]);
    return r;
  }
  Nat2x2 mul(const Nat2x2& a, const Nat2x2& b) const {
    Nat2x2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.e[static_cast<std::size_t>(2 * i + j)] =
            detail::checked_add(detail::checked_mul(a.at(i, 0), b.at(0, j)),
                                detail::checked_mul(a.at(i, 1), b.at(1, j)));
    return r;
  }
  bool eq(const Nat2x2& a, const Nat2x2& b) const { return a == b; }
  bool in_star_domain(const Nat2x2& a) const { return a == zero(); }
  Nat2x2 star(const Nat2x2& a) const {
    if (!in_star_domain(a)) throw StarUndefined("star of nonzero natmat2 " + format(a) + " is undefined");
    return one();
  }
  bool direct_sum_property() const { return true; }
  static constexpr bool has_total_star() { return false; }
  static constexpr bool is_commutative() { return false; }

  Nat2x2 from_nat(std::uint64_t n) const { return {{n, 0, 0, n}}; }
  std::string format(const Nat2x2& a) const {
    return "[[" + std::to_string(a.e[0]) + "," + std::to_string(a.e[1]) + "],[" + std::to_string(a.e[2]) +
           "," + std::to_string(a.e[3]) + "]]";
  }
};

// ---------------------------------------------------------------------------
// Dual semiring S^d: same carrier, sum, constants and star; reversed product.

template <StarSemiring S>
class DualSemiring {
 public:
  using value_type = typename S::value_type;

  explicit DualSemiring(S base) : base_(std::move(base)) {}

  const S& base() const { return base_; }
  std::string name() const { return "dual(" + std::string(base_.name()) + ")"; }
  value_type zero() const { return base_.zero(); }
  value_type one() const { return base_.one(); }
  value_type add(const value_type& a, const value_type& b) const { return base_.add(a, b); }
  value_type mul(const value_type& a, const value_type& b) const { return base_.mul(b, a); }
  bool eq(const value_type& a, const value_type& b) const { return base_.eq(a, b); }
  bool in_star_domain(const value_type& a) const { return base_.in_star_domain(a); }
  value_type star(const value_type& a) const { return base_.star(a); }
  bool direct_sum_property() const { return base_.direct_sum_property(); }
  std::string format(const value_type& a) const { return base_.format(a); }

 private:
  S base_;
};

// ---------------------------------------------------------------------------
// Sampled axiom check.

struct AxiomViolation {
  std::string axiom;
  std::string witness;
};

struct AxiomReport {
  std::string semiring;
  std::size_t samples = 0;
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the semiring axioms, the ideal laws of D(S) and the star fixed-point
/// equations over every pair and triple drawn from `samples`. Each violated
/// axiom is reported once, with the first witness found.
template <StarSemiring S>
AxiomReport axiom_check(const S& s, const std::vector<typename S::value_type>& samples) {
  AxiomReport report{std::string(s.name()), samples.size(), {}};
  auto violated = [&](const std::string& axiom, const std::string& witness) {
    for (const auto& v : report.violations)
      if (v.axiom == axiom) return;
    report.violations.push_back({axiom, witness});
  };
  auto w1 = [&](const auto& a) { return "a=" + s.format(a); };
  auto w2 = [&](const auto& a, const auto& b) { return w1(a) + ", b=" + s.format(b); };
  auto w3 = [&](const auto& a, const auto& b, const auto& c) { return w2(a, b) + ", c=" + s.format(c); };

  const auto zero = s.zero();
  const auto one = s.one();
  if (!s.in_star_domain(zero)) violated("zero in star domain", "");
  else if (!s.eq(s.star(zero), one)) violated("star of zero is one", "");

  for (const auto& a : samples) {
    if (!s.eq(s.add(a, zero), a) || !s.eq(s.add(zero, a), a)) violated("additive identity", w1(a));
    if (!s.eq(s.mul(a, one), a) || !s.eq(s.mul(one, a), a)) violated("multiplicative identity", w1(a));
    if (!s.eq(s.mul(a, zero), zero) || !s.eq(s.mul(zero, a), zero)) violated("zero absorbing", w1(a));
    if (s.in_star_domain(a)) {
      const auto st = s.star(a);
      if (!s.eq(s.add(s.mul(a, st), one), st)) violated("star fixed point a.a* + 1 = a*", w1(a));
      if (!s.eq(s.add(s.mul(st, a), one), st)) violated("star fixed point a*.a + 1 = a*", w1(a));
    }
    for (const auto& b : samples) {
      if (!s.eq(s.add(a, b), s.add(b, a))) violated("additive commutativity", w2(a, b));
      if (s.in_star_domain(a)) {
        if (s.in_star_domain(b) && !s.in_star_domain(s.add(a, b))) violated("ideal closed under sum", w2(a, b));
        if (!s.in_star_domain(s.mul(a, b)) || !s.in_star_domain(s.mul(b, a)))
          violated("ideal closed under products", w2(a, b));
      }
      for (const auto& c : samples) {
        if (!s.eq(s.add(s.add(a, b), c), s.add(a, s.add(b, c)))) violated("additive associativity", w3(a, b, c));
        if (!s.eq(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c))))
          violated("multiplicative associativity", w3(a, b, c));
        if (!s.eq(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c))))
          violated("left distributivity", w3(a, b, c));
        if (!s.eq(s.mul(s.add(b, c), a), s.add(s.mul(b, a), s.mul(c, a))))
          violated("right distributivity", w3(a, b, c));
      }
    }
  }
  return report;
}

}  // namespace conway
