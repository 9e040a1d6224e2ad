#pragma once

// Dense rectangular matrices over a StarSemiring, with the block star on the
// matrix ideal M(I), transpose duality and functional/permutation matrices.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conway/error.hpp"
#include "conway/semiring.hpp"

namespace conway {

/// rows x cols table of carrier values, row-major.
template <class V>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const V& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<V> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw ShapeMismatch("matrix of shape " + std::to_string(rows_) + "x" + std::to_string(cols_) + " needs " +
                          std::to_string(rows_ * cols_) + " entries, got " + std::to_string(data_.size()));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const V& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  V& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const V> entries() const { return data_; }
  std::span<V> entries() { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<V> data_;
};

template <class V>
Matrix<V> transpose(const Matrix<V>& a) {
  if (a.rows() == 0 || a.cols() == 0) return Matrix<V>(a.cols(), a.rows(), std::vector<V>{});
  Matrix<V> t(a.cols(), a.rows(), a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

/// Total map from {0..source_size-1} to {0..target_size-1}; induces the 0-1
/// matrix with exactly one 1 per row.
struct FunctionalMatrix {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  std::vector<std::size_t> mapping;
};

/// Matrix operations over a fixed scalar semiring.
template <StarSemiring S>
class MatrixAlgebra {
 public:
  using value_type = typename S::value_type;
  using matrix_type = Matrix<value_type>;

  explicit MatrixAlgebra(S scalars) : s_(std::move(scalars)) {}

  const S& scalars() const { return s_; }

  matrix_type zero(std::size_t rows, std::size_t cols) const { return matrix_type(rows, cols, s_.zero()); }

  matrix_type identity(std::size_t n) const {
    matrix_type e = zero(n, n);
    for (std::size_t i = 0; i < n; ++i) e(i, i) = s_.one();
    return e;
  }

  /// All-ones column u_n.
  matrix_type ones(std::size_t n) const { return matrix_type(n, 1, s_.one()); }

  /// 1 x n row with a single 1 at `index`.
  matrix_type unit_row(std::size_t n, std::size_t index) const {
    matrix_type e = zero(1, n);
    e(0, index) = s_.one();
    return e;
  }

  matrix_type add(const matrix_type& a, const matrix_type& b) const {
    if (a.rows() != b.rows() || a.cols() != b.cols())
      throw ShapeMismatch("cannot add " + shape(a) + " and " + shape(b));
    matrix_type r = a;
    auto out = r.entries();
    auto rhs = b.entries();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = s_.add(out[k], rhs[k]);
    return r;
  }

  matrix_type mul(const matrix_type& a, const matrix_type& b) const {
    if (a.cols() != b.rows()) throw ShapeMismatch("cannot multiply " + shape(a) + " by " + shape(b));
    matrix_type r = zero(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const value_type& aik = a(i, k);
        if (is_zero(s_, aik)) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = s_.add(r(i, j), s_.mul(aik, b(k, j)));
      }
    return r;
  }

  /// Entrywise scalar product x.A.
  matrix_type scale_left(const value_type& x, const matrix_type& a) const {
    matrix_type r = a;
    for (auto& v : r.entries()) v = s_.mul(x, v);
    return r;
  }

  matrix_type scale_right(const matrix_type& a, const value_type& x) const {
    matrix_type r = a;
    for (auto& v : r.entries()) v = s_.mul(v, x);
    return r;
  }

  bool eq(const matrix_type& a, const matrix_type& b) const {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    auto x = a.entries();
    auto y = b.entries();
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!s_.eq(x[k], y[k])) return false;
    return true;
  }

  /// Membership in the matrix ideal M(D(S)).
  bool in_ideal(const matrix_type& a) const {
    for (const auto& v : a.entries())
      if (!s_.in_star_domain(v)) return false;
    return true;
  }

  /// Star by the last row/column split: d is 1x1 and a is the leading block.
  ///
  /// The leading block's star a* is built up one row/column at a time; with
  /// delta = (d + c.a*.b)* the blocks are
  ///   alpha = a* + a*.b.delta.c.a*,  beta = a*.b.delta,
  ///   gamma = delta.c.a*,            delta,
  /// so each extension step costs O(k^2) products and needs one scalar star.
  matrix_type star(const matrix_type& a) const {
    require_square(a, "star");
    require_ideal(a);
    const std::size_t n = a.rows();
    matrix_type r = zero(n, n);
    std::vector<value_type> u;  // a*.b
    std::vector<value_type> v;  // c.a*
    for (std::size_t k = 0; k < n; ++k) {
      u.assign(k, s_.zero());
      v.assign(k, s_.zero());
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          u[i] = s_.add(u[i], s_.mul(r(i, j), a(j, k)));
          v[j] = s_.add(v[j], s_.mul(a(k, i), r(i, j)));
        }
      value_type pivot = a(k, k);
      for (std::size_t i = 0; i < k; ++i) pivot = s_.add(pivot, s_.mul(a(k, i), u[i]));
      const value_type delta = s_.star(pivot);
      for (std::size_t i = 0; i < k; ++i) {
        const value_type beta = s_.mul(u[i], delta);
        if (!is_zero(s_, beta))
          for (std::size_t j = 0; j < k; ++j) r(i, j) = s_.add(r(i, j), s_.mul(beta, v[j]));
        r(i, k) = beta;
      }
      for (std::size_t j = 0; j < k; ++j) r(k, j) = s_.mul(delta, v[j]);
      r(k, k) = delta;
    }
    return r;
  }

  /// A+ = A.A*.
  matrix_type plus(const matrix_type& a) const { return mul(a, star(a)); }

  /// Block star with a leading square block of size `split`:
  ///   alpha = (a + b.d*.c)*, beta = alpha.b.d*, gamma = delta.c.a*, delta = (d + c.a*.b)*.
  /// Inner stars are taken with star().
  matrix_type block_star(const matrix_type& m, std::size_t split) const {
    require_square(m, "block star");
    const std::size_t n = m.rows();
    if (split == 0 || split >= n)
      throw BadSplit("split " + std::to_string(split) + " is not strictly inside a " + shape(m) + " matrix");
    require_ideal(m);
    const std::size_t rest = n - split;
    const matrix_type a = block(m, 0, 0, split, split);
    const matrix_type b = block(m, 0, split, split, rest);
    const matrix_type c = block(m, split, 0, rest, split);
    const matrix_type d = block(m, split, split, rest, rest);
    const matrix_type a_star = star(a);
    const matrix_type d_star = star(d);
    const matrix_type alpha = star(add(a, mul(mul(b, d_star), c)));
    const matrix_type delta = star(add(d, mul(mul(c, a_star), b)));
    const matrix_type beta = mul(mul(alpha, b), d_star);
    const matrix_type gamma = mul(mul(delta, c), a_star);
    return assemble(alpha, beta, gamma, delta);
  }

  /// The star computed in Mat over the dual semiring: every product reversed.
  matrix_type dual_star(const matrix_type& a) const {
    return MatrixAlgebra<DualSemiring<S>>(DualSemiring<S>(s_)).star(a);
  }

  /// Product in Mat over the dual semiring: (A o B)_ij = sum_k B_kj . A_ik.
  matrix_type dual_mul(const matrix_type& a, const matrix_type& b) const {
    return MatrixAlgebra<DualSemiring<S>>(DualSemiring<S>(s_)).mul(a, b);
  }

  matrix_type from_function(const FunctionalMatrix& rho) const {
    if (rho.mapping.size() != rho.source_size)
      throw ShapeMismatch("functional matrix maps " + std::to_string(rho.mapping.size()) + " of " +
                          std::to_string(rho.source_size) + " source points");
    matrix_type m = zero(rho.source_size, rho.target_size);
    for (std::size_t i = 0; i < rho.source_size; ++i) {
      if (rho.mapping[i] >= rho.target_size)
        throw ShapeMismatch("functional matrix sends " + std::to_string(i) + " outside the target");
      m(i, rho.mapping[i]) = s_.one();
    }
    return m;
  }

  /// Row i carries its 1 in column perm[i].
  matrix_type permutation(const std::vector<std::size_t>& perm) const {
    const std::size_t n = perm.size();
    std::vector<bool> hit(n, false);
    for (std::size_t target : perm) {
      if (target >= n || hit[target]) throw NotBijective("mapping is not a permutation of 0.." + std::to_string(n));
      hit[target] = true;
    }
    return from_function({n, n, perm});
  }

  matrix_type block(const matrix_type& m, std::size_t row, std::size_t col, std::size_t rows,
                    std::size_t cols) const {
    if (row + rows > m.rows() || col + cols > m.cols())
      throw ShapeMismatch("block exceeds " + shape(m) + " matrix");
    matrix_type r = zero(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) r(i, j) = m(row + i, col + j);
    return r;
  }

  /// (a b / c d) from its four blocks.
  matrix_type assemble(const matrix_type& a, const matrix_type& b, const matrix_type& c,
                       const matrix_type& d) const {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
      throw ShapeMismatch("blocks " + shape(a) + ", " + shape(b) + ", " + shape(c) + ", " + shape(d) +
                          " do not tile a matrix");
    matrix_type r = zero(a.rows() + c.rows(), a.cols() + b.cols());
    paste(r, a, 0, 0);
    paste(r, b, 0, a.cols());
    paste(r, c, a.rows(), 0);
    paste(r, d, a.rows(), a.cols());
    return r;
  }

  /// (a b), side by side.
  matrix_type hcat(const matrix_type& a, const matrix_type& b) const {
    return assemble(a, b, zero(0, a.cols()), zero(0, b.cols()));
  }

  /// (a / b), stacked.
  matrix_type vcat(const matrix_type& a, const matrix_type& b) const {
    return assemble(a, zero(a.rows(), 0), b, zero(b.rows(), 0));
  }

  void require_ideal(const matrix_type& a) const {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (!s_.in_star_domain(a(i, j)))
          throw StarUndefined("entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") lies outside the star domain of " + std::string(s_.name()));
  }

  std::string format(const matrix_type& a) const {
    std::string out = "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
      out += i ? "; " : "";
      for (std::size_t j = 0; j < a.cols(); ++j) out += (j ? ", " : "") + s_.format(a(i, j));
    }
    return out + "]";
  }

 private:
  static std::string shape(const matrix_type& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

  static void require_square(const matrix_type& a, const char* op) {
    if (!a.is_square()) throw NotSquare(std::string(op) + " needs a square matrix, got " + shape(a));
  }

  static void paste(matrix_type& into, const matrix_type& part, std::size_t row, std::size_t col) {
    for (std::size_t i = 0; i < part.rows(); ++i)
      for (std::size_t j = 0; j < part.cols(); ++j) into(row + i, col + j) = part(i, j);
  }

  S s_;
};

}  // namespace conway
