#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semicat/semiring.hpp"

namespace semicat {

/// A morphism dom -> cod of the skeletal category Mat(S).
///
/// Objects are positive dimensions; the zero object is not representable.
/// Entries are dense and row-major: `at(r, c)` is the coefficient from basis
/// vector c of the domain to basis vector r of the codomain, so states are
/// columns (dom = 1) and effects are rows (cod = 1).
///
/// Composite indices are flattened row-major (mixed radix): in an object
/// n * n', the pair (a, b) sits at a * n' + b. Kronecker products, cups, caps,
/// swaps and the uniqueness construction all rely on this convention.
class Matrix {
 public:
  /// Zero matrix.
  Matrix(Semiring semiring, std::size_t dom, std::size_t cod);
  Matrix(Semiring semiring, std::size_t dom, std::size_t cod, std::vector<Scalar> entries);

  static Matrix identity(const Semiring& s, std::size_t n);
  /// cod x dom from integer rows, e.g. from_ints(Q, {{1, 2}, {3, 4}}).
  static Matrix from_ints(const Semiring& s, const std::vector<std::vector<long long>>& rows);
  /// cod x dom from literal rows in the semiring's syntax.
  static Matrix from_literals(const Semiring& s, const std::vector<std::vector<std::string>>& rows);
  /// Column state 1 -> n with the given components.
  static Matrix state(const Semiring& s, std::vector<Scalar> components);
  /// Standard basis state |k> in dimension n (0-based k).
  static Matrix basis_state(const Semiring& s, std::size_t n, std::size_t k);
  static Matrix random(const Semiring& s, std::size_t dom, std::size_t cod, std::mt19937_64& rng);

  const Semiring& semiring() const { return semiring_; }
  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  const Scalar& at(std::size_t row, std::size_t col) const { return entries_[row * dom_ + col]; }
  void set(std::size_t row, std::size_t col, Scalar value);
  const std::vector<Scalar>& entries() const { return entries_; }

  /// Entrywise equality under the semiring's equality (tolerance for float
  /// specs). Different shapes or semirings compare unequal.
  bool equals(const Matrix& other) const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  Semiring semiring_;
  std::size_t dom_;
  std::size_t cod_;
  std::vector<Scalar> entries_;
};

/// g o f. Requires f.cod() == g.dom().
Matrix compose(const Matrix& f, const Matrix& g);
/// Matrix product g * f, i.e. g o f.
Matrix operator*(const Matrix& g, const Matrix& f);

/// Kronecker product: entry ((r, r'), (c, c')) = f(r, c) * g(r', c').
Matrix tensor(const Matrix& f, const Matrix& g);
/// Left-to-right Kronecker product of a non-empty list.
Matrix tensor_all(const std::vector<Matrix>& factors);

/// Conjugate transpose.
Matrix dagger(const Matrix& f);
Matrix transpose(const Matrix& f);
/// Entrywise involution (same shape).
Matrix conjugate(const Matrix& f);

/// Sum_x <x| (x) <x| : n*n -> 1.
Matrix cap(const Semiring& s, std::size_t n);
/// Sum_x |x> (x) |x> : 1 -> n*n.
Matrix cup(const Semiring& s, std::size_t n);

/// Sum_x star(phi_x) psi_x for states of equal dimension.
Scalar inner_product(const Matrix& phi, const Matrix& psi);

/// Block diagonal f (+) g.
Matrix direct_sum(const Matrix& f, const Matrix& g);
/// Biproduct injection of summand `which` (0 or 1) into n + m.
Matrix injection(const Semiring& s, std::size_t n, std::size_t m, int which);
/// Biproduct projection from n + m onto summand `which` (0 or 1).
Matrix projection(const Semiring& s, std::size_t n, std::size_t m, int which);

Matrix madd(const Matrix& f, const Matrix& g);
Matrix operator+(const Matrix& f, const Matrix& g);
Matrix smul(const Scalar& s, const Matrix& f);

/// Symmetry n*m -> m*n sending flattened (a, b) to (b, a).
Matrix swap(const Semiring& s, std::size_t n, std::size_t m);

/// Permutation matrix n -> n sending basis vector k to basis vector perm[k].
Matrix permutation_matrix(const Semiring& s, const std::vector<std::size_t>& perm);

/// Two-sided inverse, if one exists.
///
/// Rings use Gauss-Jordan elimination with unit pivots (largest magnitude
/// for float specs). Semirings without negatives accept only monomial
/// matrices whose non-zero entries are units. Any result is verified by
/// multiplying back on both sides.
std::optional<Matrix> try_invert(const Matrix& f);

/// JSON form {spec, dom, cod, rows: [[literal, ...], ...]}.
nlohmann::ordered_json to_json(const Matrix& f);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace semicat
