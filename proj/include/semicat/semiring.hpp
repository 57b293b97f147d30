#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace semicat {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Element representations. Each semiring kind owns exactly one alternative,
// so a value can always be checked against the semiring it is combined in.

struct Natural {
  BigInt value;
  friend bool operator==(const Natural&, const Natural&) = default;
};

struct Integer {
  BigInt value;
  friend bool operator==(const Integer&, const Integer&) = default;
};

struct Rational {
  BigRational value;
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct Real {
  double value = 0.0;
  friend bool operator==(const Real&, const Real&) = default;
};

struct Complex {
  std::complex<double> value;
  friend bool operator==(const Complex&, const Complex&) = default;
};

/// a + b·j with j² = +1.
struct SplitComplex {
  double a = 0.0;
  double b = 0.0;
  friend bool operator==(const SplitComplex&, const SplitComplex&) = default;
};

/// k mod p, 0 <= k < p.
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// The three-element chain bot < half < top.
enum class Chain3 : std::uint8_t { bot = 0, half = 1, top = 2 };

using Scalar = std::variant<bool, Natural, Integer, Rational, Real, Complex,
                            SplitComplex, Residue, Chain3>;

enum class SemiringKind {
  boolean,
  natural,
  integer,
  rational,
  real,
  complex,
  split_complex,
  prime_field,
  quantale,
};

/// A commutative semiring with involution, chosen at runtime.
///
/// Instances are small immutable descriptors; copying is cheap. Elements are
/// `Scalar` values, and every operation rejects elements that do not belong
/// to this semiring with `UsageError`.
///
/// Literal syntax (stable, shared by `parse` and `format`):
///   bool            "0" | "1"
///   nat             decimal digits
///   int             optional sign, decimal digits
///   rational        "p/q" or "p" (stored reduced)
///   real            decimal or scientific
///   complex         "a+bi", "a-bi", "a", "bi"
///   split-complex   "a+bj", "a-bj", "a", "bj"
///   z<p>            "k mod p" (bare "k" also accepted)
///   quantale        "bot" | "half" | "top"
class Semiring {
 public:
  static constexpr double default_tolerance = 1e-9;

  static Semiring boolean();
  static Semiring natural();
  static Semiring integer();
  static Semiring rational();
  static Semiring real(double tolerance = default_tolerance);
  static Semiring complex(double tolerance = default_tolerance);
  static Semiring split_complex(double tolerance = default_tolerance);
  /// Throws UsageError unless p is a prime <= 97.
  static Semiring prime_field(std::uint32_t p);
  static Semiring quantale();

  /// Looks up "bool", "nat", "int", "rational", "real", "complex",
  /// "split-complex", "z<p>" or "quantale".
  static Semiring by_name(std::string_view name);

  /// The nine registered instances (the prime field is z5).
  static std::vector<Semiring> registered();

  SemiringKind kind() const { return kind_; }
  std::string name() const;
  bool is_exact() const;
  double tolerance() const { return tolerance_; }
  std::uint32_t modulus() const { return modulus_; }
  bool has_identity_involution() const;
  /// True when every element has an additive inverse.
  bool is_ring() const;

  Scalar zero() const;
  Scalar one() const;
  /// Image of an integer under the unique map from the integers (or the
  /// naturals, for semirings without negatives). Throws on negative input
  /// when the semiring is not a ring.
  Scalar from_int(long long k) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar star(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  std::optional<Scalar> negate(const Scalar& a) const;
  /// Multiplicative inverse when `a` is a unit.
  std::optional<Scalar> inverse(const Scalar& a) const;
  /// Rough size used for pivot selection in floating-point specs.
  double magnitude(const Scalar& a) const;

  bool contains(const Scalar& a) const;

  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& a) const;

  /// Broad sample for axiom checks (includes huge naturals, irrational-ish
  /// floats).
  Scalar random(std::mt19937_64& rng) const;
  /// Small integral values; keeps float arithmetic exact in matrix tests.
  Scalar random_small(std::mt19937_64& rng) const;

  friend bool operator==(const Semiring& a, const Semiring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ &&
           a.tolerance_ == b.tolerance_;
  }

 private:
  Semiring(SemiringKind kind, double tolerance, std::uint32_t modulus)
      : kind_(kind), tolerance_(tolerance), modulus_(modulus) {}

  void require(const Scalar& a) const;

  SemiringKind kind_;
  double tolerance_ = 0.0;
  std::uint32_t modulus_ = 0;
};

/// Uniform integer in [lo, hi] drawn directly from the engine, so sampled
/// streams do not depend on the standard library's distributions.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace semicat
