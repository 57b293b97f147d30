#pragma once

// Constructive uniqueness of the compact closed tensor on Mat(S).
//
// A candidate tensor structure is represented by a gauge family A_n of
// invertible n x n matrices (A_1 = id): the candidate product of f: n -> m and
// g: n' -> m' is A_{mm'} (f (x) g) A_{nn'}^{-1}. From it we rebuild the
// prime-factor bases B_n, the functor F(f) = B_m f B_n^{-1}, its inverse, and
// verify that F is a symmetric monoidal isomorphism carrying the standard
// cups and caps to the candidate's.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semicat/matrix.hpp"
#include "semicat/report.hpp"

namespace semicat::uniqueness {

/// Prime factors of n in non-decreasing order; empty for n = 1.
std::vector<std::size_t> prime_decompose(std::size_t n);

/// Mixed-radix tuples over `radices` in lexicographic order (0-based digits).
std::vector<std::vector<std::size_t>> multi_indices(const std::vector<std::size_t>& radices);

/// Thrown when a gauge or a derived basis is not invertible.
class CandidateRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Alternative bilinear compact closed structure, presented by a gauge.
///
/// Gauge matrices are produced on demand and cached; a seeded candidate draws
/// A_n from a stream that depends only on (seed, n), so the cache order never
/// changes results. Copies share the cache. Safe for concurrent use.
class TensorCandidate {
 public:
  /// A_n = identity for every n.
  static TensorCandidate trivial(const Semiring& s);
  /// Random gauge: over rings A_n = P L U with a random permutation P and
  /// unit bidiagonal L, U; over semirings without negatives A_n is a random
  /// permutation. A_1 is always the identity.
  static TensorCandidate random(const Semiring& s, std::uint64_t seed);
  /// Explicit gauge; unlisted dimensions use the identity. Throws
  /// CandidateRejected when some A_n is not invertible or A_1 != id.
  static TensorCandidate from_gauge(const Semiring& s, std::map<std::size_t, Matrix> gauge);

  const Semiring& semiring() const { return semiring_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  /// "identity", "permutation" or "triangular".
  std::string family() const;

  const Matrix& gauge(std::size_t n) const;
  const Matrix& gauge_inverse(std::size_t n) const;

  // Object part: unit 1, n (.) m = n * m, n° = n.
  std::size_t unit() const { return 1; }
  std::size_t tensor_objects(std::size_t n, std::size_t m) const { return n * m; }
  std::size_t dual(std::size_t n) const { return n; }

  /// Candidate product on morphisms.
  Matrix tensor(const Matrix& f, const Matrix& g) const;
  /// (a (.) b) (.) c -> a (.) (b (.) c).
  Matrix associator(std::size_t a, std::size_t b, std::size_t c) const;
  Matrix associator_inverse(std::size_t a, std::size_t b, std::size_t c) const;
  /// 1 (.) a -> a and a (.) 1 -> a.
  Matrix left_unitor(std::size_t a) const;
  Matrix right_unitor(std::size_t a) const;
  Matrix left_unitor_inverse(std::size_t a) const;
  Matrix right_unitor_inverse(std::size_t a) const;
  /// a (.) b -> b (.) a.
  Matrix symmetry(std::size_t a, std::size_t b) const;
  /// cap(n) A_{nn}^{-1} : n (.) n -> 1, and A_{nn} cup(n) : 1 -> n (.) n.
  Matrix cap(std::size_t n) const;
  Matrix cup(std::size_t n) const;

  /// Same gauge, but caps without the A^{-1} correction. Negative control:
  /// the resulting cups and caps no longer satisfy the snake equations.
  TensorCandidate with_uncorrected_caps() const;

 private:
  struct Gauge;
  TensorCandidate(Semiring s, std::shared_ptr<Gauge> gauge, std::optional<std::uint64_t> seed);

  Semiring semiring_;
  std::shared_ptr<Gauge> gauge_;
  std::optional<std::uint64_t> seed_;
  bool uncorrected_caps_ = false;
};

/// Prime-factor basis of object n for a candidate.
struct PrimeBasis {
  std::size_t n = 1;
  std::vector<std::size_t> primes;
  /// 1-based tuples j in lexicographic order; column k of `change` is |j_k; n>.
  std::vector<std::vector<std::size_t>> multi_indices;
  /// Column j is the left-nested candidate product of standard prime states.
  Matrix change;
  Matrix change_inverse;
};

/// B_n via B_n = A_n (B_{n/p} (x) id_p), p the largest prime factor; B_p = id.
/// Throws CandidateRejected when B_n fails to invert.
PrimeBasis prime_basis(const TensorCandidate& candidate, std::size_t n);

/// The identity-on-objects functor F(f) = B_m f B_n^{-1} and its inverse.
class StructureFunctor {
 public:
  /// Builds B_n for every n <= max_object.
  StructureFunctor(TensorCandidate candidate, std::size_t max_object);

  const TensorCandidate& candidate() const { return candidate_; }
  std::size_t max_object() const { return forward_.size() - 1; }
  /// True for F^{-1}, which maps the candidate structure back to the standard one.
  bool is_inverse() const { return inverted_; }

  Matrix apply(const Matrix& f) const;
  /// Image of |j; n> for a 0-based flattened multi-index.
  Matrix apply_basis_state(std::size_t n, std::size_t j) const;
  /// Image of <j; n| (row j of B_n^{-1}; F need not be a dagger functor).
  Matrix apply_basis_effect(std::size_t n, std::size_t j) const;

  const Matrix& basis(std::size_t n) const;
  const Matrix& basis_inverse(std::size_t n) const;

  /// The candidate structure map phi_{n,n'} : n (.) n' -> n n' sending
  /// F|j;n> (.) F|j';n'> to F|merge(j, j'); n n'>, where merge stably sorts
  /// the concatenated prime digits.
  Matrix phi(std::size_t n, std::size_t np) const;
  /// Monoidal structure isomorphism mu_{n,n'} : F n (.) F n' -> F(n (x) n'),
  /// mu = F(sigma)^{-1} phi with sigma the standard structure's own merge
  /// relabelling. Satisfies F(f (x) g) mu = mu (F f (.) F g).
  Matrix mu(std::size_t n, std::size_t np) const;
  /// Closed-form inverses, A (B_n (x) B_n') P^T B_{nn'}^{-1} and
  /// A (B_n (x) B_n') B_{nn'}^{-1}; exact wherever the bases are.
  Matrix phi_inverse(std::size_t n, std::size_t np) const;
  Matrix mu_inverse(std::size_t n, std::size_t np) const;

  /// Negative-control hook: overwrite B_n but keep the stored inverse.
  void replace_basis(std::size_t n, Matrix basis);

  friend StructureFunctor invert_functor(const StructureFunctor& f);

 private:
  void require_object(std::size_t n) const;

  TensorCandidate candidate_;
  std::vector<std::vector<std::size_t>> primes_;
  std::vector<Matrix> forward_;
  std::vector<Matrix> backward_;
  bool inverted_ = false;
};

StructureFunctor build_functor(const TensorCandidate& candidate, std::size_t max_object);
StructureFunctor invert_functor(const StructureFunctor& f);

/// Merge of two 0-based prime-digit tuples, sorted stably by prime; returns
/// the flattened index in n n' of the merged tuple.
std::size_t merge_index(const std::vector<std::size_t>& primes_n, const std::vector<std::size_t>& digits_n,
                        const std::vector<std::size_t>& primes_np,
                        const std::vector<std::size_t>& digits_np);

/// The merge relabelling as a permutation matrix n n' -> n n' (the phi of
/// the trivial candidate).
Matrix merge_permutation(const Semiring& s, std::size_t n, std::size_t np);

/// Composition, identity, S-linearity, scalars and resolution of the
/// identity on random morphisms between objects <= F.max_object().
Report verify_functoriality(const StructureFunctor& f, std::size_t samples, std::uint64_t seed);

/// Naturality of mu and phi, unit, associativity and symmetry coherence,
/// over all (n, n') with n n' <= max_object.
Report verify_monoidality(const StructureFunctor& f, std::size_t samples, std::uint64_t seed);

/// For n <= max_n: candidate cups/caps satisfy the candidate snake equations;
/// F carries standard cups/caps to a dual pair for the candidate; the
/// canonical comparison between that pair and the candidate's own is
/// invertible and intertwines both cups and caps.
Report verify_cup_cap_transport(const StructureFunctor& f, std::size_t max_n);

/// F^{-1}(F(f)) = f and F(F^{-1}(g)) = g on random morphisms.
Report verify_inverse(const StructureFunctor& f, std::size_t samples, std::uint64_t seed);

/// Outcome of checking J * (n° (.) m) = n * m over 1 <= n, m <= range.
struct ObjectEquationResult {
  bool confirmed = false;
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  /// Conclusions drawn on success: J = 1, n° = n, n (.) m = n * m.
  bool unit_is_one = false;
  bool dual_is_identity = false;
  bool tensor_is_product = false;
  std::string detail;
};

ObjectEquationResult check_object_equation(
    std::size_t unit, const std::function<std::size_t(std::size_t, std::size_t)>& tensor_objects,
    const std::function<std::size_t(std::size_t)>& dual, std::size_t range);

struct SuiteConfig {
  std::size_t max_dim = 12;
  std::size_t candidates = 20;
  std::size_t samples = 30;
  std::size_t transport_max = 4;
  std::uint64_t seed = 42;
};

/// One candidate's full verification, as {candidate_seed, spec, family,
/// checks: [...]} plus the violation count.
struct CandidateReport {
  std::uint64_t candidate_seed = 0;
  std::string spec;
  std::string family;
  Report report;
  nlohmann::ordered_json to_json() const;
};

/// Seed of candidate `index` derived from the suite seed.
std::uint64_t candidate_seed(std::uint64_t suite_seed, std::size_t index);

CandidateReport verify_candidate(const TensorCandidate& candidate, const SuiteConfig& config);
std::vector<CandidateReport> run_suite(const Semiring& s, const SuiteConfig& config);

}  // namespace semicat::uniqueness
