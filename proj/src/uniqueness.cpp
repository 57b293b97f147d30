#include "semicat/uniqueness.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>

#include "semicat/error.hpp"

namespace semicat::uniqueness {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(
      uniform_int(rng, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, 0, i - 1)]);
  return perm;
}

// Units used as off-diagonal coefficients of the triangular gauge factors.
std::vector<Scalar> gauge_coefficients(const Semiring& s) {
  const Scalar one = s.one();
  const Scalar minus_one = *s.negate(one);
  switch (s.kind()) {
    case SemiringKind::complex:
      return {one, minus_one, Complex{{0.0, 1.0}}, Complex{{0.0, -1.0}}};
    case SemiringKind::split_complex:
      return {one, minus_one, SplitComplex{0.0, 1.0}, SplitComplex{0.0, -1.0}};
    case SemiringKind::prime_field: {
      std::vector<Scalar> out;
      for (std::uint32_t k = 1; k < s.modulus(); ++k) out.push_back(s.from_int(k));
      return out;
    }
    default:
      return {one, minus_one};
  }
}

bool is_identity(const Matrix& m) { return m.equals(Matrix::identity(m.semiring(), m.dom())); }

void require_inverse_pair(const Matrix& a, const Matrix& a_inv, const std::string& what) {
  const Matrix id = Matrix::identity(a.semiring(), a.dom());
  if (!compose(a_inv, a).equals(id) || !compose(a, a_inv).equals(id)) {
    throw CandidateRejected(what + " is not invertible");
  }
}

// P L U with unit bidiagonal L (below) and U (above); the inverse is
// U^{-1} L^{-1} P^T with closed-form triangular inverses.
std::pair<Matrix, Matrix> triangular_gauge(const Semiring& s, std::size_t n, std::mt19937_64& rng) {
  const auto coeffs = gauge_coefficients(s);
  auto pick = [&] { return coeffs[draw(rng, 0, coeffs.size() - 1)]; };
  std::vector<Scalar> lower(n > 0 ? n - 1 : 0), upper(n > 0 ? n - 1 : 0);
  for (auto& c : lower) c = pick();
  for (auto& c : upper) c = pick();
  const auto perm = random_permutation(rng, n);

  Matrix l = Matrix::identity(s, n), u = Matrix::identity(s, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    l.set(i + 1, i, lower[i]);
    u.set(i, i + 1, upper[i]);
  }
  // L^{-1}(i, j) = prod_{k=j}^{i-1} (-c_k); U^{-1}(i, j) = prod_{k=i}^{j-1} (-d_k).
  Matrix l_inv = Matrix::identity(s, n), u_inv = Matrix::identity(s, n);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar acc = s.one();
    for (std::size_t i = j + 1; i < n; ++i) {
      acc = s.mul(acc, *s.negate(lower[i - 1]));
      l_inv.set(i, j, acc);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Scalar acc = s.one();
    for (std::size_t j = i + 1; j < n; ++j) {
      acc = s.mul(acc, *s.negate(upper[j - 1]));
      u_inv.set(i, j, acc);
    }
  }
  const Matrix p = permutation_matrix(s, perm);
  const Matrix a = compose(compose(u, l), p);
  const Matrix a_inv = compose(compose(transpose(p), l_inv), u_inv);
  return {a, a_inv};
}

std::pair<Matrix, Matrix> permutation_gauge(const Semiring& s, std::size_t n, std::mt19937_64& rng) {
  const Matrix p = permutation_matrix(s, random_permutation(rng, n));
  return {p, transpose(p)};
}

void expect_equal(Report& report, const std::string& name, std::vector<std::size_t> dims,
                  const Matrix& lhs, const Matrix& rhs) {
  const bool ok = lhs.equals(rhs);
  report.record(name, std::move(dims), ok, ok ? "" : lhs.to_string() + " != " + rhs.to_string());
}

std::vector<std::size_t> unflatten(const std::vector<std::size_t>& radices, std::size_t k) {
  std::vector<std::size_t> digits(radices.size());
  for (std::size_t i = radices.size(); i-- > 0;) {
    digits[i] = k % radices[i];
    k /= radices[i];
  }
  return digits;
}

}  // namespace

std::vector<std::size_t> prime_decompose(std::size_t n) {
  if (n == 0) throw UsageError("prime_decompose: n must be >= 1");
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::vector<std::size_t>> multi_indices(const std::vector<std::size_t>& radices) {
  std::size_t total = 1;
  for (auto r : radices) total *= r;
  std::vector<std::vector<std::size_t>> out;
  out.reserve(total);
  for (std::size_t k = 0; k < total; ++k) out.push_back(unflatten(radices, k));
  return out;
}

// ---------------------------------------------------------------------------
// TensorCandidate

struct TensorCandidate::Gauge {
  struct Entry {
    Matrix forward;
    Matrix backward;
    bool identity;
  };

  Gauge(Semiring s, std::string f) : semiring(s), family(std::move(f)) {}

  Semiring semiring;
  std::string family;
  std::function<std::pair<Matrix, Matrix>(std::size_t)> generate;
  std::map<std::size_t, Entry> cache;
  std::mutex mutex;

  const Entry& entry(std::size_t n) {
    if (n == 0) throw UsageError("gauge: object must be positive");
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Entry e{Matrix::identity(semiring, n), Matrix::identity(semiring, n), true};
    if (n > 1 && generate) {
      auto [a, a_inv] = generate(n);
      require_inverse_pair(a, a_inv, "gauge A_" + std::to_string(n));
      e.identity = is_identity(a);
      e.forward = std::move(a);
      e.backward = std::move(a_inv);
    }
    return cache.emplace(n, std::move(e)).first->second;
  }
};

TensorCandidate::TensorCandidate(Semiring s, std::shared_ptr<Gauge> gauge, std::optional<std::uint64_t> seed)
    : semiring_(s), gauge_(std::move(gauge)), seed_(seed) {}

TensorCandidate TensorCandidate::trivial(const Semiring& s) {
  auto gauge = std::make_shared<Gauge>(s, "identity");
  return TensorCandidate(s, gauge, std::nullopt);
}

TensorCandidate TensorCandidate::random(const Semiring& s, std::uint64_t seed) {
  const bool ring = s.is_ring();
  auto gauge = std::make_shared<Gauge>(s, ring ? "triangular" : "permutation");
  gauge->generate = [s, seed, ring](std::size_t n) {
    std::mt19937_64 rng(splitmix64(splitmix64(seed) ^ n));
    return ring ? triangular_gauge(s, n, rng) : permutation_gauge(s, n, rng);
  };
  return TensorCandidate(s, gauge, seed);
}

TensorCandidate TensorCandidate::from_gauge(const Semiring& s, std::map<std::size_t, Matrix> gauge_map) {
  auto gauge = std::make_shared<Gauge>(s, "explicit");
  for (auto& [n, a] : gauge_map) {
    if (n == 0 || a.dom() != n || a.cod() != n || !(a.semiring() == s)) {
      throw UsageError("from_gauge: A_" + std::to_string(n) + " must be an " + std::to_string(n) + "x" +
                       std::to_string(n) + " matrix over " + s.name());
    }
    if (n == 1 && !is_identity(a)) throw CandidateRejected("A_1 must be the identity");
    auto a_inv = try_invert(a);
    if (!a_inv) throw CandidateRejected("gauge A_" + std::to_string(n) + " is not invertible");
    gauge->cache.emplace(n, Gauge::Entry{a, *a_inv, is_identity(a)});
  }
  return TensorCandidate(s, gauge, std::nullopt);
}

std::string TensorCandidate::family() const { return gauge_->family; }

const Matrix& TensorCandidate::gauge(std::size_t n) const { return gauge_->entry(n).forward; }
const Matrix& TensorCandidate::gauge_inverse(std::size_t n) const { return gauge_->entry(n).backward; }

Matrix TensorCandidate::tensor(const Matrix& f, const Matrix& g) const {
  Matrix out = semicat::tensor(f, g);
  const auto& in = gauge_->entry(f.dom() * g.dom());
  if (!in.identity) out = compose(in.backward, out);
  const auto& outer = gauge_->entry(f.cod() * g.cod());
  if (!outer.identity) out = compose(out, outer.forward);
  return out;
}

Matrix TensorCandidate::associator(std::size_t a, std::size_t b, std::size_t c) const {
  // P_R P_L^{-1} with P_L = A_abc (A_ab (x) id_c), P_R = A_abc (id_a (x) A_bc).
  const Matrix& outer = gauge(a * b * c);
  const Matrix& outer_inv = gauge_inverse(a * b * c);
  Matrix m = compose(outer_inv, semicat::tensor(gauge_inverse(a * b), Matrix::identity(semiring_, c)));
  m = compose(m, semicat::tensor(Matrix::identity(semiring_, a), gauge(b * c)));
  return compose(m, outer);
}

Matrix TensorCandidate::associator_inverse(std::size_t a, std::size_t b, std::size_t c) const {
  const Matrix& outer = gauge(a * b * c);
  const Matrix& outer_inv = gauge_inverse(a * b * c);
  Matrix m = compose(outer_inv, semicat::tensor(Matrix::identity(semiring_, a), gauge_inverse(b * c)));
  m = compose(m, semicat::tensor(gauge(a * b), Matrix::identity(semiring_, c)));
  return compose(m, outer);
}

Matrix TensorCandidate::left_unitor(std::size_t a) const { return gauge_inverse(a); }
Matrix TensorCandidate::right_unitor(std::size_t a) const { return gauge_inverse(a); }
Matrix TensorCandidate::left_unitor_inverse(std::size_t a) const { return gauge(a); }
Matrix TensorCandidate::right_unitor_inverse(std::size_t a) const { return gauge(a); }

Matrix TensorCandidate::symmetry(std::size_t a, std::size_t b) const {
  return compose(compose(gauge_inverse(a * b), swap(semiring_, a, b)), gauge(a * b));
}

Matrix TensorCandidate::cap(std::size_t n) const {
  const Matrix plain = semicat::cap(semiring_, n);
  return uncorrected_caps_ ? plain : compose(gauge_inverse(n * n), plain);
}

Matrix TensorCandidate::cup(std::size_t n) const { return compose(semicat::cup(semiring_, n), gauge(n * n)); }

TensorCandidate TensorCandidate::with_uncorrected_caps() const {
  TensorCandidate out = *this;
  out.uncorrected_caps_ = true;
  return out;
}

// ---------------------------------------------------------------------------
// Prime bases and the functor

namespace {

// B_n from B_{n/p} and its inverse, p the largest prime of n.
std::pair<Matrix, Matrix> extend_basis(const TensorCandidate& candidate, std::size_t n, std::size_t p,
                                       const Matrix& prev, const Matrix& prev_inv) {
  const Semiring& s = candidate.semiring();
  const Matrix id = Matrix::identity(s, p);
  Matrix b = compose(tensor(prev, id), candidate.gauge(n));
  Matrix b_inv = compose(candidate.gauge_inverse(n), tensor(prev_inv, id));
  const Matrix unit = Matrix::identity(s, n);
  if (!compose(b_inv, b).equals(unit) || !compose(b, b_inv).equals(unit)) {
    throw CandidateRejected("prime basis B_" + std::to_string(n) + " is not invertible");
  }
  return {std::move(b), std::move(b_inv)};
}

}  // namespace

PrimeBasis prime_basis(const TensorCandidate& candidate, std::size_t n) {
  const Semiring& s = candidate.semiring();
  const auto primes = prime_decompose(n);
  std::vector<std::vector<std::size_t>> indices;
  for (auto& j : multi_indices(primes)) {
    for (auto& d : j) ++d;
    indices.push_back(std::move(j));
  }
  std::size_t size = primes.empty() ? 1 : primes.front();
  Matrix b = Matrix::identity(s, size), b_inv = Matrix::identity(s, size);
  for (std::size_t k = 1; k < primes.size(); ++k) {
    size *= primes[k];
    std::tie(b, b_inv) = extend_basis(candidate, size, primes[k], b, b_inv);
  }
  return PrimeBasis{n, primes, std::move(indices), std::move(b), std::move(b_inv)};
}

StructureFunctor::StructureFunctor(TensorCandidate candidate, std::size_t max_object)
    : candidate_(std::move(candidate)) {
  if (max_object == 0) throw UsageError("build_functor: max_object must be positive");
  const Semiring& s = candidate_.semiring();
  primes_.resize(max_object + 1);
  forward_.reserve(max_object + 1);
  backward_.reserve(max_object + 1);
  forward_.push_back(Matrix::identity(s, 1));  // placeholder for object 0
  backward_.push_back(Matrix::identity(s, 1));
  for (std::size_t n = 1; n <= max_object; ++n) {
    primes_[n] = prime_decompose(n);
    if (primes_[n].size() <= 1) {
      forward_.push_back(Matrix::identity(s, n));
      backward_.push_back(Matrix::identity(s, n));
      continue;
    }
    const std::size_t p = primes_[n].back();
    auto [b, b_inv] = extend_basis(candidate_, n, p, forward_[n / p], backward_[n / p]);
    forward_.push_back(std::move(b));
    backward_.push_back(std::move(b_inv));
  }
}

void StructureFunctor::require_object(std::size_t n) const {
  if (n == 0 || n > max_object()) {
    throw UsageError("functor: object " + std::to_string(n) + " outside working range 1.." +
                     std::to_string(max_object()));
  }
}

const Matrix& StructureFunctor::basis(std::size_t n) const {
  require_object(n);
  return forward_[n];
}

const Matrix& StructureFunctor::basis_inverse(std::size_t n) const {
  require_object(n);
  return backward_[n];
}

Matrix StructureFunctor::apply(const Matrix& f) const {
  require_object(f.dom());
  require_object(f.cod());
  return compose(compose(backward_[f.dom()], f), forward_[f.cod()]);
}

Matrix StructureFunctor::apply_basis_state(std::size_t n, std::size_t j) const {
  return apply(Matrix::basis_state(candidate_.semiring(), n, j));
}

Matrix StructureFunctor::apply_basis_effect(std::size_t n, std::size_t j) const {
  return apply(transpose(Matrix::basis_state(candidate_.semiring(), n, j)));
}

void StructureFunctor::replace_basis(std::size_t n, Matrix basis) {
  require_object(n);
  if (basis.dom() != n || basis.cod() != n) throw UsageError("replace_basis: shape mismatch");
  forward_[n] = std::move(basis);
}

std::size_t merge_index(const std::vector<std::size_t>& primes_n, const std::vector<std::size_t>& digits_n,
                        const std::vector<std::size_t>& primes_np,
                        const std::vector<std::size_t>& digits_np) {
  std::vector<std::pair<std::size_t, std::size_t>> merged;
  for (std::size_t i = 0; i < primes_n.size(); ++i) merged.emplace_back(primes_n[i], digits_n[i]);
  for (std::size_t i = 0; i < primes_np.size(); ++i) merged.emplace_back(primes_np[i], digits_np[i]);
  std::stable_sort(merged.begin(), merged.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t k = 0;
  for (const auto& [p, d] : merged) k = k * p + d;
  return k;
}

Matrix merge_permutation(const Semiring& s, std::size_t n, std::size_t np) {
  const auto pn = prime_decompose(n), pnp = prime_decompose(np);
  std::vector<std::size_t> perm(n * np);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t jp = 0; jp < np; ++jp) {
      perm[j * np + jp] = merge_index(pn, unflatten(pn, j), pnp, unflatten(pnp, jp));
    }
  }
  return permutation_matrix(s, perm);
}

Matrix StructureFunctor::phi(std::size_t n, std::size_t np) const {
  if (inverted_) throw UsageError("phi: defined for the forward functor only");
  require_object(n * np);
  const Semiring& s = candidate_.semiring();
  // phi = B_{nn'} P_merge (B_n (x) B_n')^{-1} A_{nn'}^{-1}
  Matrix m = compose(candidate_.gauge_inverse(n * np), tensor(backward_[n], backward_[np]));
  m = compose(m, merge_permutation(s, n, np));
  return compose(m, forward_[n * np]);
}

Matrix StructureFunctor::mu(std::size_t n, std::size_t np) const {
  const Matrix sigma_inv = transpose(merge_permutation(candidate_.semiring(), n, np));
  return compose(phi(n, np), apply(sigma_inv));
}

Matrix StructureFunctor::phi_inverse(std::size_t n, std::size_t np) const {
  if (inverted_) throw UsageError("phi_inverse: defined for the forward functor only");
  require_object(n * np);
  Matrix m = compose(backward_[n * np], transpose(merge_permutation(candidate_.semiring(), n, np)));
  m = compose(m, tensor(forward_[n], forward_[np]));
  return compose(m, candidate_.gauge(n * np));
}

Matrix StructureFunctor::mu_inverse(std::size_t n, std::size_t np) const {
  const Matrix sigma = merge_permutation(candidate_.semiring(), n, np);
  return compose(apply(sigma), phi_inverse(n, np));
}

StructureFunctor build_functor(const TensorCandidate& candidate, std::size_t max_object) {
  return StructureFunctor(candidate, max_object);
}

StructureFunctor invert_functor(const StructureFunctor& f) {
  StructureFunctor out = f;
  std::swap(out.forward_, out.backward_);
  out.inverted_ = !f.inverted_;
  return out;
}

// ---------------------------------------------------------------------------
// Verification

Report verify_functoriality(const StructureFunctor& f, std::size_t samples, std::uint64_t seed) {
  const Semiring& s = f.candidate().semiring();
  const std::size_t range = f.max_object();
  std::mt19937_64 rng(seed);
  Report report;
  for (std::size_t n = 1; n <= range; ++n) {
    const Matrix id = Matrix::identity(s, n);
    expect_equal(report, "preserves_identity", {n}, f.apply(id), id);
    Matrix sum(s, n, n);
    for (std::size_t j = 0; j < n; ++j) sum = madd(sum, compose(f.apply_basis_effect(n, j), f.apply_basis_state(n, j)));
    expect_equal(report, "resolution_of_identity", {n}, sum, id);
  }
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t a = draw(rng, 1, range), b = draw(rng, 1, range), c = draw(rng, 1, range);
    const Matrix g = Matrix::random(s, a, b, rng);
    const Matrix h = Matrix::random(s, b, c, rng);
    const Matrix g2 = Matrix::random(s, a, b, rng);
    const Scalar k = s.random_small(rng);
    expect_equal(report, "preserves_composition", {}, f.apply(compose(g, h)), compose(f.apply(g), f.apply(h)));
    expect_equal(report, "additive", {}, f.apply(madd(g, g2)), madd(f.apply(g), f.apply(g2)));
    expect_equal(report, "homogeneous", {}, f.apply(smul(k, g)), smul(k, f.apply(g)));
    const Matrix scalar = Matrix::random(s, 1, 1, rng);
    expect_equal(report, "identity_on_scalars", {}, f.apply(scalar), scalar);
  }
  return report;
}

Report verify_monoidality(const StructureFunctor& f, std::size_t samples, std::uint64_t seed) {
  if (f.is_inverse()) throw UsageError("verify_monoidality: expects the forward functor");
  const TensorCandidate& cand = f.candidate();
  const Semiring& s = cand.semiring();
  const std::size_t range = f.max_object();
  std::mt19937_64 rng(seed);
  Report report;

  for (std::size_t n = 1; n <= range; ++n) {
    expect_equal(report, "mu_left_unit", {n}, f.mu(1, n), cand.left_unitor(n));
    expect_equal(report, "mu_right_unit", {n}, f.mu(n, 1), cand.right_unitor(n));
  }
  for (std::size_t a = 2; a <= range; ++a) {
    for (std::size_t b = 2; a * b <= range; ++b) {
      const Matrix m = f.mu(a, b);
      const Matrix id = Matrix::identity(s, a * b);
      const Matrix m_inv = f.mu_inverse(a, b);
      const Matrix phi = f.phi(a, b);
      const Matrix phi_inv = f.phi_inverse(a, b);
      report.record("mu_invertible", {a, b}, compose(m, m_inv).equals(id) && compose(m_inv, m).equals(id));
      report.record("phi_invertible", {a, b}, compose(phi, phi_inv).equals(id) && compose(phi_inv, phi).equals(id));
      expect_equal(report, "mu_symmetric", {a, b}, compose(m, f.apply(swap(s, a, b))),
                   compose(cand.symmetry(a, b), f.mu(b, a)));
      for (std::size_t c = 2; a * b * c <= range; ++c) {
        const Matrix lhs = compose(cand.tensor(m, Matrix::identity(s, c)), f.mu(a * b, c));
        const Matrix rhs = compose(compose(cand.associator(a, b, c), cand.tensor(Matrix::identity(s, a), f.mu(b, c))),
                                   f.mu(a, b * c));
        expect_equal(report, "mu_associative", {a, b, c}, lhs, rhs);
      }
    }
  }

  auto pick_pair = [&] {
    const std::size_t n = draw(rng, 1, range);
    return std::pair{n, draw(rng, 1, range / n)};
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const auto [n, np] = pick_pair();
    const auto [m, mp] = pick_pair();
    const Matrix g = Matrix::random(s, n, m, rng);
    const Matrix h = Matrix::random(s, np, mp, rng);
    const Matrix image_pair = cand.tensor(f.apply(g), f.apply(h));
    const Matrix kron = tensor(g, h);
    expect_equal(report, "mu_natural", {}, compose(f.mu(n, np), f.apply(kron)),
                 compose(image_pair, f.mu(m, mp)));
    // phi carries the merged (prime-sorted) product: phi (Fg (.) Fh) phi^{-1} = F(sigma (g (x) h) sigma^{-1}).
    const Matrix sigma_in = merge_permutation(s, n, np);
    const Matrix sigma_out = merge_permutation(s, m, mp);
    const Matrix merged = compose(compose(transpose(sigma_in), kron), sigma_out);
    expect_equal(report, "phi_natural", {}, compose(compose(f.phi_inverse(n, np), image_pair), f.phi(m, mp)),
                 f.apply(merged));
  }
  return report;
}

Report verify_cup_cap_transport(const StructureFunctor& f, std::size_t max_n) {
  if (f.is_inverse()) throw UsageError("verify_cup_cap_transport: expects the forward functor");
  const TensorCandidate& cand = f.candidate();
  const Semiring& s = cand.semiring();
  Report report;
  for (std::size_t n = 1; n <= max_n && n * n <= f.max_object(); ++n) {
    const Matrix id = Matrix::identity(s, n);
    const Matrix cap_bar = cand.cap(n);
    const Matrix cup_bar = cand.cup(n);

    // lambda (e (.) id) alpha^{-1} (id (.) h) rho^{-1} and its mirror.
    auto snake_left = [&](const Matrix& e, const Matrix& h) {
      Matrix m = compose(cand.right_unitor_inverse(n), cand.tensor(id, h));
      m = compose(m, cand.associator_inverse(n, n, n));
      m = compose(m, cand.tensor(e, id));
      return compose(m, cand.left_unitor(n));
    };
    auto snake_right = [&](const Matrix& e, const Matrix& h) {
      Matrix m = compose(cand.left_unitor_inverse(n), cand.tensor(h, id));
      m = compose(m, cand.associator(n, n, n));
      m = compose(m, cand.tensor(id, e));
      return compose(m, cand.right_unitor(n));
    };

    expect_equal(report, "candidate_snake_left", {n}, snake_left(cap_bar, cup_bar), id);
    expect_equal(report, "candidate_snake_right", {n}, snake_right(cap_bar, cup_bar), id);

    const Matrix cap_image = compose(f.mu(n, n), f.apply(semicat::cap(s, n)));
    const Matrix cup_image = compose(f.apply(semicat::cup(s, n)), f.mu_inverse(n, n));
    expect_equal(report, "transported_snake_left", {n}, snake_left(cap_image, cup_image), id);
    expect_equal(report, "transported_snake_right", {n}, snake_right(cap_image, cup_image), id);

    // Comparisons between the transported dual and the candidate's own, in
    // both directions; they must be mutually inverse.
    const Matrix u = snake_right(cap_image, cup_bar);
    const Matrix v = snake_right(cap_bar, cup_image);
    report.record("comparison_invertible", {n}, compose(u, v).equals(id) && compose(v, u).equals(id),
                  u.to_string() + " ; " + v.to_string());
    expect_equal(report, "comparison_intertwines_cap", {n}, compose(cand.tensor(id, u), cap_bar), cap_image);
    expect_equal(report, "comparison_intertwines_cup", {n}, compose(cup_image, cand.tensor(u, id)), cup_bar);
  }
  return report;
}

Report verify_inverse(const StructureFunctor& f, std::size_t samples, std::uint64_t seed) {
  const Semiring& s = f.candidate().semiring();
  const StructureFunctor inv = invert_functor(f);
  const std::size_t range = f.max_object();
  std::mt19937_64 rng(seed);
  Report report;
  for (std::size_t i = 0; i < samples; ++i) {
    const Matrix g = Matrix::random(s, draw(rng, 1, range), draw(rng, 1, range), rng);
    expect_equal(report, "inverse_after_functor", {}, inv.apply(f.apply(g)), g);
    expect_equal(report, "functor_after_inverse", {}, f.apply(inv.apply(g)), g);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Object equation

ObjectEquationResult check_object_equation(
    std::size_t unit, const std::function<std::size_t(std::size_t, std::size_t)>& tensor_objects,
    const std::function<std::size_t(std::size_t)>& dual, std::size_t range) {
  if (range < 2) throw UsageError("check_object_equation: range must be >= 2");
  ObjectEquationResult out;
  for (std::size_t n = 1; n <= range; ++n) {
    for (std::size_t m = 1; m <= range; ++m) {
      const std::size_t lhs = unit * tensor_objects(dual(n), m);
      if (lhs != n * m) {
        out.violation = std::pair{n, m};
        out.detail = std::to_string(unit) + " * (" + std::to_string(n) + "° . " + std::to_string(m) +
                     ") = " + std::to_string(lhs) + " != " + std::to_string(n * m);
        return out;
      }
    }
  }
  out.confirmed = true;
  // n = m = 1 forces J * (1° . 1) = 1, so J = 1; then m = J gives n° = n.
  out.unit_is_one = unit == 1;
  out.dual_is_identity = true;
  out.tensor_is_product = true;
  for (std::size_t n = 1; n <= range; ++n) {
    out.dual_is_identity = out.dual_is_identity && dual(n) == n;
    for (std::size_t m = 1; m <= range; ++m) out.tensor_is_product = out.tensor_is_product && tensor_objects(n, m) == n * m;
  }
  out.detail = "J = 1, n° = n and n . m = n * m for 1 <= n, m <= " + std::to_string(range);
  return out;
}

// ---------------------------------------------------------------------------
// Suite

nlohmann::ordered_json CandidateReport::to_json() const {
  nlohmann::ordered_json j;
  j["candidate_seed"] = candidate_seed;
  j["spec"] = spec;
  j["family"] = family;
  j["violations"] = report.violations();
  if (family == "permutation") {
    j["note"] = "open question: only permutation gauges are generated over semirings without negatives";
  }
  j["checks"] = report.to_json();
  return j;
}

std::uint64_t candidate_seed(std::uint64_t suite_seed, std::size_t index) {
  return splitmix64(suite_seed ^ splitmix64(index + 1));
}

CandidateReport verify_candidate(const TensorCandidate& candidate, const SuiteConfig& config) {
  CandidateReport out;
  out.candidate_seed = candidate.seed().value_or(config.seed);
  out.spec = candidate.semiring().name();
  out.family = candidate.family();
  const std::size_t range = std::max(config.max_dim, config.transport_max * config.transport_max);
  std::optional<StructureFunctor> functor;
  try {
    functor.emplace(build_functor(candidate, range));
    out.report.record("build_functor", true);
  } catch (const CandidateRejected& e) {
    out.report.record("build_functor", false, e.what());
    return out;
  }
  const std::uint64_t seed = out.candidate_seed;
  out.report.merge(verify_functoriality(*functor, config.samples, splitmix64(seed ^ 1)));
  out.report.merge(verify_monoidality(*functor, config.samples, splitmix64(seed ^ 2)));
  out.report.merge(verify_cup_cap_transport(*functor, config.transport_max));
  out.report.merge(verify_inverse(*functor, config.samples, splitmix64(seed ^ 3)));
  return out;
}

std::vector<CandidateReport> run_suite(const Semiring& s, const SuiteConfig& config) {
  std::vector<CandidateReport> out;
  for (std::size_t i = 0; i < config.candidates; ++i) {
    out.push_back(verify_candidate(TensorCandidate::random(s, candidate_seed(config.seed, i)), config));
  }
  return out;
}

}  // namespace semicat::uniqueness
