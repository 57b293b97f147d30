#include "semicat/laws.hpp"

#include <random>

#include "semicat/matrix.hpp"

namespace semicat {

namespace {

std::string show(const Semiring& s, const Scalar& a) { return s.format(a); }

std::string triple(const Semiring& s, const Scalar& a, const Scalar& b, const Scalar& c) {
  return "a=" + show(s, a) + " b=" + show(s, b) + " c=" + show(s, c);
}

std::size_t dim(std::mt19937_64& rng, std::size_t max) {
  return static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max)));
}

void expect_equal(Report& report, const std::string& name, std::vector<std::size_t> dims,
                  const Matrix& lhs, const Matrix& rhs) {
  const bool ok = lhs.equals(rhs);
  report.record(name, std::move(dims), ok, ok ? "" : lhs.to_string() + " != " + rhs.to_string());
}

// k(n + n') -> kn + kn' regrouping the summands of h (x) (f (+) g).
Matrix left_distributor(const Semiring& s, std::size_t k, std::size_t n, std::size_t np) {
  std::vector<std::size_t> perm(k * (n + np));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < n + np; ++i) {
      perm[c * (n + np) + i] = i < n ? c * n + i : k * n + c * np + (i - n);
    }
  }
  return permutation_matrix(s, perm);
}

}  // namespace

Report check_semiring_axioms(const Semiring& s, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Report report;
  const Scalar zero = s.zero();
  const Scalar one = s.one();
  report.record("star_zero", s.eq(s.star(zero), zero));
  report.record("star_one", s.eq(s.star(one), one));
  for (std::size_t i = 0; i < samples; ++i) {
    const Scalar a = s.random(rng);
    const Scalar b = s.random(rng);
    const Scalar c = s.random(rng);
    const std::string w = triple(s, a, b, c);
    report.record("add_commutative", s.eq(s.add(a, b), s.add(b, a)), w);
    report.record("add_associative", s.eq(s.add(s.add(a, b), c), s.add(a, s.add(b, c))), w);
    report.record("add_unit", s.eq(s.add(a, zero), a), w);
    report.record("mul_commutative", s.eq(s.mul(a, b), s.mul(b, a)), w);
    report.record("mul_associative", s.eq(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c))), w);
    report.record("mul_unit", s.eq(s.mul(a, one), a), w);
    report.record("distributive", s.eq(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c))), w);
    report.record("zero_annihilates", s.eq(s.mul(a, zero), zero), w);
    report.record("star_involutive", s.eq(s.star(s.star(a)), a), w);
    report.record("star_additive", s.eq(s.star(s.add(a, b)), s.add(s.star(a), s.star(b))), w);
    report.record("star_multiplicative", s.eq(s.star(s.mul(a, b)), s.mul(s.star(a), s.star(b))), w);
    if (s.has_identity_involution()) report.record("star_identity", s.eq(s.star(a), a), w);
    report.record("literal_round_trip", s.eq(s.parse(s.format(a)), a), w);
  }
  return report;
}

Report check_category_laws(const Semiring& s, std::size_t max_dim, std::size_t samples,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Report report;

  for (std::size_t n = 1; n <= max_dim; ++n) {
    const Matrix id = Matrix::identity(s, n);
    expect_equal(report, "snake_left", {n},
                 compose(tensor(id, cup(s, n)), tensor(cap(s, n), id)), id);
    expect_equal(report, "snake_right", {n},
                 compose(tensor(cup(s, n), id), tensor(id, cap(s, n))), id);
    if (s.has_identity_involution()) expect_equal(report, "cup_dagger_is_cap", {n}, dagger(cup(s, n)), cap(s, n));
  }

  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t a = dim(rng, 3), b = dim(rng, 3), c = dim(rng, 3);
    const std::size_t ap = dim(rng, 3), bp = dim(rng, 3), cp = dim(rng, 3);
    const Matrix f = Matrix::random(s, a, b, rng);
    const Matrix h = Matrix::random(s, b, c, rng);
    const Matrix g = Matrix::random(s, ap, bp, rng);
    const Matrix k = Matrix::random(s, bp, cp, rng);
    expect_equal(report, "interchange", {}, compose(tensor(f, g), tensor(h, k)),
                 tensor(compose(f, h), compose(g, k)));

    const Matrix f2 = Matrix::random(s, a, b, rng);
    const Scalar scale = s.random_small(rng);
    expect_equal(report, "tensor_left_additive", {}, tensor(madd(f, f2), g),
                 madd(tensor(f, g), tensor(f2, g)));
    expect_equal(report, "tensor_right_additive", {}, tensor(g, madd(f, f2)),
                 madd(tensor(g, f), tensor(g, f2)));
    expect_equal(report, "tensor_homogeneous", {}, tensor(smul(scale, f), g), smul(scale, tensor(f, g)));
    expect_equal(report, "compose_bilinear", {}, compose(madd(f, f2), h),
                 madd(compose(f, h), compose(f2, h)));

    expect_equal(report, "dagger_contravariant", {}, dagger(compose(f, h)), compose(dagger(h), dagger(f)));
    expect_equal(report, "dagger_monoidal", {}, dagger(tensor(f, g)), tensor(dagger(f), dagger(g)));
    expect_equal(report, "dagger_involutive", {}, dagger(dagger(f)), f);
    expect_equal(report, "dagger_additive", {}, dagger(madd(f, f2)), madd(dagger(f), dagger(f2)));
    expect_equal(report, "dagger_antilinear", {}, dagger(smul(scale, f)), smul(s.star(scale), dagger(f)));
    expect_equal(report, "dagger_biproduct", {}, dagger(direct_sum(f, g)), direct_sum(dagger(f), dagger(g)));

    const std::size_t n = dim(rng, max_dim);
    const Matrix phi = Matrix::random(s, 1, n, rng);
    const Matrix psi = Matrix::random(s, 1, n, rng);
    const Matrix via_cap = compose(tensor(conjugate(phi), psi), cap(s, n));
    expect_equal(report, "inner_product_via_cap", {}, via_cap,
                 Matrix(s, 1, 1, {inner_product(phi, psi)}));
    if (s.has_identity_involution()) {
      const Matrix scalar = compose(tensor(phi, psi), cap(s, n));
      expect_equal(report, "dagger_fixes_cap_scalars", {}, dagger(scalar), scalar);
    }

    expect_equal(report, "swap_natural", {}, compose(tensor(f, g), swap(s, b, bp)),
                 compose(swap(s, a, ap), tensor(g, f)));
    expect_equal(report, "swap_self_inverse", {}, compose(swap(s, a, ap), swap(s, ap, a)),
                 Matrix::identity(s, a * ap));

    expect_equal(report, "tensor_right_distributes", {}, tensor(direct_sum(f, g), h),
                 direct_sum(tensor(f, h), tensor(g, h)));
    expect_equal(report, "tensor_left_distributes", {},
                 compose(tensor(h, direct_sum(f, g)), left_distributor(s, c, b, bp)),
                 compose(left_distributor(s, b, a, ap), direct_sum(tensor(h, f), tensor(h, g))));

    const Matrix sum_id = madd(compose(projection(s, a, ap, 0), injection(s, a, ap, 0)),
                               compose(projection(s, a, ap, 1), injection(s, a, ap, 1)));
    expect_equal(report, "biproduct_resolution", {}, sum_id, Matrix::identity(s, a + ap));
    expect_equal(report, "biproduct_projection", {}, compose(injection(s, a, ap, 0), projection(s, a, ap, 0)),
                 Matrix::identity(s, a));
    expect_equal(report, "biproduct_orthogonal", {}, compose(injection(s, a, ap, 0), projection(s, a, ap, 1)),
                 Matrix(s, a, ap));
  }
  return report;
}

}  // namespace semicat
