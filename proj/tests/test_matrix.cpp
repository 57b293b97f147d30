#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <utility>

#include "semicat/error.hpp"
#include "semicat/laws.hpp"
#include "semicat/matrix.hpp"

using namespace semicat;

namespace {

// Plain triple loop over entries; g o f.
Matrix product_oracle(const Matrix& f, const Matrix& g) {
  const auto& s = f.semiring();
  Matrix out(s, f.dom(), g.cod());
  for (std::size_t r = 0; r < g.cod(); ++r)
    for (std::size_t c = 0; c < f.dom(); ++c) {
      Scalar acc = s.zero();
      for (std::size_t k = 0; k < f.cod(); ++k) acc = s.add(acc, s.mul(g.at(r, k), f.at(k, c)));
      out.set(r, c, acc);
    }
  return out;
}

Matrix kron_oracle(const Matrix& f, const Matrix& g) {
  const auto& s = f.semiring();
  Matrix out(s, f.dom() * g.dom(), f.cod() * g.cod());
  for (std::size_t r = 0; r < f.cod(); ++r)
    for (std::size_t rp = 0; rp < g.cod(); ++rp)
      for (std::size_t c = 0; c < f.dom(); ++c)
        for (std::size_t cp = 0; cp < g.dom(); ++cp)
          out.set(r * g.cod() + rp, c * g.dom() + cp, s.mul(f.at(r, c), g.at(rp, cp)));
  return out;
}

using Relation = std::set<std::pair<std::size_t, std::size_t>>;

Relation relation_of(const Matrix& m) {
  Relation rel;
  for (std::size_t r = 0; r < m.cod(); ++r)
    for (std::size_t c = 0; c < m.dom(); ++c)
      if (std::get<bool>(m.at(r, c))) rel.insert({c, r});
  return rel;
}

class PerSpec : public ::testing::TestWithParam<std::string> {
 protected:
  Semiring s = Semiring::by_name(GetParam());
};

}  // namespace

TEST(Compose, NaturalExample) {
  const auto n = Semiring::natural();
  const auto f = Matrix::from_ints(n, {{1, 2}, {3, 4}});
  const auto g = Matrix::from_ints(n, {{1, 0}, {1, 1}});
  EXPECT_TRUE(compose(f, g).equals(Matrix::from_ints(n, {{1, 2}, {4, 6}})));
  EXPECT_TRUE(compose(f, g).equals(product_oracle(f, g)));
}

TEST(Compose, BooleanIsRelationalComposition) {
  const auto b = Semiring::boolean();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto f = Matrix::random(b, 2, 2, rng);
    const auto g = Matrix::random(b, 2, 2, rng);
    Relation expected;
    for (auto [x, y] : relation_of(f))
      for (auto [y2, z] : relation_of(g))
        if (y == y2) expected.insert({x, z});
    EXPECT_EQ(relation_of(compose(f, g)), expected);
  }
}

TEST(Compose, DimensionMismatchIsUsageError) {
  const auto q = Semiring::rational();
  EXPECT_THROW(compose(Matrix::identity(q, 2), Matrix::identity(q, 3)), UsageError);
  EXPECT_THROW(compose(Matrix::identity(q, 2), Matrix::identity(Semiring::natural(), 2)), UsageError);
  EXPECT_THROW(Matrix(q, 0, 2), UsageError);
}

TEST(Tensor, RationalColumnExample) {
  const auto q = Semiring::rational();
  const auto f = Matrix::from_ints(q, {{1}, {2}});
  const auto g = Matrix::from_ints(q, {{3}, {4}});
  EXPECT_TRUE(tensor(f, g).equals(Matrix::from_ints(q, {{3}, {4}, {6}, {8}})));
}

TEST(Tensor, IdentitiesAndScalars) {
  const auto q = Semiring::rational();
  EXPECT_TRUE(tensor(Matrix::identity(q, 2), Matrix::identity(q, 3)).equals(Matrix::identity(q, 6)));
  const auto a = Matrix::from_ints(q, {{3}});
  const auto b = Matrix::from_ints(q, {{5}});
  EXPECT_TRUE(tensor(a, b).equals(Matrix::from_ints(q, {{15}})));
  EXPECT_TRUE(tensor(a, b).equals(compose(a, b)));
}

TEST(Dagger, Examples) {
  const auto c = Semiring::complex();
  EXPECT_TRUE(dagger(Matrix::from_literals(c, {{"i"}})).equals(Matrix::from_literals(c, {{"-i"}})));
  const auto r = Semiring::real();
  std::mt19937_64 rng(5);
  const auto f = Matrix::random(r, 2, 3, rng);
  EXPECT_TRUE(dagger(f).equals(transpose(f)));
  EXPECT_TRUE(dagger(dagger(f)).equals(f));
}

TEST(CupCap, SmallCases) {
  const auto q = Semiring::rational();
  EXPECT_TRUE(cap(q, 1).equals(Matrix::from_ints(q, {{1}})));
  EXPECT_TRUE(cup(q, 1).equals(Matrix::from_ints(q, {{1}})));
  EXPECT_TRUE(cap(q, 2).equals(Matrix::from_ints(q, {{1, 0, 0, 1}})));
  EXPECT_TRUE(cup(q, 2).equals(Matrix::from_ints(q, {{1}, {0}, {0}, {1}})));
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto c = cap(q, n);
    std::size_t ones = 0;
    for (const auto& e : c.entries()) ones += q.is_one(e);
    EXPECT_EQ(ones, n);
    EXPECT_TRUE(dagger(cup(q, n)).equals(cap(q, n)));
  }
}

TEST(InnerProduct, Examples) {
  const auto n = Semiring::natural();
  const auto phi = Matrix::from_ints(n, {{1}, {2}});
  const auto psi = Matrix::from_ints(n, {{3}, {4}});
  EXPECT_TRUE(n.eq(inner_product(phi, psi), n.from_int(11)));
  const auto c = Semiring::complex();
  const auto i = Matrix::from_literals(c, {{"i"}});
  EXPECT_TRUE(c.eq(inner_product(i, i), c.one()));
  const auto q = Semiring::rational();
  EXPECT_TRUE(q.is_zero(inner_product(Matrix::basis_state(q, 2, 0), Matrix::basis_state(q, 2, 1))));
  EXPECT_THROW(inner_product(Matrix::basis_state(q, 2, 0), Matrix::basis_state(q, 3, 0)), UsageError);
}

TEST(DirectSum, Biproduct) {
  const auto q = Semiring::rational();
  EXPECT_TRUE(direct_sum(Matrix::identity(q, 2), Matrix::identity(q, 3)).equals(Matrix::identity(q, 5)));
  const auto f = Matrix::from_ints(q, {{1, 2}, {3, 4}});
  const auto embedded = direct_sum(f, Matrix(q, 1, 1));
  EXPECT_TRUE(embedded.equals(Matrix::from_ints(q, {{1, 2, 0}, {3, 4, 0}, {0, 0, 0}})));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const auto pi_iota = compose(injection(q, 2, 2, j), projection(q, 2, 2, i));
      EXPECT_TRUE(pi_iota.equals(i == j ? Matrix::identity(q, 2) : Matrix(q, 2, 2)));
    }
  const auto sum = madd(compose(projection(q, 2, 2, 0), injection(q, 2, 2, 0)),
                        compose(projection(q, 2, 2, 1), injection(q, 2, 2, 1)));
  EXPECT_TRUE(sum.equals(Matrix::identity(q, 4)));
}

TEST(MaddSmul, Examples) {
  const auto q = Semiring::rational();
  std::mt19937_64 rng(9);
  const auto f = Matrix::random(q, 3, 2, rng);
  EXPECT_TRUE(smul(q.zero(), f).is_zero());
  EXPECT_TRUE(madd(f, Matrix(q, 3, 2)).equals(f));
  const auto b = Semiring::boolean();
  for (int t = 0; t < 30; ++t) {
    const auto g = Matrix::random(b, 2, 2, rng);
    const auto h = Matrix::random(b, 2, 2, rng);
    Relation expected = relation_of(g);
    for (const auto& p : relation_of(h)) expected.insert(p);
    EXPECT_EQ(relation_of(madd(g, h)), expected);
  }
}

TEST(Swap, Examples) {
  const auto q = Semiring::rational();
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_TRUE(swap(q, 1, n).equals(Matrix::identity(q, n)));
    for (std::size_t m = 1; m <= 4; ++m)
      EXPECT_TRUE(compose(swap(q, n, m), swap(q, m, n)).equals(Matrix::identity(q, n * m)));
  }
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const auto f = Matrix::random(q, 2, 2, rng);
    const auto g = Matrix::random(q, 2, 2, rng);
    EXPECT_TRUE(compose(tensor(f, g), swap(q, 2, 2)).equals(compose(swap(q, 2, 2), tensor(g, f))));
  }
}

TEST(Invert, ExactAndMonomial) {
  const auto q = Semiring::rational();
  const auto a = Matrix::from_ints(q, {{2, 1}, {1, 1}});
  const auto inv = try_invert(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_TRUE(compose(a, *inv).equals(Matrix::identity(q, 2)));
  EXPECT_FALSE(try_invert(Matrix::from_ints(q, {{1, 2}, {2, 4}})).has_value());
  const auto n = Semiring::natural();
  EXPECT_TRUE(try_invert(Matrix::from_ints(n, {{0, 1}, {1, 0}})).has_value());
  EXPECT_FALSE(try_invert(Matrix::from_ints(n, {{2, 1}, {1, 1}})).has_value());
}

TEST(Json, RoundTrip) {
  const auto q = Semiring::rational();
  const auto f = Matrix::from_literals(q, {{"1/2", "3"}, {"-4", "0"}});
  EXPECT_TRUE(matrix_from_json(to_json(f)).equals(f));
}

TEST_P(PerSpec, OracleProductAndKronecker) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const auto f = Matrix::random(s, 1 + t % 3, 1 + t % 4, rng);
    const auto g = Matrix::random(s, 1 + t % 4, 2, rng);
    const auto h = Matrix::random(s, 2, 1 + t % 2, rng);
    ASSERT_TRUE(compose(f, g).equals(product_oracle(f, g)));
    ASSERT_TRUE(tensor(f, h).equals(kron_oracle(f, h)));
  }
}

TEST_P(PerSpec, SnakeEquations) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto id = Matrix::identity(s, n);
    const auto left = compose(tensor(id, cup(s, n)), tensor(cap(s, n), id));
    const auto right = compose(tensor(cup(s, n), id), tensor(id, cap(s, n)));
    EXPECT_TRUE(left.equals(id)) << n;
    EXPECT_TRUE(right.equals(id)) << n;
  }
}

TEST_P(PerSpec, CapGivesInnerProduct) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 4;
    const auto phi = Matrix::random(s, 1, n, rng);
    const auto psi = Matrix::random(s, 1, n, rng);
    Scalar expected = s.zero();
    for (std::size_t x = 0; x < n; ++x) expected = s.add(expected, s.mul(s.star(phi.at(x, 0)), psi.at(x, 0)));
    const auto via_cap = compose(tensor(conjugate(phi), psi), cap(s, n));
    ASSERT_TRUE(s.eq(via_cap.at(0, 0), expected));
    ASSERT_TRUE(s.eq(inner_product(phi, psi), expected));
  }
}

TEST_P(PerSpec, LibraryLawSuite) {
  const auto report = check_category_laws(s, 4, 100, 23);
  EXPECT_TRUE(report.ok()) << report.to_json().dump(2);
}

INSTANTIATE_TEST_SUITE_P(Registered, PerSpec,
                         ::testing::Values("bool", "nat", "int", "rational", "real", "complex", "split-complex",
                                           "z5", "quantale"),
                         [](const auto& info) {
                           std::string n = info.param;
                           for (auto& ch : n)
                             if (ch == '-') ch = '_';
                           return n;
                         });
