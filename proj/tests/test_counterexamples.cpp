#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "semicat/counterexamples.hpp"
#include "semicat/error.hpp"

using namespace semicat;
using namespace semicat::counterexamples;

namespace {

using Table = std::vector<std::vector<std::size_t>>;

// Least relabelling of the table over all permutations fixing 0.
Table canonical(const Table& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Table best;
  do {
    Table r(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) r[perm[a]][perm[b]] = perm[t[a][b]];
    if (best.empty() || r < best) best = r;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

// All commutative Latin tables with unit 0, filled cell by cell and checked
// for associativity only once complete.
std::vector<Table> all_group_tables(std::size_t n) {
  std::vector<Table> out;
  Table t(n, std::vector<std::size_t>(n, n));
  for (std::size_t a = 0; a < n; ++a) t[0][a] = t[a][0] = a;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) cells.emplace_back(a, b);
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (t[t[a][b]][c] != t[a][t[b][c]]) return;
      out.push_back(t);
      return;
    }
    const auto [a, b] = cells[k];
    for (std::size_t v = 0; v < n; ++v) {
      bool clash = false;
      for (std::size_t x = 0; x < n; ++x)
        if (t[a][x] == v || t[x][b] == v || t[b][x] == v || t[x][a] == v) clash = true;
      if (clash) continue;
      t[a][b] = t[b][a] = v;
      fill(k + 1);
      t[a][b] = t[b][a] = n;
    }
  };
  fill(0);
  return out;
}

std::size_t independent_class_count(std::size_t n) {
  std::set<Table> classes;
  for (const auto& t : all_group_tables(n)) classes.insert(canonical(t));
  return classes.size();
}

}  // namespace

TEST(Table, ConstructionValidates) {
  EXPECT_THROW(FiniteMonoidTable(2, 0, {{0, 1}, {1, 1}, {0, 0}}), UsageError);
  EXPECT_THROW(FiniteMonoidTable(2, 0, {{1, 0}, {0, 1}}), UsageError);
  // Unit laws hold, associativity fails: (1*1)*2 = 0*2 = 2 but 1*(1*2) = 1*0 = 1.
  EXPECT_THROW(FiniteMonoidTable(3, 0, {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}), UsageError);
  EXPECT_NO_THROW(FiniteMonoidTable::absorbing_pair());
}

TEST(Table, JsonRoundTrip) {
  const auto k = FiniteMonoidTable::klein();
  EXPECT_EQ(table_from_json(to_json(k)), k);
  EXPECT_THROW(table_from_json(nlohmann::json::parse(R"({"order": 2})")), ConfigError);
}

TEST(AbelianGroup, Examples) {
  EXPECT_TRUE(is_abelian_group(FiniteMonoidTable::cyclic(4)));
  EXPECT_FALSE(is_abelian_group(FiniteMonoidTable::absorbing_pair()));
  EXPECT_TRUE(is_abelian_group(FiniteMonoidTable::klein()));
}

TEST(DiscreteCompact, Examples) {
  const auto z4 = verify_discrete_compact(FiniteMonoidTable::cyclic(4));
  EXPECT_TRUE(z4.ok());
  std::size_t inverse_checks = 0;
  for (const auto& c : z4.checks()) inverse_checks += c.name == "inverse_unique";
  EXPECT_EQ(inverse_checks, 4u);
  const auto k = FiniteMonoidTable::klein();
  EXPECT_TRUE(verify_discrete_compact(k).ok());
  for (std::size_t g = 0; g < 4; ++g) EXPECT_EQ(k.op(g, g), k.unit());
  EXPECT_TRUE(verify_discrete_compact(FiniteMonoidTable::cyclic(1)).ok());
  EXPECT_THROW(verify_discrete_compact(FiniteMonoidTable::absorbing_pair()), UsageError);
}

TEST(Isomorphism, CyclicVersusKlein) {
  const auto r = find_group_isomorphism(FiniteMonoidTable::cyclic(4), FiniteMonoidTable::klein());
  EXPECT_FALSE(r.bijection.has_value());
  EXPECT_EQ(r.tried, 6u);
  const auto same = find_group_isomorphism(FiniteMonoidTable::cyclic(4), FiniteMonoidTable::cyclic(4));
  ASSERT_TRUE(same.bijection.has_value());
  EXPECT_EQ(*same.bijection, (std::vector<std::size_t>{0, 1, 2, 3}));
  const auto mismatch = find_group_isomorphism(FiniteMonoidTable::cyclic(3), FiniteMonoidTable::cyclic(4));
  EXPECT_FALSE(mismatch.bijection.has_value());
  EXPECT_EQ(mismatch.tried, 0u);
  EXPECT_THROW(find_group_isomorphism(FiniteMonoidTable::cyclic(9), FiniteMonoidTable::cyclic(9)), UsageError);
}

TEST(Isomorphism, KleinAutomorphisms) {
  // Direct count: unit-fixing bijections that respect the table.
  const auto k = FiniteMonoidTable::klein();
  std::vector<std::size_t> perm{0, 1, 2, 3};
  std::uint64_t count = 0;
  do {
    bool hom = true;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) hom = hom && perm[k.op(a, b)] == k.op(perm[a], perm[b]);
    count += hom;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  EXPECT_EQ(count, 6u);
  EXPECT_EQ(count_automorphisms(k), count);
  EXPECT_EQ(count_automorphisms(FiniteMonoidTable::cyclic(4)), 2u);
}

TEST(Census, KnownCounts) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 1, 1, 1, 3};
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(abelian_group_census(n).size(), expected[n - 1]) << n;
  EXPECT_THROW(abelian_group_census(0), UsageError);
  EXPECT_THROW(abelian_group_census(9), UsageError);
}

TEST(Census, IndependentRecount) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(abelian_group_census(n).size(), independent_class_count(n)) << n;
}

TEST(Census, RepresentativesAreGroupsAndDistinct) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto reps = abelian_group_census(n);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      EXPECT_TRUE(is_abelian_group(reps[i]));
      EXPECT_TRUE(verify_discrete_compact(reps[i]).ok());
      EXPECT_TRUE(find_group_isomorphism(reps[i], reps[i]).bijection.has_value());
      for (std::size_t j = 0; j < reps.size(); ++j) {
        if (i == j) continue;
        EXPECT_FALSE(find_group_isomorphism(reps[i], reps[j]).bijection.has_value());
        EXPECT_EQ(find_group_isomorphism(reps[i], reps[j]).bijection.has_value(),
                  find_group_isomorphism(reps[j], reps[i]).bijection.has_value());
      }
    }
  }
}

TEST(NoInverses, FreeMonoid) {
  const auto r = check_no_nontrivial_inverses(6);
  EXPECT_TRUE(r.ok());
  bool covered = false;
  for (const auto& c : r.checks()) covered = covered || c.name == "length_argument_covers_all_lengths";
  EXPECT_TRUE(covered);
  EXPECT_THROW(check_no_nontrivial_inverses(0), UsageError);
}

TEST(NoInverses, FiniteTables) {
  EXPECT_TRUE(check_no_nontrivial_inverses(FiniteMonoidTable::cyclic(1)).ok());
  EXPECT_GE(check_no_nontrivial_inverses(FiniteMonoidTable::cyclic(2)).violations(), 1u);
  EXPECT_TRUE(check_no_nontrivial_inverses(FiniteMonoidTable::absorbing_pair()).ok());
}

TEST(Inequivalence, DisconnectedFamily) {
  const FatCategorySpec z4{FiniteMonoidTable::cyclic(4), HomsetMonoid::free(), false};
  const FatCategorySpec klein{FiniteMonoidTable::klein(), HomsetMonoid::free(), false};
  const auto r = inequivalence_report(z4, klein);
  EXPECT_FALSE(r.equivalent);
  EXPECT_EQ(r.verdict, "INEQUIVALENT");
  EXPECT_EQ(r.bijections_tried, 6u);
  const auto self = inequivalence_report(z4, z4);
  EXPECT_TRUE(self.equivalent);
  EXPECT_EQ(self.verdict, "EQUIVALENT");
  EXPECT_EQ(self.witness, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Inequivalence, ConnectedFamilyIsScoped) {
  const FatCategorySpec z4{FiniteMonoidTable::cyclic(4), HomsetMonoid::free(), true};
  const FatCategorySpec klein{FiniteMonoidTable::klein(), HomsetMonoid::free(), true};
  const auto r = inequivalence_report(z4, klein);
  EXPECT_EQ(r.verdict, "NO STRICT MONOIDAL ISOMORPHISM");
  EXPECT_NE(r.scope.find("not strengthened to monoidal inequivalence"), std::string::npos);
  EXPECT_TRUE(r.to_json().contains("scope"));
}

TEST(Inequivalence, IncompatibleHomsetsRefused) {
  const FatCategorySpec a{FiniteMonoidTable::cyclic(4), HomsetMonoid::free(), false};
  const FatCategorySpec b{FiniteMonoidTable::klein(), HomsetMonoid::finite(FiniteMonoidTable::absorbing_pair()), false};
  EXPECT_THROW(inequivalence_report(a, b), UsageError);
}
