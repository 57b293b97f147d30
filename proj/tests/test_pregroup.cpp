#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <random>

#include "semicat/error.hpp"
#include "semicat/pregroup.hpp"
#include "oracles.hpp"

using namespace semicat;
using namespace semicat::pregroup;

namespace {

using oracles::Links;
using oracles::all_matchings;
using oracles::random_sequence;

std::vector<PregroupType> types_of(const std::vector<std::string>& texts) {
  std::vector<PregroupType> out;
  for (const auto& t : texts) out.push_back(parse_type(t));
  return out;
}

// Removes linked pairs innermost first, requiring adjacency at each step.
std::optional<std::vector<SimpleType>> replay(const ReductionDiagram& d, const std::vector<SimpleType>& seq) {
  std::vector<std::size_t> alive(seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k) alive[k] = k;
  auto order = d.links;
  std::sort(order.begin(), order.end(),
            [](const auto& x, const auto& y) { return x.second - x.first < y.second - y.first; });
  for (const auto& [i, j] : order) {
    auto it = std::find(alive.begin(), alive.end(), i);
    if (it == alive.end() || it + 1 == alive.end() || *(it + 1) != j) return std::nullopt;
    if (!contracts(seq[i], seq[j])) return std::nullopt;
    alive.erase(it, it + 2);
  }
  std::vector<SimpleType> out;
  for (auto k : alive) out.push_back(seq[k]);
  return out;
}

}  // namespace

TEST(ParseType, Examples) {
  EXPECT_EQ(parse_type("n^r.s.n^l").simples, (std::vector<SimpleType>{{"n", 1}, {"s", 0}, {"n", -1}}));
  EXPECT_EQ(parse_type("n^ll").simples, (std::vector<SimpleType>{{"n", -2}}));
  EXPECT_TRUE(parse_type("1").is_unit());
  EXPECT_EQ(parse_type("n^lr").simples, (std::vector<SimpleType>{{"n", 0}}));
  EXPECT_EQ(parse_type("np_2^rr").simples, (std::vector<SimpleType>{{"np_2", 2}}));
}

TEST(ParseType, RoundTripsWithFormatter) {
  for (const char* t : {"n^r.s.n^l", "n^ll", "1", "s", "n^rrr.s^l"}) EXPECT_EQ(format_type(parse_type(t)), t);
}

TEST(ParseType, MalformedInputs) {
  for (const char* t : {"", "n.", ".n", "n^", "n^x", "n..s", "^l", "n s"}) EXPECT_THROW(parse_type(t), ParseError) << t;
  try {
    parse_type("n.s^q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Adjoints, Examples) {
  const auto p = parse_type("p");
  EXPECT_EQ(right_adjoint(left_adjoint(p)), p);
  EXPECT_EQ(left_adjoint(right_adjoint(p)), p);
  EXPECT_EQ(left_adjoint(parse_type("n.s")).simples, (std::vector<SimpleType>{{"s", -1}, {"n", -1}}));
  EXPECT_TRUE(left_adjoint(PregroupType{}).is_unit());
  const auto t = parse_type("n^r.s.n^l");
  EXPECT_EQ(right_adjoint(left_adjoint(t)), t);
}

TEST(Reduce, ClownsTellJokes) {
  const auto types = types_of({"n", "n^r.s.n^l", "n"});
  const auto d = reduce(types, parse_type("s"));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->links, (Links{{0, 1}, {3, 4}}));
  EXPECT_EQ(d->residue, (std::vector<std::size_t>{2}));
  EXPECT_EQ(count_reductions(types, parse_type("s")), 1u);
}

TEST(Reduce, SmallCases) {
  const auto single = reduce(types_of({"s"}), parse_type("s"));
  ASSERT_TRUE(single.has_value());
  EXPECT_TRUE(single->links.empty());
  EXPECT_EQ(single->residue, (std::vector<std::size_t>{0}));
  EXPECT_FALSE(reduce(types_of({"n", "n"}), parse_type("s")).has_value());
  EXPECT_TRUE(is_grammatical(types_of({"n", "n^r.s"}), parse_type("s")));
  EXPECT_FALSE(is_grammatical({}, parse_type("s")));
  EXPECT_TRUE(is_grammatical({}, parse_type("1")));
  EXPECT_TRUE(is_grammatical(types_of({"n^ll", "n^l"}), parse_type("1")));
  EXPECT_FALSE(is_grammatical(types_of({"n^l", "n^ll"}), parse_type("1")));
}

TEST(Reduce, AmbiguityPicksLeastLinks) {
  // Either (0,1) or (2,3) contracts, leaving the other pair as residue.
  const std::vector<SimpleType> seq{{"n", 0}, {"n", 1}, {"n", 0}, {"n", 1}};
  const std::vector<SimpleType> target{{"n", 0}, {"n", 1}};
  const auto d = reduce(seq, target);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->links, (Links{{0, 1}}));
  EXPECT_EQ(count_reductions(seq, target), 2u);
}

TEST(Reduce, AgreesWithBruteForce) {
  std::mt19937_64 rng(2024);
  std::size_t grammatical = 0;
  for (int t = 0; t < 400; ++t) {
    std::vector<SimpleType> target;
    const auto pick = rng() % 3;
    if (pick == 1) target = {{"s", 0}};
    if (pick == 2) target = {{"n", 0}};
    const auto seq = t % 2 ? random_sequence(rng, rng() % 11)
                           : oracles::planted_sequence(rng, target, rng() % (1 + (10 - target.size()) / 2));
    const auto all = all_matchings(seq, target);
    const auto d = reduce(seq, target);
    ASSERT_EQ(d.has_value(), !all.empty());
    ASSERT_EQ(count_reductions(seq, target), all.size());
    if (!d) continue;
    ++grammatical;
    ASSERT_EQ(d->links, all.front());
    ASSERT_FALSE(diagram_defect(*d, seq, target).has_value());
  }
  EXPECT_GE(grammatical, 200u);
}

TEST(Reduce, ReplaySoundness) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const auto seq = t % 2 ? random_sequence(rng, rng() % 13) : oracles::planted_sequence(rng, {{"s", 0}}, rng() % 6);
    for (const std::vector<SimpleType>& target : {std::vector<SimpleType>{}, {{"s", 0}}}) {
      const auto d = reduce(seq, target);
      if (!d) continue;
      const auto out = replay(*d, seq);
      ASSERT_TRUE(out.has_value());
      ASSERT_EQ(*out, target);
    }
  }
}

TEST(Reduce, InvariantUnderUnitInsertion) {
  std::mt19937_64 rng(6);
  const std::vector<std::string> pool{"n", "n^r.s", "n^r.s.n^l", "s^l", "n^l", "1", "n^r"};
  for (int t = 0; t < 100; ++t) {
    std::vector<PregroupType> words;
    for (std::size_t k = 0, len = 1 + rng() % 4; k < len; ++k) words.push_back(parse_type(pool[rng() % pool.size()]));
    const bool base = is_grammatical(words, parse_type("s"));
    for (std::size_t at = 0; at <= words.size(); ++at) {
      auto with_unit = words;
      with_unit.insert(with_unit.begin() + at, PregroupType{});
      ASSERT_EQ(is_grammatical(with_unit, parse_type("s")), base);
    }
  }
}

TEST(Reduce, FortySimpleTypesUnderOneSecond) {
  std::vector<SimpleType> seq;
  for (int k = 0; k < 20; ++k) seq.push_back({"n", 0});
  for (int k = 0; k < 20; ++k) seq.push_back({"n", 1});
  const auto start = std::chrono::steady_clock::now();
  const auto d = reduce(seq, {});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->links.size(), 20u);
  EXPECT_LT(secs, 1.0);
}

TEST(DiagramDefect, DetectsCrossingAndBadLinks) {
  const std::vector<SimpleType> seq{{"n", 0}, {"n", 0}, {"n", 1}, {"n", 1}};
  ReductionDiagram crossing{4, {{0, 2}, {1, 3}}, {}};
  EXPECT_TRUE(diagram_defect(crossing, seq, {}).has_value());
  ReductionDiagram wrong{4, {{0, 1}, {2, 3}}, {}};
  EXPECT_TRUE(diagram_defect(wrong, seq, {}).has_value());
  ReductionDiagram good{4, {{0, 3}, {1, 2}}, {}};
  EXPECT_FALSE(diagram_defect(good, seq, {}).has_value());
}

TEST(Render, ClownsArcs) {
  const auto types = types_of({"n", "n^r.s.n^l", "n"});
  const auto d = reduce(types, parse_type("s"));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(render_diagram(*d, types), "n   n^r.s.n^l   n\n[---]   | [-----]\n");
}

TEST(Render, NoLinksAndNesting) {
  const auto single = types_of({"s"});
  EXPECT_EQ(render_diagram(*reduce(single, parse_type("s")), single), "s\n");
  const auto nested = types_of({"n", "s^l.s", "n^r"});
  const auto d = reduce(nested, parse_type("1"));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->links, (Links{{0, 3}, {1, 2}}));
  EXPECT_EQ(render_diagram(*d, nested), "n   s^l.s   n^r\n[---[---]---]\n");
}
