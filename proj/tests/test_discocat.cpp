#include <gtest/gtest.h>

#include <random>
#include <string>

#include "semicat/discocat.hpp"
#include "oracles.hpp"

using namespace semicat;
using namespace semicat::discocat;
using pregroup::parse_type;
using pregroup::PregroupType;
using pregroup::SimpleType;

namespace {

const std::string fixtures = SEMICAT_FIXTURES;

std::vector<std::string> clowns_sentence() { return {"clowns", "tell", "jokes"}; }

// Sum over x, y of clowns[x] * tell[x, s, y] * jokes[y], indices flattened
// row-major over (n, s, n).
Matrix triple_sum(const Lexicon& lex, std::size_t n, std::size_t sd) {
  const auto& s = lex.spec;
  const auto& c = *lex.lookup("clowns").state;
  const auto& t = *lex.lookup("tell").state;
  const auto& j = *lex.lookup("jokes").state;
  Matrix out(s, 1, sd);
  for (std::size_t k = 0; k < sd; ++k) {
    Scalar acc = s.zero();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        acc = s.add(acc, s.mul(s.mul(c.at(x, 0), t.at(x * sd * n + k * n + y, 0)), j.at(y, 0)));
    out.set(k, 0, acc);
  }
  return out;
}

}  // namespace

TEST(ObjectOf, Examples) {
  const SemanticAssignment a{Semiring::natural(), {{"n", 4}, {"s", 2}}, parse_type("s")};
  EXPECT_EQ(object_of(a, parse_type("n^r.s.n^l")), 32u);
  EXPECT_EQ(object_of(a, parse_type("1")), 1u);
  EXPECT_EQ(object_of(a, parse_type("n")), 4u);
  EXPECT_EQ(object_of(a, parse_type("n^ll")), 4u);
  EXPECT_THROW(object_of(a, parse_type("pp")), ConfigError);
}

TEST(Meaning, CollapsedDimensions) {
  const auto q = Semiring::rational();
  const SemanticAssignment a{q, {{"n", 1}, {"s", 1}}, parse_type("s")};
  Lexicon lex{q, {}};
  const auto one = Matrix::from_ints(q, {{1}});
  lex.entries.emplace("clowns", LexiconEntry{parse_type("n"), one});
  lex.entries.emplace("tell", LexiconEntry{parse_type("n^r.s.n^l"), one});
  lex.entries.emplace("jokes", LexiconEntry{parse_type("n"), one});
  EXPECT_TRUE(meaning(clowns_sentence(), lex, a).vector.equals(one));
}

TEST(Meaning, ClownsFixturesMatchOracles) {
  for (const char* name : {"clowns.json", "clowns_bool.json", "clowns_rational.json"}) {
    const auto path = fixtures + "/" + name;
    const auto a = load_assignment(path);
    const auto lex = load_lexicon(path);
    EXPECT_EQ(lex.entries.size(), 3u);
    const auto m = meaning(clowns_sentence(), lex, a);
    const auto b = brute_force_meaning(clowns_sentence(), lex, a);
    EXPECT_TRUE(m.vector.equals(b.vector)) << name;
    EXPECT_TRUE(m.vector.equals(triple_sum(lex, a.dims.at("n"), a.dims.at("s")))) << name;
    EXPECT_EQ(m.diagram, b.diagram);
    EXPECT_EQ(m.ambiguity_count, 1u);
  }
}

TEST(Meaning, NaturalFixtureByHand) {
  const auto path = fixtures + "/clowns.json";
  const auto m = meaning(clowns_sentence(), load_lexicon(path), load_assignment(path));
  EXPECT_TRUE(m.vector.equals(Matrix::from_ints(Semiring::natural(), {{8}, {25}})));
}

TEST(Meaning, OneHotFixture) {
  const auto path = fixtures + "/onehot.json";
  const auto m = meaning(clowns_sentence(), load_lexicon(path), load_assignment(path));
  EXPECT_TRUE(m.vector.equals(Matrix::basis_state(Semiring::natural(), 2, 1)));
}

TEST(Meaning, BooleanIsRelationalEvaluation) {
  // Universe {0, 1}; s index 1 reads "true". The sentence holds at s iff some
  // x in clowns and y in jokes have tell(x, s, y).
  const auto path = fixtures + "/clowns_bool.json";
  const auto a = load_assignment(path);
  const auto lex = load_lexicon(path);
  const auto& clowns = *lex.lookup("clowns").state;
  const auto& tell = *lex.lookup("tell").state;
  const auto& jokes = *lex.lookup("jokes").state;
  const auto m = meaning(clowns_sentence(), lex, a);
  for (std::size_t s = 0; s < 2; ++s) {
    bool holds = false;
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y)
        holds = holds || (std::get<bool>(clowns.at(x, 0)) && std::get<bool>(tell.at(x * 4 + s * 2 + y, 0)) &&
                          std::get<bool>(jokes.at(y, 0)));
    EXPECT_EQ(std::get<bool>(m.vector.at(s, 0)), holds);
  }
}

TEST(Meaning, SingleWordIsUnchanged) {
  const auto q = Semiring::rational();
  const SemanticAssignment a{q, {{"s", 3}}, parse_type("s")};
  Lexicon lex{q, {}};
  const auto st = Matrix::from_literals(q, {{"1/2"}, {"0"}, {"-7"}});
  lex.entries.emplace("rain", LexiconEntry{parse_type("s"), st});
  EXPECT_TRUE(meaning({"rain"}, lex, a).vector.equals(st));
  EXPECT_TRUE(brute_force_meaning({"rain"}, lex, a).vector.equals(st));
}

TEST(Meaning, Linearity) {
  for (const auto& s : {Semiring::rational(), Semiring::natural()}) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
      auto rc = oracles::random_sentence(s, rng);
      const auto base = meaning(rc.sentence, rc.lexicon, rc.assignment).vector;
      const auto factor = s.from_int(2 + t % 3);
      auto& entry = rc.lexicon.entries.at(rc.sentence[rng() % rc.sentence.size()]);
      entry.state = smul(factor, *entry.state);
      EXPECT_TRUE(meaning(rc.sentence, rc.lexicon, rc.assignment).vector.equals(smul(factor, base)));
    }
  }
}

TEST(Meaning, OutputDimensionIsTargetObject) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto rc = oracles::random_sentence(Semiring::integer(), rng);
    const auto m = meaning(rc.sentence, rc.lexicon, rc.assignment);
    EXPECT_EQ(m.vector.cod(), object_of(rc.assignment, rc.assignment.target));
    EXPECT_EQ(m.vector.dom(), 1u);
  }
}

class OracleEquivalence : public ::testing::TestWithParam<std::string> {};

TEST_P(OracleEquivalence, HundredRandomCases) {
  const auto s = Semiring::by_name(GetParam());
  std::mt19937_64 rng(1000);
  for (int t = 0; t < 100; ++t) {
    const auto rc = oracles::random_sentence(s, rng);
    const auto fast = meaning(rc.sentence, rc.lexicon, rc.assignment);
    const auto slow = brute_force_meaning(rc.sentence, rc.lexicon, rc.assignment);
    ASSERT_TRUE(fast.vector.equals(slow.vector)) << t;
  }
}

INSTANTIATE_TEST_SUITE_P(Specs, OracleEquivalence, ::testing::Values("bool", "nat", "rational", "quantale"));

TEST(Errors, UnknownWordAndUngrammatical) {
  const auto path = fixtures + "/clowns.json";
  const auto a = load_assignment(path);
  const auto lex = load_lexicon(path);
  EXPECT_THROW(meaning({"clowns", "juggle"}, lex, a), LexiconError);
  EXPECT_THROW(meaning({"clowns", "jokes"}, lex, a), GrammarError);
  try {
    meaning({"tell"}, lex, a);
    FAIL();
  } catch (const GrammarError& e) {
    EXPECT_EQ(e.types().size(), 1u);
    EXPECT_EQ(e.target(), parse_type("s"));
  }
}

TEST(Errors, BudgetRefusal) {
  const auto path = fixtures + "/clowns.json";
  const auto a = load_assignment(path);
  const auto lex = load_lexicon(path);
  try {
    brute_force_meaning(clowns_sentence(), lex, a, 100);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.dimension(), 32u);
  }
  EXPECT_NO_THROW(brute_force_meaning(clowns_sentence(), lex, a, 1024));
}

TEST(Loader, SchemaErrorsNameFieldAndLine) {
  const std::string missing_dim = R"({
  "spec": "nat",
  "dims": {"n": 2},
  "target": "s",
  "words": {}
})";
  try {
    parse_assignment(missing_dim, "a.json");
    FAIL();
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("a.json:4"), std::string::npos) << msg;
    EXPECT_NE(msg.find("'s'"), std::string::npos) << msg;
  }
  const std::string wrong_length = R"({
  "spec": "nat",
  "dims": {"n": 2, "s": 2},
  "target": "s",
  "words": {
    "clowns": {"type": "n", "state": ["1", "0", "0"]}
  }
})";
  try {
    parse_lexicon(wrong_length, true, "b.json");
    FAIL();
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("b.json:6"), std::string::npos) << msg;
    EXPECT_NE(msg.find("words.clowns.state"), std::string::npos) << msg;
  }
  const std::string bad_literal = R"({"spec": "nat", "dims": {"n": 1, "s": 1}, "target": "s",
  "words": {"x": {"type": "s", "state": ["-1"]}}})";
  EXPECT_THROW(parse_lexicon(bad_literal, true), ConfigError);
  EXPECT_THROW(parse_assignment("{not json"), ConfigError);
  EXPECT_THROW(parse_assignment(R"({"spec": "octonion", "dims": {}, "target": "s"})"), ConfigError);
  EXPECT_THROW(load_lexicon(fixtures + "/absent.json"), ConfigError);
}

TEST(Loader, GrammarWithoutStates) {
  const auto g = load_grammar(fixtures + "/grammar.json");
  EXPECT_EQ(g.entries.size(), 5u);
  EXPECT_FALSE(g.lookup("tell").state.has_value());
  EXPECT_THROW(load_lexicon(fixtures + "/grammar.json"), ConfigError);
}
