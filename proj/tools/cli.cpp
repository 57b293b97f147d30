#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "semicat/counterexamples.hpp"
#include "semicat/discocat.hpp"
#include "semicat/error.hpp"
#include "semicat/laws.hpp"
#include "semicat/uniqueness.hpp"

namespace semicat::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t fallback_seed = 42;

std::uint64_t default_seed() {
  const char* env = std::getenv("SEMICAT_SEED");
  if (!env || !*env) return fallback_seed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || *env == '-') throw UsageError(std::string("SEMICAT_SEED is not a natural number: ") + env);
  return v;
}

struct Outcome {
  ordered_json json;
  bool ok = true;
  std::string summary;
};

ordered_json positions_json(const pregroup::ReductionDiagram& d) {
  ordered_json links = ordered_json::array();
  for (const auto& [i, j] : d.links) links.push_back({i + 1, j + 1});
  ordered_json residue = ordered_json::array();
  for (auto p : d.residue) residue.push_back(p + 1);
  return {{"links", links}, {"residue", residue}};
}

ordered_json literals(const Matrix& state) {
  ordered_json out = ordered_json::array();
  for (const auto& e : state.entries()) out.push_back(state.semiring().format(e));
  return out;
}

std::vector<Semiring> specs_for(const std::string& name) {
  if (name == "all") return Semiring::registered();
  return {Semiring::by_name(name)};
}

Outcome verify_axioms(const std::string& spec, std::size_t max_dim, std::size_t samples, std::uint64_t seed) {
  Outcome out;
  out.json = ordered_json::array();
  std::size_t violations = 0;
  for (const auto& s : specs_for(spec)) {
    const Report axioms = check_semiring_axioms(s, samples, seed);
    const Report laws = check_category_laws(s, max_dim, samples, seed);
    violations += axioms.violations() + laws.violations();
    out.json.push_back({{"spec", s.name()},
                        {"seed", seed},
                        {"violations", axioms.violations() + laws.violations()},
                        {"semiring_axioms", axioms.to_json()},
                        {"category_laws", laws.to_json()}});
  }
  out.ok = violations == 0;
  out.summary = "verify-axioms: " + std::to_string(violations) + " violation(s)";
  return out;
}

Outcome uniqueness_suite(const std::string& spec, std::size_t max_dim, std::size_t candidates, std::uint64_t seed) {
  uniqueness::SuiteConfig config;
  config.max_dim = max_dim;
  config.candidates = candidates;
  config.seed = seed;
  Outcome out;
  out.json = ordered_json::array();
  std::size_t violations = 0;
  for (const auto& s : specs_for(spec)) {
    ordered_json reports = ordered_json::array();
    std::size_t spec_violations = 0;
    for (const auto& r : uniqueness::run_suite(s, config)) {
      spec_violations += r.report.violations();
      reports.push_back(r.to_json());
    }
    violations += spec_violations;
    out.json.push_back({{"spec", s.name()},
                        {"seed", seed},
                        {"max_dim", max_dim},
                        {"violations", spec_violations},
                        {"candidates", reports}});
  }
  out.ok = violations == 0;
  out.summary = "uniqueness: " + std::to_string(violations) + " violation(s) over " + std::to_string(candidates) +
                " candidate(s) per semiring";
  return out;
}

Outcome object_equation(std::size_t unit, std::size_t range) {
  const auto r = uniqueness::check_object_equation(
      unit, [](std::size_t n, std::size_t m) { return n * m; }, [](std::size_t n) { return n; }, range);
  Outcome out;
  out.json = {{"J", unit}, {"range", range}, {"confirmed", r.confirmed}};
  out.json["violation"] = r.violation ? ordered_json{r.violation->first, r.violation->second} : ordered_json();
  out.json["unit_is_one"] = r.unit_is_one;
  out.json["dual_is_identity"] = r.dual_is_identity;
  out.json["tensor_is_product"] = r.tensor_is_product;
  out.json["detail"] = r.detail;
  out.ok = r.confirmed;
  out.summary = "object-equation: " + r.detail;
  return out;
}

std::vector<pregroup::PregroupType> word_types(const discocat::Lexicon& lex, const std::vector<std::string>& words) {
  std::vector<pregroup::PregroupType> types;
  for (const auto& w : words) types.push_back(lex.lookup(w).type);
  return types;
}

Outcome parse_sentence(const std::string& grammar_path, const std::string& sentence) {
  const auto lexicon = discocat::load_grammar(grammar_path);
  const auto assignment = discocat::load_assignment(grammar_path);
  const auto words = discocat::split_sentence(sentence);
  const auto types = word_types(lexicon, words);
  ordered_json typing = ordered_json::array();
  for (const auto& t : types) typing.push_back(pregroup::format_type(t));

  Outcome out;
  out.json = {{"sentence", words}, {"types", typing}, {"target", pregroup::format_type(assignment.target)}};
  const auto diagram = pregroup::reduce(types, assignment.target);
  out.json["grammatical"] = diagram.has_value();
  if (diagram) {
    out.json.update(positions_json(*diagram));
    out.json["ambiguity"] = pregroup::count_reductions(types, assignment.target);
    out.json["diagram"] = pregroup::render_diagram(*diagram, types);
    out.summary = pregroup::render_diagram(*diagram, types);
    out.summary.pop_back();
  } else {
    out.summary = "ungrammatical: does not reduce to " + pregroup::format_type(assignment.target);
  }
  out.ok = diagram.has_value();
  return out;
}

Outcome sentence_meaning(const std::string& grammar_path, const std::string& lexicon_path,
                         const std::string& sentence, bool oracle) {
  const auto grammar = discocat::load_grammar(grammar_path);
  const auto lexicon = discocat::load_lexicon(lexicon_path);
  const auto assignment = discocat::load_assignment(lexicon_path);
  const auto words = discocat::split_sentence(sentence);
  for (const auto& w : words) {
    if (!(grammar.lookup(w).type == lexicon.lookup(w).type)) {
      throw ConfigError("word '" + w + "' has type " + pregroup::format_type(grammar.lookup(w).type) +
                        " in the grammar but " + pregroup::format_type(lexicon.lookup(w).type) + " in the lexicon");
    }
  }
  const auto m = discocat::meaning(words, lexicon, assignment);
  Outcome out;
  out.json = {{"sentence", words}, {"spec", assignment.spec.name()}, {"target", pregroup::format_type(assignment.target)}};
  out.json["vector"] = literals(m.vector);
  out.json.update(positions_json(m.diagram));
  out.json["ambiguity"] = m.ambiguity_count;
  out.summary = "meaning: dimension " + std::to_string(m.vector.cod());
  if (oracle) {
    const auto check = discocat::brute_force_meaning(words, lexicon, assignment);
    const bool match = check.vector.equals(m.vector);
    out.json["oracle_match"] = match;
    out.ok = match;
    out.summary += match ? ", oracle agrees" : ", ORACLE MISMATCH";
  }
  return out;
}

Outcome groups(std::size_t order) {
  const auto reps = counterexamples::abelian_group_census(order);
  Outcome out;
  ordered_json classes = ordered_json::array();
  for (const auto& t : reps) {
    ordered_json entry = counterexamples::to_json(t);
    const Report compact = counterexamples::verify_discrete_compact(t);
    entry["automorphisms"] = counterexamples::count_automorphisms(t);
    entry["discrete_compact"] = compact.ok() ? "pass" : "fail";
    out.ok = out.ok && compact.ok();
    classes.push_back(entry);
  }
  out.json = {{"order", order}, {"classes", reps.size()}, {"representatives", classes}};
  out.summary = "groups: " + std::to_string(reps.size()) + " abelian group class(es) of order " + std::to_string(order);
  return out;
}

Outcome fatcat(std::size_t order) {
  using namespace counterexamples;
  const auto reps = abelian_group_census(order);
  const Report no_inverses = check_no_nontrivial_inverses(6);
  Outcome out;
  ordered_json comparisons = ordered_json::array();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i; j < reps.size(); ++j) {
      const FatCategorySpec a{reps[i], HomsetMonoid::free(), false}, b{reps[j], HomsetMonoid::free(), false};
      const FatCategorySpec ca{reps[i], HomsetMonoid::free(), true}, cb{reps[j], HomsetMonoid::free(), true};
      comparisons.push_back({{"left", i}, {"right", j},
                             {"disconnected", inequivalence_report(a, b).to_json()},
                             {"connected", inequivalence_report(ca, cb).to_json()}});
    }
  }
  out.json = {{"order", order},
              {"homsets", HomsetMonoid::free().describe()},
              {"no_nontrivial_inverses", no_inverses.ok() ? "pass" : "fail"},
              {"groups", reps.size()},
              {"comparisons", comparisons}};
  out.ok = no_inverses.ok();
  out.summary = "fatcat: " + std::to_string(reps.size()) + " object group(s), " +
                std::to_string(comparisons.size()) + " comparison(s)";
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compact closed matrix categories, pregroup meaning, and finite counterexamples", "semicat"};
  app.require_subcommand(1);

  std::string spec = "all";
  std::size_t max_dim = 4, samples = 200, candidates = 20, range = 10, unit = 1, order = 4;
  std::optional<std::uint64_t> seed;
  std::string grammar, lexicon, sentence;
  bool oracle = false;

  auto* axioms = app.add_subcommand("verify-axioms", "Semiring axioms and compact closed laws of Mat(S)");
  axioms->add_option("--spec", spec, "Semiring name or 'all'");
  axioms->add_option("--max-dim", max_dim, "Largest dimension for the snake equations")->check(CLI::Range(1, 64));
  axioms->add_option("--samples", samples, "Random samples per law");
  axioms->add_option("--seed", seed, "Random seed (default: SEMICAT_SEED or 42)");

  auto* unique = app.add_subcommand("uniqueness", "Verify the structure functor against seeded gauge candidates");
  std::string unique_spec = "rational";
  std::size_t unique_max_dim = 12;
  unique->add_option("--spec", unique_spec, "Semiring name or 'all'");
  unique->add_option("--max-dim", unique_max_dim, "Largest object")->check(CLI::Range(2, 64));
  unique->add_option("--candidates", candidates, "Number of candidates per semiring");
  unique->add_option("--seed", seed, "Random seed (default: SEMICAT_SEED or 42)");

  auto* objects = app.add_subcommand("object-equation", "Check J (n° . m) = n m over a range");
  objects->add_option("--J", unit, "Candidate unit object")->check(CLI::PositiveNumber);
  objects->add_option("--range", range, "Largest n and m")->check(CLI::Range(2, 10000));

  auto* parse = app.add_subcommand("parse", "Reduce a sentence's pregroup types to the target");
  parse->add_option("--grammar", grammar, "Grammar JSON file")->required();
  parse->add_option("--sentence", sentence, "Whitespace-separated words")->required();

  auto* mean = app.add_subcommand("meaning", "Compute a sentence's meaning vector");
  mean->add_option("--grammar", grammar, "Grammar JSON file")->required();
  mean->add_option("--lexicon", lexicon, "Lexicon JSON file")->required();
  mean->add_option("--sentence", sentence, "Whitespace-separated words")->required();
  mean->add_flag("--oracle", oracle, "Also compare against the dense oracle");

  auto* grp = app.add_subcommand("groups", "Census of abelian groups up to isomorphism");
  grp->add_option("--order", order, "Group order (1..8)")->check(CLI::Range(1, 8));

  auto* fat = app.add_subcommand("fatcat", "Compare fattened categories over the abelian groups of one order");
  fat->add_option("--order", order, "Group order (1..8)")->check(CLI::Range(1, 8));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::uint64_t used_seed = seed ? *seed : default_seed();
    Outcome result;
    if (*axioms) {
      result = verify_axioms(spec, max_dim, samples, used_seed);
    } else if (*unique) {
      result = uniqueness_suite(unique_spec, unique_max_dim, candidates, used_seed);
    } else if (*objects) {
      result = object_equation(unit, range);
    } else if (*parse) {
      result = parse_sentence(grammar, sentence);
    } else if (*mean) {
      result = sentence_meaning(grammar, lexicon, sentence, oracle);
    } else if (*grp) {
      result = groups(order);
    } else {
      result = fatcat(order);
    }
    out << result.json.dump(2) << "\n";
    err << result.summary << "\n";
    return result.ok ? 0 : 1;
  } catch (const discocat::GrammarError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const discocat::BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace semicat::cli
