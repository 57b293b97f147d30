#pragma once

// Sentence meaning in Mat(S): word states contracted along a pregroup
// reduction diagram.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/matrix.hpp"
#include "semicat/pregroup.hpp"

namespace semicat::discocat {

/// Object part of the semantic functor: dimensions of the basic types and the
/// sentence type. Adjoints share their base's dimension.
struct SemanticAssignment {
  Semiring spec;
  std::map<std::string, std::size_t> dims;
  pregroup::PregroupType target;
};

struct LexiconEntry {
  pregroup::PregroupType type;
  /// State 1 -> object_of(type); absent in parse-only grammars.
  std::optional<Matrix> state;
};

struct Lexicon {
  Semiring spec;
  std::map<std::string, LexiconEntry> entries;

  /// Throws LexiconError for unknown words.
  const LexiconEntry& lookup(const std::string& word) const;
};

struct SentenceMeaning {
  Matrix vector;
  pregroup::ReductionDiagram diagram;
  std::uint64_t ambiguity_count = 0;
};

class LexiconError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// The word types do not reduce to the target.
class GrammarError : public std::runtime_error {
 public:
  GrammarError(const std::string& what, std::vector<pregroup::PregroupType> types, pregroup::PregroupType target)
      : std::runtime_error(what), types_(std::move(types)), target_(std::move(target)) {}
  const std::vector<pregroup::PregroupType>& types() const { return types_; }
  const pregroup::PregroupType& target() const { return target_; }

 private:
  std::vector<pregroup::PregroupType> types_;
  pregroup::PregroupType target_;
};

/// The dense oracle would exceed its entry budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t dimension)
      : std::runtime_error(what), dimension_(dimension) {}
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
};

/// Product of the base dimensions; 1 for the unit. Throws ConfigError naming
/// an unassigned base.
std::size_t object_of(const SemanticAssignment& assignment, const pregroup::PregroupType& t);

/// Splits on whitespace.
std::vector<std::string> split_sentence(const std::string& text);

/// Contracts the word states pairwise along the parser's diagram, innermost
/// links first, without forming the full tensor product of the states.
SentenceMeaning meaning(const std::vector<std::string>& sentence, const Lexicon& lexicon,
                        const SemanticAssignment& assignment);

/// Default entry budget of the dense oracle (the square of the Kronecker
/// state's dimension).
inline constexpr std::size_t oracle_budget = 1'000'000;

/// Independent oracle: forms the full Kronecker state and applies explicit
/// swap and cap layers, outermost links first. Refuses with BudgetExceeded
/// when D * D > budget for the Kronecker dimension D.
SentenceMeaning brute_force_meaning(const std::vector<std::string>& sentence, const Lexicon& lexicon,
                                    const SemanticAssignment& assignment, std::size_t budget = oracle_budget);

/// One JSON file holds the grammar and the lexicon:
///   {"spec": "nat", "dims": {"n": 2, "s": 2}, "target": "s",
///    "words": {"clowns": {"type": "n", "state": ["0", "1"]}, ...}}
/// Schema violations throw ConfigError naming the field and its line.
SemanticAssignment load_assignment(const std::string& path);
/// Requires a state for every word, of length object_of(type).
Lexicon load_lexicon(const std::string& path);
/// Word types only; states, if present, are validated but may be missing.
Lexicon load_grammar(const std::string& path);

SemanticAssignment parse_assignment(const std::string& text, const std::string& source = "<input>");
Lexicon parse_lexicon(const std::string& text, bool require_states, const std::string& source = "<input>");

}  // namespace semicat::discocat
