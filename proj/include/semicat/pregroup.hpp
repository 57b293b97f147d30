#pragma once

// Free pregroup types and the non-crossing contraction parser.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semicat::pregroup {

/// A basic type with an integer adjoint order: z < 0 counts left adjoints,
/// z > 0 right adjoints (n^l has z = -1, n^rr has z = 2).
struct SimpleType {
  std::string base;
  int z = 0;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Juxtaposition of simple types; the empty list is the unit 1.
struct PregroupType {
  std::vector<SimpleType> simples;

  bool is_unit() const { return simples.empty(); }
  friend bool operator==(const PregroupType&, const PregroupType&) = default;
};

/// Parses `simple ("." simple)*` with simple ::= ident ("^" [lr]+)? or "1".
/// Suffix letters apply left to right (l: z - 1, r: z + 1). Throws ParseError.
PregroupType parse_type(std::string_view text);

/// Canonical text: z rendered as a run of l or r, the unit as "1".
std::string format_simple(const SimpleType& t);
std::string format_type(const PregroupType& t);

PregroupType left_adjoint(const PregroupType& t);
PregroupType right_adjoint(const PregroupType& t);

/// Concatenation of the words' types into one sequence.
std::vector<SimpleType> flatten(const std::vector<PregroupType>& types);

/// a b <= 1: same base and z_b = z_a + 1 (covers p^l p and p p^r).
bool contracts(const SimpleType& a, const SimpleType& b);

/// A non-crossing matching of positions (0-based) plus the unmatched ones.
struct ReductionDiagram {
  std::size_t positions = 0;
  /// Pairs (i, j), i < j, sorted by i.
  std::vector<std::pair<std::size_t, std::size_t>> links;
  /// Unmatched positions in increasing order; they spell the target.
  std::vector<std::size_t> residue;

  friend bool operator==(const ReductionDiagram&, const ReductionDiagram&) = default;
};

/// Lexicographically least diagram (by sorted link list) whose residue reads
/// `target`, or nothing when the sequence does not reduce to it.
std::optional<ReductionDiagram> reduce(const std::vector<SimpleType>& sequence,
                                       const std::vector<SimpleType>& target);
std::optional<ReductionDiagram> reduce(const std::vector<PregroupType>& types, const PregroupType& target);

/// Number of distinct diagrams, saturating at UINT64_MAX.
std::uint64_t count_reductions(const std::vector<SimpleType>& sequence, const std::vector<SimpleType>& target);
std::uint64_t count_reductions(const std::vector<PregroupType>& types, const PregroupType& target);

bool is_grammatical(const std::vector<PregroupType>& types, const PregroupType& target);

/// Describes the first structural defect of `d` for the sequence and target
/// (crossing links, a non-contracting link, a bad residue), or nothing.
std::optional<std::string> diagram_defect(const ReductionDiagram& d, const std::vector<SimpleType>& sequence,
                                          const std::vector<SimpleType>& target);

/// Two lines: the words' types (simples joined by '.', words by three
/// spaces), then links as [---] spans and residues as |. The second line is
/// omitted when there are no links.
std::string render_diagram(const ReductionDiagram& d, const std::vector<PregroupType>& types);

}  // namespace semicat::pregroup
