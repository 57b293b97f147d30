#pragma once

// Compact closed structures from finite abelian groups, and the brute-force
// searches separating them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semicat/report.hpp"

namespace semicat::counterexamples {

/// Multiplication table on {0, ..., order - 1}. Construction checks the unit
/// laws and associativity exhaustively and throws UsageError otherwise.
class FiniteMonoidTable {
 public:
  FiniteMonoidTable(std::size_t order, std::size_t unit, std::vector<std::vector<std::size_t>> table);

  /// Z_n under addition with unit 0.
  static FiniteMonoidTable cyclic(std::size_t n);
  /// Componentwise product of two tables.
  static FiniteMonoidTable product(const FiniteMonoidTable& a, const FiniteMonoidTable& b);
  /// Z2 x Z2.
  static FiniteMonoidTable klein();
  /// {1, 0} under multiplication: 0 absorbs, so it has no inverse.
  static FiniteMonoidTable absorbing_pair();

  std::size_t order() const { return order_; }
  std::size_t unit() const { return unit_; }
  std::size_t op(std::size_t a, std::size_t b) const { return table_[a][b]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  friend bool operator==(const FiniteMonoidTable&, const FiniteMonoidTable&) = default;

 private:
  std::size_t order_;
  std::size_t unit_;
  std::vector<std::vector<std::size_t>> table_;
};

/// {order, unit, table}.
nlohmann::ordered_json to_json(const FiniteMonoidTable& t);
FiniteMonoidTable table_from_json(const nlohmann::json& j);

/// Commutative and every element invertible.
bool is_abelian_group(const FiniteMonoidTable& t);

/// Inverse equations g g^{-1} = e with a unique inverse per element. Throws
/// UsageError for non-groups.
Report verify_discrete_compact(const FiniteMonoidTable& t);

inline constexpr std::size_t max_search_order = 8;

struct IsomorphismSearch {
  /// Images of 0..order-1; the first homomorphic unit-fixing bijection in
  /// lexicographic order.
  std::optional<std::vector<std::size_t>> bijection;
  /// Unit-fixing bijections examined.
  std::uint64_t tried = 0;
};

/// Brute force over unit-fixing bijections; orders must agree (else absent
/// with nothing tried). Throws UsageError above max_search_order.
IsomorphismSearch find_group_isomorphism(const FiniteMonoidTable& a, const FiniteMonoidTable& b);
std::uint64_t count_automorphisms(const FiniteMonoidTable& t);

/// Abelian group tables on {0..order-1} with unit 0, one per isomorphism
/// class; each representative is the lexicographically least table of its
/// class among those enumerated. Throws UsageError for order 0 or above 8.
std::vector<FiniteMonoidTable> abelian_group_census(std::size_t order);

/// Free monoid {a,b}*: u v = empty forces u = v = empty, for |u| + |v| <= bound.
Report check_no_nontrivial_inverses(std::size_t bound);
/// Same property for a finite commutative monoid: u v = e forces u = v = e.
Report check_no_nontrivial_inverses(const FiniteMonoidTable& m);

/// Homset monoid of a fattened category.
struct HomsetMonoid {
  enum class Kind { free_ab, table } kind = Kind::free_ab;
  std::optional<FiniteMonoidTable> table;

  static HomsetMonoid free() { return {}; }
  static HomsetMonoid finite(FiniteMonoidTable t) { return {Kind::table, std::move(t)}; }
  std::string describe() const;
  friend bool operator==(const HomsetMonoid&, const HomsetMonoid&) = default;
};

/// fatcat(G, M): the objects form the group G; with `connected` false every
/// object has endomorphisms M and no other arrows, with `connected` true
/// every Homset is M.
struct FatCategorySpec {
  FiniteMonoidTable group;
  HomsetMonoid homsets;
  bool connected = false;
};

/// Strict monoidal isomorphisms act on objects as group isomorphisms, so the
/// question reduces to find_group_isomorphism. The report carries the
/// verdict, the witness or the count of bijections exhausted, and for the
/// connected family the caveat that only strict isomorphisms were searched.
struct InequivalenceReport {
  bool equivalent = false;
  std::optional<std::vector<std::size_t>> witness;
  std::uint64_t bijections_tried = 0;
  std::string verdict;
  std::string scope;
  nlohmann::ordered_json to_json() const;
};

InequivalenceReport inequivalence_report(const FatCategorySpec& a, const FatCategorySpec& b);

}  // namespace semicat::counterexamples
