#pragma once

#include <cstddef>
#include <cstdint>

#include "semicat/report.hpp"
#include "semicat/semiring.hpp"

namespace semicat {

/// Commutative-involutive-semiring axioms on `samples` random triples, plus
/// the literal round trip.
Report check_semiring_axioms(const Semiring& s, std::size_t samples, std::uint64_t seed);

/// Compact closed / dagger / biproduct laws of Mat(S): snake equations for
/// n <= max_dim, and `samples` random instances each of interchange,
/// bilinearity, dagger functoriality, cap-inner-product agreement, swap
/// naturality and biproduct compatibility.
Report check_category_laws(const Semiring& s, std::size_t max_dim, std::size_t samples,
                           std::uint64_t seed);

}  // namespace semicat
