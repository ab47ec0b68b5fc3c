#ifndef MDECOMP_VERIFICATION_HPP_
#define MDECOMP_VERIFICATION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mdecomp/element_set.hpp"
#include "mdecomp/matroid.hpp"
#include "mdecomp/report.hpp"

namespace mdecomp {

/// Pairwise (X, Y) checks and per-localization exhaustive checks run up to
/// this ground size.
inline constexpr std::size_t kExhaustivePairLimit = 8;
/// The alternative-decomposition search runs up to this ground size.
inline constexpr std::size_t kUniquenessLimit = 7;
/// Random basis pairs per subset when testing that del ignores the choice.
inline constexpr std::size_t kDelTrials = 50;

/**
 * Families at which the suites localize a connected matroid: the empty
 * family, each side of each 2-separation, each pair of disjoint sides, and
 * the star of each node of the canonical tree. Sorted and deduplicated.
 */
std::vector<std::vector<ElementSet>> localization_families(const Matroid& m);

/// phi against del of greedy bases, symmetry, submodularity, and del
/// independence from the basis choice.
Report check_connectivity(const Matroid& m, std::uint64_t seed = 0);

/**
 * On a connected matroid: nestedness characterizations, corner and
 * symmetric-difference constructions, the small-union claim, proper trace
 * containment, switching (single and for disjoint pairs of sides), basis
 * traces, restriction of 2-separations, and nestedness of the good set.
 */
Report check_separation_calculus(const Matroid& m);

/**
 * On a connected matroid and a valid family: the local circuits form a
 * matroid, independent sets and bases correspond, 2-separations and goodness
 * correspond, lifting, and localization commutes with restriction.
 */
Report check_localization(const Matroid& m, std::span<const ElementSet> family);

/**
 * On a connected matroid with at least three elements: the canonical tree,
 * its torsos, reassembly, splitting round trips, primitive structure, chain
 * bound, and (up to kUniquenessLimit elements) uniqueness.
 */
Report check_decomposition(const Matroid& m);

/// Everything above that applies to `m`. Lemma failures are recorded, not
/// thrown.
Report run_lemma_suite(const Matroid& m, std::uint64_t seed = 0);

/// The four duality verifiers, as far as they apply to `m`.
Report run_duality_suite(const Matroid& m, std::uint64_t seed = 0);

}  // namespace mdecomp

#endif  // MDECOMP_VERIFICATION_HPP_
