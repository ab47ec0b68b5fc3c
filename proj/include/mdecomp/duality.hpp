#ifndef MDECOMP_DUALITY_HPP_
#define MDECOMP_DUALITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "mdecomp/element_set.hpp"
#include "mdecomp/matroid.hpp"
#include "mdecomp/report.hpp"

namespace mdecomp {

/// Bases examined exhaustively up to this count; beyond it verify_dif_bases
/// samples kSampledBases seeded random bases.
inline constexpr std::size_t kExhaustiveBasisLimit = 500;
inline constexpr std::size_t kSampledBases = 100;

/**
 * For every X: separation_of(M, X) and separation_of(M*, X) agree in
 * presence and order. Requires |E| <= cap.
 */
Report verify_sep_dual(const Matroid& m);

/**
 * For bases B of M: extend B & S to a basis B_S of M|S and (E - B) & ~S to a
 * basis of M*|~S, and compare the numbers of added elements. Uses every basis
 * when there are at most kExhaustiveBasisLimit, else `trials` random ones
 * (kSampledBases by default) drawn from `seed`.
 */
Report verify_dif_bases(const Matroid& m, ElementSet s,
                        std::optional<std::size_t> trials = std::nullopt,
                        std::uint64_t seed = 0);

/**
 * Localizing M* at `family` gives the dual of localizing M at `family`,
 * with virtual elements named alike. Throws kLemmaFailure on a mismatch.
 */
Report verify_local_dual(const Matroid& m, std::span<const ElementSet> family);

/**
 * build_tree(M) and build_tree(M*) are isomorphic with equal parts, matched
 * torsos are dual to each other, and kinds swap circuit and cocircuit.
 * Throws kLemmaFailure on a mismatch.
 */
Report verify_dual_decomposition(const Matroid& m);

}  // namespace mdecomp

#endif  // MDECOMP_DUALITY_HPP_
