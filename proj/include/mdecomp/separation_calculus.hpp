#ifndef MDECOMP_SEPARATION_CALCULUS_HPP_
#define MDECOMP_SEPARATION_CALCULUS_HPP_

#include <span>
#include <vector>

#include "mdecomp/connectivity.hpp"
#include "mdecomp/element_set.hpp"
#include "mdecomp/matroid.hpp"

namespace mdecomp {

/// The four pairwise intersections of the sides of two separations.
struct Quadrants {
  ElementSet q11;  // S1 & S2
  ElementSet q12;  // S1 & ~S2
  ElementSet q21;  // ~S1 & S2
  ElementSet q22;  // ~S1 & ~S2

  bool all_nonempty() const {
    return !q11.empty() && !q12.empty() && !q21.empty() && !q22.empty();
  }
};

Quadrants quadrants(const Separation& s1, const Separation& s2);

/// Some quadrant is empty. Throws kGroundSetMismatch for different grounds.
bool are_nested(const Separation& s1, const Separation& s2);

/**
 * (S1 & S2, complement) for crossing 2-separations whose corner and its
 * complement both have at least two elements. The result is checked to have
 * order 2; a failure there is reported as kLemmaFailure.
 */
Separation corner(const Matroid& m, const Separation& s1, const Separation& s2);

/// (S1 ^ S2, complement) for crossing 2-separations, checked to have order 2.
Separation symmetric_difference_sep(const Matroid& m, const Separation& s1,
                                    const Separation& s2);

/// Nested with every separation in `all_2seps`.
bool is_good(const Matroid& m, const Separation& s, std::span<const Separation> all_2seps);

/// Good 2-separations of a connected matroid, one per key, in key order.
std::vector<Separation> good_2separations(const Matroid& m);
/// Same, from an already enumerated list of 2-separations.
std::vector<Separation> good_2separations(std::span<const Separation> all_2seps);

/// C meets both sides of s.
bool crosses_circuit(ElementSet c, const Separation& s);

/// (C1 & S) | (C2 & ~S), checked to be a circuit.
ElementSet switch_circuits(const Matroid& m, ElementSet c1, ElementSet c2, const Separation& s);

/**
 * (C1 & U) | (C2 & ~U) with U the union of a family of disjoint 2-separation
 * sides, where both circuits cross every (S_i, ~S_i) and C2 meets ~U
 * whenever C1 does. The result is checked to be a circuit.
 */
ElementSet infinite_switch(const Matroid& m, ElementSet c1, ElementSet c2,
                           std::span<const ElementSet> family);

}  // namespace mdecomp

#endif  // MDECOMP_SEPARATION_CALCULUS_HPP_
