#ifndef MDECOMP_CONNECTIVITY_HPP_
#define MDECOMP_CONNECTIVITY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mdecomp/element_set.hpp"
#include "mdecomp/matroid.hpp"

namespace mdecomp {

/**
 * An ordered bipartition (side_a, side_b) of a ground set of order k, i.e.
 * phi(side_a) = k - 1 and both sides have at least k elements.
 */
struct Separation {
  ElementSet side_a;
  ElementSet side_b;
  std::size_t order = 0;

  ElementSet universe() const { return side_a | side_b; }
  Separation inverted() const { return {side_b, side_a, order}; }
  /// The side containing the least element; identifies the separation up to
  /// inversion.
  ElementSet key() const;

  bool operator==(const Separation&) const = default;
};

/// Minimum |F| with (I u J) - F independent, for independent I and J.
std::size_t del(const Matroid& m, ElementSet i, ElementSet j);

/// Connectivity function, via r(X) + r(E - X) - r(E).
std::size_t phi(const Matroid& m, ElementSet x);

/// Connectivity function via del of greedy bases of M|X and M|(E-X), or of
/// bases built by scanning elements in `order` when one is given.
std::size_t phi_from_bases(const Matroid& m, ElementSet x);
std::size_t phi_from_bases(const Matroid& m, ElementSet x, std::span<const Element> order);

/// The separation (X, E - X) of order phi(X)+1, or nullopt if a side is too
/// small for that order.
std::optional<Separation> separation_of(const Matroid& m, ElementSet x);

/// All separations of exactly the given order, one per key, sorted by key.
std::vector<Separation> enumerate_separations(const Matroid& m, std::size_t order);
std::vector<Separation> enumerate_2separations(const Matroid& m);

/// No l-separation for any l < n.
bool is_n_connected(const Matroid& m, std::size_t n);

}  // namespace mdecomp

#endif  // MDECOMP_CONNECTIVITY_HPP_
