#ifndef MDECOMP_LOCALIZATION_HPP_
#define MDECOMP_LOCALIZATION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdecomp/connectivity.hpp"
#include "mdecomp/element_set.hpp"
#include "mdecomp/matroid.hpp"

namespace mdecomp {

/// An element of a localization: either a surviving element of the base
/// matroid or the virtual element standing for one family member.
struct LocalElement {
  enum class Kind { kReal, kVirtual };
  Kind kind = Kind::kReal;
  /// Base-matroid index for real elements, family index for virtual ones.
  std::size_t index = 0;

  bool operator==(const LocalElement&) const = default;
};

/**
 * The matroid obtained from a connected matroid M by collapsing each member
 * X_i of a disjoint family of 2-separation sides into one virtual element.
 *
 * Ground order of the local matroid: the real elements (those outside every
 * X_i) in base order, then the virtual elements in family order. Its circuits
 * are the images under forward() of the circuits of M that lie inside no
 * single X_i.
 */
class Localization {
 public:
  const Matroid& base() const { return base_; }
  const Matroid& local() const { return local_; }
  std::span<const ElementSet> family() const { return family_; }
  /// Elements of the base outside every family member.
  ElementSet real_elements() const { return real_; }
  ElementSet virtual_elements() const;
  Element virtual_element(std::size_t i) const { return real_.size() + i; }
  LocalElement element(Element local_index) const;

  /// phi_U: Y -> {v_i : Y meets X_i} u (Y & R).
  ElementSet forward(ElementSet y) const;
  /// phi_U^-1: replaces each virtual v_i by X_i.
  ElementSet inverse(ElementSet z) const;
  /// Base-matroid subset of real elements mapped into local indices.
  ElementSet real_to_local(ElementSet y) const;

 private:
  friend Localization localize(const Matroid&, std::vector<ElementSet>, std::vector<std::string>);

  Matroid base_;
  Matroid local_;
  std::vector<ElementSet> family_;
  ElementSet real_;
  std::vector<Element> real_local_index_;  // base index -> local index (reals only)
  std::vector<Element> real_base_index_;   // local index -> base index (reals only)
};

/**
 * Localizes a connected matroid at `family`. Virtual element i is labelled
 * virtual_labels[i], or "@e<i>" when no labels are given.
 *
 * Throws kDisconnected, kFamilyNotDisjoint, kNotA2Separation (naming the
 * offending member), and kLemmaFailure if the mapped circuits violate
 * (C1)/(C2).
 */
Localization localize(const Matroid& m, std::vector<ElementSet> family,
                      std::vector<std::string> virtual_labels = {});

ElementSet phi_u(const Localization& l, ElementSet y);
ElementSet phi_u_inverse(const Localization& l, ElementSet z);

/// (I & R) u {v_i : I & X_i is a basis of M|X_i} for an independent I of M.
ElementSet local_independents_correspond(const Localization& l, ElementSet independent);

/// Bases of the local matroid, checked against the image of the bases of M.
std::vector<ElementSet> local_bases(const Localization& l);

/**
 * For S_U with both sides of size >= 2: the 2-separation of M induced by
 * phi_U^-1 if (S_U, E(U) - S_U) is a 2-separation of the localization, else
 * nullopt. The two conditions are checked to agree.
 */
std::optional<Separation> project_2sep(const Localization& l, ElementSet s_u);

/**
 * Given a 2-separation (S, ~S) of M and S_U with S_U inside phi_U(S) and its
 * complement inside phi_U(~S), both of size >= 2, returns (S_U, E(U) - S_U)
 * after checking that it is a 2-separation of the localization.
 */
Separation lift_2sep_subset(const Localization& l, const Separation& s, ElementSet s_u);

/**
 * Whether the 2-separation (S_U, E(U) - S_U) of the localization is good,
 * checked to agree with goodness of its preimage in M.
 */
bool goodness_corresponds(const Localization& l, ElementSet s_u);
bool goodness_corresponds(const Localization& l, ElementSet s_u,
                          std::span<const Separation> local_2seps,
                          std::span<const Separation> base_2seps);

/// 2-sum along the element labelled `shared`, the only label in common.
Matroid two_sum(const Matroid& m1, const Matroid& m2, const std::string& shared);

struct SplitResult {
  Matroid first;   // on side_a plus the shared element
  Matroid second;  // on side_b plus the shared element
  std::string shared;
};

/// Splits M along a 2-separation into two matroids whose 2-sum is M.
SplitResult split_along(const Matroid& m, const Separation& s);

}  // namespace mdecomp

#endif  // MDECOMP_LOCALIZATION_HPP_
