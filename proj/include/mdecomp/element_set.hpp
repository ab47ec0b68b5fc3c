#ifndef MDECOMP_ELEMENT_SET_HPP_
#define MDECOMP_ELEMENT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace mdecomp {

/// Dense index of a ground-set element (0..n-1).
using Element = std::size_t;

/// Largest ground set representable by an ElementSet.
inline constexpr std::size_t kMaxGroundSize = 64;

/**
 * A subset of a ground set {0, ..., n-1} with n <= 64, stored as a bitmask.
 *
 * Complements are always taken relative to an explicit universe; an
 * ElementSet does not know which ground set it belongs to.
 */
class ElementSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Element operator*() const {
      return static_cast<Element>(std::countr_zero(rest_));
    }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr ElementSet full(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet singleton(Element e) {
    return from_bits(std::uint64_t{1} << e);
  }
  static constexpr ElementSet of(std::initializer_list<Element> elems) {
    ElementSet s;
    for (Element e : elems) s.bits_ |= std::uint64_t{1} << e;
    return s;
  }
  template <typename Range>
  static ElementSet of_range(const Range& elems) {
    ElementSet s;
    for (auto e : elems) s.bits_ |= std::uint64_t{1} << static_cast<Element>(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  /// Least element; undefined on the empty set.
  constexpr Element first() const {
    return static_cast<Element>(std::countr_zero(bits_));
  }

  constexpr ElementSet with(Element e) const {
    return from_bits(bits_ | (std::uint64_t{1} << e));
  }
  constexpr ElementSet without(Element e) const {
    return from_bits(bits_ & ~(std::uint64_t{1} << e));
  }

  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(ElementSet o) const {
    return subset_of(o) && bits_ != o.bits_;
  }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr ElementSet complement_in(ElementSet universe) const {
    return from_bits(universe.bits_ & ~bits_);
  }

  constexpr ElementSet operator|(ElementSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr ElementSet operator^(ElementSet o) const { return from_bits(bits_ ^ o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const ElementSet&) const = default;

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<Element> elements() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/**
 * Canonical order on subsets: by size, then lexicographically on the sorted
 * element lists. Circuit families and separation lists are kept in this order
 * so equal objects have identical representations.
 */
constexpr bool canonical_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // Equal sizes: the set holding the least differing element is smaller.
  return a.contains((a ^ b).first());
}

struct CanonicalLess {
  constexpr bool operator()(ElementSet a, ElementSet b) const {
    return canonical_less(a, b);
  }
};

/// Calls fn(subset) for every subset of `universe`, including empty and full.
template <typename Fn>
void for_each_subset(ElementSet universe, Fn&& fn) {
  const std::uint64_t u = universe.bits();
  std::uint64_t s = 0;
  while (true) {
    fn(ElementSet::from_bits(s));
    if (s == u) break;
    s = (s - u) & u;
  }
}

/// Renumbers the members of `s` inside `domain` densely, in element order.
inline ElementSet compress(ElementSet s, ElementSet domain) {
  ElementSet out;
  std::size_t i = 0;
  for (Element e : domain) {
    if (s.contains(e)) out = out.with(i);
    ++i;
  }
  return out;
}

}  // namespace mdecomp

#endif  // MDECOMP_ELEMENT_SET_HPP_
