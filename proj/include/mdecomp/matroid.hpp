#ifndef MDECOMP_MATROID_HPP_
#define MDECOMP_MATROID_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdecomp/element_set.hpp"

namespace mdecomp {

/// How much of the circuit axioms from_circuits checks.
enum class Validation {
  kNone,
  kAntichain,  // (C1) and (C2)
  kFull,       // additionally pairwise circuit elimination
};

/// Operations that enumerate all subsets of a ground set refuse to run above
/// this size. Process-wide; defaults to 14.
std::size_t enumeration_cap();
void set_enumeration_cap(std::size_t cap);
inline constexpr std::size_t kDefaultEnumerationCap = 14;

/**
 * A finite matroid given by its ground set and its family of circuits.
 *
 * Elements carry string labels externally and dense indices 0..n-1
 * internally; the index order is the ground order used for every
 * deterministic choice (greedy bases, canonical keys, output order).
 * Circuits are stored sorted by canonical_less, so two matroids on the same
 * labelled ground set are equal iff their circuit vectors are equal.
 *
 * Values are immutable and cheap to copy. Rank queries are answered from a
 * table over all subsets that is computed on first use (thread-safe) when the
 * ground set is small enough, and by greedy extension otherwise.
 */
class Matroid {
 public:
  /// Empty matroid on the empty ground set.
  Matroid();

  static Matroid from_circuits(std::vector<std::string> labels,
                               std::vector<ElementSet> circuits,
                               Validation validation = Validation::kAntichain);
  /// Same, with circuits given by element labels.
  static Matroid from_circuit_labels(std::vector<std::string> labels,
                                     const std::vector<std::vector<std::string>>& circuits,
                                     Validation validation = Validation::kAntichain);

  std::size_t size() const;
  ElementSet ground() const { return ElementSet::full(size()); }
  const std::vector<std::string>& labels() const;
  const std::string& label(Element e) const { return labels()[e]; }
  std::span<const ElementSet> circuits() const;

  std::optional<Element> find(std::string_view label) const;
  /// Index of `label`; throws kUnknownElement.
  Element index_of(std::string_view label) const;
  /// Subset from labels; throws kUnknownElement.
  ElementSet subset(std::initializer_list<std::string_view> labels) const;
  ElementSet subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(ElementSet s) const;

  /// True iff no circuit is contained in `s`.
  bool is_independent(ElementSet s) const;
  bool is_circuit(ElementSet s) const;
  std::size_t rank(ElementSet s) const;
  std::size_t rank() const { return rank(ground()); }

  /**
   * Greedily extends the independent set `base` inside `within`, scanning
   * elements in ground order. Throws kDependentInput if `base` is dependent
   * and kPreconditionViolated if it is not inside `within`.
   */
  ElementSet extend_to_maximal_independent(ElementSet base, ElementSet within) const;
  /// Same, scanning `within` in the given order (elements outside are ignored).
  ElementSet extend_to_maximal_independent(ElementSet base, ElementSet within,
                                           std::span<const Element> order) const;

  /// The unique circuit inside basis+e that contains e.
  ElementSet fundamental_circuit(Element e, ElementSet independent) const;

  bool operator==(const Matroid& other) const;

 private:
  struct Data;
  explicit Matroid(std::shared_ptr<Data> data);
  const std::vector<unsigned char>* rank_table() const;

  std::shared_ptr<Data> data_;
};

Matroid uniform(std::size_t rank, std::size_t n);

/// Graphic matroid of a multigraph. Edge i gets the label std::to_string(i)
/// unless `edge_labels` is given.
Matroid graphic(const std::vector<std::string>& vertices,
                const std::vector<std::pair<std::string, std::string>>& edges,
                std::vector<std::string> edge_labels = {});

/// Column matroid over GF(2); column i is labelled std::to_string(i).
Matroid linear_gf2(const std::vector<std::vector<int>>& columns,
                   std::vector<std::string> labels = {});

/// All bases, in canonical order. Requires size() <= enumeration_cap().
std::vector<ElementSet> bases(const Matroid& m);

Matroid dual(const Matroid& m);
Matroid restriction(const Matroid& m, ElementSet s);
/// M/S, computed as dual(restriction(dual(M), E - S)).
Matroid contraction(const Matroid& m, ElementSet s);
bool is_connected(const Matroid& m);

/// Same ground label set and same circuits as label sets, irrespective of the
/// ground order.
bool same_matroid(const Matroid& a, const Matroid& b);

/// Copy of `m` with relabelled elements (same indices, same order).
Matroid relabel(const Matroid& m, std::vector<std::string> labels);

/// Throws kGroundSetTooLarge if m is above the enumeration cap.
void require_enumerable(const Matroid& m, std::string_view operation);

/// "{a,b,c}" using the matroid's labels.
std::string format_set(const Matroid& m, ElementSet s);

}  // namespace mdecomp

#endif  // MDECOMP_MATROID_HPP_
