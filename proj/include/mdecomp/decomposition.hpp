#ifndef MDECOMP_DECOMPOSITION_HPP_
#define MDECOMP_DECOMPOSITION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdecomp/connectivity.hpp"
#include "mdecomp/element_set.hpp"
#include "mdecomp/matroid.hpp"

namespace mdecomp {

enum class TorsoKind { kThreeConnected, kCircuit, kCocircuit };

/// "3-connected", "circuit" or "cocircuit".
std::string_view to_string(TorsoKind kind);

/// A separation with a chosen orientation (A, A~). Ordered by A-inclusion.
struct OrientedSep {
  ElementSet a;
  ElementSet b;

  ElementSet universe() const { return a | b; }
  OrientedSep inverted() const { return {b, a}; }
  bool operator<=(const OrientedSep& other) const { return a.subset_of(other.a); }
  bool operator==(const OrientedSep&) const = default;
};

/// Both orientations of every separation, in input order.
std::vector<OrientedSep> orient(std::span<const Separation> seps);

/**
 * Classes of (A,A~) ~ (B,B~) iff equal, or A~ strictly inside B with no
 * member (C,C~) of `goods` strictly between them. Members of a class are
 * sorted by canonical order of A, classes by their least member.
 *
 * Throws kNotSymmetric, kNotNested, and kLemmaFailure if the relation turns
 * out not to be transitive.
 */
std::vector<std::vector<OrientedSep>> equivalence_classes(std::span<const OrientedSep> goods);

/**
 * A tree T with a part R_v of the ground set at every node. Edge
 * i = (a, b) is stored together with nothing else; the side S(e, a) is
 * recomputed from the tree.
 */
struct TreeDecomposition {
  std::size_t node_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<ElementSet> parts;
};

/// For each edge (a, b): the union of the parts on a's side of T - e.
/// Requires a tree.
std::vector<ElementSet> edge_sides(const TreeDecomposition& td);

/// Edge indices incident to v, ascending.
std::vector<std::size_t> incident_edges(const TreeDecomposition& td, std::size_t v);

/// Label of the virtual element standing for tree edge i.
std::string virtual_label(std::size_t edge);

/**
 * The canonical decomposition along the good 2-separations.
 *
 * Nodes are the classes of the oriented good set, ordered by their least
 * member; with no good 2-separation there is one synthetic node whose part
 * is the whole ground set. Edge i corresponds to the i-th good key K in key
 * order and runs from the class of (K, K~) to the class of (K~, K), so
 * edge_separations[i] = (K, K~) and S(e, a) = K.
 *
 * Torsos have the node's part in ground order followed by one virtual
 * element per incident edge, in edge order, labelled virtual_label(edge).
 */
struct DecompositionTree {
  TreeDecomposition shape;
  std::vector<std::vector<OrientedSep>> node_members;  // empty for the synthetic node
  std::vector<Separation> edge_separations;
  std::vector<Matroid> torsos;
  std::vector<TorsoKind> kinds;

  std::size_t node_count() const { return shape.node_count; }
  std::size_t degree(std::size_t v) const;
  /// Number of oriented separations in the node's class; absent for the
  /// synthetic node.
  std::optional<std::size_t> cardinality(std::size_t v) const;
};

/**
 * Builds and verifies the canonical tree: tree shape, partition, edge sides,
 * adhesion 2, torsos equal to localizations, primitive torsos, and
 * irredundancy. A violated invariant throws kLemmaFailure naming it.
 *
 * Throws kDisconnected, kTooSmall (|E| < 3), kGroundSetTooLarge.
 */
DecompositionTree build_tree(const Matroid& m);

/**
 * Torso at node v of an arbitrary tree-decomposition of M: circuits
 * (C & R_v) u {e incident : C meets S(e, w)} for every circuit C of M lying
 * inside no S(e, w), w being the far endpoint of e.
 */
Matroid torso_of(const Matroid& m, const TreeDecomposition& td, std::size_t v);

/// Same, checked to equal the localization of M at the node's star.
Matroid torso(const Matroid& m, const DecompositionTree& tree, std::size_t v);

/// The whole ground set is the only circuit.
bool is_circuit_matroid(const Matroid& t);
/// The whole ground set is the only cocircuit.
bool is_cocircuit_matroid(const Matroid& t);

/**
 * Circuit, then cocircuit, then 3-connected. Requires T connected with at
 * least three elements. Mutual exclusivity is asserted (for 3-connectedness
 * only when |E| >= 4, since 3-element circuits are vacuously 3-connected).
 * Throws kUnclassifiable if none applies.
 */
TorsoKind classify_torso(const Matroid& t);

/// Connected with no good 2-separation. Throws kDisconnected.
bool is_primitive(const Matroid& m);

struct PrimitiveReport {
  bool primitive = false;
  bool three_connected = false;
  std::optional<TorsoKind> kind;  // set when primitive
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::size_t small_sides_checked = 0;
};

/**
 * Structure of primitive matroids. For connected M with |E| >= 3:
 *  - every 2-separation with a 2-element side S has S a coindependent
 *    circuit or an independent cocircuit;
 *  - if every pair is a 2-separation side, M is a circuit or a cocircuit.
 * If M is primitive and not 3-connected, additionally:
 *  - every pair {x,y} is a 2-separation side;
 *  - every pair is split by some 2-separation;
 *  - every triple x,y,z has a 2-separation with {x,y} on one side, z on the
 *    other;
 *  - M is a circuit or a cocircuit.
 * Throws kDisconnected, kTooSmall, kLemmaFailure.
 */
PrimitiveReport verify_primitive_structure(const Matroid& m);

struct TreeReport {
  /// Every edge induces a separation (both sides large enough for its order).
  bool valid = true;
  std::vector<std::size_t> edge_orders;
  std::size_t adhesion = 0;  // max edge order, 0 without edges
  bool uniform = true;       // all edge orders equal
  /// Torso sizes >= 3 and no edge between two circuits or two cocircuits.
  /// Set when there are no edges or the adhesion is uniformly 2.
  std::optional<bool> irredundant;
  std::vector<std::string> problems;
};

/// Throws kNotATree, kNotAPartition.
TreeReport verify_tree_decomposition(const Matroid& m, const TreeDecomposition& td);

/// A node bijection preserving adjacency and mapping parts onto equal parts.
std::optional<std::vector<std::size_t>> decompositions_isomorphic(const TreeDecomposition& a,
                                                                  const TreeDecomposition& b);

/// 2-sums the torsos along the tree edges; the result is compared to M by
/// the caller.
Matroid reassemble(const DecompositionTree& tree);

/**
 * Every irredundant tree-decomposition of adhesion 2 whose torsos are
 * primitive, one per nested set of 2-separations. Requires |E| <= 7 (kept
 * small since the number of nested sets grows very fast).
 */
std::vector<TreeDecomposition> enumerate_primitive_decompositions(const Matroid& m);

/// Length of the longest strict inclusion chain of A-sides.
std::size_t longest_chain(std::span<const OrientedSep> seps);

}  // namespace mdecomp

#endif  // MDECOMP_DECOMPOSITION_HPP_
