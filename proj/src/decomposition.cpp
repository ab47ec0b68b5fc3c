#include "mdecomp/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "mdecomp/error.hpp"
#include "mdecomp/localization.hpp"
#include "mdecomp/separation_calculus.hpp"

namespace mdecomp {

namespace {

constexpr std::size_t kUniquenessSearchLimit = 7;

bool nested(const OrientedSep& s, const OrientedSep& t) {
  return are_nested(Separation{s.a, s.b, 0}, Separation{t.a, t.b, 0});
}

std::vector<std::vector<std::size_t>> adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<std::size_t>> adj(td.node_count);
  for (const auto& [a, b] : td.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

void require_tree(const TreeDecomposition& td) {
  if (td.node_count == 0) fail(ErrorCode::kNotATree, "no nodes");
  if (td.edges.size() + 1 != td.node_count) {
    fail(ErrorCode::kNotATree, std::to_string(td.node_count) + " nodes but " +
                                   std::to_string(td.edges.size()) + " edges");
  }
  for (const auto& [a, b] : td.edges) {
    if (a >= td.node_count || b >= td.node_count || a == b) {
      fail(ErrorCode::kNotATree, "edge endpoint out of range or loop");
    }
  }
  const auto adj = adjacency(td);
  std::vector<bool> seen(td.node_count, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != td.node_count) fail(ErrorCode::kNotATree, "the graph is disconnected");
}

void require_partition(const Matroid& m, const TreeDecomposition& td) {
  if (td.parts.size() != td.node_count) {
    fail(ErrorCode::kNotAPartition, "need one part per node");
  }
  ElementSet covered;
  for (std::size_t v = 0; v < td.node_count; ++v) {
    if (td.parts[v].intersects(covered)) {
      fail(ErrorCode::kNotAPartition, "part of node " + std::to_string(v) + " overlaps another");
    }
    covered |= td.parts[v];
  }
  if (covered != m.ground()) fail(ErrorCode::kNotAPartition, "parts do not cover the ground set");
}

/// S(e, w) for every edge incident to v, w being the far endpoint.
std::vector<std::pair<std::size_t, ElementSet>> far_sides(const TreeDecomposition& td,
                                                          std::span<const ElementSet> sides,
                                                          std::size_t v, ElementSet ground) {
  std::vector<std::pair<std::size_t, ElementSet>> out;
  for (std::size_t i : incident_edges(td, v)) {
    const ElementSet far = td.edges[i].first == v ? sides[i].complement_in(ground) : sides[i];
    out.emplace_back(i, far);
  }
  return out;
}

Matroid torso_from_sides(const Matroid& m, const TreeDecomposition& td,
                         std::span<const ElementSet> sides, std::size_t v) {
  const ElementSet part = td.parts[v];
  const auto far = far_sides(td, sides, v, m.ground());
  std::vector<std::string> labels;
  std::vector<Element> local(m.size(), 0);
  for (Element e : part) {
    local[e] = labels.size();
    labels.push_back(m.label(e));
  }
  const std::size_t first_virtual = labels.size();
  for (const auto& [edge, side] : far) labels.push_back(virtual_label(edge));

  std::vector<ElementSet> circuits;
  for (ElementSet c : m.circuits()) {
    bool inside = false;
    ElementSet image;
    for (std::size_t j = 0; j < far.size(); ++j) {
      if (c.subset_of(far[j].second)) {
        inside = true;
        break;
      }
      if (c.intersects(far[j].second)) image = image.with(first_virtual + j);
    }
    if (inside) continue;
    for (Element e : c & part) image = image.with(local[e]);
    circuits.push_back(image);
  }
  try {
    return Matroid::from_circuits(std::move(labels), std::move(circuits), Validation::kAntichain);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kAxiomViolation) throw;
    lemma_failure("torso at node " + std::to_string(v) + " is not a matroid: " + e.what());
  }
}

/// Irredundancy of a decomposition whose torsos are given.
std::optional<std::string> redundancy(const TreeDecomposition& td, std::span<const Matroid> torsos) {
  for (std::size_t v = 0; v < td.node_count; ++v) {
    if (torsos[v].size() < 3) {
      return "torso at node " + std::to_string(v) + " has " + std::to_string(torsos[v].size()) +
             " elements";
    }
  }
  for (std::size_t i = 0; i < td.edges.size(); ++i) {
    const auto [a, b] = td.edges[i];
    if (is_circuit_matroid(torsos[a]) && is_circuit_matroid(torsos[b])) {
      return "edge " + std::to_string(i) + " joins two circuits";
    }
    if (is_cocircuit_matroid(torsos[a]) && is_cocircuit_matroid(torsos[b])) {
      return "edge " + std::to_string(i) + " joins two cocircuits";
    }
  }
  return std::nullopt;
}

/// Tree whose edge separations are exactly `keys`, built by splitting one
/// node per key. Keys must be distinct and pairwise nested.
TreeDecomposition split_tree(const Matroid& m, std::span<const ElementSet> keys) {
  const ElementSet ground = m.ground();
  TreeDecomposition td{1, {}, {ground}};
  std::vector<ElementSet> sides;  // S(e, first endpoint)
  for (ElementSet k : keys) {
    std::optional<std::size_t> host;
    for (std::size_t v = 0; v < td.node_count && !host; ++v) {
      bool in_k = false;
      bool out_k = false;
      bool straddles = false;
      const ElementSet part = td.parts[v];
      in_k |= part.intersects(k);
      out_k |= !part.subset_of(k);
      for (std::size_t i : incident_edges(td, v)) {
        const ElementSet far = td.edges[i].first == v ? sides[i].complement_in(ground) : sides[i];
        if (far.subset_of(k)) {
          in_k = true;
        } else if (!far.intersects(k)) {
          out_k = true;
        } else {
          straddles = true;
        }
      }
      if (!straddles && in_k && out_k) host = v;
    }
    if (!host) lemma_failure("no node to split for " + format_set(m, k));
    const std::size_t v = *host;
    const std::size_t w = td.node_count++;
    td.parts.push_back(td.parts[v] & k);
    td.parts[v] -= k;
    for (std::size_t i : incident_edges(td, v)) {
      auto& [a, b] = td.edges[i];
      const ElementSet far = a == v ? sides[i].complement_in(ground) : sides[i];
      if (!far.subset_of(k)) continue;
      (a == v ? a : b) = w;
    }
    td.edges.emplace_back(v, w);
    sides.push_back(k.complement_in(ground));
  }
  return td;
}

}  // namespace

std::string_view to_string(TorsoKind kind) {
  switch (kind) {
    case TorsoKind::kThreeConnected:
      return "3-connected";
    case TorsoKind::kCircuit:
      return "circuit";
    case TorsoKind::kCocircuit:
      return "cocircuit";
  }
  return "?";
}

std::vector<OrientedSep> orient(std::span<const Separation> seps) {
  std::vector<OrientedSep> out;
  out.reserve(2 * seps.size());
  for (const Separation& s : seps) {
    out.push_back({s.side_a, s.side_b});
    out.push_back({s.side_b, s.side_a});
  }
  return out;
}

std::vector<std::vector<OrientedSep>> equivalence_classes(std::span<const OrientedSep> goods) {
  std::vector<OrientedSep> f(goods.begin(), goods.end());
  std::sort(f.begin(), f.end(),
            [](const OrientedSep& x, const OrientedSep& y) { return canonical_less(x.a, y.a); });
  f.erase(std::unique(f.begin(), f.end()), f.end());
  const std::size_t n = f.size();

  for (const OrientedSep& s : f) {
    if (std::find(f.begin(), f.end(), s.inverted()) == f.end()) {
      fail(ErrorCode::kNotSymmetric, "the inverse of a member is missing");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!nested(f[i], f[j])) fail(ErrorCode::kNotNested, "two members cross");
    }
  }

  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    rel[i][i] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !f[i].b.proper_subset_of(f[j].a)) continue;
      const bool between = std::any_of(f.begin(), f.end(), [&](const OrientedSep& c) {
        return f[i].b.proper_subset_of(c.a) && c.a.proper_subset_of(f[j].a);
      });
      rel[i][j] = !between;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] != rel[j][i]) lemma_failure("the predecessor relation is not symmetric");
      if (!rel[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[j][k] && !rel[i][k]) lemma_failure("the predecessor relation is not transitive");
      }
    }
  }

  // f is in canonical order, so the first unassigned member starts the next
  // class and each class comes out sorted.
  std::vector<std::vector<OrientedSep>> classes;
  std::vector<bool> assigned(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    auto& cls = classes.emplace_back();
    for (std::size_t j = i; j < n; ++j) {
      if (rel[i][j]) {
        assigned[j] = true;
        cls.push_back(f[j]);
      }
    }
  }
  return classes;
}

std::vector<ElementSet> edge_sides(const TreeDecomposition& td) {
  const auto adj = adjacency(td);
  std::vector<ElementSet> out;
  out.reserve(td.edges.size());
  for (const auto& [a, b] : td.edges) {
    ElementSet side;
    std::vector<bool> seen(td.node_count, false);
    seen[a] = seen[b] = true;
    std::vector<std::size_t> stack{a};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      side |= td.parts[v];
      for (std::size_t w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back(side);
  }
  return out;
}

std::vector<std::size_t> incident_edges(const TreeDecomposition& td, std::size_t v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < td.edges.size(); ++i) {
    if (td.edges[i].first == v || td.edges[i].second == v) out.push_back(i);
  }
  return out;
}

std::string virtual_label(std::size_t edge) { return "@e" + std::to_string(edge); }

std::size_t DecompositionTree::degree(std::size_t v) const {
  return incident_edges(shape, v).size();
}

std::optional<std::size_t> DecompositionTree::cardinality(std::size_t v) const {
  if (node_members[v].empty()) return std::nullopt;
  return node_members[v].size();
}

DecompositionTree build_tree(const Matroid& m) {
  if (m.size() < 3) fail(ErrorCode::kTooSmall, "decomposition needs at least three elements");
  require_enumerable(m, "build_tree");
  if (!is_connected(m)) fail(ErrorCode::kDisconnected, "decomposition needs a connected matroid");

  const auto all = enumerate_2separations(m);
  const auto goods = good_2separations(std::span<const Separation>(all));

  DecompositionTree tree;
  if (goods.empty()) {
    tree.shape = {1, {}, {m.ground()}};
    tree.node_members.emplace_back();
  } else {
    const auto oriented = orient(goods);
    tree.node_members = equivalence_classes(oriented);
    std::unordered_map<std::uint64_t, std::size_t> node_of;  // A-side bits -> node
    for (std::size_t v = 0; v < tree.node_members.size(); ++v) {
      for (const OrientedSep& s : tree.node_members[v]) node_of.emplace(s.a.bits(), v);
    }
    tree.shape.node_count = tree.node_members.size();
    for (const Separation& g : goods) {
      const std::size_t a = node_of.at(g.side_a.bits());
      const std::size_t b = node_of.at(g.side_b.bits());
      if (a == b) lemma_failure("a separation and its inverse fall in one class");
      tree.shape.edges.emplace_back(a, b);
      tree.edge_separations.push_back(g);
    }
    for (const auto& members : tree.node_members) {
      ElementSet part = m.ground();
      for (const OrientedSep& s : members) part &= s.a;
      tree.shape.parts.push_back(part);
    }
  }

  try {
    require_tree(tree.shape);
    require_partition(m, tree.shape);
  } catch (const Error& e) {
    lemma_failure(std::string("canonical tree: ") + e.what());
  }
  const auto sides = edge_sides(tree.shape);
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (sides[i] != tree.edge_separations[i].side_a) {
      lemma_failure("edge " + std::to_string(i) + " does not induce its separation");
    }
    if (phi(m, sides[i]) != 1) lemma_failure("edge " + std::to_string(i) + " has order != 2");
  }
  for (std::size_t v = 0; v < tree.node_count(); ++v) {
    if (const auto card = tree.cardinality(v); card && *card != tree.degree(v)) {
      lemma_failure("node " + std::to_string(v) + " has degree != cardinality");
    }
  }

  for (std::size_t v = 0; v < tree.node_count(); ++v) tree.torsos.push_back(torso(m, tree, v));
  if (auto why = redundancy(tree.shape, tree.torsos)) lemma_failure("canonical tree: " + *why);
  for (std::size_t v = 0; v < tree.node_count(); ++v) {
    if (!is_primitive(tree.torsos[v])) {
      lemma_failure("torso at node " + std::to_string(v) + " has a good 2-separation");
    }
    tree.kinds.push_back(classify_torso(tree.torsos[v]));
  }
  return tree;
}

Matroid torso_of(const Matroid& m, const TreeDecomposition& td, std::size_t v) {
  if (v >= td.node_count) fail(ErrorCode::kInvalidParams, "no such node");
  const auto sides = edge_sides(td);
  return torso_from_sides(m, td, sides, v);
}

Matroid torso(const Matroid& m, const DecompositionTree& tree, std::size_t v) {
  Matroid t = torso_of(m, tree.shape, v);
  const auto sides = edge_sides(tree.shape);
  std::vector<ElementSet> family;
  std::vector<std::string> labels;
  for (const auto& [edge, side] : far_sides(tree.shape, sides, v, m.ground())) {
    family.push_back(side);
    labels.push_back(virtual_label(edge));
  }
  const Localization l = localize(m, std::move(family), std::move(labels));
  if (!(l.local() == t)) {
    lemma_failure("torso at node " + std::to_string(v) + " differs from the localization");
  }
  return t;
}

bool is_circuit_matroid(const Matroid& t) {
  return t.size() > 0 && t.circuits().size() == 1 && t.circuits()[0] == t.ground();
}

bool is_cocircuit_matroid(const Matroid& t) {
  // E is the only cocircuit iff it is a cocircuit: rank 1 and no loops.
  if (t.size() == 0 || t.rank() != 1) return false;
  for (Element e : t.ground()) {
    if (t.rank(ElementSet::singleton(e)) != 1) return false;
  }
  return true;
}

TorsoKind classify_torso(const Matroid& t) {
  if (t.size() < 3) fail(ErrorCode::kTooSmall, "classification needs at least three elements");
  if (!is_connected(t)) fail(ErrorCode::kDisconnected, "classification needs a connected matroid");
  const bool circuit = is_circuit_matroid(t);
  const bool cocircuit = is_cocircuit_matroid(t);
  const bool three = is_n_connected(t, 3);
  if (circuit && cocircuit) lemma_failure("torso is both a circuit and a cocircuit");
  if (t.size() >= 4 && three && (circuit || cocircuit)) {
    lemma_failure("torso is 3-connected and a circuit or cocircuit");
  }
  if (circuit) return TorsoKind::kCircuit;
  if (cocircuit) return TorsoKind::kCocircuit;
  if (three) return TorsoKind::kThreeConnected;
  fail(ErrorCode::kUnclassifiable,
       "torso is neither 3-connected nor a circuit nor a cocircuit: " +
           format_set(t, t.ground()));
}

bool is_primitive(const Matroid& m) { return good_2separations(m).empty(); }

PrimitiveReport verify_primitive_structure(const Matroid& m) {
  if (m.size() < 3) fail(ErrorCode::kTooSmall, "needs at least three elements");
  require_enumerable(m, "verify_primitive_structure");
  if (!is_connected(m)) fail(ErrorCode::kDisconnected, "needs a connected matroid");

  PrimitiveReport r;
  const auto all = enumerate_2separations(m);
  r.primitive = good_2separations(std::span<const Separation>(all)).empty();
  r.three_connected = all.empty();
  const ElementSet ground = m.ground();
  const std::size_t full_rank = m.rank();

  auto is_cocircuit = [&](ElementSet s) {
    if (m.rank(s.complement_in(ground)) == full_rank) return false;
    return std::all_of(s.begin(), s.end(), [&](Element e) {
      return m.rank(s.without(e).complement_in(ground)) == full_rank;
    });
  };
  for (const Separation& s : all) {
    for (ElementSet side : {s.side_a, s.side_b}) {
      if (side.size() != 2) continue;
      ++r.small_sides_checked;
      const bool coindependent = m.rank(side.complement_in(ground)) == full_rank;
      const bool ok = (m.is_circuit(side) && coindependent) ||
                      (m.is_independent(side) && is_cocircuit(side));
      if (!ok) {
        lemma_failure(format_set(m, side) +
                      " is neither a coindependent circuit nor an independent cocircuit");
      }
    }
  }

  auto pair_is_side = [&](Element x, Element y) {
    const ElementSet s = ElementSet::of({x, y});
    return ground.size() >= 4 && phi(m, s) == 1;
  };
  bool every_pair = ground.size() >= 4;
  for (Element x : ground) {
    for (Element y : ground) {
      if (x < y && !pair_is_side(x, y)) every_pair = false;
    }
  }
  const bool circ_or_cocirc = is_circuit_matroid(m) || is_cocircuit_matroid(m);
  if (every_pair && !circ_or_cocirc) {
    lemma_failure("every pair is a 2-separation side but M is neither a circuit nor a cocircuit");
  }

  if (r.primitive && !r.three_connected) {
    for (Element x : ground) {
      for (Element y : ground) {
        if (x >= y) continue;
        ++r.pairs_checked;
        if (!pair_is_side(x, y)) {
          lemma_failure("pair " + format_set(m, ElementSet::of({x, y})) +
                        " is not a 2-separation side");
        }
        const bool split = std::any_of(all.begin(), all.end(), [&](const Separation& s) {
          return s.side_a.contains(x) != s.side_a.contains(y);
        });
        if (!split) {
          lemma_failure("no 2-separation splits " + format_set(m, ElementSet::of({x, y})));
        }
        for (Element z : ground) {
          if (z == x || z == y) continue;
          ++r.triples_checked;
          const bool found = std::any_of(all.begin(), all.end(), [&](const Separation& s) {
            for (ElementSet side : {s.side_a, s.side_b}) {
              if (side.contains(x) && side.contains(y) && !side.contains(z)) return true;
            }
            return false;
          });
          if (!found) {
            lemma_failure("no 2-separation puts " + format_set(m, ElementSet::of({x, y})) +
                          " against " + m.label(z));
          }
        }
      }
    }
    if (!circ_or_cocirc) lemma_failure("primitive, not 3-connected, yet no circuit or cocircuit");
  }
  if (r.primitive) r.kind = classify_torso(m);
  return r;
}

TreeReport verify_tree_decomposition(const Matroid& m, const TreeDecomposition& td) {
  require_tree(td);
  require_partition(m, td);
  TreeReport r;
  const auto sides = edge_sides(td);
  for (std::size_t i = 0; i < sides.size(); ++i) {
    const ElementSet s = sides[i];
    const std::size_t order = phi(m, s) + 1;
    r.edge_orders.push_back(order);
    r.adhesion = std::max(r.adhesion, order);
    if (s.size() < order || m.size() - s.size() < order) {
      r.valid = false;
      r.problems.push_back("edge " + std::to_string(i) + " sides too small for order " +
                           std::to_string(order));
    }
  }
  r.uniform = std::adjacent_find(r.edge_orders.begin(), r.edge_orders.end(),
                                 std::not_equal_to<>()) == r.edge_orders.end();
  if (r.edge_orders.empty() || (r.valid && r.uniform && r.adhesion == 2)) {
    std::vector<Matroid> torsos;
    for (std::size_t v = 0; v < td.node_count; ++v) {
      torsos.push_back(torso_from_sides(m, td, sides, v));
    }
    const auto why = redundancy(td, torsos);
    r.irredundant = !why.has_value();
    if (why) r.problems.push_back(*why);
  }
  return r;
}

std::optional<std::vector<std::size_t>> decompositions_isomorphic(const TreeDecomposition& a,
                                                                  const TreeDecomposition& b) {
  const std::size_t n = a.node_count;
  if (n != b.node_count || a.edges.size() != b.edges.size() || a.parts.size() != n ||
      b.parts.size() != n) {
    return std::nullopt;
  }
  const auto adj_a = adjacency(a);
  const auto adj_b = adjacency(b);
  std::vector<std::vector<bool>> linked_b(n, std::vector<bool>(n, false));
  for (const auto& [x, y] : b.edges) linked_b[x][y] = linked_b[y][x] = true;

  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  auto assign = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || a.parts[v] != b.parts[w] || adj_a[v].size() != adj_b[w].size()) continue;
      const bool consistent = std::all_of(adj_a[v].begin(), adj_a[v].end(), [&](std::size_t u) {
        return map[u] == n || linked_b[map[u]][w];
      });
      if (!consistent) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      map[v] = n;
      used[w] = false;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return map;
}

Matroid reassemble(const DecompositionTree& tree) {
  const TreeDecomposition& td = tree.shape;
  if (td.node_count == 0) fail(ErrorCode::kNotATree, "no nodes");
  Matroid acc = tree.torsos[0];
  std::vector<bool> seen(td.node_count, false);
  seen[0] = true;
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t v = queue[head];
    for (std::size_t i : incident_edges(td, v)) {
      const auto [a, b] = td.edges[i];
      const std::size_t w = a == v ? b : a;
      if (seen[w]) continue;
      seen[w] = true;
      acc = two_sum(acc, tree.torsos[w], virtual_label(i));
      queue.push_back(w);
    }
  }
  return acc;
}

std::vector<TreeDecomposition> enumerate_primitive_decompositions(const Matroid& m) {
  if (m.size() > kUniquenessSearchLimit) {
    fail(ErrorCode::kGroundSetTooLarge, "the decomposition search is limited to " +
                                            std::to_string(kUniquenessSearchLimit) + " elements");
  }
  if (!is_connected(m)) fail(ErrorCode::kDisconnected, "needs a connected matroid");
  const auto all = enumerate_2separations(m);
  std::vector<TreeDecomposition> found;
  std::vector<ElementSet> chosen;

  auto consider = [&] {
    const TreeDecomposition td = split_tree(m, chosen);
    const auto sides = edge_sides(td);
    std::vector<Matroid> torsos;
    for (std::size_t v = 0; v < td.node_count; ++v) {
      torsos.push_back(torso_from_sides(m, td, sides, v));
      if (torsos.back().size() < 3) return;
    }
    if (redundancy(td, torsos)) return;
    for (const Matroid& t : torsos) {
      if (!is_connected(t) || !is_primitive(t)) return;
    }
    found.push_back(td);
  };
  auto extend = [&](auto&& self, std::size_t start) -> void {
    consider();
    for (std::size_t i = start; i < all.size(); ++i) {
      const Separation& s = all[i];
      const bool ok = std::all_of(chosen.begin(), chosen.end(), [&](ElementSet c) {
        return are_nested(s, Separation{c, c.complement_in(m.ground()), 2});
      });
      if (!ok) continue;
      chosen.push_back(s.side_a);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return found;
}

std::size_t longest_chain(std::span<const OrientedSep> seps) {
  std::vector<ElementSet> sets;
  for (const OrientedSep& s : seps) sets.push_back(s.a);
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::size_t> best(sets.size(), 1);
  std::size_t longest = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (sets[j].proper_subset_of(sets[i])) best[i] = std::max(best[i], best[j] + 1);
    }
    longest = std::max(longest, best[i]);
  }
  return longest;
}

}  // namespace mdecomp
