#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "mdecomp/connectivity.hpp"
#include "mdecomp/corpus.hpp"
#include "mdecomp/decomposition.hpp"
#include "mdecomp/localization.hpp"
#include "mdecomp/verification.hpp"
#include "support/helpers.hpp"

using namespace mdecomp;

namespace {

using LabelSet = std::set<std::string>;

// Same matroid with the ground set listed in a different order.
Matroid reorder(const Matroid& m, const std::vector<Element>& order) {
  std::vector<std::string> labels;
  for (Element e : order) labels.push_back(m.labels()[e]);
  std::vector<std::vector<std::string>> circuits;
  for (ElementSet c : m.circuits()) circuits.push_back(m.labels_of(c));
  return Matroid::from_circuit_labels(labels, circuits);
}

LabelSet label_set(const Matroid& m, ElementSet s) {
  const auto labels = m.labels_of(s);
  return {labels.begin(), labels.end()};
}

// Label-level shape of a canonical tree: (part, kind) per node and the
// unordered bipartition per edge.
struct Shape {
  std::multiset<std::pair<LabelSet, TorsoKind>> nodes;
  std::set<std::set<LabelSet>> edges;
  bool operator==(const Shape&) const = default;
};

Shape shape_of(const Matroid& m) {
  const DecompositionTree tree = build_tree(m);
  Shape s;
  for (std::size_t v = 0; v < tree.node_count(); ++v) {
    s.nodes.emplace(label_set(m, tree.shape.parts[v]), tree.kinds[v]);
  }
  for (const Separation& e : tree.edge_separations) {
    s.edges.insert({label_set(m, e.side_a), label_set(m, e.side_b)});
  }
  return s;
}

// Connected column matroids from a seed the corpus does not use. Most random
// 0/1 matrices give disconnected matroids, so a larger pool is filtered.
std::vector<Fixture> fresh_random_fixtures() {
  std::vector<Fixture> out;
  for (Fixture& f : random_gf2_fixtures(300, 977)) {
    if (f.matroid.size() >= 3 && is_connected(f.matroid)) out.push_back(std::move(f));
  }
  REQUIRE(out.size() >= 30);
  return out;
}

}  // namespace

TEST_CASE("the canonical tree does not depend on the ground order") {
  std::mt19937 rng(5);
  auto fixtures = fixture_corpus();
  for (Fixture& f : fresh_random_fixtures()) fixtures.push_back(std::move(f));
  for (const Fixture& f : fixtures) {
    CAPTURE(f.name);
    if (f.matroid.size() < 3 || !is_connected(f.matroid)) continue;
    const Shape expected = shape_of(f.matroid);
    std::vector<Element> order(f.matroid.size());
    std::iota(order.begin(), order.end(), Element{0});
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(shape_of(reorder(f.matroid, order)) == expected);
    }
  }
}

TEST_CASE("phi is symmetric, submodular and bounded by rank") {
  for (const Fixture& f : fresh_random_fixtures()) {
    CAPTURE(f.name);
    const Matroid& m = f.matroid;
    if (m.size() > 7) continue;
    const std::uint64_t full = m.ground().bits();
    for (std::uint64_t x = 0; x <= full; ++x) {
      const ElementSet xs = ElementSet::from_bits(x);
      REQUIRE(phi(m, xs) == phi(m, xs.complement_in(m.ground())));
      REQUIRE(phi(m, xs) <= m.rank(xs));
      for (std::uint64_t y = 0; y <= full; ++y) {
        const ElementSet ys = ElementSet::from_bits(y);
        REQUIRE(phi(m, xs) + phi(m, ys) >= phi(m, xs | ys) + phi(m, xs & ys));
      }
    }
  }
}

TEST_CASE("splitting and reassembly invert each other on unseen matroids") {
  for (const Fixture& f : fresh_random_fixtures()) {
    CAPTURE(f.name);
    if (!is_connected(f.matroid)) continue;
    CHECK(same_matroid(dual(dual(f.matroid)), f.matroid));
    for (const Separation& s : enumerate_2separations(f.matroid)) {
      const SplitResult r = split_along(f.matroid, s);
      CHECK(same_matroid(two_sum(r.first, r.second, r.shared), f.matroid));
    }
    if (f.matroid.size() >= 3) CHECK(same_matroid(reassemble(build_tree(f.matroid)), f.matroid));
  }
}

TEST_CASE("the lemma and duality suites pass on unseen matroids") {
  for (const Fixture& f : fresh_random_fixtures()) {
    CAPTURE(f.name);
    const Report lemmas = run_lemma_suite(f.matroid, 1);
    CHECK_MESSAGE(lemmas.ok(), lemmas.summary());
    const Report duality = run_duality_suite(f.matroid, 1);
    CHECK_MESSAGE(duality.ok(), duality.summary());
  }
}
