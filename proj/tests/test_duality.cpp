#include <doctest.h>

#include <algorithm>
#include <map>

#include "mdecomp/connectivity.hpp"
#include "mdecomp/corpus.hpp"
#include "mdecomp/decomposition.hpp"
#include "mdecomp/duality.hpp"
#include "mdecomp/localization.hpp"
#include "mdecomp/verification.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace mdecomp;

TEST_CASE("phi and 2-separations are invariant under duality") {
  const Matroid k4e = k4_minus_edge();
  const auto a = enumerate_2separations(k4e);
  const auto b = enumerate_2separations(dual(k4e));
  CHECK(a == b);
  CHECK(a.size() == 2);
  CHECK(enumerate_2separations(dual(uniform(3, 4))).size() == 3);

  for (const Fixture& f : fixture_corpus()) {
    CAPTURE(f.name);
    const oracle::Brute m = oracle::from(f.matroid);
    const oracle::Brute d{m.n, oracle::dual_circuits(m)};
    for (oracle::Mask x = 0; x <= m.full(); ++x) {
      REQUIRE(m.phi(x) == d.phi(x));
      if (x == m.full()) break;
    }
    CHECK(verify_sep_dual(f.matroid).ok());
  }
}

TEST_CASE("basis difference counts") {
  const Matroid k4e = k4_minus_edge();
  for (ElementSet s : {k4e.ground(), ElementSet{}, ElementSet::of({0, 1, 2})}) {
    const Report r = verify_dif_bases(k4e, s);
    CHECK(r.ok());
    CHECK(r.cases() > 0);
  }
  const Report sampled = verify_dif_bases(uniform(3, 7), ElementSet::of({0, 1, 2}), 10, 3);
  CHECK(sampled.ok());
}

TEST_CASE("localization commutes with duality") {
  const Matroid k4e = k4_minus_edge();
  const std::vector<ElementSet> family{ElementSet::of({0, 1}), ElementSet::of({3, 4})};
  CHECK(verify_local_dual(k4e, family).ok());
  const Matroid via_dual = localize(dual(k4e), family).local();
  CHECK(same_matroid(via_dual, dual(localize(k4e, family).local())));
  CHECK(same_matroid(via_dual, relabel(uniform(2, 3), {"2", "@e0", "@e1"})));
  CHECK(verify_local_dual(k4e, {}).ok());
  CHECK(verify_local_dual(k4e, std::vector<ElementSet>{ElementSet::of({3, 4})}).ok());
}

TEST_CASE("dual decompositions swap circuit and cocircuit torsos") {
  const Matroid k4e = k4_minus_edge();
  const DecompositionTree primal = build_tree(k4e);
  const DecompositionTree dual_tree = build_tree(dual(k4e));
  CHECK(decompositions_isomorphic(primal.shape, dual_tree.shape).has_value());
  std::map<std::uint64_t, TorsoKind> kind_by_part;
  for (std::size_t v = 0; v < dual_tree.node_count(); ++v) {
    kind_by_part[dual_tree.shape.parts[v].bits()] = dual_tree.kinds[v];
  }
  CHECK(kind_by_part.at(oracle::mask({0, 1})) == TorsoKind::kCocircuit);
  CHECK(kind_by_part.at(oracle::mask({2})) == TorsoKind::kCircuit);
  CHECK(kind_by_part.at(oracle::mask({3, 4})) == TorsoKind::kCocircuit);

  CHECK(verify_dual_decomposition(k4e).ok());
  CHECK(verify_dual_decomposition(uniform(2, 4)).ok());
  CHECK(verify_dual_decomposition(uniform(3, 4)).ok());
  CHECK(same_matroid(build_tree(dual(uniform(3, 4))).torsos[0], uniform(1, 4)));
}

TEST_CASE("the duality suite passes on the corpus") {
  for (const Fixture& f : fixture_corpus()) {
    CAPTURE(f.name);
    const Report r = run_duality_suite(f.matroid);
    CHECK_MESSAGE(r.ok(), r.summary());
  }
}
