#include "mdecomp/duality.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mdecomp/connectivity.hpp"
#include "mdecomp/decomposition.hpp"
#include "mdecomp/error.hpp"
#include "mdecomp/localization.hpp"

namespace mdecomp {

namespace {

TorsoKind dual_kind(TorsoKind k) {
  switch (k) {
    case TorsoKind::kCircuit:
      return TorsoKind::kCocircuit;
    case TorsoKind::kCocircuit:
      return TorsoKind::kCircuit;
    case TorsoKind::kThreeConnected:
      break;
  }
  return k;
}

}  // namespace

Report verify_sep_dual(const Matroid& m) {
  require_enumerable(m, "verify_sep_dual");
  const Matroid d = dual(m);
  Report r;
  for_each_subset(m.ground(), [&](ElementSet x) {
    const auto a = separation_of(m, x);
    const auto b = separation_of(d, x);
    const bool same = a.has_value() == b.has_value() && (!a || a->order == b->order);
    r.expect("separation order is self-dual", same, format_set(m, x));
  });
  return r;
}

Report verify_dif_bases(const Matroid& m, ElementSet s, std::optional<std::size_t> trials,
                        std::uint64_t seed) {
  const ElementSet ground = m.ground();
  const ElementSet rest = s.complement_in(ground);
  const Matroid d = dual(m);
  std::vector<ElementSet> sample = bases(m);
  if (sample.size() > kExhaustiveBasisLimit) {
    std::mt19937_64 rng(seed);
    std::vector<Element> order(m.size());
    std::iota(order.begin(), order.end(), Element{0});
    const std::size_t n = trials.value_or(kSampledBases);
    sample.clear();
    for (std::size_t t = 0; t < n; ++t) {
      std::shuffle(order.begin(), order.end(), rng);
      sample.push_back(m.extend_to_maximal_independent({}, ground, order));
    }
  }
  Report r;
  for (ElementSet b : sample) {
    const ElementSet in_s = b & s;
    const std::size_t added = (m.extend_to_maximal_independent(in_s, s) - in_s).size();
    const ElementSet co_in_rest = b.complement_in(ground) & rest;
    const std::size_t co_added =
        (d.extend_to_maximal_independent(co_in_rest, rest) - co_in_rest).size();
    r.expect("basis defect agrees with the dual", added == co_added,
             "S=" + format_set(m, s) + " B=" + format_set(m, b) + ": " + std::to_string(added) +
                 " vs " + std::to_string(co_added));
  }
  return r;
}

Report verify_local_dual(const Matroid& m, std::span<const ElementSet> family) {
  const std::vector<ElementSet> members(family.begin(), family.end());
  const Localization primal = localize(m, members);
  const Localization of_dual = localize(dual(m), members);
  if (!same_matroid(of_dual.local(), dual(primal.local()))) {
    std::string what = "localization does not commute with duality at {";
    for (std::size_t i = 0; i < members.size(); ++i) {
      what += (i ? "," : "") + format_set(m, members[i]);
    }
    lemma_failure(what + "}");
  }
  Report r;
  r.pass("localization commutes with duality");
  return r;
}

Report verify_dual_decomposition(const Matroid& m) {
  const DecompositionTree primal = build_tree(m);
  const DecompositionTree of_dual = build_tree(dual(m));
  const auto iso = decompositions_isomorphic(primal.shape, of_dual.shape);
  if (!iso) lemma_failure("the decompositions of M and its dual are not isomorphic");

  // Virtual labels of the dual tree, renamed after the matching primal edge.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> dual_edge;
  for (std::size_t i = 0; i < of_dual.shape.edges.size(); ++i) {
    auto [a, b] = of_dual.shape.edges[i];
    dual_edge[{std::min(a, b), std::max(a, b)}] = i;
  }
  std::map<std::string, std::string> rename;
  for (std::size_t i = 0; i < primal.shape.edges.size(); ++i) {
    const auto [a, b] = primal.shape.edges[i];
    const std::size_t x = (*iso)[a];
    const std::size_t y = (*iso)[b];
    rename[virtual_label(dual_edge.at({std::min(x, y), std::max(x, y)}))] = virtual_label(i);
  }

  Report r;
  r.pass("dual decomposition is isomorphic");
  std::multiset<TorsoKind> kinds;
  std::multiset<TorsoKind> swapped_dual_kinds;
  for (std::size_t v = 0; v < primal.node_count(); ++v) {
    const std::size_t w = (*iso)[v];
    std::vector<std::string> labels = of_dual.torsos[w].labels();
    for (auto& l : labels) {
      if (auto it = rename.find(l); it != rename.end()) l = it->second;
    }
    const Matroid renamed = relabel(of_dual.torsos[w], std::move(labels));
    if (!same_matroid(renamed, dual(primal.torsos[v]))) {
      lemma_failure("torso at node " + std::to_string(v) + " is not dual to its dual counterpart");
    }
    r.pass("torsos are dual");
    if (of_dual.kinds[w] != dual_kind(primal.kinds[v])) {
      lemma_failure("torso kind at node " + std::to_string(v) + " does not swap under duality");
    }
    r.pass("torso kinds swap");
    kinds.insert(primal.kinds[v]);
    swapped_dual_kinds.insert(dual_kind(of_dual.kinds[w]));
  }
  if (kinds != swapped_dual_kinds) lemma_failure("torso kind multisets do not swap");
  r.pass("torso kind multisets swap");
  return r;
}

}  // namespace mdecomp
