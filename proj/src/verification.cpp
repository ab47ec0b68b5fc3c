#include "mdecomp/verification.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "mdecomp/connectivity.hpp"
#include "mdecomp/decomposition.hpp"
#include "mdecomp/duality.hpp"
#include "mdecomp/error.hpp"
#include "mdecomp/localization.hpp"
#include "mdecomp/separation_calculus.hpp"

namespace mdecomp {

namespace {

/// Runs fn, recording any library error as a failure of `name`.
template <class Fn>
void guarded(Report& r, std::string_view name, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    r.fail(name, e.what());
  }
}

bool is_2sep_side(const Matroid& m, ElementSet s) {
  return s.size() >= 2 && m.size() - s.size() >= 2 && phi(m, s) == 1;
}

std::vector<ElementSet> sides_of(std::span<const Separation> seps) {
  std::vector<ElementSet> out;
  for (const Separation& s : seps) {
    out.push_back(s.side_a);
    out.push_back(s.side_b);
  }
  return out;
}

std::vector<ElementSet> bases_within(const Matroid& m, ElementSet s) {
  std::vector<ElementSet> out;
  const std::size_t r = m.rank(s);
  for_each_subset(s, [&](ElementSet b) {
    if (b.size() == r && m.is_independent(b)) out.push_back(b);
  });
  return out;
}

std::string family_text(const Matroid& m, std::span<const ElementSet> family) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) out += (i ? "," : "") + format_set(m, family[i]);
  return out + "}";
}

void check_switching(const Matroid& m, std::span<const Separation> all, Report& r) {
  const auto circuits = m.circuits();
  for (const Separation& s : all) {
    for (ElementSet c1 : circuits) {
      if (!crosses_circuit(c1, s)) continue;
      for (ElementSet c2 : circuits) {
        if (!crosses_circuit(c2, s)) continue;
        for (ElementSet side : {s.side_a, s.side_b}) {
          r.expect("traces of crossing circuits are not properly nested",
                   !(c1 & side).proper_subset_of(c2 & side),
                   format_set(m, c1) + " vs " + format_set(m, c2) + " on " + format_set(m, side));
        }
        guarded(r, "switching", [&] {
          switch_circuits(m, c1, c2, s);
          switch_circuits(m, c1, c2, s.inverted());
          r.pass("switching");
        });
      }
    }
  }
}

void check_infinite_switching(const Matroid& m, std::span<const ElementSet> sides, Report& r) {
  const auto circuits = m.circuits();
  const ElementSet ground = m.ground();
  auto run = [&](std::span<const ElementSet> family) {
    ElementSet united;
    for (ElementSet x : family) united |= x;
    const ElementSet outside = united.complement_in(ground);
    for (ElementSet c1 : circuits) {
      for (ElementSet c2 : circuits) {
        const bool crossing = std::all_of(family.begin(), family.end(), [&](ElementSet x) {
          const Separation s{x, x.complement_in(ground), 2};
          return crosses_circuit(c1, s) && crosses_circuit(c2, s);
        });
        if (!crossing || (c1.intersects(outside) && !c2.intersects(outside))) continue;
        guarded(r, "infinite switching", [&] {
          const ElementSet got = infinite_switch(m, c1, c2, family);
          r.expect("infinite switching", got == ((c1 & united) | (c2 & outside)));
        });
      }
    }
  };
  run({});
  for (std::size_t i = 0; i < sides.size(); ++i) {
    run(sides.subspan(i, 1));
    for (std::size_t j = i + 1; j < sides.size(); ++j) {
      if (sides[i].intersects(sides[j])) continue;
      const ElementSet pair[] = {sides[i], sides[j]};
      run(pair);
    }
  }
}

void check_basis_traces(const Matroid& m, std::span<const ElementSet> sides, Report& r) {
  const auto circuits = m.circuits();
  const auto all_bases = bases(m);
  const ElementSet ground = m.ground();
  for (ElementSet side : sides) {
    const Separation s{side, side.complement_in(ground), 2};
    std::vector<ElementSet> crossing;
    for (ElementSet c : circuits) {
      if (crosses_circuit(c, s)) crossing.push_back(c);
    }
    for (ElementSet b_s : bases_within(m, side)) {
      std::optional<ElementSet> trace;
      for (ElementSet c : crossing) {
        if (!(c & side).subset_of(b_s)) continue;
        if (!trace) trace = c & side;
        r.expect("traces inside one basis of a side coincide", *trace == (c & side),
                 format_set(m, side) + " basis " + format_set(m, b_s));
      }
    }
    const std::size_t side_rank = m.rank(side);
    for (ElementSet b : all_bases) {
      if ((b & side).size() == side_rank) continue;
      const bool none = std::none_of(crossing.begin(), crossing.end(),
                                     [&](ElementSet c) { return (c & side).subset_of(b); });
      r.expect("no crossing circuit trace inside a non-spanning basis trace", none,
               format_set(m, side) + " basis " + format_set(m, b));
    }
  }
}

void check_restricted_2seps(const Matroid& m, std::span<const Separation> all, Report& r) {
  for (const Separation& s : all) {
    for_each_subset(m.ground(), [&](ElementSet x) {
      const ElementSet a = s.side_a & x;
      const ElementSet b = s.side_b & x;
      if (a.size() < 2 || b.size() < 2) return;
      const std::size_t order = m.rank(a) + m.rank(b) - m.rank(x);
      if (order == 1) {
        r.pass("restriction keeps 2-separations");
        return;
      }
      // Order 0 is only possible when M|X is disconnected.
      const bool ok = order == 0 && !is_connected(restriction(m, x));
      r.expect("restriction keeps 2-separations", ok,
               format_set(m, s.side_a) + " restricted to " + format_set(m, x));
    });
  }
}

}  // namespace

std::vector<std::vector<ElementSet>> localization_families(const Matroid& m) {
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::vector<ElementSet>> out;
  auto add = [&](std::vector<ElementSet> family) {
    std::vector<std::uint64_t> key;
    for (ElementSet x : family) key.push_back(x.bits());
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) out.push_back(std::move(family));
  };
  add({});
  const auto all = enumerate_2separations(m);
  const auto sides = sides_of(all);
  for (std::size_t i = 0; i < sides.size(); ++i) {
    add({sides[i]});
    for (std::size_t j = i + 1; j < sides.size(); ++j) {
      if (!sides[i].intersects(sides[j])) add({sides[i], sides[j]});
    }
  }
  if (m.size() >= 3 && !all.empty()) {
    const DecompositionTree tree = build_tree(m);
    const auto edge_side = edge_sides(tree.shape);
    for (std::size_t v = 0; v < tree.node_count(); ++v) {
      std::vector<ElementSet> star;
      for (std::size_t i : incident_edges(tree.shape, v)) {
        star.push_back(tree.shape.edges[i].first == v ? edge_side[i].complement_in(m.ground())
                                                      : edge_side[i]);
      }
      add(std::move(star));
    }
  }
  return out;
}

Report check_connectivity(const Matroid& m, std::uint64_t seed) {
  require_enumerable(m, "check_connectivity");
  Report r;
  const ElementSet ground = m.ground();
  std::mt19937_64 rng(seed);
  std::vector<Element> order(m.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::vector<std::size_t> phis(std::size_t{1} << m.size());

  for_each_subset(ground, [&](ElementSet x) {
    const std::size_t p = phi(m, x);
    phis[x.bits()] = p;
    r.expect("phi equals del of greedy bases", p == phi_from_bases(m, x), format_set(m, x));
    r.expect("phi is symmetric", p == phi(m, x.complement_in(ground)), format_set(m, x));
    bool invariant = true;
    for (std::size_t t = 0; t < kDelTrials && invariant; ++t) {
      std::shuffle(order.begin(), order.end(), rng);
      const ElementSet bx = m.extend_to_maximal_independent({}, x, order);
      std::shuffle(order.begin(), order.end(), rng);
      const ElementSet by = m.extend_to_maximal_independent({}, x.complement_in(ground), order);
      invariant = del(m, bx, by) == p;
    }
    r.expect("del ignores the basis choice", invariant, format_set(m, x));
  });

  if (m.size() <= kExhaustivePairLimit) {
    std::size_t violations = 0;
    std::string first;
    std::size_t pairs = 0;
    for_each_subset(ground, [&](ElementSet x) {
      for_each_subset(ground, [&](ElementSet y) {
        ++pairs;
        if (phis[x.bits()] + phis[y.bits()] < phis[(x | y).bits()] + phis[(x & y).bits()]) {
          if (violations++ == 0) first = format_set(m, x) + ", " + format_set(m, y);
        }
      });
    });
    Check& c = r.check("phi is submodular");
    c.cases += pairs;
    c.failures += violations;
    if (violations) c.first_failure = first;
  }
  return r;
}

Report check_separation_calculus(const Matroid& m) {
  Report r;
  const auto all = enumerate_2separations(m);
  const auto goods = good_2separations(std::span<const Separation>(all));
  const auto sides = sides_of(all);

  for (const Separation& s1 : all) {
    for (const Separation& s2 : all) {
      const ElementSet a = s1.side_a;
      const ElementSet ac = s1.side_b;
      const ElementSet b = s2.side_a;
      const ElementSet bc = s2.side_b;
      const bool by_inclusion =
          a.subset_of(b) || a.subset_of(bc) || ac.subset_of(b) || ac.subset_of(bc);
      r.expect("nested iff a side contains another", are_nested(s1, s2) == by_inclusion);
      if (are_nested(s1, s2)) continue;
      // Ordered pairs over both orientations of s2 cover all four corners.
      for (const Separation& t : {s2, s2.inverted()}) {
        for (const Separation& u : {s1, s1.inverted()}) {
          const ElementSet corner_set = u.side_a & t.side_a;
          if (corner_set.size() < 2 || m.size() - corner_set.size() < 2) continue;
          guarded(r, "corner", [&] {
            corner(m, u, t);
            r.pass("corner");
          });
          r.expect("corner of order > 2 needs two elements outside the union",
                   phi(m, corner_set) == 1 ||
                       (u.side_a | t.side_a).complement_in(m.ground()).size() >= 2,
                   format_set(m, u.side_a) + " " + format_set(m, t.side_a));
        }
      }
      guarded(r, "symmetric difference", [&] {
        symmetric_difference_sep(m, s1, s2);
        r.pass("symmetric difference");
      });
    }
  }

  for (const Separation& g : goods) {
    r.expect("good set is closed under inversion",
             is_good(m, g.inverted(), all), format_set(m, g.side_a));
    for (const Separation& h : goods) r.expect("good set is nested", are_nested(g, h));
  }

  check_switching(m, all, r);
  check_infinite_switching(m, sides, r);
  check_basis_traces(m, sides, r);
  if (m.size() <= kExhaustivePairLimit) check_restricted_2seps(m, all, r);
  return r;
}

Report check_localization(const Matroid& m, std::span<const ElementSet> family) {
  Report r;
  const std::vector<ElementSet> members(family.begin(), family.end());
  const std::string where = family_text(m, family);
  std::optional<Localization> lp;
  guarded(r, "localization is a matroid", [&] {
    lp.emplace(localize(m, members));
    const Matroid& local = lp->local();
    std::vector<ElementSet> circuits(local.circuits().begin(), local.circuits().end());
    Matroid::from_circuits(local.labels(), std::move(circuits), Validation::kFull);
    r.pass("localization is a matroid");
  });
  if (!lp) return r;
  const Localization& l = *lp;
  const Matroid& local = l.local();
  const ElementSet ground = m.ground();

  r.expect("local ground counts reals and virtuals",
           local.size() == l.real_elements().size() + family.size(), where);

  std::set<std::uint64_t> images;
  for_each_subset(ground, [&](ElementSet i) {
    if (m.is_independent(i)) images.insert(local_independents_correspond(l, i).bits());
  });
  std::set<std::uint64_t> independents;
  for_each_subset(local.ground(), [&](ElementSet z) {
    if (local.is_independent(z)) independents.insert(z.bits());
  });
  r.expect("local independent sets are images of independent sets", images == independents, where);

  guarded(r, "local bases are images of bases", [&] {
    local_bases(l);
    r.pass("local bases are images of bases");
  });

  const auto local_seps = enumerate_2separations(local);
  const auto base_seps = enumerate_2separations(m);
  for_each_subset(local.ground(), [&](ElementSet s_u) {
    if (s_u.size() < 2 || local.size() - s_u.size() < 2) return;
    guarded(r, "2-separations correspond", [&] {
      project_2sep(l, s_u);
      r.pass("2-separations correspond");
    });
  });
  for (const Separation& s : local_seps) {
    guarded(r, "goodness corresponds", [&] {
      goodness_corresponds(l, s.side_a, local_seps, base_seps);
      goodness_corresponds(l, s.side_b, local_seps, base_seps);
      r.pass("goodness corresponds");
    });
  }

  for (const Separation& base_sep : base_seps) {
    for (const Separation& s : {base_sep, base_sep.inverted()}) {
      const ElementSet image = l.forward(s.side_a);
      const ElementSet forced = l.forward(s.side_b).complement_in(local.ground());
      if (!forced.subset_of(image)) continue;
      for_each_subset(image - forced, [&](ElementSet extra) {
        const ElementSet s_u = forced | extra;
        if (s_u.size() < 2 || local.size() - s_u.size() < 2) return;
        guarded(r, "2-separations lift to subsets of the image", [&] {
          lift_2sep_subset(l, s, s_u);
          r.pass("2-separations lift to subsets of the image");
        });
      });
    }
  }

  // Restricting the localization to A is localizing M restricted to the
  // preimage of A at the members mapped into A, whenever the latter is a
  // localization.
  for_each_subset(local.ground(), [&](ElementSet a) {
    const ElementSet pre = l.inverse(a);
    if (pre.empty()) return;
    const Matroid sub = restriction(m, pre);
    if (!is_connected(sub)) return;
    std::vector<ElementSet> sub_family;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!a.contains(l.virtual_element(i))) continue;
      const ElementSet x = compress(family[i], pre);
      if (!is_2sep_side(sub, x)) return;
      sub_family.push_back(x);
      labels.push_back(local.label(l.virtual_element(i)));
    }
    guarded(r, "localization commutes with restriction", [&] {
      const Localization restricted = localize(sub, sub_family, labels);
      r.expect("localization commutes with restriction",
               same_matroid(restricted.local(), restriction(local, a)),
               where + " at " + format_set(local, a));
    });
  });
  return r;
}

Report check_decomposition(const Matroid& m) {
  Report r;
  std::optional<DecompositionTree> tree;
  guarded(r, "canonical tree", [&] {
    tree.emplace(build_tree(m));
    r.pass("canonical tree");
  });
  if (!tree) return r;

  guarded(r, "canonical tree is irredundant of adhesion 2", [&] {
    const TreeReport tr = verify_tree_decomposition(m, tree->shape);
    const bool ok = tr.valid && tr.uniform && (tr.edge_orders.empty() || tr.adhesion == 2) &&
                    tr.irredundant.value_or(false);
    r.expect("canonical tree is irredundant of adhesion 2", ok);
  });
  for (std::size_t v = 0; v < tree->node_count(); ++v) {
    guarded(r, "torsos are primitive", [&] {
      const PrimitiveReport pr = verify_primitive_structure(tree->torsos[v]);
      r.expect("torsos are primitive", pr.primitive && pr.kind == tree->kinds[v]);
    });
  }
  guarded(r, "primitive structure", [&] {
    verify_primitive_structure(m);
    r.pass("primitive structure");
  });
  guarded(r, "torsos reassemble to M", [&] {
    r.expect("torsos reassemble to M", same_matroid(reassemble(*tree), m));
  });

  for (const Separation& s : enumerate_2separations(m)) {
    guarded(r, "split and 2-sum round trip", [&] {
      const SplitResult parts = split_along(m, s);
      r.pass("split and 2-sum round trip");
      if (is_circuit_matroid(parts.first) && is_circuit_matroid(parts.second)) {
        r.expect("2-sum of circuits is a circuit", is_circuit_matroid(m));
      }
      if (is_cocircuit_matroid(parts.first) && is_cocircuit_matroid(parts.second)) {
        r.expect("2-sum of cocircuits is a cocircuit", is_cocircuit_matroid(m));
      }
    });
  }

  std::vector<OrientedSep> oriented;
  for (const auto& members : tree->node_members) {
    oriented.insert(oriented.end(), members.begin(), members.end());
  }
  r.expect("inclusion chains of good separations are short",
           longest_chain(oriented) <= m.size());

  if (m.size() <= kUniquenessLimit) {
    guarded(r, "decomposition is unique", [&] {
      const auto found = enumerate_primitive_decompositions(m);
      const bool unique =
          found.size() == 1 && decompositions_isomorphic(found[0], tree->shape).has_value();
      r.expect("decomposition is unique", unique,
               std::to_string(found.size()) + " irredundant primitive decompositions");
    });
  }
  return r;
}

Report run_lemma_suite(const Matroid& m, std::uint64_t seed) {
  Report r = check_connectivity(m, seed);
  if (!is_connected(m) || m.size() < 2) return r;
  r.merge(check_separation_calculus(m));
  if (m.size() <= kExhaustivePairLimit) {
    for (const auto& family : localization_families(m)) r.merge(check_localization(m, family));
  }
  if (m.size() >= 3) r.merge(check_decomposition(m));
  return r;
}

Report run_duality_suite(const Matroid& m, std::uint64_t seed) {
  Report r = verify_sep_dual(m);
  for_each_subset(m.ground(), [&](ElementSet s) { r.merge(verify_dif_bases(m, s, {}, seed)); });
  if (!is_connected(m) || m.size() < 2) return r;
  if (m.size() <= kExhaustivePairLimit) {
    for (const auto& family : localization_families(m)) {
      guarded(r, "localization commutes with duality",
              [&] { r.merge(verify_local_dual(m, family)); });
    }
  }
  if (m.size() >= 3) {
    guarded(r, "dual decomposition is isomorphic",
            [&] { r.merge(verify_dual_decomposition(m)); });
  }
  return r;
}

}  // namespace mdecomp
