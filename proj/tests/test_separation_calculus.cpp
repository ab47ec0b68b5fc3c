#include <doctest.h>

#include <algorithm>

#include "mdecomp/connectivity.hpp"
#include "mdecomp/corpus.hpp"
#include "mdecomp/separation_calculus.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace mdecomp;

namespace {

Separation sep(const Matroid& m, ElementSet a) {
  auto s = separation_of(m, a);
  REQUIRE(s.has_value());
  return *s;
}

// Nested iff one side of the first lies inside a side of the second.
bool nested_oracle(oracle::Mask s1, oracle::Mask s2, oracle::Mask full) {
  const oracle::Mask c1 = full & ~s1;
  const oracle::Mask c2 = full & ~s2;
  auto inside = [](oracle::Mask a, oracle::Mask b) { return (a & ~b) == 0; };
  return inside(s1, s2) || inside(s1, c2) || inside(c1, s2) || inside(c1, c2);
}

}  // namespace

TEST_CASE("nestedness on small instances") {
  const Matroid k4e = k4_minus_edge();
  const Separation a = sep(k4e, ElementSet::of({0, 1, 2}));
  const Separation b = sep(k4e, ElementSet::of({2, 3, 4}));
  CHECK(are_nested(a, b));
  CHECK(quadrants(a, b).q22.empty());
  CHECK(are_nested(a, a));

  const Matroid u34 = uniform(3, 4);
  const Separation x = sep(u34, ElementSet::of({0, 1}));
  const Separation y = sep(u34, ElementSet::of({0, 2}));
  CHECK_FALSE(are_nested(x, y));
  const Quadrants q = quadrants(x, y);
  CHECK(q.all_nonempty());
  for (ElementSet part : {q.q11, q.q12, q.q21, q.q22}) CHECK(part.size() == 1);
}

TEST_CASE("corners and symmetric differences") {
  const Matroid u45 = uniform(4, 5);
  const Separation s1 = sep(u45, ElementSet::of({0, 1, 2}));
  const Separation s2 = sep(u45, ElementSet::of({1, 2, 3}));
  const Separation c = corner(u45, s1, s2);
  CHECK(c.side_a == ElementSet::of({1, 2}));
  CHECK(c.side_b == ElementSet::of({0, 3, 4}));
  CHECK(c.order == 2);
  const Separation d = symmetric_difference_sep(u45, s1, s2);
  CHECK(d.side_a == ElementSet::of({0, 3}));
  CHECK(d.side_b == ElementSet::of({1, 2, 4}));
  CHECK(d.order == 2);

  const Matroid u34 = uniform(3, 4);
  const Separation x = sep(u34, ElementSet::of({0, 1}));
  const Separation y = sep(u34, ElementSet::of({0, 2}));
  CHECK_ERROR(corner(u34, x, y), kQuadrantTooSmall);
  const Separation e = symmetric_difference_sep(u34, x, y);
  CHECK(e.side_a == ElementSet::of({1, 2}));
  CHECK(e.side_b == ElementSet::of({0, 3}));

  const Matroid k4e = k4_minus_edge();
  const Separation a = sep(k4e, ElementSet::of({0, 1, 2}));
  const Separation b = sep(k4e, ElementSet::of({2, 3, 4}));
  CHECK_ERROR(corner(k4e, a, b), kNotCrossing);
  CHECK_ERROR(symmetric_difference_sep(k4e, a, b), kNotCrossing);
}

TEST_CASE("good 2-separations") {
  const Matroid k4e = k4_minus_edge();
  const auto all = enumerate_2separations(k4e);
  CHECK(is_good(k4e, sep(k4e, ElementSet::of({0, 1, 2})), all));
  CHECK(good_2separations(k4e).size() == 2);

  const Matroid u34 = uniform(3, 4);
  CHECK_FALSE(is_good(u34, sep(u34, ElementSet::of({0, 1})), enumerate_2separations(u34)));
  CHECK(good_2separations(u34).empty());
  CHECK(good_2separations(uniform(2, 4)).empty());
}

TEST_CASE("nestedness and goodness agree with brute force on the corpus") {
  for (const Fixture& f : fixture_corpus()) {
    CAPTURE(f.name);
    if (!is_connected(f.matroid)) continue;
    const oracle::Brute brute = oracle::from(f.matroid);
    const auto keys = brute.two_separation_keys();
    const auto seps = enumerate_2separations(f.matroid);
    REQUIRE(seps.size() == keys.size());
    for (const Separation& s : seps) {
      for (const Separation& t : seps) {
        CHECK(are_nested(s, t) == nested_oracle(s.side_a.bits(), t.side_a.bits(), brute.full()));
      }
    }
    std::vector<oracle::Mask> good_keys;
    for (oracle::Mask k : keys) {
      if (std::all_of(keys.begin(), keys.end(),
                      [&](oracle::Mask j) { return nested_oracle(k, j, brute.full()); })) {
        good_keys.push_back(k);
      }
    }
    std::vector<oracle::Mask> got;
    for (const Separation& s : good_2separations(f.matroid)) got.push_back(s.key().bits());
    std::sort(got.begin(), got.end());
    CHECK(got == good_keys);
  }
}

TEST_CASE("crossing pairs have order-2 corners and symmetric differences") {
  for (const Fixture& f : fixture_corpus()) {
    CAPTURE(f.name);
    if (!is_connected(f.matroid)) continue;
    const oracle::Brute brute = oracle::from(f.matroid);
    const auto seps = enumerate_2separations(f.matroid);
    for (const Separation& s : seps) {
      for (const Separation& t : seps) {
        if (are_nested(s, t)) continue;
        const oracle::Mask sd = (s.side_a ^ t.side_a).bits();
        CHECK(brute.phi(sd) == 1);
        const Quadrants q = quadrants(s, t);
        if (q.q11.size() >= 2 && (q.q12 | q.q21 | q.q22).size() >= 2) {
          CHECK(brute.phi(q.q11.bits()) == 1);
          CHECK(corner(f.matroid, s, t).side_a == q.q11);
        }
      }
    }
  }
}

TEST_CASE("circuit switching") {
  const Matroid k4e = k4_minus_edge();
  const Separation s = sep(k4e, ElementSet::of({0, 1, 2}));
  const ElementSet c1 = ElementSet::of({0, 1, 3, 4});
  const ElementSet c2 = ElementSet::of({2, 3, 4});
  CHECK(crosses_circuit(c2, s));
  CHECK_FALSE(crosses_circuit(ElementSet::of({0, 1, 2}), s));
  CHECK_FALSE(crosses_circuit(ElementSet{}, s));
  CHECK(switch_circuits(k4e, c1, c2, s) == c1);
  CHECK(switch_circuits(k4e, c2, c1, s) == c2);
  CHECK(switch_circuits(k4e, c1, c1, s) == c1);

  const std::vector<ElementSet> family{ElementSet::of({0, 1, 2})};
  CHECK(infinite_switch(k4e, c2, c1, family) == c2);
  CHECK(infinite_switch(k4e, c2, c1, {}) == c1);

  // Every switch of crossing circuits along a 2-separation is a circuit.
  for (const Fixture& f : fixture_corpus()) {
    CAPTURE(f.name);
    if (!is_connected(f.matroid)) continue;
    const auto circuits = f.matroid.circuits();
    const oracle::Brute brute = oracle::from(f.matroid);
    for (const Separation& t : enumerate_2separations(f.matroid)) {
      for (ElementSet a : circuits) {
        for (ElementSet b : circuits) {
          if (!crosses_circuit(a, t) || !crosses_circuit(b, t)) continue;
          const ElementSet sw = (a & t.side_a) | (b & t.side_b);
          const bool is_circuit = std::binary_search(brute.circuits.begin(), brute.circuits.end(), sw.bits());
          CHECK(is_circuit);
          CHECK(switch_circuits(f.matroid, a, b, t) == sw);
        }
      }
    }
  }
}
