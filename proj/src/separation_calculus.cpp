#include "mdecomp/separation_calculus.hpp"

#include "mdecomp/error.hpp"

namespace mdecomp {

namespace {

void require_same_ground(const Separation& s1, const Separation& s2) {
  if (s1.universe() != s2.universe()) {
    fail(ErrorCode::kGroundSetMismatch, "separations of different ground sets");
  }
}

void require_crossing(const Separation& s1, const Separation& s2) {
  if (are_nested(s1, s2)) fail(ErrorCode::kNotCrossing, "the separations are nested");
}

void require_2separation(const Matroid& m, const Separation& s, const char* what) {
  if (s.universe() != m.ground() || s.side_a.intersects(s.side_b) || s.side_a.size() < 2 ||
      s.side_b.size() < 2 || phi(m, s.side_a) != 1) {
    fail(ErrorCode::kNotA2Separation, std::string(what) + " is not a 2-separation");
  }
}

void require_circuit(const Matroid& m, ElementSet c, const char* what) {
  if (!m.is_circuit(c)) {
    fail(ErrorCode::kNotACircuit, std::string(what) + " " + format_set(m, c) + " is not a circuit");
  }
}

Separation verified_2separation(const Matroid& m, ElementSet side, const char* lemma) {
  const ElementSet rest = side.complement_in(m.ground());
  const std::size_t k = phi(m, side);
  if (k != 1 || side.size() < 2 || rest.size() < 2) {
    lemma_failure(std::string(lemma) + ": " + format_set(m, side) + " has connectivity " +
                  std::to_string(k));
  }
  return {side, rest, 2};
}

}  // namespace

Quadrants quadrants(const Separation& s1, const Separation& s2) {
  return {s1.side_a & s2.side_a, s1.side_a & s2.side_b, s1.side_b & s2.side_a,
          s1.side_b & s2.side_b};
}

bool are_nested(const Separation& s1, const Separation& s2) {
  require_same_ground(s1, s2);
  return !quadrants(s1, s2).all_nonempty();
}

Separation corner(const Matroid& m, const Separation& s1, const Separation& s2) {
  require_crossing(s1, s2);
  require_2separation(m, s1, "first separation");
  require_2separation(m, s2, "second separation");
  const ElementSet c = s1.side_a & s2.side_a;
  if (c.size() < 2 || m.size() - c.size() < 2) {
    fail(ErrorCode::kQuadrantTooSmall, "corner " + format_set(m, c) + " or its complement has < 2 elements");
  }
  return verified_2separation(m, c, "corner lemma");
}

Separation symmetric_difference_sep(const Matroid& m, const Separation& s1,
                                    const Separation& s2) {
  require_crossing(s1, s2);
  require_2separation(m, s1, "first separation");
  require_2separation(m, s2, "second separation");
  return verified_2separation(m, s1.side_a ^ s2.side_a, "symmetric difference lemma");
}

bool is_good(const Matroid& /*m*/, const Separation& s,
             std::span<const Separation> all_2seps) {
  for (const Separation& other : all_2seps) {
    if (!are_nested(s, other)) return false;
  }
  return true;
}

std::vector<Separation> good_2separations(std::span<const Separation> all_2seps) {
  std::vector<Separation> out;
  for (const Separation& s : all_2seps) {
    bool good = true;
    for (const Separation& other : all_2seps) {
      if (!are_nested(s, other)) {
        good = false;
        break;
      }
    }
    if (good) out.push_back(s);
  }
  return out;
}

std::vector<Separation> good_2separations(const Matroid& m) {
  require_enumerable(m, "good_2separations");
  if (!is_connected(m)) fail(ErrorCode::kDisconnected, "good 2-separations need a connected matroid");
  const auto all = enumerate_2separations(m);
  return good_2separations(std::span<const Separation>(all));
}

bool crosses_circuit(ElementSet c, const Separation& s) {
  return c.intersects(s.side_a) && c.intersects(s.side_b);
}

ElementSet switch_circuits(const Matroid& m, ElementSet c1, ElementSet c2, const Separation& s) {
  require_2separation(m, s, "separation");
  require_circuit(m, c1, "first");
  require_circuit(m, c2, "second");
  if (!crosses_circuit(c1, s) || !crosses_circuit(c2, s)) {
    fail(ErrorCode::kNotCrossing, "both circuits must cross the separation");
  }
  const ElementSet result = (c1 & s.side_a) | (c2 & s.side_b);
  if (!m.is_circuit(result)) {
    lemma_failure("switching lemma: " + format_set(m, result) + " is not a circuit");
  }
  return result;
}

ElementSet infinite_switch(const Matroid& m, ElementSet c1, ElementSet c2,
                           std::span<const ElementSet> family) {
  require_circuit(m, c1, "first");
  require_circuit(m, c2, "second");
  ElementSet united;
  for (ElementSet side : family) {
    if (side.intersects(united)) {
      fail(ErrorCode::kPreconditionViolated, "family members are not disjoint");
    }
    united |= side;
    const Separation s{side, side.complement_in(m.ground()), 2};
    require_2separation(m, s, "family member");
    if (!crosses_circuit(c1, s) || !crosses_circuit(c2, s)) {
      fail(ErrorCode::kPreconditionViolated,
           "condition (1): both circuits must cross " + format_set(m, side));
    }
  }
  const ElementSet outside = united.complement_in(m.ground());
  if (c1.intersects(outside) && !c2.intersects(outside)) {
    fail(ErrorCode::kPreconditionViolated,
         "condition (2): the first circuit meets the complement of the union, the second does not");
  }
  const ElementSet result = (c1 & united) | (c2 & outside);
  if (!m.is_circuit(result)) {
    lemma_failure("infinite switching lemma: " + format_set(m, result) + " is not a circuit");
  }
  return result;
}

}  // namespace mdecomp
