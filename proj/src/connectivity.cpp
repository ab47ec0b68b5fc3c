#include "mdecomp/connectivity.hpp"

#include <algorithm>

#include "mdecomp/error.hpp"

namespace mdecomp {

ElementSet Separation::key() const {
  const ElementSet u = universe();
  if (u.empty()) return side_a;
  return side_a.contains(u.first()) ? side_a : side_b;
}

std::size_t del(const Matroid& m, ElementSet i, ElementSet j) {
  if (!m.is_independent(i) || !m.is_independent(j)) {
    fail(ErrorCode::kDependentInput, "del needs independent sets");
  }
  const ElementSet u = i | j;
  return u.size() - m.rank(u);
}

std::size_t phi(const Matroid& m, ElementSet x) {
  const ElementSet rest = x.complement_in(m.ground());
  return m.rank(x) + m.rank(rest) - m.rank();
}

std::size_t phi_from_bases(const Matroid& m, ElementSet x) {
  const ElementSet rest = x.complement_in(m.ground());
  return del(m, m.extend_to_maximal_independent({}, x),
             m.extend_to_maximal_independent({}, rest));
}

std::size_t phi_from_bases(const Matroid& m, ElementSet x, std::span<const Element> order) {
  const ElementSet rest = x.complement_in(m.ground());
  return del(m, m.extend_to_maximal_independent({}, x, order),
             m.extend_to_maximal_independent({}, rest, order));
}

std::optional<Separation> separation_of(const Matroid& m, ElementSet x) {
  const ElementSet rest = x.complement_in(m.ground());
  const std::size_t k = phi(m, x);
  if (x.size() < k + 1 || rest.size() < k + 1) return std::nullopt;
  return Separation{x, rest, k + 1};
}

std::vector<Separation> enumerate_separations(const Matroid& m, std::size_t order) {
  require_enumerable(m, "separation enumeration");
  std::vector<Separation> out;
  if (m.size() == 0 || order == 0) return out;
  // Keys contain element 0, so enumerating subsets of the rest covers each
  // separation once.
  const ElementSet ground = m.ground();
  const ElementSet rest = ground.without(0);
  for_each_subset(rest, [&](ElementSet s) {
    const ElementSet side = s.with(0);
    if (side.size() < order || ground.size() - side.size() < order) return;
    if (auto sep = separation_of(m, side); sep && sep->order == order) out.push_back(*sep);
  });
  std::sort(out.begin(), out.end(), [](const Separation& a, const Separation& b) {
    return canonical_less(a.side_a, b.side_a);
  });
  return out;
}

std::vector<Separation> enumerate_2separations(const Matroid& m) {
  return enumerate_separations(m, 2);
}

bool is_n_connected(const Matroid& m, std::size_t n) {
  require_enumerable(m, "is_n_connected");
  if (m.size() == 0) return true;
  bool ok = true;
  for_each_subset(m.ground().without(0), [&](ElementSet s) {
    if (!ok) return;
    if (auto sep = separation_of(m, s.with(0)); sep && sep->order < n) ok = false;
  });
  return ok;
}

}  // namespace mdecomp
