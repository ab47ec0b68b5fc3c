#include "mdecomp/localization.hpp"

#include <algorithm>
#include <cstdio>

#include "mdecomp/error.hpp"
#include "mdecomp/separation_calculus.hpp"

namespace mdecomp {

namespace {

bool is_2separation_side(const Matroid& m, ElementSet side) {
  const ElementSet rest = side.complement_in(m.ground());
  return side.size() >= 2 && rest.size() >= 2 && phi(m, side) == 1;
}

std::string shared_label_for(const Matroid& m, const Separation& s) {
  // FNV-1a over the labels of the key side.
  std::uint64_t h = 1469598103934665603ULL;
  for (Element e : s.key()) {
    for (char ch : m.label(e)) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ULL;
    }
    h ^= 0x1f;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%08llx",
                static_cast<unsigned long long>((h >> 32) ^ (h & 0xffffffffULL)));
  return std::string("@s:") + buf;
}

bool is_loop_or_coloop(const Matroid& m, Element e) {
  bool in_circuit = false;
  for (ElementSet c : m.circuits()) {
    if (!c.contains(e)) continue;
    if (c.size() == 1) return true;
    in_circuit = true;
  }
  return !in_circuit;
}

}  // namespace

ElementSet Localization::virtual_elements() const {
  ElementSet out;
  for (std::size_t i = 0; i < family_.size(); ++i) out = out.with(virtual_element(i));
  return out;
}

LocalElement Localization::element(Element local_index) const {
  if (local_index < real_base_index_.size()) {
    return {LocalElement::Kind::kReal, real_base_index_[local_index]};
  }
  return {LocalElement::Kind::kVirtual, local_index - real_base_index_.size()};
}

ElementSet Localization::real_to_local(ElementSet y) const {
  ElementSet out;
  for (Element e : y & real_) out = out.with(real_local_index_[e]);
  return out;
}

ElementSet Localization::forward(ElementSet y) const {
  ElementSet out = real_to_local(y);
  for (std::size_t i = 0; i < family_.size(); ++i) {
    if (y.intersects(family_[i])) out = out.with(virtual_element(i));
  }
  return out;
}

ElementSet Localization::inverse(ElementSet z) const {
  ElementSet out;
  for (Element u : z) {
    const LocalElement le = element(u);
    out |= le.kind == LocalElement::Kind::kReal ? ElementSet::singleton(le.index)
                                                : family_[le.index];
  }
  return out;
}

Localization localize(const Matroid& m, std::vector<ElementSet> family,
                      std::vector<std::string> virtual_labels) {
  if (!is_connected(m)) fail(ErrorCode::kDisconnected, "localization needs a connected matroid");
  ElementSet covered;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].intersects(covered)) {
      fail(ErrorCode::kFamilyNotDisjoint, "family member " + std::to_string(i) +
                                              " meets an earlier member");
    }
    covered |= family[i];
    if (!family[i].subset_of(m.ground()) || !is_2separation_side(m, family[i])) {
      fail(ErrorCode::kNotA2Separation, "family member " + std::to_string(i) + " " +
                                            format_set(m, family[i]) +
                                            " is not a 2-separation side");
    }
  }
  if (virtual_labels.empty()) {
    for (std::size_t i = 0; i < family.size(); ++i) virtual_labels.push_back("@e" + std::to_string(i));
  } else if (virtual_labels.size() != family.size()) {
    fail(ErrorCode::kInvalidParams, "need one virtual label per family member");
  }

  Localization l;
  l.base_ = m;
  l.family_ = std::move(family);
  l.real_ = covered.complement_in(m.ground());
  l.real_local_index_.assign(m.size(), 0);
  std::vector<std::string> labels;
  for (Element e : l.real_) {
    l.real_local_index_[e] = labels.size();
    l.real_base_index_.push_back(e);
    labels.push_back(m.label(e));
  }
  for (auto& v : virtual_labels) labels.push_back(std::move(v));

  std::vector<ElementSet> circuits;
  for (ElementSet c : m.circuits()) {
    const bool inside_member = std::any_of(l.family_.begin(), l.family_.end(),
                                           [c](ElementSet x) { return c.subset_of(x); });
    if (!inside_member) circuits.push_back(l.forward(c));
  }
  try {
    l.local_ = Matroid::from_circuits(std::move(labels), std::move(circuits),
                                      Validation::kAntichain);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kAxiomViolation) throw;
    lemma_failure(std::string("localization circuits are not a clutter: ") + e.what());
  }
  return l;
}

ElementSet phi_u(const Localization& l, ElementSet y) { return l.forward(y); }

ElementSet phi_u_inverse(const Localization& l, ElementSet z) { return l.inverse(z); }

ElementSet local_independents_correspond(const Localization& l, ElementSet independent) {
  const Matroid& m = l.base();
  if (!m.is_independent(independent)) {
    fail(ErrorCode::kDependentInput, format_set(m, independent) + " is dependent");
  }
  ElementSet out = l.real_to_local(independent);
  const auto family = l.family();
  for (std::size_t i = 0; i < family.size(); ++i) {
    if ((independent & family[i]).size() == m.rank(family[i])) {
      out = out.with(l.virtual_element(i));
    }
  }
  return out;
}

std::vector<ElementSet> local_bases(const Localization& l) {
  std::vector<ElementSet> direct = bases(l.local());
  std::vector<ElementSet> image;
  for (ElementSet b : bases(l.base())) image.push_back(local_independents_correspond(l, b));
  std::sort(image.begin(), image.end(), CanonicalLess{});
  image.erase(std::unique(image.begin(), image.end()), image.end());
  if (direct != image) {
    lemma_failure("bases of the localization differ from the images of the bases of M (" +
                  std::to_string(direct.size()) + " vs " + std::to_string(image.size()) + ")");
  }
  return direct;
}

std::optional<Separation> project_2sep(const Localization& l, ElementSet s_u) {
  const Matroid& local = l.local();
  const ElementSet rest_u = s_u.complement_in(local.ground());
  if (!s_u.subset_of(local.ground()) || s_u.size() < 2 || rest_u.size() < 2) {
    fail(ErrorCode::kPreconditionViolated, "both sides need at least two elements");
  }
  const bool local_sep = phi(local, s_u) == 1;
  const ElementSet side = l.inverse(s_u);
  const bool base_sep = is_2separation_side(l.base(), side);
  if (local_sep != base_sep) {
    lemma_failure("2-separation correspondence fails for " + format_set(local, s_u));
  }
  if (!base_sep) return std::nullopt;
  return Separation{side, l.inverse(rest_u), 2};
}

Separation lift_2sep_subset(const Localization& l, const Separation& s, ElementSet s_u) {
  const Matroid& m = l.base();
  const Matroid& local = l.local();
  if (s.universe() != m.ground() || s.side_a.intersects(s.side_b) ||
      !is_2separation_side(m, s.side_a)) {
    fail(ErrorCode::kPreconditionViolated, "(S, ~S) is not a 2-separation of M");
  }
  const ElementSet rest_u = s_u.complement_in(local.ground());
  if (!s_u.subset_of(local.ground()) || s_u.size() < 2 || rest_u.size() < 2) {
    fail(ErrorCode::kPreconditionViolated, "both sides need at least two elements");
  }
  if (!s_u.subset_of(l.forward(s.side_a))) {
    fail(ErrorCode::kPreconditionViolated, "S_U is not inside phi_U(S)");
  }
  if (!rest_u.subset_of(l.forward(s.side_b))) {
    fail(ErrorCode::kPreconditionViolated, "E(U) - S_U is not inside phi_U(~S)");
  }
  if (phi(local, s_u) != 1) {
    lemma_failure("lifted set " + format_set(local, s_u) + " is not a 2-separation side");
  }
  return {s_u, rest_u, 2};
}

bool goodness_corresponds(const Localization& l, ElementSet s_u,
                          std::span<const Separation> local_2seps,
                          std::span<const Separation> base_2seps) {
  const Matroid& local = l.local();
  const ElementSet rest_u = s_u.complement_in(local.ground());
  if (!is_2separation_side(local, s_u)) {
    fail(ErrorCode::kPreconditionViolated, format_set(local, s_u) + " is not a 2-separation side");
  }
  const Separation in_local{s_u, rest_u, 2};
  const Separation in_base{l.inverse(s_u), l.inverse(rest_u), 2};
  const bool local_good = is_good(local, in_local, local_2seps);
  const bool base_good = is_good(l.base(), in_base, base_2seps);
  if (local_good != base_good) {
    lemma_failure("goodness differs between " + format_set(local, s_u) + " and its preimage");
  }
  return local_good;
}

bool goodness_corresponds(const Localization& l, ElementSet s_u) {
  const auto local_seps = enumerate_2separations(l.local());
  const auto base_seps = enumerate_2separations(l.base());
  return goodness_corresponds(l, s_u, local_seps, base_seps);
}

Matroid two_sum(const Matroid& m1, const Matroid& m2, const std::string& shared) {
  const auto e1 = m1.find(shared);
  const auto e2 = m2.find(shared);
  if (!e1 || !e2) fail(ErrorCode::kBadSharedElement, "'" + shared + "' is missing from a summand");
  for (const auto& l : m1.labels()) {
    if (l != shared && m2.find(l)) {
      fail(ErrorCode::kBadSharedElement, "summands also share '" + l + "'");
    }
  }
  if (is_loop_or_coloop(m1, *e1) || is_loop_or_coloop(m2, *e2)) {
    fail(ErrorCode::kBadSharedElement, "'" + shared + "' is a loop or coloop of a summand");
  }

  const std::size_t n1 = m1.size() - 1;
  std::vector<std::string> labels;
  for (Element e = 0; e < m1.size(); ++e) {
    if (e != *e1) labels.push_back(m1.label(e));
  }
  for (Element e = 0; e < m2.size(); ++e) {
    if (e != *e2) labels.push_back(m2.label(e));
  }
  // Drop the shared element and pack the remaining bits.
  auto from_first = [&](ElementSet c) {
    const std::uint64_t low = c.bits() & ((std::uint64_t{1} << *e1) - 1);
    const std::uint64_t high = (c.bits() >> (*e1 + 1)) << *e1;
    return ElementSet::from_bits(low | high);
  };
  auto from_second = [&](ElementSet c) {
    const std::uint64_t low = c.bits() & ((std::uint64_t{1} << *e2) - 1);
    const std::uint64_t high = (c.bits() >> (*e2 + 1)) << *e2;
    return ElementSet::from_bits((low | high) << n1);
  };

  std::vector<ElementSet> circuits;
  std::vector<ElementSet> through1;
  std::vector<ElementSet> through2;
  for (ElementSet c : m1.circuits()) {
    (c.contains(*e1) ? through1 : circuits).push_back(from_first(c));
  }
  for (ElementSet c : m2.circuits()) {
    if (c.contains(*e2)) {
      through2.push_back(from_second(c));
    } else {
      circuits.push_back(from_second(c));
    }
  }
  for (ElementSet a : through1) {
    for (ElementSet b : through2) circuits.push_back(a | b);
  }
  return Matroid::from_circuits(std::move(labels), std::move(circuits), Validation::kAntichain);
}

SplitResult split_along(const Matroid& m, const Separation& s) {
  if (s.universe() != m.ground() || s.side_a.intersects(s.side_b) ||
      !is_2separation_side(m, s.side_a)) {
    fail(ErrorCode::kNotA2Separation, format_set(m, s.side_a) + " is not a 2-separation side");
  }
  std::string shared = shared_label_for(m, s);
  Localization first = localize(m, {s.side_b}, {shared});
  Localization second = localize(m, {s.side_a}, {shared});
  SplitResult out{first.local(), second.local(), shared};
  if (!same_matroid(two_sum(out.first, out.second, shared), m)) {
    lemma_failure("2-sum of the split along " + format_set(m, s.side_a) +
                  " does not reproduce the matroid");
  }
  return out;
}

}  // namespace mdecomp
