#include "mdecomp/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

#include "mdecomp/error.hpp"

namespace mdecomp {

namespace {

// Rank tables hold one byte per subset.
constexpr std::size_t kRankTableLimit = 22;

std::atomic<std::size_t> g_enumeration_cap{kDefaultEnumerationCap};

}  // namespace

std::size_t enumeration_cap() { return g_enumeration_cap.load(); }

void set_enumeration_cap(std::size_t cap) {
  if (cap == 0 || cap > kRankTableLimit) {
    fail(ErrorCode::kInvalidParams,
         "enumeration cap must be in 1.." + std::to_string(kRankTableLimit));
  }
  g_enumeration_cap.store(cap);
}

void require_enumerable(const Matroid& m, std::string_view operation) {
  if (m.size() > enumeration_cap()) {
    fail(ErrorCode::kGroundSetTooLarge,
         std::string(operation) + " enumerates subsets of a ground set of size " +
             std::to_string(m.size()) + " (cap " + std::to_string(enumeration_cap()) + ")");
  }
}

struct Matroid::Data {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Element> index;
  std::vector<ElementSet> circuits;

  std::once_flag table_once;
  std::vector<unsigned char> rank_table;
};

Matroid::Matroid() : Matroid(std::make_shared<Data>()) {}

Matroid::Matroid(std::shared_ptr<Data> data) : data_(std::move(data)) {}

Matroid Matroid::from_circuits(std::vector<std::string> labels,
                               std::vector<ElementSet> circuits, Validation validation) {
  if (labels.size() > kMaxGroundSize) {
    fail(ErrorCode::kGroundSetTooLarge,
         "ground set of size " + std::to_string(labels.size()) + " exceeds " +
             std::to_string(kMaxGroundSize));
  }
  auto data = std::make_shared<Data>();
  for (Element e = 0; e < labels.size(); ++e) {
    if (!data->index.emplace(labels[e], e).second) {
      fail(ErrorCode::kDuplicateElement, "element '" + labels[e] + "' occurs twice");
    }
  }
  data->labels = std::move(labels);
  const ElementSet ground = ElementSet::full(data->labels.size());
  for (ElementSet c : circuits) {
    if (!c.subset_of(ground)) {
      fail(ErrorCode::kInvalidParams, "circuit uses elements outside the ground set");
    }
  }
  std::sort(circuits.begin(), circuits.end(), CanonicalLess{});
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  data->circuits = std::move(circuits);
  Matroid m(std::move(data));

  if (validation == Validation::kNone) return m;
  const auto& cs = m.data_->circuits;
  if (!cs.empty() && cs.front().empty()) {
    fail(ErrorCode::kAxiomViolation, "(C1) the empty set is listed as a circuit");
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      // Sorted by size, so only cs[i] can be the smaller one.
      if (cs[i].proper_subset_of(cs[j])) {
        fail(ErrorCode::kAxiomViolation, "(C2) circuit " + format_set(m, cs[i]) +
                                             " is a proper subset of circuit " +
                                             format_set(m, cs[j]));
      }
    }
  }
  if (validation == Validation::kFull) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        const ElementSet both = cs[i] & cs[j];
        for (Element x : both) {
          if (m.is_independent((cs[i] | cs[j]).without(x))) {
            fail(ErrorCode::kAxiomViolation,
                 "(C3) no circuit inside the union of " + format_set(m, cs[i]) + " and " +
                     format_set(m, cs[j]) + " minus " + m.label(x));
          }
        }
      }
    }
  }
  return m;
}

Matroid Matroid::from_circuit_labels(std::vector<std::string> labels,
                                     const std::vector<std::vector<std::string>>& circuits,
                                     Validation validation) {
  std::unordered_map<std::string, Element> index;
  for (Element e = 0; e < labels.size(); ++e) index.emplace(labels[e], e);
  std::vector<ElementSet> sets;
  sets.reserve(circuits.size());
  for (const auto& c : circuits) {
    ElementSet s;
    for (const auto& l : c) {
      auto it = index.find(l);
      if (it == index.end()) {
        fail(ErrorCode::kUnknownElement, "circuit element '" + l + "' is not in the ground set");
      }
      s = s.with(it->second);
    }
    sets.push_back(s);
  }
  return from_circuits(std::move(labels), std::move(sets), validation);
}

std::size_t Matroid::size() const { return data_->labels.size(); }
const std::vector<std::string>& Matroid::labels() const { return data_->labels; }
std::span<const ElementSet> Matroid::circuits() const { return data_->circuits; }

std::optional<Element> Matroid::find(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

Element Matroid::index_of(std::string_view label) const {
  auto e = find(label);
  if (!e) fail(ErrorCode::kUnknownElement, "no element labelled '" + std::string(label) + "'");
  return *e;
}

ElementSet Matroid::subset(std::initializer_list<std::string_view> labels) const {
  ElementSet s;
  for (auto l : labels) s = s.with(index_of(l));
  return s;
}

ElementSet Matroid::subset(const std::vector<std::string>& labels) const {
  ElementSet s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

std::vector<std::string> Matroid::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (Element e : s) out.push_back(label(e));
  return out;
}

const std::vector<unsigned char>* Matroid::rank_table() const {
  const std::size_t n = size();
  if (n > kRankTableLimit) return nullptr;
  Data& d = *data_;
  std::call_once(d.table_once, [&d, n] {
    const std::size_t count = std::size_t{1} << n;
    // First pass: dependent[s] = s contains a circuit.
    std::vector<unsigned char> dependent(count, 0);
    for (ElementSet c : d.circuits) dependent[c.bits()] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      for (std::size_t s = 0; s < count; ++s) {
        if ((s & bit) && dependent[s ^ bit]) dependent[s] = 1;
      }
    }
    std::vector<unsigned char> rank(count, 0);
    for (std::size_t s = 1; s < count; ++s) {
      if (!dependent[s]) {
        rank[s] = static_cast<unsigned char>(std::popcount(s));
        continue;
      }
      unsigned char best = 0;
      for (std::size_t rest = s; rest; rest &= rest - 1) {
        best = std::max(best, rank[s & ~(rest & -rest)]);
      }
      rank[s] = best;
    }
    d.rank_table = std::move(rank);
  });
  return &d.rank_table;
}

bool Matroid::is_independent(ElementSet s) const {
  if (const auto* table = rank_table()) return (*table)[s.bits()] == s.size();
  for (ElementSet c : data_->circuits) {
    if (c.subset_of(s)) return false;
  }
  return true;
}

bool Matroid::is_circuit(ElementSet s) const {
  if (s.empty() || is_independent(s)) return false;
  for (Element e : s) {
    if (!is_independent(s.without(e))) return false;
  }
  return true;
}

std::size_t Matroid::rank(ElementSet s) const {
  if (const auto* table = rank_table()) return (*table)[s.bits()];
  return extend_to_maximal_independent(ElementSet{}, s).size();
}

ElementSet Matroid::extend_to_maximal_independent(ElementSet base, ElementSet within) const {
  std::vector<Element> order = within.elements();
  return extend_to_maximal_independent(base, within, order);
}

ElementSet Matroid::extend_to_maximal_independent(ElementSet base, ElementSet within,
                                                  std::span<const Element> order) const {
  if (!base.subset_of(within)) {
    fail(ErrorCode::kPreconditionViolated, "the set to extend is not inside the target set");
  }
  if (!is_independent(base)) {
    fail(ErrorCode::kDependentInput, format_set(*this, base) + " is dependent");
  }
  ElementSet result = base;
  for (Element e : order) {
    if (!within.contains(e) || result.contains(e)) continue;
    if (is_independent(result.with(e))) result = result.with(e);
  }
  return result;
}

ElementSet Matroid::fundamental_circuit(Element e, ElementSet independent) const {
  if (!is_independent(independent)) {
    fail(ErrorCode::kDependentInput, format_set(*this, independent) + " is dependent");
  }
  if (independent.contains(e)) {
    fail(ErrorCode::kPreconditionViolated, label(e) + " already lies in the independent set");
  }
  const ElementSet span = independent.with(e);
  if (is_independent(span)) {
    fail(ErrorCode::kNotDependent, format_set(*this, span) + " is independent");
  }
  std::optional<ElementSet> found;
  for (ElementSet c : data_->circuits) {
    if (!c.contains(e) || !c.subset_of(span)) continue;
    if (found) {
      lemma_failure("two circuits " + format_set(*this, *found) + " and " +
                    format_set(*this, c) + " inside " + format_set(*this, span));
    }
    found = c;
  }
  if (!found) lemma_failure("dependent set without a circuit through " + label(e));
  return *found;
}

bool Matroid::operator==(const Matroid& other) const {
  return data_ == other.data_ ||
         (labels() == other.labels() &&
          std::equal(circuits().begin(), circuits().end(), other.circuits().begin(),
                     other.circuits().end()));
}

Matroid uniform(std::size_t rank, std::size_t n) {
  if (rank > n) {
    fail(ErrorCode::kInvalidParams,
         "rank " + std::to_string(rank) + " exceeds size " + std::to_string(n));
  }
  if (n > kMaxGroundSize) fail(ErrorCode::kGroundSetTooLarge, "uniform matroid too large");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<ElementSet> circuits;
  if (rank < n) {
    const std::size_t k = rank + 1;
    // Gosper's hack over all k-subsets of an n-set.
    std::uint64_t s = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = ElementSet::full(n).bits();
    while (true) {
      circuits.push_back(ElementSet::from_bits(s));
      if (circuits.size() > 2'000'000) {
        fail(ErrorCode::kInvalidParams, "uniform matroid has too many circuits");
      }
      const std::uint64_t c = s & -s;
      const std::uint64_t r = s + c;
      if (r == 0 || (r & ~limit) != 0) break;
      s = (((r ^ s) >> 2) / c) | r;
      if ((s & ~limit) != 0) break;
    }
  }
  return Matroid::from_circuits(std::move(labels), std::move(circuits), Validation::kNone);
}

Matroid graphic(const std::vector<std::string>& vertices,
                const std::vector<std::pair<std::string, std::string>>& edges,
                std::vector<std::string> edge_labels) {
  std::map<std::string, std::size_t> vindex;
  for (const auto& v : vertices) {
    if (!vindex.emplace(v, vindex.size()).second) {
      fail(ErrorCode::kDuplicateElement, "vertex '" + v + "' occurs twice");
    }
  }
  if (edges.size() > kMaxGroundSize) {
    fail(ErrorCode::kGroundSetTooLarge, "graph has more than 64 edges");
  }
  if (edge_labels.empty()) {
    for (std::size_t i = 0; i < edges.size(); ++i) edge_labels.push_back(std::to_string(i));
  } else if (edge_labels.size() != edges.size()) {
    fail(ErrorCode::kInvalidParams, "edge label count differs from edge count");
  }
  struct Incidence {
    std::size_t to;
    Element edge;
  };
  std::vector<std::vector<Incidence>> adj(vertices.size());
  std::vector<ElementSet> circuits;
  for (Element i = 0; i < edges.size(); ++i) {
    auto a = vindex.find(edges[i].first);
    auto b = vindex.find(edges[i].second);
    if (a == vindex.end() || b == vindex.end()) {
      fail(ErrorCode::kUnknownVertex, "edge " + edge_labels[i] + " has an unknown endpoint");
    }
    if (a->second == b->second) {
      circuits.push_back(ElementSet::singleton(i));
      continue;
    }
    adj[a->second].push_back({b->second, i});
    adj[b->second].push_back({a->second, i});
  }

  // Simple cycles through their least vertex `start`, via paths over larger
  // vertices. Each cycle is found once per direction; the sort below dedupes.
  const std::size_t nv = vertices.size();
  std::vector<char> on_path(nv, 0);
  for (std::size_t start = 0; start < nv; ++start) {
    auto extend = [&](auto&& self, std::size_t v, ElementSet used, Element first_edge) -> void {
      for (const Incidence& inc : adj[v]) {
        if (used.contains(inc.edge)) continue;
        if (inc.to == start) {
          if (inc.edge != first_edge) circuits.push_back(used.with(inc.edge));
          continue;
        }
        if (inc.to < start || on_path[inc.to]) continue;
        on_path[inc.to] = 1;
        self(self, inc.to, used.with(inc.edge), used.empty() ? inc.edge : first_edge);
        on_path[inc.to] = 0;
      }
    };
    on_path[start] = 1;
    extend(extend, start, ElementSet{}, kMaxGroundSize);
    on_path[start] = 0;
  }
  return Matroid::from_circuits(std::move(edge_labels), std::move(circuits),
                                Validation::kNone);
}

Matroid linear_gf2(const std::vector<std::vector<int>>& columns, std::vector<std::string> labels) {
  const std::size_t n = columns.size();
  if (n > kMaxGroundSize) fail(ErrorCode::kGroundSetTooLarge, "too many columns");
  if (n > enumeration_cap()) {
    fail(ErrorCode::kGroundSetTooLarge,
         "linear_gf2 enumerates subsets of " + std::to_string(n) + " columns (cap " +
             std::to_string(enumeration_cap()) + ")");
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  if (rows > 64) fail(ErrorCode::kInvalidMatrix, "columns longer than 64 entries");
  std::vector<std::uint64_t> packed(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (columns[i].size() != rows) {
      fail(ErrorCode::kInvalidMatrix, "column " + std::to_string(i) + " has a different length");
    }
    for (std::size_t r = 0; r < rows; ++r) {
      const int bit = columns[i][r];
      if (bit != 0 && bit != 1) {
        fail(ErrorCode::kInvalidMatrix, "entries must be 0 or 1");
      }
      if (bit) packed[i] |= std::uint64_t{1} << r;
    }
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  } else if (labels.size() != n) {
    fail(ErrorCode::kInvalidParams, "label count differs from column count");
  }

  // Over GF(2) a minimal dependent set sums to zero, and a zero-sum set is a
  // circuit iff none of its proper nonempty subsets sums to zero.
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint64_t> sum(count, 0);
  for (std::size_t s = 1; s < count; ++s) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
    sum[s] = sum[s & (s - 1)] ^ packed[low];
  }
  std::vector<unsigned char> dependent(count, 0);
  for (std::size_t s = 1; s < count; ++s) dependent[s] = sum[s] == 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < count; ++s) {
      if ((s & bit) && dependent[s ^ bit]) dependent[s] = 1;
    }
  }
  std::vector<ElementSet> circuits;
  for (std::size_t s = 1; s < count; ++s) {
    if (sum[s] != 0) continue;
    bool minimal = true;
    for (std::size_t rest = s; rest && minimal; rest &= rest - 1) {
      if (dependent[s & ~(rest & -rest)]) minimal = false;
    }
    if (minimal) circuits.push_back(ElementSet::from_bits(s));
  }
  return Matroid::from_circuits(std::move(labels), std::move(circuits), Validation::kNone);
}

std::vector<ElementSet> bases(const Matroid& m) {
  require_enumerable(m, "bases");
  const std::size_t r = m.rank();
  std::vector<ElementSet> out;
  for_each_subset(m.ground(), [&](ElementSet s) {
    if (s.size() == r && m.is_independent(s)) out.push_back(s);
  });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

Matroid dual(const Matroid& m) {
  require_enumerable(m, "dual");
  const ElementSet ground = m.ground();
  const std::size_t r = m.rank();
  // S is codependent iff it meets every basis, i.e. E - S is not spanning.
  auto codependent = [&](ElementSet s) { return m.rank(s.complement_in(ground)) < r; };
  std::vector<ElementSet> cocircuits;
  for_each_subset(ground, [&](ElementSet s) {
    if (s.empty() || !codependent(s)) return;
    for (Element e : s) {
      if (codependent(s.without(e))) return;
    }
    cocircuits.push_back(s);
  });
  return Matroid::from_circuits(m.labels(), std::move(cocircuits), Validation::kNone);
}

Matroid restriction(const Matroid& m, ElementSet s) {
  if (!s.subset_of(m.ground())) {
    fail(ErrorCode::kPreconditionViolated, "restriction to a set outside the ground set");
  }
  std::vector<ElementSet> circuits;
  for (ElementSet c : m.circuits()) {
    if (c.subset_of(s)) circuits.push_back(compress(c, s));
  }
  return Matroid::from_circuits(m.labels_of(s), std::move(circuits), Validation::kNone);
}

Matroid contraction(const Matroid& m, ElementSet s) {
  if (!s.subset_of(m.ground())) {
    fail(ErrorCode::kPreconditionViolated, "contraction of a set outside the ground set");
  }
  return dual(restriction(dual(m), s.complement_in(m.ground())));
}

bool is_connected(const Matroid& m) {
  const std::size_t n = m.size();
  if (n <= 1) return true;
  std::vector<ElementSet> together(n);
  for (ElementSet c : m.circuits()) {
    for (Element e : c) together[e] |= c;
  }
  for (Element e = 0; e < n; ++e) {
    if (together[e] != m.ground()) return false;
  }
  return true;
}

bool same_matroid(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.circuits().size() != b.circuits().size()) return false;
  std::vector<Element> to_a(b.size());
  for (Element e = 0; e < b.size(); ++e) {
    auto mapped = a.find(b.label(e));
    if (!mapped) return false;
    to_a[e] = *mapped;
  }
  std::vector<ElementSet> mapped;
  mapped.reserve(b.circuits().size());
  for (ElementSet c : b.circuits()) {
    ElementSet t;
    for (Element e : c) t = t.with(to_a[e]);
    mapped.push_back(t);
  }
  std::sort(mapped.begin(), mapped.end(), CanonicalLess{});
  return std::equal(mapped.begin(), mapped.end(), a.circuits().begin(), a.circuits().end());
}

Matroid relabel(const Matroid& m, std::vector<std::string> labels) {
  if (labels.size() != m.size()) {
    fail(ErrorCode::kInvalidParams, "relabel needs one label per element");
  }
  return Matroid::from_circuits(std::move(labels),
                                std::vector<ElementSet>(m.circuits().begin(), m.circuits().end()),
                                Validation::kNone);
}

std::string format_set(const Matroid& m, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s) {
    if (!first) out += ",";
    first = false;
    out += e < m.size() ? m.label(e) : "#" + std::to_string(e);
  }
  return out + "}";
}

}  // namespace mdecomp
