// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Time limits are wall-clock and pinned below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "mdecomp/connectivity.hpp"
#include "mdecomp/corpus.hpp"
#include "mdecomp/decomposition.hpp"
#include "mdecomp/duality.hpp"
#include "mdecomp/error.hpp"
#include "mdecomp/localization.hpp"
#include "mdecomp/separation_calculus.hpp"
#include "mdecomp/verification.hpp"
#include "support/oracle.hpp"

using namespace mdecomp;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kK4MinusEdgeLimitSeconds = 1.0;
constexpr double kLemmaSuiteLimitSeconds = 120.0;
constexpr double kUniquenessLimitSeconds = 300.0;
constexpr int kDeterminismRuns = 10;

/// Outcome of one criterion: failures are described, successes summarized.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void absorb(const Report& r, const std::string& where) {
    for (const Check& c : r.checks()) {
      if (!c.ok()) failures.push_back(where + ": " + c.name + " (" + c.first_failure + ")");
    }
  }
};

bool connected_fixture(const Fixture& f) { return f.matroid.size() >= 3 && is_connected(f.matroid); }

Outcome k4_minus_edge_path() {
  Outcome o;
  const Matroid m = k4_minus_edge();
  // Oracle: all 2^5 subsets by brute force, then nestedness by hand.
  const oracle::Brute brute = oracle::from(m);
  o.require(brute.two_separation_keys() ==
                std::vector<oracle::Mask>{oracle::mask({0, 1}), oracle::mask({0, 1, 2})},
            "brute-force 2-separations");

  const DecompositionTree tree = build_tree(m);
  o.require(tree.node_count() == 3 && tree.shape.edges.size() == 2, "3 nodes, 2 edges");
  std::map<std::uint64_t, std::pair<TorsoKind, std::size_t>> by_part;
  for (std::size_t v = 0; v < tree.node_count(); ++v) {
    by_part[tree.shape.parts[v].bits()] = {tree.kinds[v], tree.degree(v)};
  }
  const std::map<std::uint64_t, std::pair<TorsoKind, std::size_t>> expected{
      {oracle::mask({0, 1}), {TorsoKind::kCircuit, 1}},
      {oracle::mask({2}), {TorsoKind::kCocircuit, 2}},
      {oracle::mask({3, 4}), {TorsoKind::kCircuit, 1}}};
  o.require(by_part == expected, "parts {0,1} {2} {3,4} with kinds circuit-cocircuit-circuit on a path");
  o.summary = "path {0,1} - {2} - {3,4}";
  return o;
}

Outcome small_uniform() {
  Outcome o;
  const Matroid u24 = uniform(2, 4);
  o.require(oracle::from(u24).two_separation_keys().empty(), "U(2,4) has no 2-separation (brute force)");
  const DecompositionTree t24 = build_tree(u24);
  o.require(t24.node_count() == 1 && t24.kinds[0] == TorsoKind::kThreeConnected,
            "U(2,4) is one 3-connected node");
  for (auto [r, kind] : {std::pair{std::size_t{3}, TorsoKind::kCircuit},
                         std::pair{std::size_t{1}, TorsoKind::kCocircuit}}) {
    const Matroid m = uniform(r, 4);
    const std::string name = "U(" + std::to_string(r) + ",4)";
    o.require(oracle::from(m).two_separation_keys().size() == 3, name + " has three 2-separations");
    o.require(good_2separations(m).empty(), name + " has no good 2-separation");
    const DecompositionTree t = build_tree(m);
    o.require(t.node_count() == 1 && t.kinds[0] == kind, name + " is a single " + std::string(to_string(kind)) + " node");
  }
  o.summary = "U(2,4) 3-connected, U(3,4) circuit, U(1,4) cocircuit";
  return o;
}

Outcome lemma_suite(const std::vector<Fixture>& corpus) {
  Outcome o;
  Report total;
  for (const Fixture& f : corpus) {
    const Report r = run_lemma_suite(f.matroid);
    o.absorb(r, f.name);
    total.merge(r);
  }
  for (const char* name : {"corner", "symmetric difference", "switching", "infinite switching",
                           "traces of crossing circuits are not properly nested",
                           "corner of order > 2 needs two elements outside the union"}) {
    const auto& checks = total.checks();
    const auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    o.require(it != checks.end() && it->cases > 0, std::string("no cases for '") + name + "'");
  }
  o.summary = std::to_string(corpus.size()) + " fixtures, " + std::to_string(total.cases()) + " cases";
  return o;
}

Outcome connectivity(const std::vector<Fixture>& corpus) {
  Outcome o;
  std::size_t pairs = 0;
  for (const Fixture& f : corpus) {
    if (f.matroid.size() > 7) continue;
    const Report r = check_connectivity(f.matroid, kCorpusSeed);
    o.absorb(r, f.name);
    for (const Check& c : r.checks()) {
      if (c.name == "phi is submodular") pairs += c.cases;
    }
    // Independent oracle for the rank identity.
    const oracle::Brute brute = oracle::from(f.matroid);
    for (oracle::Mask x = 0; x <= brute.full(); ++x) {
      if (phi(f.matroid, ElementSet::from_bits(x)) != brute.phi(x)) {
        o.failures.push_back(f.name + ": phi differs from brute force");
        break;
      }
      if (x == brute.full()) break;
    }
  }
  o.summary = std::to_string(pairs) + " (X,Y) pairs, " + std::to_string(kDelTrials) + " basis pairs per subset";
  return o;
}

Outcome localization(const std::vector<Fixture>& corpus) {
  Outcome o;
  std::size_t families = 0;
  for (const Fixture& f : corpus) {
    if (!connected_fixture(f) || f.matroid.size() > kExhaustivePairLimit) continue;
    for (const auto& family : localization_families(f.matroid)) {
      ++families;
      o.absorb(check_localization(f.matroid, family), f.name);
    }
  }
  o.summary = std::to_string(families) + " localizations";
  return o;
}

Outcome round_trips(const std::vector<Fixture>& corpus) {
  Outcome o;
  std::size_t splits = 0;
  for (const Fixture& f : corpus) {
    if (!connected_fixture(f)) continue;
    for (const Separation& s : enumerate_2separations(f.matroid)) {
      ++splits;
      const SplitResult r = split_along(f.matroid, s);
      o.require(same_matroid(two_sum(r.first, r.second, r.shared), f.matroid),
                f.name + ": split along " + format_set(f.matroid, s.side_a));
    }
    o.require(same_matroid(reassemble(build_tree(f.matroid)), f.matroid), f.name + ": reassembly");
  }
  o.summary = std::to_string(splits) + " splits";
  return o;
}

Outcome duality(const std::vector<Fixture>& corpus) {
  Outcome o;
  for (const Fixture& f : corpus) {
    o.absorb(run_duality_suite(f.matroid, kCorpusSeed), f.name);
    if (!connected_fixture(f)) continue;
    // Kind multisets swap circuit and cocircuit.
    auto counts = [](const DecompositionTree& t) {
      std::map<TorsoKind, std::size_t> c;
      for (TorsoKind k : t.kinds) ++c[k];
      return c;
    };
    auto primal = counts(build_tree(f.matroid));
    const auto dual_counts = counts(build_tree(dual(f.matroid)));
    std::swap(primal[TorsoKind::kCircuit], primal[TorsoKind::kCocircuit]);
    std::erase_if(primal, [](const auto& kv) { return kv.second == 0; });
    o.require(primal == dual_counts, f.name + ": kind multisets");
  }
  o.summary = "all four verifiers on " + std::to_string(corpus.size()) + " fixtures";
  return o;
}

Outcome uniqueness(const std::vector<Fixture>& corpus) {
  Outcome o;
  std::size_t searched = 0;
  for (const Fixture& f : corpus) {
    if (!connected_fixture(f) || f.matroid.size() > kUniquenessLimit) continue;
    ++searched;
    const auto all = enumerate_primitive_decompositions(f.matroid);
    o.require(all.size() == 1, f.name + ": " + std::to_string(all.size()) + " decompositions");
    if (all.size() == 1) {
      o.require(decompositions_isomorphic(all[0], build_tree(f.matroid).shape).has_value(),
                f.name + ": differs from the canonical tree");
    }
  }
  o.summary = std::to_string(searched) + " matroids searched";
  return o;
}

Outcome primitivity(const std::vector<Fixture>& corpus) {
  Outcome o;
  // Fixtures, their duals, and every torso of their canonical trees.
  std::vector<std::pair<std::string, Matroid>> pool;
  for (const Fixture& f : corpus) {
    pool.emplace_back(f.name, f.matroid);
    pool.emplace_back(f.name + "*", dual(f.matroid));
    if (!connected_fixture(f)) continue;
    const DecompositionTree t = build_tree(f.matroid);
    for (std::size_t v = 0; v < t.node_count(); ++v) {
      pool.emplace_back(f.name + " torso " + std::to_string(v), t.torsos[v]);
    }
  }
  std::size_t examined = 0;
  for (const auto& [name, m] : pool) {
    if (m.size() < 3 || m.size() > 7 || !is_connected(m) || !is_primitive(m)) continue;
    ++examined;
    try {
      const TorsoKind kind = classify_torso(m);
      const PrimitiveReport r = verify_primitive_structure(m);
      o.require(r.kind == kind, name + ": structure report disagrees with classification");
      // 3-element circuits and cocircuits are vacuously 3-connected.
      if (m.size() >= 4) {
        const int hits = int{is_n_connected(m, 3)} + int{is_circuit_matroid(m)} + int{is_cocircuit_matroid(m)};
        o.require(hits == 1, name + ": " + std::to_string(hits) + " kinds apply");
      }
    } catch (const Error& e) {
      o.failures.push_back(name + ": " + e.what());
    }
  }
  o.summary = std::to_string(examined) + " primitive matroids";
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  const std::string spec =
      R"({"kind":"graphic","vertices":["a","b","c","d"],)"
      R"("edges":[["a","b"],["b","c"],["a","c"],["c","d"],["a","d"]]})";
  std::string first;
  for (int i = 0; i < kDeterminismRuns; ++i) {
    std::istringstream in(spec);
    std::ostringstream out, err;
    o.require(cli::run({"decompose"}, in, out, err) == cli::kOk, "decompose exits 0");
    if (i == 0) first = out.str();
    o.require(out.str() == first, "run " + std::to_string(i) + " differs");
  }
  o.require(!first.empty(), "empty output");
  o.summary = std::to_string(kDeterminismRuns) + " runs, " + std::to_string(first.size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<Fixture> corpus = fixture_corpus();
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;  // 0 means no limit
  };
  const std::vector<Criterion> criteria{
      {"k4-minus-edge-canonical-path", k4_minus_edge_path, kK4MinusEdgeLimitSeconds},
      {"uniform-four-element-trichotomy", small_uniform, 0},
      {"lemma-suite-zero-failures", [&] { return lemma_suite(corpus); }, kLemmaSuiteLimitSeconds},
      {"connectivity-submodular-rank-identity-del-invariant", [&] { return connectivity(corpus); }, 0},
      {"localization-suite", [&] { return localization(corpus); }, 0},
      {"split-and-reassembly-round-trips", [&] { return round_trips(corpus); }, 0},
      {"duality-verifiers-and-kind-swap", [&] { return duality(corpus); }, 0},
      {"unique-primitive-decomposition", [&] { return uniqueness(corpus); }, kUniquenessLimitSeconds},
      {"primitivity-trichotomy", [&] { return primitivity(corpus); }, 0},
      {"cli-decompose-determinism", cli_determinism, 0},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("threw: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.failures.push_back("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    const bool ok = o.failures.empty();
    all_ok &= ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (ok ? "PASS " : "FAIL ") << c.name << " [" << timing;
    if (c.limit_seconds > 0) std::cout << " < " << c.limit_seconds << " s";
    std::cout << "] " << (ok ? o.summary : o.failures.front()) << '\n';
    for (std::size_t i = 1; i < o.failures.size() && i < 5; ++i) std::cout << "     " << o.failures[i] << '\n';
  }
  return all_ok ? 0 : 1;
}
