#ifndef MDECOMP_SPEC_IO_HPP_
#define MDECOMP_SPEC_IO_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mdecomp/connectivity.hpp"
#include "mdecomp/decomposition.hpp"
#include "mdecomp/matroid.hpp"

namespace mdecomp {

/**
 * Builds a matroid from a JSON specification, one of
 *   {"kind": "uniform", "r": R, "n": N}
 *   {"kind": "graphic", "vertices": [...], "edges": [[u, v], ...]}
 *   {"kind": "gf2", "columns": [[bit, ...], ...]}
 *   {"kind": "circuits", "ground": [...], "circuits": [[...], ...]}
 *   {"dual": SPEC}
 * Graphic and gf2 specs accept an optional "labels" array. Labels starting
 * with '@' are reserved for virtual elements and rejected.
 *
 * Throws kParseError for malformed specs; kernel errors pass through.
 */
Matroid matroid_from_json(const nlohmann::json& spec, Validation validation = Validation::kFull);

/// Same, from JSON text.
Matroid parse_matroid_spec(std::string_view text, Validation validation = Validation::kFull);

struct TorsoReport {
  std::vector<std::string> ground;
  std::vector<std::vector<std::string>> circuits;
  std::string kind;

  bool operator==(const TorsoReport&) const = default;
};

struct NodeReport {
  std::size_t id = 0;
  std::vector<std::string> part;
  TorsoReport torso;

  bool operator==(const NodeReport&) const = default;
};

struct EdgeReport {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<std::string> separation;  // the side at node a

  bool operator==(const EdgeReport&) const = default;
};

/// Label-level view of a canonical decomposition; adhesion is 0 without
/// edges.
struct DecompositionReport {
  std::vector<NodeReport> nodes;
  std::vector<EdgeReport> edges;
  std::size_t adhesion = 0;
  bool irredundant = false;

  bool operator==(const DecompositionReport&) const = default;
};

DecompositionReport make_report(const Matroid& m, const DecompositionTree& tree);

nlohmann::ordered_json to_json(const DecompositionReport& report);
/// Inverse of to_json. Throws kParseError.
DecompositionReport report_from_json(const nlohmann::json& j);

/// Graphviz rendering: one vertex per node, one edge per tree edge.
std::string to_dot(const DecompositionReport& report);

nlohmann::ordered_json separations_to_json(const Matroid& m, std::size_t k,
                                           std::span<const Separation> seps,
                                           const std::vector<bool>* good = nullptr);

std::vector<std::vector<std::string>> circuit_labels(const Matroid& m);

}  // namespace mdecomp

#endif  // MDECOMP_SPEC_IO_HPP_
