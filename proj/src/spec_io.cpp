#include "mdecomp/spec_io.hpp"

#include <utility>

#include "mdecomp/error.hpp"

namespace mdecomp {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& what) { fail(ErrorCode::kParseError, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_error(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t as_count(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    parse_error(std::string("'") + name + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

/// Strings are taken as is, integers are printed.
std::string as_label(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  parse_error("labels must be strings or integers");
}

std::vector<std::string> as_labels(const json& v, const char* what) {
  if (!v.is_array()) parse_error(std::string("'") + what + "' must be an array");
  std::vector<std::string> out;
  for (const json& x : v) out.push_back(as_label(x));
  return out;
}

void reject_reserved(const std::vector<std::string>& labels) {
  for (const auto& l : labels) {
    if (!l.empty() && l.front() == '@') {
      parse_error("label '" + l + "' uses the '@' prefix reserved for virtual elements");
    }
  }
}

std::vector<std::string> optional_labels(const json& spec) {
  if (!spec.contains("labels")) return {};
  auto labels = as_labels(spec.at("labels"), "labels");
  reject_reserved(labels);
  return labels;
}

}  // namespace

Matroid matroid_from_json(const json& spec, Validation validation) {
  if (!spec.is_object()) parse_error("a matroid spec must be a JSON object");
  if (spec.contains("dual")) return dual(matroid_from_json(spec.at("dual"), validation));
  const json& kind_field = field(spec, "kind");
  if (!kind_field.is_string()) parse_error("'kind' must be a string");
  const std::string kind = kind_field.get<std::string>();

  if (kind == "uniform") {
    const std::size_t r = as_count(spec, "r");
    const std::size_t n = as_count(spec, "n");
    if (r > n) fail(ErrorCode::kInvalidParams, "uniform matroid needs r <= n");
    return uniform(r, n);
  }
  if (kind == "graphic") {
    const auto vertices = as_labels(field(spec, "vertices"), "vertices");
    const json& edges_field = field(spec, "edges");
    if (!edges_field.is_array()) parse_error("'edges' must be an array");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const json& e : edges_field) {
      if (!e.is_array() || e.size() != 2) parse_error("each edge must be a pair of vertices");
      edges.emplace_back(as_label(e[0]), as_label(e[1]));
    }
    return graphic(vertices, edges, optional_labels(spec));
  }
  if (kind == "gf2") {
    const json& cols = field(spec, "columns");
    if (!cols.is_array()) parse_error("'columns' must be an array");
    std::vector<std::vector<int>> columns;
    for (const json& c : cols) {
      if (!c.is_array()) parse_error("each column must be an array of bits");
      auto& column = columns.emplace_back();
      for (const json& bit : c) {
        if (!bit.is_number_integer()) parse_error("column entries must be 0 or 1");
        column.push_back(bit.get<int>());
      }
    }
    return linear_gf2(columns, optional_labels(spec));
  }
  if (kind == "circuits") {
    auto ground = as_labels(field(spec, "ground"), "ground");
    reject_reserved(ground);
    const json& circuits_field = field(spec, "circuits");
    if (!circuits_field.is_array()) parse_error("'circuits' must be an array");
    std::vector<std::vector<std::string>> circuits;
    for (const json& c : circuits_field) circuits.push_back(as_labels(c, "circuit"));
    return Matroid::from_circuit_labels(std::move(ground), circuits, validation);
  }
  parse_error("unknown kind '" + kind + "'");
}

Matroid parse_matroid_spec(std::string_view text, Validation validation) {
  json spec;
  try {
    spec = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  return matroid_from_json(spec, validation);
}

std::vector<std::vector<std::string>> circuit_labels(const Matroid& m) {
  std::vector<std::vector<std::string>> out;
  for (ElementSet c : m.circuits()) out.push_back(m.labels_of(c));
  return out;
}

DecompositionReport make_report(const Matroid& m, const DecompositionTree& tree) {
  DecompositionReport report;
  for (std::size_t v = 0; v < tree.node_count(); ++v) {
    const Matroid& t = tree.torsos[v];
    report.nodes.push_back({v, m.labels_of(tree.shape.parts[v]),
                            {t.labels(), circuit_labels(t), std::string(to_string(tree.kinds[v]))}});
  }
  for (std::size_t i = 0; i < tree.shape.edges.size(); ++i) {
    const auto [a, b] = tree.shape.edges[i];
    report.edges.push_back({a, b, m.labels_of(tree.edge_separations[i].side_a)});
  }
  report.adhesion = report.edges.empty() ? 0 : 2;
  // build_tree rejects redundant trees.
  report.irredundant = true;
  return report;
}

ordered_json to_json(const DecompositionReport& report) {
  ordered_json nodes = ordered_json::array();
  for (const NodeReport& n : report.nodes) {
    ordered_json torso;
    torso["ground"] = n.torso.ground;
    torso["circuits"] = n.torso.circuits;
    torso["kind"] = n.torso.kind;
    ordered_json node;
    node["id"] = n.id;
    node["part"] = n.part;
    node["torso"] = std::move(torso);
    nodes.push_back(std::move(node));
  }
  ordered_json edges = ordered_json::array();
  for (const EdgeReport& e : report.edges) {
    ordered_json edge;
    edge["a"] = e.a;
    edge["b"] = e.b;
    edge["separation"] = e.separation;
    edges.push_back(std::move(edge));
  }
  ordered_json out;
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  out["adhesion"] = report.adhesion;
  out["irredundant"] = report.irredundant;
  return out;
}

DecompositionReport report_from_json(const json& j) {
  try {
    DecompositionReport report;
    for (const json& n : j.at("nodes")) {
      const json& t = n.at("torso");
      report.nodes.push_back({n.at("id").get<std::size_t>(),
                              n.at("part").get<std::vector<std::string>>(),
                              {t.at("ground").get<std::vector<std::string>>(),
                               t.at("circuits").get<std::vector<std::vector<std::string>>>(),
                               t.at("kind").get<std::string>()}});
    }
    for (const json& e : j.at("edges")) {
      report.edges.push_back({e.at("a").get<std::size_t>(), e.at("b").get<std::size_t>(),
                              e.at("separation").get<std::vector<std::string>>()});
    }
    report.adhesion = j.at("adhesion").get<std::size_t>();
    report.irredundant = j.at("irredundant").get<bool>();
    return report;
  } catch (const json::exception& e) {
    parse_error(std::string("malformed decomposition report: ") + e.what());
  }
}

std::string to_dot(const DecompositionReport& report) {
  auto escaped = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  auto braces = [](const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
    return out + "}";
  };
  std::string out = "graph decomposition {\n";
  for (const NodeReport& n : report.nodes) {
    out += "  n" + std::to_string(n.id) + " [label=\"" +
           escaped(std::to_string(n.id) + ": " + braces(n.part)) + "\\n" + escaped(n.torso.kind) +
           "\"];\n";
  }
  for (const EdgeReport& e : report.edges) {
    out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) +
           " [label=\"" + escaped(braces(e.separation)) + "\"];\n";
  }
  return out + "}\n";
}

ordered_json separations_to_json(const Matroid& m, std::size_t k, std::span<const Separation> seps,
                                 const std::vector<bool>* good) {
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < seps.size(); ++i) {
    ordered_json s;
    s["side_a"] = m.labels_of(seps[i].side_a);
    s["side_b"] = m.labels_of(seps[i].side_b);
    s["order"] = seps[i].order;
    if (good) s["good"] = static_cast<bool>((*good)[i]);
    list.push_back(std::move(s));
  }
  ordered_json out;
  out["k"] = k;
  out["count"] = seps.size();
  out["separations"] = std::move(list);
  return out;
}

}  // namespace mdecomp
