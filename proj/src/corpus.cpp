#include "mdecomp/corpus.hpp"

#include <random>
#include <utility>

namespace mdecomp {

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

Matroid cycle(std::size_t n) {
  std::vector<std::string> vertices;
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(vertices[i], vertices[(i + 1) % n]);
  return graphic(vertices, edges);
}

}  // namespace

Matroid k4_minus_edge() {
  return graphic({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}, {"a", "d"}});
}

std::vector<Fixture> uniform_fixtures() {
  std::vector<Fixture> out;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t r = 0; r <= n; ++r) {
      out.push_back({"U" + std::to_string(r) + "," + std::to_string(n), uniform(r, n)});
    }
  }
  return out;
}

std::vector<Fixture> graphic_fixtures() {
  std::vector<Fixture> out;
  for (std::size_t n = 3; n <= 6; ++n) out.push_back({"C" + std::to_string(n), cycle(n)});
  out.push_back({"K4", graphic({"a", "b", "c", "d"}, {{"a", "b"},
                                                      {"a", "c"},
                                                      {"a", "d"},
                                                      {"b", "c"},
                                                      {"b", "d"},
                                                      {"c", "d"}})});
  out.push_back({"K4-e", k4_minus_edge()});
  out.push_back({"two-triangles", graphic({"a", "b", "c", "d"}, {{"a", "b"},
                                                                 {"a", "c"},
                                                                 {"b", "c"},
                                                                 {"b", "d"},
                                                                 {"c", "d"}})});
  out.push_back({"triangle-square", graphic({"a", "b", "c", "d", "e"}, {{"a", "b"},
                                                                        {"b", "c"},
                                                                        {"c", "a"},
                                                                        {"b", "d"},
                                                                        {"d", "e"},
                                                                        {"e", "a"}})});
  out.push_back({"W4", graphic({"h", "a", "b", "c", "d"}, {{"a", "b"},
                                                           {"b", "c"},
                                                           {"c", "d"},
                                                           {"d", "a"},
                                                           {"h", "a"},
                                                           {"h", "b"},
                                                           {"h", "c"},
                                                           {"h", "d"}})});
  out.push_back({"theta", graphic({"u", "v", "x", "y", "z"}, {{"u", "x"},
                                                              {"x", "v"},
                                                              {"u", "y"},
                                                              {"y", "v"},
                                                              {"u", "z"},
                                                              {"z", "v"}})});
  return out;
}

std::vector<Fixture> random_gf2_fixtures(std::size_t count, std::uint64_t seed) {
  // Raw engine output only, so the corpus is identical across standard
  // libraries.
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::vector<Fixture> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t rows = 2 + rng() % 3;
    const std::size_t cols = 4 + rng() % 6;
    std::vector<std::vector<int>> columns(cols, std::vector<int>(rows));
    for (auto& column : columns) {
      for (int& bit : column) bit = static_cast<int>(rng() & 1U);
    }
    out.push_back({"gf2-" + std::to_string(k), linear_gf2(columns)});
  }
  return out;
}

std::vector<Fixture> fixture_corpus() {
  std::vector<Fixture> out = uniform_fixtures();
  for (auto& f : graphic_fixtures()) out.push_back(std::move(f));
  for (auto& f : random_gf2_fixtures()) out.push_back(std::move(f));
  return out;
}

}  // namespace mdecomp
