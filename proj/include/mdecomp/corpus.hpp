#ifndef MDECOMP_CORPUS_HPP_
#define MDECOMP_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mdecomp/matroid.hpp"

namespace mdecomp {

struct Fixture {
  std::string name;
  Matroid matroid;
};

inline constexpr std::uint64_t kCorpusSeed = 20240607;
inline constexpr std::size_t kRandomFixtureCount = 25;

/// Graphic matroid of K4 minus an edge; circuits {0,1,2}, {2,3,4}, {0,1,3,4}.
Matroid k4_minus_edge();

/// U(r,n) for 1 <= n <= 7 and 0 <= r <= n.
std::vector<Fixture> uniform_fixtures();
/// Cycles C3..C6, K4, K4 - e, two triangles on a shared edge, a triangle and
/// a square on a shared edge, the wheel W4, and the theta graph (2,2,2).
std::vector<Fixture> graphic_fixtures();
/// Column matroids of random 0/1 matrices with 2..4 rows and 4..9 columns.
std::vector<Fixture> random_gf2_fixtures(std::size_t count = kRandomFixtureCount,
                                         std::uint64_t seed = kCorpusSeed);
/// All of the above.
std::vector<Fixture> fixture_corpus();

}  // namespace mdecomp

#endif  // MDECOMP_CORPUS_HPP_
