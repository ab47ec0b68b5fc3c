#ifndef MDECOMP_TESTS_HELPERS_HPP_
#define MDECOMP_TESTS_HELPERS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mdecomp/error.hpp"
#include "mdecomp/matroid.hpp"

namespace testing {

/// The ErrorCode thrown by f, or nullopt if it returns normally.
template <typename F>
std::optional<mdecomp::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const mdecomp::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::vector<std::vector<std::string>> circuit_labels(const mdecomp::Matroid& m) {
  std::vector<std::vector<std::string>> out;
  for (mdecomp::ElementSet c : m.circuits()) out.push_back(m.labels_of(c));
  return out;
}

}  // namespace testing

#define CHECK_ERROR(expr, code) \
  CHECK(::testing::error_of([&] { (void)(expr); }) == std::optional(::mdecomp::ErrorCode::code))

#endif  // MDECOMP_TESTS_HELPERS_HPP_
