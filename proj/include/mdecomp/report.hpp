#ifndef MDECOMP_REPORT_HPP_
#define MDECOMP_REPORT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mdecomp {

/// Tally for one named property: how many instances were examined and how
/// many failed. Only the first failure message is kept.
struct Check {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

class Report {
 public:
  /// The check called `name`, created on first use. Order of first use is
  /// preserved.
  Check& check(std::string_view name);
  const std::vector<Check>& checks() const { return checks_; }

  void pass(std::string_view name, std::size_t n = 1) { check(name).cases += n; }
  void fail(std::string_view name, std::string message);
  /// Records one case of `name`, failed unless `ok`.
  void expect(std::string_view name, bool ok, std::string_view message = {});

  void merge(const Report& other);

  bool ok() const;
  std::size_t cases() const;
  std::size_t failures() const;
  /// One line per check: "name: cases=N failures=F[ first=...]".
  std::string summary() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace mdecomp

#endif  // MDECOMP_REPORT_HPP_
