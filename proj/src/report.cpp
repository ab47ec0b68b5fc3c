#include "mdecomp/report.hpp"

#include <algorithm>

namespace mdecomp {

Check& Report::check(std::string_view name) {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [name](const Check& c) { return c.name == name; });
  if (it != checks_.end()) return *it;
  Check& c = checks_.emplace_back();
  c.name = name;
  return c;
}

void Report::fail(std::string_view name, std::string message) {
  Check& c = check(name);
  ++c.cases;
  if (c.failures++ == 0) c.first_failure = std::move(message);
}

void Report::expect(std::string_view name, bool ok, std::string_view message) {
  if (ok) {
    pass(name);
  } else {
    fail(name, std::string(message));
  }
}

void Report::merge(const Report& other) {
  for (const Check& o : other.checks_) {
    Check& c = check(o.name);
    c.cases += o.cases;
    if (c.failures == 0 && o.failures > 0) c.first_failure = o.first_failure;
    c.failures += o.failures;
  }
}

bool Report::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.ok(); });
}

std::size_t Report::cases() const {
  std::size_t n = 0;
  for (const Check& c : checks_) n += c.cases;
  return n;
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const Check& c : checks_) n += c.failures;
  return n;
}

std::string Report::summary() const {
  std::string out;
  for (const Check& c : checks_) {
    out += c.name + ": cases=" + std::to_string(c.cases) + " failures=" + std::to_string(c.failures);
    if (!c.ok()) out += " first=" + c.first_failure;
    out += '\n';
  }
  return out;
}

}  // namespace mdecomp
