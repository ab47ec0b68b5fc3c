#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdecomp/connectivity.hpp"
#include "mdecomp/decomposition.hpp"
#include "mdecomp/error.hpp"
#include "mdecomp/matroid.hpp"
#include "mdecomp/separation_calculus.hpp"
#include "mdecomp/spec_io.hpp"
#include "mdecomp/verification.hpp"

namespace mdecomp::cli {

namespace {

constexpr std::size_t kMaxCap = 22;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kAxiomViolation:
    case ErrorCode::kDuplicateElement:
    case ErrorCode::kUnknownElement:
    case ErrorCode::kUnknownVertex:
    case ErrorCode::kInvalidMatrix:
    case ErrorCode::kInvalidParams:
      return kBadInput;
    case ErrorCode::kDisconnected:
      return kDisconnectedInput;
    case ErrorCode::kTooSmall:
      return kInputTooSmall;
    case ErrorCode::kGroundSetTooLarge:
      return kOverCap;
    default:
      return kVerificationFailed;
  }
}

class CapGuard {
 public:
  explicit CapGuard(std::size_t cap) : saved_(enumeration_cap()) { set_enumeration_cap(cap); }
  ~CapGuard() { set_enumeration_cap(saved_); }
  CapGuard(const CapGuard&) = delete;
  CapGuard& operator=(const CapGuard&) = delete;

 private:
  std::size_t saved_;
};

struct Options {
  std::string input = "-";
  std::size_t cap = kDefaultEnumerationCap;
  std::string validate = "full";
  std::uint64_t seed = 0;
  std::string info_format = "text";
  std::size_t k = 2;
  bool good_only = false;
  std::string decompose_format = "json";
  std::string suite = "all";
};

Validation validation_of(const std::string& name) {
  static const std::map<std::string, Validation> kByName{
      {"none", Validation::kNone}, {"antichain", Validation::kAntichain}, {"full", Validation::kFull}};
  return kByName.at(name);
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) fail(ErrorCode::kParseError, "cannot read '" + path + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

void print_json(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; }

int cmd_info(const Matroid& m, const Options& o, std::ostream& out) {
  const bool connected = is_connected(m);
  const bool three = is_n_connected(m, 3);
  if (o.info_format == "json") {
    nlohmann::ordered_json j;
    j["ground_size"] = m.size();
    j["rank"] = m.rank();
    j["circuits"] = m.circuits().size();
    j["connected"] = connected;
    j["three_connected"] = three;
    print_json(out, j);
  } else {
    out << "ground size: " << m.size() << '\n'
        << "rank: " << m.rank() << '\n'
        << "circuits: " << m.circuits().size() << '\n'
        << "connected: " << (connected ? "true" : "false") << '\n'
        << "3-connected: " << (three ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_separations(const Matroid& m, const Options& o, std::ostream& out) {
  if (o.good_only && o.k != 2) fail(ErrorCode::kInvalidParams, "--good-only needs --k=2");
  auto seps = enumerate_separations(m, o.k);
  if (o.k != 2 || (!o.good_only && !is_connected(m))) {
    print_json(out, separations_to_json(m, o.k, seps));
    return kOk;
  }
  if (!is_connected(m)) fail(ErrorCode::kDisconnected, "goodness needs a connected matroid");
  std::vector<bool> good;
  for (const Separation& s : seps) good.push_back(is_good(m, s, seps));
  if (o.good_only) {
    std::vector<Separation> kept;
    for (std::size_t i = 0; i < seps.size(); ++i) {
      if (good[i]) kept.push_back(seps[i]);
    }
    seps = std::move(kept);
    good.assign(seps.size(), true);
  }
  print_json(out, separations_to_json(m, o.k, seps, &good));
  return kOk;
}

int cmd_decompose(const Matroid& m, const Options& o, std::ostream& out) {
  const DecompositionReport report = make_report(m, build_tree(m));
  if (o.decompose_format == "dot") {
    out << to_dot(report);
  } else {
    print_json(out, to_json(report));
  }
  return kOk;
}

int cmd_verify(const Matroid& m, const Options& o, std::ostream& out) {
  Report report;
  if (o.suite == "lemmas" || o.suite == "all") report.merge(run_lemma_suite(m, o.seed));
  if (o.suite == "duality" || o.suite == "all") report.merge(run_duality_suite(m, o.seed));
  out << report.summary() << (report.ok() ? "PASS" : "FAIL") << '\n';
  return report.ok() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Canonical 2-separation tree decompositions of finite matroids", "mdecomp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cap", o.cap, "Largest ground set for subset enumeration")
      ->check(CLI::Range(std::size_t{1}, kMaxCap));
  app.add_option("--validate", o.validate, "Circuit axiom checks for circuit specs")
      ->check(CLI::IsMember({"none", "antichain", "full"}));
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  auto* info = app.add_subcommand("info", "Ground size, rank, circuit count, connectivity");
  info->add_option("--format", o.info_format)->check(CLI::IsMember({"text", "json"}));
  auto* separations = app.add_subcommand("separations", "List k-separations as JSON");
  separations->add_option("--k", o.k, "Separation order")->check(CLI::PositiveNumber);
  separations->add_flag("--good-only", o.good_only, "Only good 2-separations");
  auto* decompose = app.add_subcommand("decompose", "Canonical tree decomposition");
  decompose->add_option("--format", o.decompose_format)->check(CLI::IsMember({"json", "dot"}));
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", o.suite)->check(CLI::IsMember({"lemmas", "duality", "all"}));
  for (auto* sub : {info, separations, decompose, verify}) {
    sub->add_option("spec", o.input, "Matroid spec file, '-' for stdin");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  const CapGuard cap(o.cap);
  try {
    const Matroid m = parse_matroid_spec(read_input(o.input, in), validation_of(o.validate));
    if (*info) return cmd_info(m, o, out);
    if (*separations) return cmd_separations(m, o, out);
    if (*decompose) return cmd_decompose(m, o, out);
    return cmd_verify(m, o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace mdecomp::cli
