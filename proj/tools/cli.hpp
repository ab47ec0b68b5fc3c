#ifndef MDECOMP_TOOLS_CLI_HPP_
#define MDECOMP_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace mdecomp::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadInput = 2,
  kDisconnectedInput = 3,
  kInputTooSmall = 4,
  kOverCap = 5,
};

/**
 * Runs the tool on `args` (without the program name). The spec is read from
 * the named file, or from `in` when the file is "-" or omitted. Results go to
 * `out`, diagnostics to `err`. The enumeration cap is restored on return.
 */
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mdecomp::cli

#endif  // MDECOMP_TOOLS_CLI_HPP_
