#ifndef NILID_CLI_HPP_
#define NILID_CLI_HPP_

#include <iosfwd>  // for ostream

namespace nilid::cli {

  //! Exit codes of the `nilid` tool. No other codes are returned.
  enum ExitCode : int {
    kReachable       = 0,  // solve: identity reachable; verify/oracle: success
    kNotReachable    = 1,  // solve: identity not reachable
    kInputError      = 2,  // unreadable or malformed input, bad arguments
    kCertificateFail = 3,  // verify: rejected; oracle lp: solvers disagree
    kResourceLimit   = 4,  // oracle budget exceeded
  };

  //! Runs `nilid solve|verify|oracle ...`. Results go to `out` (or the
  //! --out file), diagnostics to `err`.
  int run(int argc, char const* const* argv, std::ostream& out,
          std::ostream& err);

}  // namespace nilid::cli

#endif  // NILID_CLI_HPP_
