#pragma once

// Command implementations behind the hwm executable.  Each takes pre-split
// option values, writes its report to `out` (diagnostics to `err`), and
// returns the process exit code:
//
//   0  Unitary          (or success, for commands without a verdict)
//   1  Nonunitary
//   2  NotParameter     (also: input rejected as not g-dominant)
//   64 usage error      (unparseable weight, wrong dimension, bad flag value)
//
// Weight text is comma-separated exact rationals; "p/2" and ".5" forms are
// both accepted on input, output is always lowest-terms "p/q".  e6 weights
// may be given with 6 coordinates (expanded as x6 -> x6, x6, -x6) and e7
// weights with 7 (x7 -> x7, -x7); full 8-tuples are validated against the
// same constraints.

#include <iosfwd>
#include <string>

namespace hwm {

inline constexpr int kExitUsage = 64;

int cmd_classify(const std::string& family, int n, const std::string& weight,
                 const std::string& form, const std::string& format,
                 std::ostream& out, std::ostream& err);

int cmd_infchar(const std::string& family, int n, const std::string& dominant,
                const std::string& format, std::ostream& out, std::ostream& err);

int cmd_theta(int m, int max_level, const std::string& format,
              std::ostream& out, std::ostream& err);

}  // namespace hwm
