#ifndef TPA_CLI_HPP
#define TPA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tpa {

// Exit codes: 0 ok, 2 parse/IO error, 3 invalid algebra, 4 cap exceeded,
// 5 theorem violation.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitCap = 4;
constexpr int kExitViolation = 5;

// Full command-line front end; callable in-process so tests can capture the
// exact bytes the binary would emit. Timings go to `err`, reports to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tpa

#endif  // TPA_CLI_HPP
