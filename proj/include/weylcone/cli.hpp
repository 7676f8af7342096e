#ifndef WEYLCONE_CLI_HPP
#define WEYLCONE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace weylcone {

// Parses and runs one CLI invocation (args exclude the program name).
// Results go to out, diagnostics to err. Exit codes: 0 success,
// 1 verification mismatch, 2 usage/domain error, 3 internal failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace weylcone

#endif
