#ifndef HYPERCONV_CLI_HPP
#define HYPERCONV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperconv {

/// Runs the command-line front end. Exit code 0 on success, 2 on usage or
/// validation errors, 3 when a computation finished but a numerical identity
/// failed its tolerance (axiom FAIL, bound violation, ...).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hyperconv

#endif
