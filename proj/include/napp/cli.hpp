#ifndef NAPP_CLI_HPP
#define NAPP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace napp {

// Entry point shared by the binary and the tests. Returns the process exit
// status: 0 on success (for `classify`, when the input is an n-application),
// 1 when `classify` rejects, 2 on any error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace napp

#endif
