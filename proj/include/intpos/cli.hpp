#ifndef INTPOS_CLI_HPP
#define INTPOS_CLI_HPP

#include <string>
#include <vector>

namespace intpos {

// Command-line entry point. Exit codes: 0 on success, 1 on a domain failure
// (non-member input, size mismatch, budget), 2 on a parse error.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);

}  // namespace intpos

#endif
