#pragma once

#include <string>
#include <vector>

namespace graspsyn {

// Command-line entry point of the graspsyn tool. Returns the process
// exit status: 0 on success, 1 when an analysis fails (a machine-readable
// error.json is left in the output directory), 2 on usage errors.
int run_cli(int argc, const char* const* argv);

// In-process invocation; args exclude the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace graspsyn
