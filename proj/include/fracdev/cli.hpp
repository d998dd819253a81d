#ifndef FRACDEV_CLI_HPP
#define FRACDEV_CLI_HPP

#include <string>
#include <vector>

namespace fracdev::cli {

// Runs one fracdev invocation; args excludes the program name. Returns 0 on
// success, 2 on usage errors (unknown flags, missing options), 1 on runtime
// errors. Diagnostics go to stderr, data to stdout or --out.
int dispatch(const std::vector<std::string>& args);

}  // namespace fracdev::cli

#endif  // FRACDEV_CLI_HPP
