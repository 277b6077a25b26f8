#ifndef CLUSTERFORGE_CLI_HPP
#define CLUSTERFORGE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace clusterforge::cli {

/*
 * Runs one command given its arguments (without the program name), writing
 * canonical results to out and diagnostics to err.  Exit codes: 0 success,
 * 1 computational error, 2 usage error, 3 a conjecture check found a genuine
 * violation.
 */
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace clusterforge::cli

#endif
