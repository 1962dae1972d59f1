#ifndef KLFACTOR_CLI_HPP
#define KLFACTOR_CLI_HPP

#include <string>
#include <vector>

namespace klfactor {

// Runs one CLI request.  Returns the exit status (0 ok, 1 property-check
// failure, 2 parse error) and writes the serialized report to out.
int run_cli(const std::vector<std::string>& args, std::string& out);

}  // namespace klfactor

#endif
