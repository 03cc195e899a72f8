#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dps {

inline constexpr const char* kSchemaId = "dpscalc/1";

// Runs one dpscalc invocation; args excludes the program name.
// Returns 0 on success, 1 on a usage error, 2 on a verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dps
