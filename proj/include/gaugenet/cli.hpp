#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gnet {

/// Runs one CLI invocation. Returns 0 on success, 2 on validation errors,
/// 1 on numerical-contract violations. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gnet
