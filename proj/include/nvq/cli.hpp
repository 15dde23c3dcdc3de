#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nvq {

/// Runs the command-line front end. Exit codes: 0 all asserted axioms pass,
/// 1 at least one axiom fails, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nvq
