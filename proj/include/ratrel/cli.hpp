#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratrel {

/// Runs one CLI command. Exit code 0 on success / all axioms passing, 1 on
/// an axiom or certification failure, 2 on usage or parse errors. Output is
/// deterministic: identical argv (including seeds) produces byte-identical
/// output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratrel
