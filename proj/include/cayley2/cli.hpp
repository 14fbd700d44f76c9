#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace cayley2::cli {

// Runs one CLI invocation; args excludes the program name.  All user-facing
// text goes to `out`/`err` so tests can capture it in-process.  Returns the
// process exit status: 0 exactly when every requested verification passed.
int run(std::vector<std::string> args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace cayley2::cli
