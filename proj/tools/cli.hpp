// Command-line front end: subcommand dispatch, disk-cache management and
// multi-format output (JSON lines, CSV, LaTeX) over the computation surfaces.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace macsym::cli {

/// Exit codes: 0 success, 1 falsification found in a scan, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace macsym::cli
