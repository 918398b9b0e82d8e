#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace legcalc {

// Runs one command line (args excludes the program name). JSON goes to out,
// diagnostics to err. Returns 0 on success, 1 on validation failure, 2 on a
// usage error.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace legcalc
