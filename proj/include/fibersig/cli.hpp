#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibersig {

// args excludes the program name. Exit codes: 0 success, 1 parse or validation
// error, 2 a failed identity (inconsistency).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibersig
