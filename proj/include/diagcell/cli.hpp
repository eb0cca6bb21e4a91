#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diagcell {

// Exit codes: 0 success, 1 validation failure, 2 bad flags or input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Convenience form; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diagcell
