#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffgen::cli {

// Exit codes: 0 pass, 1 numeric failure, 2 usage or precondition error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliffgen::cli
