#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace glr::cli {

  // Runs one command. `args` excludes the program name. Returns the exit code:
  // 0 on success, 1 on a domain or resource error, 2 on usage or format errors.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace glr::cli
