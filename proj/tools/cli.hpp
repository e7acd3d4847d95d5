#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fkf::cli {

// exit codes: 0 success, 1 verification/engine failure, 2 usage error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace fkf::cli
