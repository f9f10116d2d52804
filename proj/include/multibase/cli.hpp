#pragma once

#include <iosfwd>

namespace multibase {

// Entry point behind the multibase binary. Exit codes:
//   0 success, 1 usage/parse error, 2 domain validation error,
//   3 numeric failure, 4 resource limit.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace multibase
