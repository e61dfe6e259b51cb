#pragma once

#include <iosfwd>

namespace starcover::cli {

/// Exit codes: 0 success, 1 a checked identity failed, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace starcover::cli
