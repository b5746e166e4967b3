#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rtc::cli {

// Exit codes: 0 success / VERIFIED / FOUND, 1 COUNTEREXAMPLE / proven absent
// / property false, 2 usage or input error, 3 budget exhausted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rtc::cli
