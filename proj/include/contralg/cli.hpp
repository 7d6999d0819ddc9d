#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace contralg::cli {

// Exit codes: 0 pass, 1 law violation, 2 usage or input error, 3 budget
// exceeded. `in` backs the "-" file argument so commands can be piped.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace contralg::cli
