#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mqm::cli {

// args excludes the program name. Exit codes: 0 ok, 1 property violated,
// 2 input or capacity error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mqm::cli
