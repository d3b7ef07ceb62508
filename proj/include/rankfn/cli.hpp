#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankfn {

/// Runs one command; args exclude the program name. Exit status: 0 pass,
/// 1 check failed, 2 input could not be checked.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rankfn
