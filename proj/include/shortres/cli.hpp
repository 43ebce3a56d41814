#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shortres {

/// args excludes the program name. Exit codes: 0 ran, 1 a law was refuted,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shortres
