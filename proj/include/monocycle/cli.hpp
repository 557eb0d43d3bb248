#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monocycle {

// Exit codes: 0 success (Confirmed, ExtremalCase, Inconclusive, plain
// output), 2 Refuted-at-this-n, 1 usage or runtime error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace monocycle
