#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bch_atlas::cli {

// Exit codes: 0 success, 1 verify found a disagreement, 2 usage or computation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bch_atlas::cli
