#pragma once

#include <ostream>

namespace ctube {

inline constexpr int kRankCeiling = 12;

/// Exit codes: 0 ok, 1 failed verification, 2 usage or invalid input,
/// 3 mutation target not a summand, 4 node limit exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ctube
