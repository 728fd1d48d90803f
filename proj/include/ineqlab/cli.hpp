#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ineqlab {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Runs one command line (without the program name). Exit codes: 0 when
/// every executed check holds or is an expected falsification, 1 on a
/// violation or inconclusive result, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ineqlab
