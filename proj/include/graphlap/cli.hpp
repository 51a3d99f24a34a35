#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace graphlap::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal_error = 1;      // chain violation, failed lift: implementation bugs
inline constexpr int singular_infinite = 2;   // singular truncation on a ball that is not saturated
inline constexpr int validation_failed = 3;
inline constexpr int window_exceeded = 4;     // coherent mode only
inline constexpr int usage = 64;
}  // namespace exit_code

/// Runs one command line. The JSON report goes to `out` (or the --out
/// file), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Writes one regression-baseline file per family: seeded random targets
/// on B_0..B_max_radius and the solver's outputs for them. Returns the
/// paths written, in family order.
std::vector<std::filesystem::path> emit_fixtures(std::uint64_t seed, const std::vector<std::string>& families,
                                                 std::size_t max_radius, const std::filesystem::path& out_dir);

}  // namespace graphlap::cli
