#pragma once

#include "hmsector/sector.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hmsector {

enum class Command { certify, table, minors, cfrac, factor, roots, report };

struct RunConfig {
    Command command = Command::certify;
    std::string poly;      // inline coefficients
    std::string poly_file; // one polynomial per line, '#' comments
    std::optional<int> M;
    MethodChoice method = MethodChoice::automatic;
    bool json = false;
    std::uint64_t seed = 0;
    int cap = 4;                           // minor-order cap for the witness search
    bool witness_search = false;           // search for a negative minor even when TN is certified
    std::optional<int> window;             // factor verification window, default n + M + 2
    std::optional<std::pair<int, int>> pair;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int informational = 1;
inline constexpr int usage = 2;
inline constexpr int internal = 3;
} // namespace exit_code

/// Executes one configuration. Output goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (HMSECTOR_SEED overrides --seed) and runs.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Non-empty, non-comment lines of a polynomial file.
std::vector<std::string> read_polynomial_lines(std::istream& in);

} // namespace hmsector
