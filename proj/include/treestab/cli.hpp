#pragma once

#include "treestab/graph.hpp"
#include "treestab/spanning.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace treestab::cli {

enum ExitCode : int { kOk = 0, kAnalysisFailure = 1, kInputError = 2 };

/// Builds a named family from tokens such as {"K", "5"}, {"Kmn", "2", "3"}, {"C", "6"},
/// {"path", "4"}, {"star", "3"}, {"gem"}, {"house"}, {"domino"}, {"random", "7", "0.5"}.
Graph family_from_tokens(const std::vector<std::string>& tokens, std::uint64_t seed);

/// Reads "u v w" lines (w an integer or p/q rational); blank lines and '#' comments are skipped.
/// Throws ParseError naming the line.
EdgeWeights parse_weights(std::string_view text);

/// Runs the command line `args` (without the program name). `guard_env` carries the
/// value of TREESTAB_GUARD_TREES, if set.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& guard_env = std::nullopt);

}  // namespace treestab::cli
