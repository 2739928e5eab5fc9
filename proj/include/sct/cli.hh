// cli.hh -- the sct command line: monster, apply, minimize, sc, check, semigroup

#pragma once

#include "sct/engine.hh"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sct::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    budget_error = 2,
    check_failure = 3,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1;0,1" -> {{1}, {0,1}} over the given sizes; an empty component is the
/// empty set. Throws InvalidArgument on malformed input.
FinalChoice parse_final_choice(std::string_view text, std::span<const std::size_t> sizes);

/// "2,3" -> {2, 3}.
std::vector<std::size_t> parse_sizes(std::string_view text);

/// "1,0,2;1,2,0" -> two transformations of [3].
std::vector<Transformation> parse_generators(std::string_view text, std::size_t n);

} // namespace sct::cli
