#ifndef HEUN_CLI_HPP
#define HEUN_CLI_HPP

#include "heun/table.hpp"
#include "heun/verify.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace heun::cli
{

enum ExitCode : int
{
    success = 0,
    verification_failure = 1,
    usage_error = 2,
    numerical_failure = 3,
};

struct ExitReport
{
    int code = success;
    std::string summary;
};

/// Parses `start:stop:step` into the points start + i*step, i = 0, 1, ... up to stop
/// (inclusive, with a relative slack of 1e-9 steps). Throws std::invalid_argument.
std::vector<double> parse_grid(std::string_view text);

/// Parses a comma separated list of numbers. Throws std::invalid_argument.
std::vector<double> parse_points(std::string_view text);

/// Parses `A|B:<binomial>:<top|bottom>:<delta>`, e.g. `A:2:top:1`.
struct IdentityMutation
{
    char identity = 'A';
    BinomialMutation mutation;
};
IdentityMutation parse_mutation(std::string_view text);

/// Entry point of the heunc tool. args excludes the program name.
ExitReport run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace heun::cli

#endif
