#ifndef HYPERDUAL_TOOLS_CLI_HPP
#define HYPERDUAL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperdual/constructors.hpp"

namespace hyperdual::cli
{

enum ExitCode : int { ok = 0, usage_error = 2, verification_failure = 3 };

using Json = nlohmann::ordered_json;

/// Exact integer: a JSON number while it fits in a double without loss,
/// a decimal string beyond 2^53.
Json exact(BigInt const &v);

Json to_json(DualityReport const &r);
Json to_json(ConstructionCertificate const &c);

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace hyperdual::cli

#endif // HYPERDUAL_TOOLS_CLI_HPP
