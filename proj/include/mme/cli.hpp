#pragma once

namespace mme::cli {

/// Command line front end: subcommands eval-int, eval-approx,
/// eval-approx-complex and eval-rat, each reading an instance file and
/// writing one result per line. Returns the process exit code: 0 on
/// success, 1 on an input error, 2 on a bound violation or reconstruction
/// failure.
int run(int argc, const char* const* argv);

}  // namespace mme::cli
