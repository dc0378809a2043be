#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spingate/metrics.hpp"

namespace spingate::cli {

/// Parses a spin input: a bitstring (0 = up, 1 = down), the keyword
/// `uniform`, or 2^n comma-separated complex amplitudes ("0.5", "(0,0.5)").
/// Amplitude lists are normalized; when the norm is off by more than 1e-6 a
/// warning goes to `warn`. Throws BadInputSpec or WrongLength.
SpinState parse_input_spec(const std::string& spec, int spin_count,
                           std::ostream* warn = nullptr);

/// Entry point behind the `spingate` binary. Exit codes: 0 success, 1
/// verification failure or simulation/parse error, 2 argument errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spingate::cli
