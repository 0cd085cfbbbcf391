#pragma once

#include <string>
#include <string_view>

#include "fmds/mdscode.hpp"

namespace fmds {

/// Code descriptor text format: line-oriented `key=value` with keys in fixed
/// order p, beta, modulus (comma-separated ascending coefficients, present
/// only when beta > 1), omega (canonical integer), n, r, start, step.
/// Unknown, missing, reordered or duplicated keys are parse errors.
std::string format_descriptor(const Code& code);

/// Parse a descriptor; throws std::invalid_argument naming the offending
/// line. The field is reconstructed from p/beta/modulus and omega is
/// validated to have exact order n.
Code parse_descriptor(std::string_view text);

Code load_descriptor_file(const std::string& path);

}  // namespace fmds
