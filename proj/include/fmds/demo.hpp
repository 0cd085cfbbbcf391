#pragma once

#include <ostream>

namespace fmds {

/// Decoding walkthrough on the (12, 6, 7) code over GF(13) built from the
/// first six rows of the Fourier matrix with omega = 2. Prints every
/// intermediate (Fourier matrix, syndrome, Hankel matrix, kernel, locator,
/// positions, magnitudes, corrected codeword, recovered data) and checks
/// each against its known value.
///
/// Returns 0 when every intermediate matches, 1 otherwise (the first
/// mismatching quantity is reported on the stream).
int run_demo(std::ostream& out);

}  // namespace fmds
