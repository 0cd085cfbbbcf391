#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fmds/linalg.hpp"
#include "fmds/mdscode.hpp"

namespace fmds {

/// Syndrome of a received word: entry j-1 is the dot product of the
/// (b,k)-normalized word with row j of the reference Fourier matrix built on
/// omega^k, for j = 1..n-r. Zero exactly on codewords.
using Syndrome = std::vector<Fe>;

enum class DecodeStatus { success, too_many_errors };

/// Pipeline stage where decoding gave up; `none` on success.
enum class DecodeStage { none, kernel, locator, magnitudes, final_check };

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::too_many_errors;
    DecodeStage failed_stage = DecodeStage::none;
    std::vector<Fe> codeword;           ///< received - error_vector
    std::vector<Fe> error_vector;
    std::vector<std::size_t> positions; ///< sorted 0-based error positions
    std::vector<Fe> data;               ///< codeword * K

    bool ok() const { return status == DecodeStatus::success; }
};

/// Codeword u * G for a length-r data word.
std::vector<Fe> encode(const Code& code, std::span<const Fe> data);

/// Column scaling w'[m] = w[m] * omega^{-b m}: maps the (b, k) code onto the
/// consecutive-row reference code of the Fourier matrix with root omega^k.
std::vector<Fe> normalize(const Code& code, std::span<const Fe> w);
std::vector<Fe> denormalize(const Code& code, std::span<const Fe> w);

Syndrome syndrome(const Code& code, std::span<const Fe> w);

/// The (n-r-t) x (t+1) Hankel matrix with row i = (s_{i+1}, ..., s_{i+t+1}).
Matrix hankel_matrix(const Syndrome& s, std::uint64_t t);

/// Deterministic non-zero kernel element of the Hankel matrix: the first
/// free column's variable set to 1 (this reproduces textbook worked values).
/// nullopt when the kernel is trivial (more than t errors).
std::optional<std::vector<Fe>> hankel_kernel_raw(const Field& f, const Syndrome& s,
                                                 std::uint64_t t);

/// Kernel element scaled so its first non-zero entry is 1.
std::optional<std::vector<Fe>> hankel_kernel(const Field& f, const Syndrome& s, std::uint64_t t);

/// Locator values a[m] = sum_j x_j omega^{k j m}: the kernel polynomial
/// evaluated across the group; errors sit at the zeros.
std::vector<Fe> locator_values(const Code& code, std::span<const Fe> x);

/// Zero positions of the locator, 0-based ascending. Invariant under scaling
/// of x.
std::vector<std::size_t> locate(const Code& code, std::span<const Fe> x);

struct MagnitudeSolution {
    std::vector<std::size_t> positions;  ///< zero-magnitude candidates dropped
    std::vector<Fe> values;
};

/// Solve the first |positions| syndrome equations for the error magnitudes,
/// verify every remaining equation, and drop spurious zero-magnitude
/// positions. nullopt when the residual equations are inconsistent.
std::optional<MagnitudeSolution> magnitudes(const Code& code, const Syndrome& s,
                                            std::span<const std::size_t> positions);

/// Data word recovered from a codeword via the right inverse.
std::vector<Fe> recover_data(const Code& code, std::span<const Fe> codeword);

/// Full decode: syndrome, Hankel kernel, locator zeros, magnitude solve,
/// correction, data recovery. Exact whenever at most t symbol errors
/// occurred; never reports success when the corrected word has a non-zero
/// syndrome.
DecodeOutcome decode(const Code& code, std::span<const Fe> w);

}  // namespace fmds
