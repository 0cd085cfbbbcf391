#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fmds/codec.hpp"
#include "fmds/mdscode.hpp"

namespace fmds {

/// Exact minimum Hamming weight over all non-zero messages u of u * G;
/// returns 0 when G is rank-deficient (distinct messages collide).
///
/// Brute force with two exact routes: message enumeration (one
/// representative per scalar class) while the class count stays desk scale,
/// otherwise the smallest linearly dependent column set of a check matrix
/// derived from G. Throws std::length_error when both are out of reach.
std::uint64_t min_distance(const Field& f, const Matrix& g);

/// min_distance(G) == n - r + 1.
bool is_mds(const Code& code);

/// Exhaustive nearest-codeword decoding with a precomputed codebook, for
/// cross-checking the algebraic decoder in bulk. Guarded to q^r codewords
/// small enough to enumerate.
class OracleDecoder {
public:
    explicit OracleDecoder(const Code& code);

    /// The unique codeword within Hamming distance t of w, or nullopt.
    std::optional<std::vector<Fe>> decode(std::span<const Fe> w) const;

private:
    const Code& code_;
    std::uint64_t count_;
    std::vector<std::uint16_t> codebook_;  // flat, count_ x n symbols
};

/// Single-shot oracle decode by on-the-fly codeword enumeration (no
/// codebook memory).
std::optional<std::vector<Fe>> oracle_decode(const Code& code, std::span<const Fe> w);

}  // namespace fmds
