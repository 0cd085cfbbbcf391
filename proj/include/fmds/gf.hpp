#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fmds {

/// A field element in canonical integer form.
///
/// An element of GF(p^beta) is a polynomial-basis coefficient vector
/// (c_0, ..., c_{beta-1}) with entries in [0, p); its canonical integer is
/// sum c_i * p^i, a bijection with [0, p^beta). For prime fields the
/// canonical integer is just the residue. The canonical integer is the
/// on-disk symbol representation used everywhere else in this library.
struct Fe {
    std::uint64_t v = 0;
    friend constexpr bool operator==(Fe, Fe) = default;
};

/// Exact arithmetic in GF(p) and GF(p^beta).
///
/// Immutable after construction; all operations are pure, so a Field may be
/// shared freely across threads. Copies are cheap (shared immutable state).
///
/// Prime fields use integer residue arithmetic. Extension fields reduce
/// polynomial products modulo a monic irreducible modulus; fields with at
/// most 2^16 elements additionally build exp/log tables over the primitive
/// element so that mul/inv/pow are table lookups.
class Field {
public:
    /// GF(p) for prime p. Throws std::invalid_argument when p is not prime.
    static Field prime(std::uint64_t p);

    /// GF(p^beta) with the default modulus: the lexicographically smallest
    /// monic irreducible of degree beta, coefficient vectors compared
    /// low-degree-first.
    static Field extension(std::uint64_t p, std::uint32_t beta);

    /// GF(p^beta) with an explicit modulus (beta+1 ascending coefficients,
    /// monic). The modulus is verified irreducible by trial division: no
    /// roots in GF(p) and no monic factor of degree <= beta/2.
    static Field extension(std::uint64_t p, std::uint32_t beta,
                           std::vector<std::uint64_t> modulus);

    std::uint64_t characteristic() const;  ///< p
    std::uint32_t degree() const;          ///< beta
    std::uint64_t order() const;           ///< q = p^beta

    /// Modulus coefficients, ascending degree, monic. Empty when beta == 1.
    const std::vector<std::uint64_t>& modulus() const;

    /// Smallest primitive element in canonical-integer order.
    Fe delta() const;

    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;  ///< throws std::domain_error on inv(0)
    /// a^e, negative exponents via inv. pow(0, 0) = 1; pow(0, e<0) throws.
    Fe pow(Fe a, std::int64_t e) const;

    /// Range-checked canonical conversions: from_int(to_int(a)) == a.
    Fe from_int(std::uint64_t v) const;
    std::uint64_t to_int(Fe a) const;

    /// Polynomial-basis coefficients, length beta, entries in [0, p).
    std::vector<std::uint64_t> coeffs(Fe a) const;
    Fe from_coeffs(std::span<const std::uint64_t> c) const;

    std::string name() const;  ///< "GF(13)", "GF(2^6)", ...

    /// Structural equality: same p, beta and modulus.
    bool operator==(const Field& other) const;

    struct Impl;  // defined in gf.cpp

private:
    explicit Field(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

}  // namespace fmds
