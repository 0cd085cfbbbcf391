#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fmds/gf.hpp"

namespace fmds {

/// The n x n Fourier matrix F_n over a finite field, built on a primitive
/// n-th root of unity omega: entry (i, m) is omega^{i*m}. The paired matrix
/// F* (omega replaced by omega^{n-1}) satisfies F F* = n I. Rows and columns
/// are produced on demand from a cached omega power table; the matrices are
/// never stored densely.
///
/// Immutable after construction; all accessors are pure.
class Fourier {
public:
    /// Validates that omega has exact order n in the field.
    Fourier(Field field, std::uint64_t n, Fe omega);

    /// Convenience: omega = delta^{(q-1)/n}.
    static Fourier make(const Field& field, std::uint64_t n);

    const Field& field() const { return field_; }
    std::uint64_t length() const { return n_; }
    Fe omega() const { return omega_; }

    /// n as a field element and its inverse (n is invertible since the
    /// characteristic cannot divide n).
    Fe n_in_field() const { return n_elem_; }
    Fe n_inv() const { return n_inv_; }

    /// omega^e for any integer e (reduced mod n).
    Fe omega_pow(std::int64_t e) const;

    /// Matrix entry omega^{i*m}; indices reduced mod n.
    Fe entry(std::int64_t i, std::int64_t m) const;

    /// Row e_i of F_n; indices wrap mod n.
    std::vector<Fe> row(std::int64_t i) const;

    /// Column f_i of F*; equals the transpose of row (n - i) mod n.
    std::vector<Fe> inv_col(std::int64_t i) const;

    /// v * F_n (length-n vector by matrix).
    std::vector<Fe> apply(std::span<const Fe> v) const;

    /// v * F* * n^{-1}; apply_inv(apply(v)) == v.
    std::vector<Fe> apply_inv(std::span<const Fe> v) const;

private:
    std::uint64_t wrap(std::int64_t i) const;

    Field field_;
    std::uint64_t n_;
    Fe omega_;
    Fe n_elem_;
    Fe n_inv_;
    std::vector<Fe> pow_;  // omega^0 .. omega^{n-1}
};

}  // namespace fmds
