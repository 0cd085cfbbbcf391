#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fmds/fourier.hpp"
#include "fmds/linalg.hpp"

namespace fmds {

/// An MDS (n, r, n-r+1) code generated by r rows of a Fourier matrix taken
/// in arithmetic sequence: rows b, b+k, ..., b+(r-1)k (mod n) with
/// gcd(n, k) = 1. The check columns are the complementary columns of F*, so
/// G H^T = 0 exactly, and the right inverse K = (f_b, f_{b+k}, ...) * n^{-1}
/// satisfies G K = I.
class Code {
public:
    Code(Fourier ctx, std::uint64_t r, std::uint64_t b = 0, std::uint64_t k = 1);

    const Fourier& ctx() const { return ctx_; }
    const Field& field() const { return ctx_.field(); }

    std::uint64_t length() const { return ctx_.length(); }       ///< n
    std::uint64_t dimension() const { return r_; }               ///< r
    std::uint64_t start() const { return b_; }                   ///< b
    std::uint64_t step() const { return k_; }                    ///< k
    std::uint64_t distance() const { return length() - r_ + 1; } ///< d = n-r+1
    std::uint64_t capability() const { return (length() - r_) / 2; }  ///< t

    /// Generator row indices b + j*k mod n, in selection order.
    std::vector<std::uint64_t> selected_rows() const;

    /// Complement of the selected rows: the check column indices. For the
    /// reference code (b = 0, k = 1) the order is n-1, n-2, ..., r so the
    /// check matrix reads (e_1^T, ..., e_{n-r}^T); otherwise ascending.
    std::vector<std::uint64_t> check_columns() const;

    Matrix generator_matrix() const;   ///< r x n
    Matrix check_matrix_t() const;     ///< n x (n-r), G * H^T = 0
    Matrix right_inverse() const;      ///< n x r, G * K = I_r

private:
    Fourier ctx_;
    std::uint64_t r_;
    std::uint64_t b_;
    std::uint64_t k_;
};

/// A Vandermonde-row code: rows 0, k, 2k, ..., (r-1)k of V(x_1, ..., x_n)
/// where row m has entries x_j^m. The theorem hypothesis (no ratio x_i/x_j
/// is a k-th root of unity) is checked directly on all pairs; no decoder is
/// attached.
struct VandermondeCode {
    Matrix generator;
    bool condition_holds = false;
};

VandermondeCode vandermonde_code(const Field& f, std::span<const Fe> xs, std::uint64_t r,
                                 std::uint64_t k);

}  // namespace fmds
