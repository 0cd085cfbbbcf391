#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fmds/gf.hpp"

namespace fmds {

/// Dense row-major matrix of field elements.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Fe> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Fe& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Fe at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix identity(std::size_t n);

Matrix mat_mul(const Field& f, const Matrix& lhs, const Matrix& rhs);

/// Rank by Gaussian elimination (exact).
std::size_t rank(const Field& f, Matrix m);

/// Reduce to reduced row echelon form in place; returns pivot column per
/// pivot row.
std::vector<std::size_t> rref(const Field& f, Matrix& m);

/// A deterministic non-zero kernel vector of m, or nullopt when the kernel
/// is trivial. The first non-pivot column's variable is set to 1 and all
/// later free variables to 0; pivot variables follow by back-substitution.
std::optional<std::vector<Fe>> kernel_vector(const Field& f, Matrix m);

/// Solve the square system m * x = rhs; nullopt when m is singular.
std::optional<std::vector<Fe>> solve_square(const Field& f, Matrix m, std::vector<Fe> rhs);

/// Basis of the null space { h : m * h = 0 } as matrix rows.
Matrix null_space(const Field& f, Matrix m);

}  // namespace fmds
