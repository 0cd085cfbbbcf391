#include "fmds/linalg.hpp"

#include <stdexcept>

namespace fmds {

Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Fe{1};
    return m;
}

Matrix mat_mul(const Field& f, const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols != rhs.rows) throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(lhs.rows, rhs.cols);
    for (std::size_t i = 0; i < lhs.rows; ++i) {
        for (std::size_t k = 0; k < lhs.cols; ++k) {
            const Fe v = lhs.at(i, k);
            if (v == Fe{0}) continue;
            for (std::size_t j = 0; j < rhs.cols; ++j) {
                out.at(i, j) = f.add(out.at(i, j), f.mul(v, rhs.at(k, j)));
            }
        }
    }
    return out;
}

std::vector<std::size_t> rref(const Field& f, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t pr = row;
        while (pr < m.rows && m.at(pr, col) == Fe{0}) ++pr;
        if (pr == m.rows) continue;
        if (pr != row) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        }
        const Fe inv = f.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            const Fe factor = m.at(i, col);
            if (factor == Fe{0}) continue;
            for (std::size_t j = col; j < m.cols; ++j) {
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return rref(f, m).size(); }

std::optional<std::vector<Fe>> kernel_vector(const Field& f, Matrix m) {
    const std::size_t cols = m.cols;
    const auto pivots = rref(f, m);
    if (pivots.size() == cols) return std::nullopt;

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    std::vector<Fe> x(cols, Fe{0});
    x[free_col] = Fe{1};
    // rref rows: pivot variable = -sum of later entries times x
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const std::size_t pc = pivots[i];
        Fe acc{0};
        for (std::size_t j = pc + 1; j < cols; ++j) {
            acc = f.add(acc, f.mul(m.at(i, j), x[j]));
        }
        x[pc] = f.neg(acc);
    }
    return x;
}

std::optional<std::vector<Fe>> solve_square(const Field& f, Matrix m, std::vector<Fe> rhs) {
    if (m.rows != m.cols || rhs.size() != m.rows) {
        throw std::invalid_argument("solve_square needs a square system");
    }
    const std::size_t n = m.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        while (pr < n && m.at(pr, col) == Fe{0}) ++pr;
        if (pr == n) return std::nullopt;
        if (pr != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(col, j));
            std::swap(rhs[pr], rhs[col]);
        }
        const Fe inv = f.inv(m.at(col, col));
        for (std::size_t j = col; j < n; ++j) m.at(col, j) = f.mul(m.at(col, j), inv);
        rhs[col] = f.mul(rhs[col], inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            const Fe factor = m.at(i, col);
            if (factor == Fe{0}) continue;
            for (std::size_t j = col; j < n; ++j) {
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(col, j)));
            }
            rhs[i] = f.sub(rhs[i], f.mul(factor, rhs[col]));
        }
    }
    return rhs;
}

Matrix null_space(const Field& f, Matrix m) {
    const std::size_t cols = m.cols;
    const auto pivots = rref(f, m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    Matrix basis(cols - pivots.size(), cols);
    std::size_t bi = 0;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        basis.at(bi, fc) = Fe{1};
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            basis.at(bi, pivots[i]) = f.neg(m.at(i, fc));
        }
        ++bi;
    }
    return basis;
}

}  // namespace fmds
