#include "fmds/mdscode.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fmds {

Code::Code(Fourier ctx, std::uint64_t r, std::uint64_t b, std::uint64_t k)
    : ctx_(std::move(ctx)), r_(r), b_(b % ctx_.length()), k_(k % ctx_.length()) {
    const std::uint64_t n = ctx_.length();
    if (r_ < 1 || r_ > n) throw std::out_of_range("dimension must be in [1, n]");
    if (std::gcd(n, k_) != 1) throw std::invalid_argument("invalid step: gcd(n, k) != 1");
}

std::vector<std::uint64_t> Code::selected_rows() const {
    const std::uint64_t n = length();
    std::vector<std::uint64_t> rows(r_);
    std::uint64_t idx = b_;
    for (std::uint64_t j = 0; j < r_; ++j) {
        rows[j] = idx;
        idx += k_;
        if (idx >= n) idx -= n;
    }
    return rows;
}

std::vector<std::uint64_t> Code::check_columns() const {
    const std::uint64_t n = length();
    std::vector<bool> selected(n, false);
    for (std::uint64_t i : selected_rows()) selected[i] = true;
    std::vector<std::uint64_t> cols;
    cols.reserve(n - r_);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (!selected[i]) cols.push_back(i);
    }
    // reference code order matches the worked syndrome convention
    if (b_ == 0 && k_ == 1) std::reverse(cols.begin(), cols.end());
    return cols;
}

Matrix Code::generator_matrix() const {
    const std::uint64_t n = length();
    Matrix g(r_, n);
    const auto rows = selected_rows();
    for (std::uint64_t j = 0; j < r_; ++j) {
        const auto row = ctx_.row(static_cast<std::int64_t>(rows[j]));
        std::copy(row.begin(), row.end(), g.a.begin() + j * n);
    }
    return g;
}

Matrix Code::check_matrix_t() const {
    const std::uint64_t n = length();
    Matrix h(n, n - r_);
    const auto cols = check_columns();
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto col = ctx_.inv_col(static_cast<std::int64_t>(cols[c]));
        for (std::uint64_t m = 0; m < n; ++m) h.at(m, c) = col[m];
    }
    return h;
}

Matrix Code::right_inverse() const {
    const std::uint64_t n = length();
    const Fe scale = ctx_.n_inv();
    Matrix k(n, r_);
    const auto rows = selected_rows();
    for (std::uint64_t j = 0; j < r_; ++j) {
        const auto col = ctx_.inv_col(static_cast<std::int64_t>(rows[j]));
        for (std::uint64_t m = 0; m < n; ++m) k.at(m, j) = field().mul(col[m], scale);
    }
    return k;
}

VandermondeCode vandermonde_code(const Field& f, std::span<const Fe> xs, std::uint64_t r,
                                 std::uint64_t k) {
    const std::uint64_t n = xs.size();
    if (n == 0) throw std::invalid_argument("empty evaluation point set");
    for (std::size_t i = 0; i < n; ++i) {
        if (xs[i] == f.zero()) throw std::invalid_argument("evaluation points must be non-zero");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (xs[i] == xs[j]) throw std::invalid_argument("evaluation points must be distinct");
        }
    }
    if (r < 1 || r > n) throw std::out_of_range("dimension must be in [1, n]");
    if (k < 1) throw std::invalid_argument("step must be positive");
    if ((r - 1) * k > n - 1) {
        throw std::out_of_range("row selection exceeds matrix: wrap-around is Fourier-only");
    }

    VandermondeCode out;
    out.generator = Matrix(r, n);
    for (std::uint64_t i = 0; i < r; ++i) {
        const std::int64_t m = static_cast<std::int64_t>(i * k);
        for (std::uint64_t j = 0; j < n; ++j) out.generator.at(i, j) = f.pow(xs[j], m);
    }
    out.condition_holds = true;
    for (std::size_t i = 0; i < n && out.condition_holds; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Fe ratio = f.mul(xs[i], f.inv(xs[j]));
            if (f.pow(ratio, static_cast<std::int64_t>(k)) == f.one()) {
                out.condition_holds = false;
                break;
            }
        }
    }
    return out;
}

}  // namespace fmds
