#include "fmds/fourier.hpp"

#include <stdexcept>

#include "fmds/fieldsearch.hpp"
#include "numtheory.hpp"

namespace fmds {

Fourier::Fourier(Field field, std::uint64_t n, Fe omega)
    : field_(std::move(field)), n_(n), omega_(omega) {
    if (n_ == 0) throw std::invalid_argument("length must be positive");
    if (field_.to_int(omega_) == 0) throw std::invalid_argument("root of unity cannot be zero");
    // exact order n: omega^n = 1 and omega^{n/f} != 1 for every prime f | n
    if (!(field_.pow(omega_, static_cast<std::int64_t>(n_)) == field_.one())) {
        throw std::invalid_argument("omega^n != 1");
    }
    for (std::uint64_t f : detail::prime_divisors(n_)) {
        if (field_.pow(omega_, static_cast<std::int64_t>(n_ / f)) == field_.one()) {
            throw std::invalid_argument("omega does not have exact order n");
        }
    }
    pow_.resize(n_);
    Fe cur = field_.one();
    for (std::uint64_t i = 0; i < n_; ++i) {
        pow_[i] = cur;
        cur = field_.mul(cur, omega_);
    }
    n_elem_ = field_.from_int(n_ % field_.characteristic());
    n_inv_ = field_.inv(n_elem_);
}

Fourier Fourier::make(const Field& field, std::uint64_t n) {
    return Fourier(field, n, nth_root(field, n));
}

std::uint64_t Fourier::wrap(std::int64_t i) const {
    const std::int64_t n = static_cast<std::int64_t>(n_);
    return static_cast<std::uint64_t>(((i % n) + n) % n);
}

Fe Fourier::omega_pow(std::int64_t e) const { return pow_[wrap(e)]; }

Fe Fourier::entry(std::int64_t i, std::int64_t m) const {
    return pow_[(wrap(i) * wrap(m)) % n_];
}

std::vector<Fe> Fourier::row(std::int64_t i) const {
    const std::uint64_t ii = wrap(i);
    std::vector<Fe> out(n_);
    std::uint64_t idx = 0;
    for (std::uint64_t m = 0; m < n_; ++m) {
        out[m] = pow_[idx];
        idx += ii;
        if (idx >= n_) idx -= n_;
    }
    return out;
}

std::vector<Fe> Fourier::inv_col(std::int64_t i) const {
    return row(static_cast<std::int64_t>(n_) - static_cast<std::int64_t>(wrap(i)));
}

std::vector<Fe> Fourier::apply(std::span<const Fe> v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length must equal n");
    std::vector<Fe> out(n_);
    for (std::uint64_t j = 0; j < n_; ++j) {
        Fe acc{0};
        std::uint64_t idx = 0;
        for (std::uint64_t m = 0; m < n_; ++m) {
            acc = field_.add(acc, field_.mul(v[m], pow_[idx]));
            idx += j;
            if (idx >= n_) idx -= n_;
        }
        out[j] = acc;
    }
    return out;
}

std::vector<Fe> Fourier::apply_inv(std::span<const Fe> v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length must equal n");
    std::vector<Fe> out(n_);
    for (std::uint64_t j = 0; j < n_; ++j) {
        Fe acc{0};
        std::uint64_t idx = 0;
        const std::uint64_t step = n_ - j == n_ ? 0 : n_ - j;  // omega^{-j}
        for (std::uint64_t m = 0; m < n_; ++m) {
            acc = field_.add(acc, field_.mul(v[m], pow_[idx]));
            idx += step;
            if (idx >= n_) idx -= n_;
        }
        out[j] = field_.mul(acc, n_inv_);
    }
    return out;
}

}  // namespace fmds
