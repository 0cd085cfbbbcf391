#include "fmds/codec.hpp"

#include <algorithm>
#include <stdexcept>

namespace fmds {

namespace {

void check_word_length(const Code& code, std::span<const Fe> w) {
    if (w.size() != code.length()) throw std::invalid_argument("word length must equal n");
}

std::vector<Fe> scale_by_power_ramp(const Code& code, std::span<const Fe> w, Fe factor) {
    const Field& f = code.field();
    std::vector<Fe> out(w.size());
    Fe cur = f.one();
    for (std::size_t m = 0; m < w.size(); ++m) {
        out[m] = f.mul(w[m], cur);
        cur = f.mul(cur, factor);
    }
    return out;
}

bool all_zero(const Syndrome& s) {
    return std::all_of(s.begin(), s.end(), [](Fe v) { return v == Fe{0}; });
}

DecodeOutcome fail(DecodeStage stage) {
    DecodeOutcome out;
    out.status = DecodeStatus::too_many_errors;
    out.failed_stage = stage;
    return out;
}

}  // namespace

std::vector<Fe> encode(const Code& code, std::span<const Fe> data) {
    if (data.size() != code.dimension()) {
        throw std::invalid_argument("data length must equal the code dimension");
    }
    const Fourier& ctx = code.ctx();
    const Field& f = code.field();
    const std::uint64_t n = code.length();
    std::vector<Fe> out(n, Fe{0});
    const auto rows = code.selected_rows();
    for (std::uint64_t j = 0; j < code.dimension(); ++j) {
        const Fe u = data[j];
        if (u == Fe{0}) continue;
        const std::uint64_t step = rows[j];
        std::uint64_t idx = 0;
        for (std::uint64_t m = 0; m < n; ++m) {
            out[m] = f.add(out[m], f.mul(u, ctx.omega_pow(static_cast<std::int64_t>(idx))));
            idx += step;
            if (idx >= n) idx -= n;
        }
    }
    return out;
}

std::vector<Fe> normalize(const Code& code, std::span<const Fe> w) {
    check_word_length(code, w);
    if (code.start() == 0) return {w.begin(), w.end()};
    const Fe factor = code.ctx().omega_pow(-static_cast<std::int64_t>(code.start()));
    return scale_by_power_ramp(code, w, factor);
}

std::vector<Fe> denormalize(const Code& code, std::span<const Fe> w) {
    check_word_length(code, w);
    if (code.start() == 0) return {w.begin(), w.end()};
    const Fe factor = code.ctx().omega_pow(static_cast<std::int64_t>(code.start()));
    return scale_by_power_ramp(code, w, factor);
}

Syndrome syndrome(const Code& code, std::span<const Fe> w) {
    check_word_length(code, w);
    const Fourier& ctx = code.ctx();
    const Field& f = code.field();
    const std::uint64_t n = code.length();
    const std::uint64_t len = n - code.dimension();
    const std::vector<Fe> wn = normalize(code, w);

    Syndrome s(len);
    for (std::uint64_t j = 1; j <= len; ++j) {
        const std::uint64_t step = (code.step() * j) % n;
        Fe acc{0};
        std::uint64_t idx = 0;
        for (std::uint64_t m = 0; m < n; ++m) {
            acc = f.add(acc, f.mul(wn[m], ctx.omega_pow(static_cast<std::int64_t>(idx))));
            idx += step;
            if (idx >= n) idx -= n;
        }
        s[j - 1] = acc;
    }
    return s;
}

Matrix hankel_matrix(const Syndrome& s, std::uint64_t t) {
    if (s.size() < 2 * t) throw std::invalid_argument("syndrome too short for capability t");
    const std::size_t rows = s.size() - t;
    Matrix h(rows, t + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t c = 0; c <= t; ++c) h.at(i, c) = s[i + c];
    }
    return h;
}

std::optional<std::vector<Fe>> hankel_kernel_raw(const Field& f, const Syndrome& s,
                                                 std::uint64_t t) {
    return kernel_vector(f, hankel_matrix(s, t));
}

std::optional<std::vector<Fe>> hankel_kernel(const Field& f, const Syndrome& s, std::uint64_t t) {
    auto x = hankel_kernel_raw(f, s, t);
    if (!x) return std::nullopt;
    std::size_t first = 0;
    while (first < x->size() && (*x)[first] == Fe{0}) ++first;
    const Fe scale = f.inv((*x)[first]);
    for (Fe& v : *x) v = f.mul(v, scale);
    return x;
}

std::vector<Fe> locator_values(const Code& code, std::span<const Fe> x) {
    const Fourier& ctx = code.ctx();
    const Field& f = code.field();
    const std::uint64_t n = code.length();
    std::vector<Fe> a(n);
    for (std::uint64_t m = 0; m < n; ++m) {
        const std::uint64_t base = (code.step() * m) % n;
        Fe acc{0};
        std::uint64_t idx = base;  // omega^{k m} at j = 1
        for (std::size_t j = 0; j < x.size(); ++j) {
            acc = f.add(acc, f.mul(x[j], ctx.omega_pow(static_cast<std::int64_t>(idx))));
            idx += base;
            if (idx >= n) idx -= n;
        }
        a[m] = acc;
    }
    return a;
}

std::vector<std::size_t> locate(const Code& code, std::span<const Fe> x) {
    const auto a = locator_values(code, x);
    std::vector<std::size_t> positions;
    for (std::size_t m = 0; m < a.size(); ++m) {
        if (a[m] == Fe{0}) positions.push_back(m);
    }
    return positions;
}

std::optional<MagnitudeSolution> magnitudes(const Code& code, const Syndrome& s,
                                            std::span<const std::size_t> positions) {
    const std::size_t count = positions.size();
    if (count == 0 || count > code.capability() + 1) {
        throw std::invalid_argument("position count must be in [1, t+1]");
    }
    if (count > s.size()) throw std::invalid_argument("more positions than syndrome equations");
    const Fourier& ctx = code.ctx();
    const Field& f = code.field();
    const std::uint64_t n = code.length();

    auto coeff = [&](std::size_t j, std::size_t i) {  // omega^{k j pos_i}, j is 1-based
        return ctx.omega_pow(static_cast<std::int64_t>((code.step() * j % n) * positions[i] % n));
    };

    Matrix m(count, count);
    std::vector<Fe> rhs(count);
    for (std::size_t j = 1; j <= count; ++j) {
        for (std::size_t i = 0; i < count; ++i) m.at(j - 1, i) = coeff(j, i);
        rhs[j - 1] = s[j - 1];
    }
    auto y = solve_square(f, std::move(m), std::move(rhs));
    if (!y) return std::nullopt;  // distinct positions make this singular only past capability

    // every remaining syndrome equation must agree
    for (std::size_t j = count + 1; j <= s.size(); ++j) {
        Fe acc{0};
        for (std::size_t i = 0; i < count; ++i) acc = f.add(acc, f.mul(coeff(j, i), (*y)[i]));
        if (!(acc == s[j - 1])) return std::nullopt;
    }

    MagnitudeSolution out;
    for (std::size_t i = 0; i < count; ++i) {
        if ((*y)[i] == Fe{0}) continue;  // spurious locator root
        out.positions.push_back(positions[i]);
        out.values.push_back((*y)[i]);
    }
    return out;
}

std::vector<Fe> recover_data(const Code& code, std::span<const Fe> codeword) {
    check_word_length(code, codeword);
    const Fourier& ctx = code.ctx();
    const Field& f = code.field();
    const std::uint64_t n = code.length();
    const auto rows = code.selected_rows();
    std::vector<Fe> data(code.dimension());
    for (std::uint64_t j = 0; j < code.dimension(); ++j) {
        // dot(codeword, f_{b+jk}) * n^{-1}
        const std::uint64_t step = (n - rows[j]) % n;
        Fe acc{0};
        std::uint64_t idx = 0;
        for (std::uint64_t m = 0; m < n; ++m) {
            acc = f.add(acc, f.mul(codeword[m], ctx.omega_pow(static_cast<std::int64_t>(idx))));
            idx += step;
            if (idx >= n) idx -= n;
        }
        data[j] = f.mul(acc, ctx.n_inv());
    }
    return data;
}

DecodeOutcome decode(const Code& code, std::span<const Fe> w) {
    check_word_length(code, w);
    const Field& f = code.field();
    const std::uint64_t n = code.length();

    const Syndrome s = syndrome(code, w);
    if (all_zero(s)) {
        DecodeOutcome out;
        out.status = DecodeStatus::success;
        out.codeword.assign(w.begin(), w.end());
        out.error_vector.assign(n, Fe{0});
        out.data = recover_data(code, out.codeword);
        return out;
    }

    const std::uint64_t t = code.capability();
    const auto x = hankel_kernel(f, s, t);
    if (!x) return fail(DecodeStage::kernel);

    const auto positions = locate(code, *x);
    if (positions.empty()) return fail(DecodeStage::locator);

    const auto solution = magnitudes(code, s, positions);
    if (!solution) return fail(DecodeStage::magnitudes);

    DecodeOutcome out;
    out.error_vector.assign(n, Fe{0});
    for (std::size_t i = 0; i < solution->positions.size(); ++i) {
        const std::size_t m = solution->positions[i];
        // magnitudes were found on the normalized word; scale back
        const Fe back = code.ctx().omega_pow(
            static_cast<std::int64_t>(code.start() * m % n));
        out.error_vector[m] = f.mul(solution->values[i], back);
    }
    out.codeword.resize(n);
    for (std::uint64_t m = 0; m < n; ++m) out.codeword[m] = f.sub(w[m], out.error_vector[m]);

    if (!all_zero(syndrome(code, out.codeword))) return fail(DecodeStage::final_check);

    out.status = DecodeStatus::success;
    out.positions = solution->positions;
    out.data = recover_data(code, out.codeword);
    return out;
}

}  // namespace fmds
