#include "fmds/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace fmds {

namespace {

constexpr std::uint64_t kEnumGuard = 30'000'000;        // scalar-class representatives
constexpr std::uint64_t kDeltaTableGuard = 1ull << 22;  // extension-field step tables
constexpr std::uint64_t kColumnOpsGuard = 500'000'000;
constexpr std::uint64_t kOracleFlyGuard = 8'000'000;     // on-the-fly messages
constexpr std::uint64_t kOracleBookGuard = 2'000'000;    // cached codebook messages

// sum_{j=0}^{r-1} q^j, saturating just past `cap`
std::uint64_t scalar_class_count(std::uint64_t q, std::size_t r, std::uint64_t cap) {
    std::uint64_t reps = 0, term = 1;
    for (std::size_t j = 0; j < r; ++j) {
        reps += term;
        if (reps > cap) return cap + 1;
        if (term > cap / q) {
            if (j + 1 < r) return cap + 1;
        } else {
            term *= q;
        }
    }
    return reps;
}

// --- message-enumeration route, one representative per scalar class ---

std::uint64_t enum_min_distance_prime(const Field& f, const Matrix& g) {
    const std::uint64_t p = f.characteristic();
    const std::size_t r = g.rows, n = g.cols;
    std::vector<std::uint64_t> rows(r * n);
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t m = 0; m < n; ++m) rows[j * n + m] = g.at(j, m).v;
    }
    const auto add_row = [&](std::vector<std::uint64_t>& acc, const std::uint64_t* row) {
        std::uint64_t w = 0;
        for (std::size_t m = 0; m < n; ++m) {
            std::uint64_t v = acc[m] + row[m];
            if (v >= p) v -= p;
            acc[m] = v;
            w += v != 0;
        }
        return w;
    };

    std::uint64_t best = n + 1;
    std::vector<std::uint64_t> acc(n), dig(r);
    for (std::size_t lead = 0; lead < r; ++lead) {
        std::copy(rows.begin() + lead * n, rows.begin() + (lead + 1) * n, acc.begin());
        std::fill(dig.begin(), dig.end(), 0);
        std::uint64_t w = static_cast<std::uint64_t>(
            std::count_if(acc.begin(), acc.end(), [](std::uint64_t v) { return v != 0; }));
        best = std::min(best, w);
        if (best == 0) return 0;
        for (;;) {
            std::size_t i = lead + 1;
            while (i < r && dig[i] == p - 1) {
                dig[i] = 0;
                w = add_row(acc, &rows[i * n]);  // wrap p-1 -> 0 is the same +row step
                ++i;
            }
            if (i >= r) break;
            ++dig[i];
            w = add_row(acc, &rows[i * n]);
            best = std::min(best, w);
            if (best == 0) return 0;
        }
    }
    return best;
}

std::uint64_t enum_min_distance_ext(const Field& f, const Matrix& g) {
    const std::uint64_t q = f.order();
    const std::size_t r = g.rows, n = g.cols;
    std::vector<Fe> delta_up(q - 1);
    for (std::uint64_t v = 0; v + 1 < q; ++v) delta_up[v] = f.sub(Fe{v + 1}, Fe{v});
    const Fe wrap = f.neg(Fe{q - 1});

    const auto add_scaled = [&](std::vector<Fe>& acc, Fe delta, std::size_t row) {
        std::uint64_t w = 0;
        for (std::size_t m = 0; m < n; ++m) {
            acc[m] = f.add(acc[m], f.mul(delta, g.at(row, m)));
            w += acc[m] == Fe{0} ? 0 : 1;
        }
        return w;
    };

    std::uint64_t best = n + 1;
    std::vector<Fe> acc(n);
    std::vector<std::uint64_t> dig(r);
    for (std::size_t lead = 0; lead < r; ++lead) {
        for (std::size_t m = 0; m < n; ++m) acc[m] = g.at(lead, m);
        std::fill(dig.begin(), dig.end(), 0);
        std::uint64_t w = static_cast<std::uint64_t>(
            std::count_if(acc.begin(), acc.end(), [](Fe v) { return !(v == Fe{0}); }));
        best = std::min(best, w);
        if (best == 0) return 0;
        for (;;) {
            std::size_t i = lead + 1;
            while (i < r && dig[i] == q - 1) {
                dig[i] = 0;
                w = add_scaled(acc, wrap, i);
                ++i;
            }
            if (i >= r) break;
            ++dig[i];
            w = add_scaled(acc, delta_up[dig[i] - 1], i);
            best = std::min(best, w);
            if (best == 0) return 0;
        }
    }
    return best;
}

// --- dependent-column route: d equals the smallest number of linearly
// dependent columns of a check matrix for the row space of G ---

std::uint64_t binom_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    std::uint64_t acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (acc > cap || acc > UINT64_MAX / (n - i + 1)) return cap + 1;
        acc = acc * (n - i + 1) / i;
    }
    return acc > cap ? cap + 1 : acc;
}

std::uint64_t min_distance_columns(const Field& f, const Matrix& g) {
    Matrix work = g;
    const auto pivots = rref(f, work);
    if (pivots.size() < g.rows) return 0;  // collapsed messages: zero codeword reachable
    if (pivots.size() == g.cols) return 1; // full-space code

    const Matrix h = null_space(f, g);
    const std::size_t n = g.cols, hr = h.rows;

    std::uint64_t ops = 0;
    for (std::uint64_t s = 1; s <= hr + 1; ++s) {
        const std::uint64_t subsets = binom_capped(n, s, kColumnOpsGuard);
        if (subsets > kColumnOpsGuard / (s * hr + 1)) {
            throw std::length_error("min_distance: instance too large for both exact routes");
        }
        ops += subsets * s * hr;
        if (ops > kColumnOpsGuard) {
            throw std::length_error("min_distance: instance too large for both exact routes");
        }
    }

    Matrix sub(hr, 1);
    std::vector<std::size_t> pick;
    for (std::uint64_t s = 1; s <= hr + 1; ++s) {
        sub = Matrix(hr, s);
        pick.resize(s);
        for (std::size_t i = 0; i < s; ++i) pick[i] = i;
        for (;;) {
            for (std::size_t c = 0; c < s; ++c) {
                for (std::size_t i = 0; i < hr; ++i) sub.at(i, c) = h.at(i, pick[c]);
            }
            if (rank(f, sub) < s) return s;
            // next lexicographic combination
            std::size_t i = s;
            while (i > 0 && pick[i - 1] == n - s + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return hr + 1;  // any n-r+1 columns of an (n-r)-row matrix are dependent
}

// visits every codeword u * G in canonical message order, u = 0 first
template <typename Visit>
void for_each_codeword(const Field& f, const Matrix& g, Visit&& visit) {
    const std::uint64_t q = f.order();
    const std::size_t r = g.rows, n = g.cols;
    std::vector<Fe> delta_up(q - 1);
    for (std::uint64_t v = 0; v + 1 < q; ++v) delta_up[v] = f.sub(Fe{v + 1}, Fe{v});
    const Fe wrap = f.neg(Fe{q - 1});

    std::vector<Fe> acc(n, Fe{0});
    std::vector<std::uint64_t> dig(r, 0);
    const auto add_scaled = [&](Fe delta, std::size_t row) {
        for (std::size_t m = 0; m < n; ++m) acc[m] = f.add(acc[m], f.mul(delta, g.at(row, m)));
    };
    visit(acc);
    for (;;) {
        std::size_t i = 0;
        while (i < r && dig[i] == q - 1) {
            dig[i] = 0;
            add_scaled(wrap, i);
            ++i;
        }
        if (i == r) break;
        ++dig[i];
        add_scaled(delta_up[dig[i] - 1], i);
        visit(acc);
    }
}

std::uint64_t message_count(const Field& f, std::uint64_t r, std::uint64_t cap) {
    std::uint64_t count = 1;
    for (std::uint64_t j = 0; j < r; ++j) {
        if (count > cap / f.order()) return cap + 1;
        count *= f.order();
    }
    return count;
}

}  // namespace

std::uint64_t min_distance(const Field& f, const Matrix& g) {
    if (g.rows == 0 || g.cols == 0) throw std::invalid_argument("empty generator matrix");
    const std::uint64_t reps = scalar_class_count(f.order(), g.rows, kEnumGuard);
    if (reps <= kEnumGuard) {
        if (f.degree() == 1) return enum_min_distance_prime(f, g);
        if (f.order() <= kDeltaTableGuard) return enum_min_distance_ext(f, g);
    }
    return min_distance_columns(f, g);
}

bool is_mds(const Code& code) {
    return min_distance(code.field(), code.generator_matrix()) == code.distance();
}

OracleDecoder::OracleDecoder(const Code& code) : code_(code) {
    const Field& f = code.field();
    const std::uint64_t n = code.length();
    count_ = message_count(f, code.dimension(), kOracleBookGuard);
    if (count_ > kOracleBookGuard || f.order() > 0xffff || count_ * n > 40'000'000) {
        throw std::length_error("oracle codebook too large to enumerate");
    }
    codebook_.resize(count_ * n);
    std::size_t at = 0;
    for_each_codeword(f, code.generator_matrix(), [&](const std::vector<Fe>& cw) {
        for (std::uint64_t m = 0; m < n; ++m) {
            codebook_[at++] = static_cast<std::uint16_t>(cw[m].v);
        }
    });
}

std::optional<std::vector<Fe>> OracleDecoder::decode(std::span<const Fe> w) const {
    const std::uint64_t n = code_.length();
    if (w.size() != n) throw std::invalid_argument("word length must equal n");
    const std::uint64_t t = code_.capability();
    std::vector<std::uint16_t> target(n);
    for (std::uint64_t m = 0; m < n; ++m) target[m] = static_cast<std::uint16_t>(w[m].v);

    const std::uint16_t* book = codebook_.data();
    for (std::uint64_t c = 0; c < count_; ++c, book += n) {
        std::uint64_t dist = 0;
        for (std::uint64_t m = 0; m < n; ++m) {
            dist += book[m] != target[m];
            if (dist > t) break;
        }
        if (dist <= t) {
            std::vector<Fe> out(n);
            for (std::uint64_t m = 0; m < n; ++m) out[m] = Fe{book[m]};
            return out;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Fe>> oracle_decode(const Code& code, std::span<const Fe> w) {
    const Field& f = code.field();
    const std::uint64_t n = code.length();
    if (w.size() != n) throw std::invalid_argument("word length must equal n");
    if (message_count(f, code.dimension(), kOracleFlyGuard) > kOracleFlyGuard) {
        throw std::length_error("oracle instance too large to enumerate");
    }
    const std::uint64_t t = code.capability();
    std::optional<std::vector<Fe>> best;
    std::uint64_t best_dist = t + 1;
    for_each_codeword(f, code.generator_matrix(), [&](const std::vector<Fe>& cw) {
        std::uint64_t dist = 0;
        for (std::uint64_t m = 0; m < n && dist <= t; ++m) dist += cw[m] == w[m] ? 0 : 1;
        if (dist < best_dist) {
            best_dist = dist;
            best = cw;
        }
    });
    return best;
}

}  // namespace fmds
