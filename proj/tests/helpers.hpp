#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "fmds/gf.hpp"

namespace fmds::test {

inline std::vector<Fe> fe_vec(std::initializer_list<std::uint64_t> vals) {
    std::vector<Fe> out;
    out.reserve(vals.size());
    for (auto v : vals) out.push_back(Fe{v});
    return out;
}

inline std::vector<Fe> random_word(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
    std::vector<Fe> out(n);
    for (auto& v : out) v = Fe{dist(rng)};
    return out;
}

inline Fe random_nonzero(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1, f.order() - 1);
    return Fe{dist(rng)};
}

/// distinct positions in [0, n)
inline std::vector<std::size_t> random_positions(std::size_t n, std::size_t count,
                                                 std::mt19937_64& rng) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> dist(i, n - 1);
        std::swap(all[i], all[dist(rng)]);
    }
    all.resize(count);
    return all;
}

inline std::size_t hamming(const std::vector<Fe>& a, const std::vector<Fe>& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] == b[i] ? 0 : 1;
    return d;
}

}  // namespace fmds::test
