#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fmds/gf.hpp"

namespace fmds {

/// Exact rational number, always reduced with positive denominator. All rate
/// arithmetic in the planners is exact; boundary cases like n(1-R) = 2t must
/// not wobble through floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational rational(long long num, long long den);
Rational rat_add(const Rational& a, const Rational& b);
bool rat_less(const Rational& a, const Rational& b);
bool rat_le(const Rational& a, const Rational& b);

/// Least n with n(1-R) >= 2t, i.e. the shortest length that supports rate R
/// and error capability t. Throws std::domain_error unless 0 < R < 1 and
/// t >= 1.
long long min_length(const Rational& rate, long long t);

struct SeriesEntry {
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    std::uint64_t d = 0;  ///< n - r + 1
    Field field;          ///< smallest field of the requested characteristic
};

/// Multiples (i*n, i*r, i*(n-r)+1) over GF(p^beta_i) for the first `count`
/// multipliers i with p not dividing i*n; the distance/length ratio
/// decreases to 1 - r/n. Requires p prime not dividing n and r < n.
std::vector<SeriesEntry> series_multiples(std::uint64_t n, std::uint64_t r, std::uint64_t p,
                                          std::size_t count);

/// A fraction r'/n' with p not dividing n' and R <= r'/n' <= R + eps, found
/// by scanning denominators coprime to p in increasing order with
/// r' = ceil(R n').
Rational approx_rate(const Rational& rate, const Rational& eps, std::uint64_t p);

/// For each prime p: the (p-1, floor((p-1)R), (p-1)-r+1) code over GF(p).
/// Throws std::domain_error when (p_1 - 1) * R < 1.
std::vector<SeriesEntry> prime_series(const Rational& rate, std::span<const std::uint64_t> primes);

struct PlanResult {
    long long n_min = 0;      ///< exact bound from min_length
    std::uint64_t n = 0;      ///< chosen length (may differ when adjusted)
    std::uint64_t r = 0;
    std::uint64_t d = 0;
    bool adjusted = false;    ///< length moved off n_min to dodge the characteristic
};

/// Turn (rate, t) into concrete parameters. Without a characteristic the
/// exact minimum length is used with r = ceil(R n). With characteristic p
/// dividing that length, the length steps down to the nearest coprime value
/// and r = n - 2t keeps the full error capability at slightly reduced rate.
PlanResult plan_code(const Rational& rate, long long t, std::optional<std::uint64_t> p);

}  // namespace fmds
