#include "fmds/planner.hpp"

#include <numeric>
#include <stdexcept>

#include "fmds/fieldsearch.hpp"
#include "numtheory.hpp"

namespace fmds {

namespace {

using i128 = __int128;

void require_rate_open_unit(const Rational& r) {
    if (r.num <= 0 || r.num >= r.den) throw std::domain_error("rate must satisfy 0 < R < 1");
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

Rational rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

Rational rat_add(const Rational& a, const Rational& b) {
    return rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

bool rat_less(const Rational& a, const Rational& b) {
    return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
}

bool rat_le(const Rational& a, const Rational& b) { return !rat_less(b, a); }

long long min_length(const Rational& rate, long long t) {
    require_rate_open_unit(rate);
    if (t < 1) throw std::domain_error("error capability must be at least 1");
    // n (1-R) >= 2t  <=>  n (den-num) >= 2t den
    return ceil_div(2 * t * rate.den, rate.den - rate.num);
}

std::vector<SeriesEntry> series_multiples(std::uint64_t n, std::uint64_t r, std::uint64_t p,
                                          std::size_t count) {
    if (!detail::is_prime(p)) throw std::invalid_argument("characteristic is not prime");
    if (n == 0 || r == 0 || r >= n) throw std::domain_error("need 1 <= r < n");
    if (n % p == 0) throw std::domain_error("characteristic divides length");
    std::vector<SeriesEntry> out;
    out.reserve(count);
    for (std::uint64_t i = 1; out.size() < count; ++i) {
        if (i % p == 0) continue;  // p | i*n exactly when p | i, since p does not divide n
        SeriesEntry e{i * n, i * r, i * (n - r) + 1, find_field(i * n, p)};
        out.push_back(std::move(e));
    }
    return out;
}

Rational approx_rate(const Rational& rate, const Rational& eps, std::uint64_t p) {
    require_rate_open_unit(rate);
    if (eps.num <= 0) throw std::domain_error("eps must be positive");
    const Rational upper = rat_add(rate, eps);
    if (!rat_less(upper, Rational{1, 1})) throw std::domain_error("R + eps must stay below 1");
    if (!detail::is_prime(p)) throw std::invalid_argument("characteristic is not prime");
    for (long long den = 1;; ++den) {
        if (static_cast<std::uint64_t>(den) % p == 0) continue;
        const long long num = ceil_div(rate.num * den, rate.den);
        const Rational candidate = rational(num, den);
        if (rat_le(candidate, upper)) return candidate;  // >= R holds by the ceiling
    }
}

std::vector<SeriesEntry> prime_series(const Rational& rate,
                                      std::span<const std::uint64_t> primes) {
    require_rate_open_unit(rate);
    std::vector<SeriesEntry> out;
    out.reserve(primes.size());
    for (std::uint64_t p : primes) {
        if (!detail::is_prime(p)) throw std::invalid_argument("prime list contains a composite");
        const std::uint64_t n = p - 1;
        const std::uint64_t r =
            static_cast<std::uint64_t>((static_cast<i128>(n) * rate.num) / rate.den);
        if (r < 1) throw std::domain_error("prime too small: (p-1) R < 1");
        out.push_back(SeriesEntry{n, r, n - r + 1, Field::prime(p)});
    }
    return out;
}

PlanResult plan_code(const Rational& rate, long long t, std::optional<std::uint64_t> p) {
    PlanResult out;
    out.n_min = min_length(rate, t);
    if (!p || static_cast<std::uint64_t>(out.n_min) % *p != 0) {
        out.n = static_cast<std::uint64_t>(out.n_min);
        out.r = static_cast<std::uint64_t>(ceil_div(rate.num * out.n_min, rate.den));
        out.adjusted = false;
    } else {
        // nearest shorter length coprime to p; keep the full capability and
        // concede rate
        std::uint64_t n = static_cast<std::uint64_t>(out.n_min) - 1;
        while (n % *p == 0) --n;
        if (n <= 2 * static_cast<std::uint64_t>(t)) {
            throw std::domain_error("no usable length below the minimum for this characteristic");
        }
        out.n = n;
        out.r = n - 2 * static_cast<std::uint64_t>(t);
        out.adjusted = true;
    }
    out.d = out.n - out.r + 1;
    return out;
}

}  // namespace fmds
