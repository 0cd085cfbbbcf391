#include "fmds/fieldsearch.hpp"

#include <numeric>
#include <stdexcept>

#include "numtheory.hpp"

namespace fmds {

bool is_prime(std::uint64_t n) { return detail::is_prime(n); }

std::uint64_t order_mod(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw std::domain_error("modulus must be at least 2");
    if (std::gcd(a, m) != 1) throw std::domain_error("no multiplicative order: gcd(a, m) != 1");
    // the order divides phi(m); strip prime factors while the power stays 1
    std::uint64_t d = euler_phi(m);
    for (std::uint64_t f : detail::prime_divisors(d)) {
        while (d % f == 0 && detail::powmod(a, d / f, m) == 1) d /= f;
    }
    return d;
}

std::uint64_t euler_phi(std::uint64_t m) {
    if (m == 0) throw std::domain_error("totient of zero");
    std::uint64_t phi = m;
    for (auto [p, mult] : detail::factorize(m)) phi -= phi / p;
    return phi;
}

Field find_field(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw std::domain_error("length must be positive");
    if (!detail::is_prime(p)) throw std::invalid_argument("characteristic is not prime");
    if (n % p == 0) {
        throw std::domain_error("characteristic divides length: no n-th root of unity exists");
    }
    const std::uint64_t beta = n == 1 ? 1 : order_mod(p, n);
    if (beta == 1) return Field::prime(p);
    return Field::extension(p, static_cast<std::uint32_t>(beta));
}

Fe primitive_element(const Field& f) {
    const std::uint64_t q = f.order();
    const auto primes = detail::prime_divisors(q - 1);
    for (std::uint64_t v = 1; v < q; ++v) {
        const Fe a{v};
        bool primitive = true;
        for (std::uint64_t fac : primes) {
            if (f.pow(a, static_cast<std::int64_t>((q - 1) / fac)) == f.one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return a;
    }
    throw std::logic_error("no primitive element found");
}

Fe nth_root(const Field& f, std::uint64_t n) {
    if (n == 0) throw std::domain_error("root index must be positive");
    const std::uint64_t q = f.order();
    if ((q - 1) % n != 0) throw std::domain_error("no primitive n-th root: n does not divide q-1");
    return f.pow(f.delta(), static_cast<std::int64_t>((q - 1) / n));
}

std::uint64_t element_order(const Field& f, Fe a) {
    if (a == f.zero()) throw std::domain_error("zero has no multiplicative order");
    const std::uint64_t q = f.order();
    std::uint64_t d = q - 1;
    for (std::uint64_t fac : detail::prime_divisors(d)) {
        while (d % fac == 0 && f.pow(a, static_cast<std::int64_t>(d / fac)) == f.one()) d /= fac;
    }
    return d;
}

}  // namespace fmds
