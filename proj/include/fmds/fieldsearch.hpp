#pragma once

#include <cstdint>

#include "fmds/gf.hpp"

namespace fmds {

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

/// Least b >= 1 with a^b = 1 (mod m). Throws std::domain_error when
/// gcd(a, m) != 1 (no multiplicative order exists) or m < 2.
std::uint64_t order_mod(std::uint64_t a, std::uint64_t m);

/// Euler totient via trial-division factorization.
std::uint64_t euler_phi(std::uint64_t m);

/// Smallest field of characteristic p containing a primitive n-th root of
/// unity: GF(p^beta) with beta = order_mod(p, n). Throws std::domain_error
/// when p divides n (no such field exists) and std::invalid_argument when p
/// is not prime.
Field find_field(std::uint64_t n, std::uint64_t p);

/// Smallest element in canonical-integer order whose multiplicative order is
/// q - 1, verified against the prime factorization of q - 1.
Fe primitive_element(const Field& f);

/// omega = delta^s with s = (q-1)/n; omega has exact order n. Throws
/// std::domain_error when n does not divide q - 1.
Fe nth_root(const Field& f, std::uint64_t n);

/// Multiplicative order of a nonzero element.
std::uint64_t element_order(const Field& f, Fe a);

}  // namespace fmds
