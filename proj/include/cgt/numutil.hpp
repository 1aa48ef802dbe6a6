#pragma once

// Small number-theory helpers: primality, factorization, modular arithmetic,
// unit-group generators.  Everything here is exact and deterministic; inputs
// stay far below 2^32 so trial division is plenty.

#include <cstdint>
#include <vector>

namespace cgt {

bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;
};

// Prime factorization with primes ascending.  factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Multiplicative order of a modulo n; requires gcd(a, n) == 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

// Smallest primitive root modulo a prime p >= 3.
std::uint64_t primitive_root(std::uint64_t p);

// Generators of the unit group mod n as independent cyclic factors
// (one entry per factor; orders multiply to euler_phi(n)).
struct UnitGenerator {
    std::uint64_t value; // unit mod n
    std::uint64_t order; // exact multiplicative order mod n
};
std::vector<UnitGenerator> unit_group_generators(std::uint64_t n);

// p-part of n: the largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// Product of p-parts over p in pi.
std::uint64_t pi_part(std::uint64_t n, const std::vector<std::uint64_t>& pi);

} // namespace cgt
