#include "cgt/numutil.hpp"

#include <numeric>
#include <stdexcept>

namespace cgt {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            std::uint32_t e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.push_back({p, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (const auto& pp : factorize(n)) r -= r / pp.prime;
    return r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    std::uint64_t r = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
    if (n == 1) return 1;
    if (std::gcd(a % n, n) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
    std::uint64_t order = euler_phi(n);
    // Strip each prime from phi(n) while the power still fixes 1.
    for (const auto& pp : factorize(order)) {
        for (std::uint32_t i = 0; i < pp.exponent; ++i) {
            if (pow_mod(a, order / pp.prime, n) == 1) order /= pp.prime;
            else break;
        }
    }
    return order;
}

std::uint64_t primitive_root(std::uint64_t p) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("primitive_root: need an odd prime");
    const auto facs = factorize(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& pp : facs) {
            if (pow_mod(g, (p - 1) / pp.prime, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: search failed");
}

namespace {

// Chinese remainder lift: x == u (mod q), x == 1 (mod n/q).
std::uint64_t crt_lift(std::uint64_t u, std::uint64_t q, std::uint64_t n) {
    const std::uint64_t m = n / q;
    if (m == 1) return u % n;
    for (std::uint64_t x = u % n;; x += q) {
        if (x % m == 1) return x % n;
    }
}

} // namespace

std::vector<UnitGenerator> unit_group_generators(std::uint64_t n) {
    std::vector<UnitGenerator> out;
    if (n <= 2) return out;
    for (const auto& pp : factorize(n)) {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < pp.exponent; ++i) q *= pp.prime;
        if (pp.prime == 2) {
            if (pp.exponent == 1) continue;
            if (pp.exponent == 2) {
                out.push_back({crt_lift(3, q, n), 2});
            } else {
                out.push_back({crt_lift(q - 1, q, n), 2});
                out.push_back({crt_lift(3, q, n), q / 4});
            }
        } else {
            // Units mod an odd prime power are cyclic; find a generator directly.
            const std::uint64_t target = euler_phi(q);
            std::uint64_t g = 0;
            for (std::uint64_t c = 2; c < q; ++c) {
                if (c % pp.prime == 0) continue;
                if (multiplicative_order(c, q) == target) { g = c; break; }
            }
            if (g == 0) throw std::logic_error("unit_group_generators: no generator found");
            out.push_back({crt_lift(g, q, n), target});
        }
    }
    return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    std::uint64_t r = 1;
    while (n % p == 0) { n /= p; r *= p; }
    return r;
}

std::uint64_t pi_part(std::uint64_t n, const std::vector<std::uint64_t>& pi) {
    std::uint64_t r = 1;
    for (std::uint64_t p : pi) r *= p_part(n, p);
    return r;
}

} // namespace cgt
