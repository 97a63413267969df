#pragma once

// Word-sized prime fields for randomized identity testing.  Primes sit just
// above 2^62 (found by deterministic Miller-Rabin), products go through
// __uint128_t, and all sampling is driven by SplitMix64 so runs with equal
// seeds are byte-identical.

#include "rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace umemura {

struct BadPrime : std::runtime_error {
    BadPrime() : std::runtime_error("coefficient denominator divisible by prime") {}
};

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1ULL) r = mulmod_u64(r, base, p);
        base = mulmod_u64(base, base, p);
        exp >>= 1ULL;
    }
    return r;
}

// Deterministic Miller-Rabin: this base set decides primality for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1ULL) == 0) {
        d >>= 1ULL;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// First `count` primes above 2^62, in a fixed order.
inline std::vector<std::uint64_t> identity_primes(int count) {
    std::vector<std::uint64_t> out;
    std::uint64_t candidate = (1ULL << 62) + 1;
    while (static_cast<int>(out.size()) < count) {
        if (is_prime_u64(candidate)) out.push_back(candidate);
        candidate += 2;
    }
    return out;
}

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Small nonzero rational with numerator in [-span, span]\{0}, denominator in [1, den_span].
    Rational rational(long span = 40, long den_span = 6) {
        long num = static_cast<long>(below(static_cast<std::uint64_t>(2 * span))) - span;
        if (num >= 0) ++num;  // skip zero
        long den = 1 + static_cast<long>(below(static_cast<std::uint64_t>(den_span)));
        return rat(num, den);
    }
};

// Arithmetic in Z/p with the modulus carried alongside the value.
struct Zp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Zp() = default;
    Zp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

    friend Zp operator+(const Zp& a, const Zp& b) {
        std::uint64_t s = a.v + b.v;
        if (s >= a.p) s -= a.p;
        return Zp{s, a.p};
    }
    friend Zp operator-(const Zp& a, const Zp& b) {
        return Zp{a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p};
    }
    friend Zp operator*(const Zp& a, const Zp& b) { return Zp{mulmod_u64(a.v, b.v, a.p), a.p}; }
    friend Zp operator-(const Zp& a) { return Zp{a.v == 0 ? 0 : a.p - a.v, a.p}; }
    friend bool operator==(const Zp& a, const Zp& b) { return a.v == b.v; }

    Zp inverse() const {
        if (v == 0) throw BadPrime();
        return Zp{powmod_u64(v, p - 2, p), p};
    }
    friend Zp operator/(const Zp& a, const Zp& b) { return a * b.inverse(); }
    bool is_zero() const { return v == 0; }
};

inline std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
    // p < 2^63 fits in unsigned long on this platform.
    std::uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
    return r;
}

inline Zp zp_from_rational(const Rational& q, std::uint64_t p) {
    const std::uint64_t num = mpz_mod_u64(q.get_num(), p);
    const std::uint64_t den = mpz_mod_u64(q.get_den(), p);
    if (den == 0) throw BadPrime();
    return Zp{num, p} / Zp{den, p};
}

}  // namespace umemura
