#pragma once

/// Number-theoretic primitives on Int: gcd, extended gcd, modular
/// inverse/power, trial-division factorization and the Euler totient.
/// All functions are pure; values are immutable.

#include <cstdint>
#include <map>
#include <random>

#include "crtkit/integer.hpp"

namespace crtkit {

/// Non-negative greatest common divisor; gcd(0,0) = 0.
Int gcd(const Int& a, const Int& b);

struct ExtGcd {
    Int g;  // gcd(a, b) >= 0
    Int x;  // a*x + b*y = g
    Int y;
};

ExtGcd ext_gcd(const Int& a, const Int& b);

/// r in [0, m) with a*r == 1 (mod m); mod_inverse(a, 1) = 0.
/// Pre: m >= 1. Throws Error(not_coprime) if gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

/// b^e mod m in [0, m) by square-and-multiply; intermediates stay < m^2.
/// Pre: e >= 0, m >= 1.
Int mod_pow(const Int& b, const Int& e, const Int& m);

enum class Primality { composite, prime, unknown };

/// Deterministic Miller-Rabin with the first twelve prime bases, a proven
/// certificate for n < 3317044064679887385961981 (~2^81). Larger inputs
/// that survive all rounds are reported unknown, never prime.
Primality classify_prime(const Int& n);

/// True iff classify_prime(n) == prime. Throws Error(factor_bound_exceeded)
/// when the certificate range is exceeded.
bool is_prime(const Int& n);

struct Factorization {
    // prime -> exponent, empty for n = 1
    std::map<Int, unsigned> factors;

    Int product() const;
};

inline constexpr std::uint32_t kDefaultTrialBound = 1u << 20;

/// Prime factorization by trial division up to `trial_bound`, with a
/// deterministic primality certificate for the remaining cofactor.
/// Pre: n >= 1. Throws Error(factor_bound_exceeded) when the cofactor is
/// neither below the bound's reach nor certified prime.
Factorization factorize(const Int& n, std::uint32_t trial_bound = kDefaultTrialBound);

/// |{k : 1 <= k <= n, gcd(k, n) = 1}|, computed through factorize.
/// Pre: n >= 1.
Int euler_phi(const Int& n, std::uint32_t trial_bound = kDefaultTrialBound);

/// Uniform integer with exactly `bits` bits (top bit set). Pre: bits >= 1.
Int random_bits(std::mt19937_64& rng, std::size_t bits);

/// Uniform integer in [0, m). Pre: m >= 1.
Int random_below(std::mt19937_64& rng, const Int& m);

/// Random prime with exactly `bits` bits. Pre: 2 <= bits <= 80 (the
/// deterministic certificate range).
Int random_prime(std::mt19937_64& rng, std::size_t bits);

}  // namespace crtkit
