#include "crtkit/number_theory.hpp"

#include <array>
#include <utility>

#include "crtkit/error.hpp"

namespace crtkit {

Int gcd(const Int& a, const Int& b) {
    Int x = a.abs();
    Int y = b.abs();
    while (!y.is_zero()) {
        Int r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (!r.is_zero()) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = std::exchange(r, std::move(t));
        t = old_x - q * x;
        old_x = std::exchange(x, std::move(t));
        t = old_y - q * y;
        old_y = std::exchange(y, std::move(t));
    }
    if (old_r.is_negative()) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {std::move(old_r), std::move(old_x), std::move(old_y)};
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m.sign() <= 0)
        throw Error(errc::bad_arguments, "mod_inverse requires m >= 1, got " + m.to_string());
    if (m.is_one()) return 0;
    ExtGcd e = ext_gcd(a, m);
    if (!e.g.is_one())
        throw Error(errc::not_coprime, "no inverse of " + a.to_string() + " mod " +
                                           m.to_string() + ": gcd = " + e.g.to_string());
    return e.x.mod(m);
}

Int mod_pow(const Int& b, const Int& e, const Int& m) {
    if (e.is_negative())
        throw Error(errc::bad_arguments, "mod_pow requires e >= 0, got " + e.to_string());
    if (m.sign() <= 0)
        throw Error(errc::bad_arguments, "mod_pow requires m >= 1, got " + m.to_string());
    Int result = Int(1).mod(m);
    Int base = b.mod(m);
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        result = (result * result).mod(m);
        if (e.bit(i)) result = (result * base).mod(m);
    }
    return result;
}

namespace {

// Bases certifying Miller-Rabin for n < 3317044064679887385961981
// (Sorenson & Webster).
constexpr std::array<std::uint32_t, 12> kMillerRabinBases = {2,  3,  5,  7,  11, 13,
                                                             17, 19, 23, 29, 31, 37};

const Int& certificate_limit() {
    static const Int limit = Int::from_string("3317044064679887385961981");
    return limit;
}

// One Miller-Rabin round; n odd >= 3, n - 1 = d * 2^s with d odd.
bool miller_rabin_round(const Int& n, const Int& n_minus_1, const Int& d, std::size_t s,
                        std::uint32_t base) {
    Int x = mod_pow(Int(base), d, n);
    if (x.is_one() || x == n_minus_1) return true;
    for (std::size_t i = 1; i < s; ++i) {
        x = (x * x).mod(n);
        if (x == n_minus_1) return true;
    }
    return false;
}

// Machine-word Miller-Rabin; exact for any odd n < 2^64.
bool miller_rabin_round_u64(std::uint64_t n, std::uint64_t d, std::size_t s,
                            std::uint64_t base) {
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    std::uint64_t x = 1;
    std::uint64_t b = base % n;
    for (std::uint64_t e = d; e; e >>= 1) {
        if (e & 1) x = mulmod(x, b);
        b = mulmod(b, b);
    }
    if (x == 1 || x == n - 1) return true;
    for (std::size_t i = 1; i < s; ++i) {
        x = mulmod(x, x);
        if (x == n - 1) return true;
    }
    return false;
}

Primality classify_prime_u64(std::uint64_t n) {
    for (std::uint32_t p : kMillerRabinBases) {
        if (n == p) return Primality::prime;
        if (n % p == 0) return Primality::composite;
    }
    std::uint64_t d = n - 1;
    std::size_t s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint32_t base : kMillerRabinBases) {
        if (!miller_rabin_round_u64(n, d, s, base)) return Primality::composite;
    }
    return Primality::prime;
}

}  // namespace

Primality classify_prime(const Int& n) {
    if (n < Int(2)) return Primality::composite;
    if (n.fits_uint64()) return classify_prime_u64(n.to_uint64());
    for (std::uint32_t p : kMillerRabinBases) {
        if (mod_u32(n, p) == 0) return Primality::composite;
    }
    Int n_minus_1 = n - Int(1);
    Int d = n_minus_1;
    std::size_t s = 0;
    while (d.is_even()) {
        d = divmod_u32(d, 2).first;
        ++s;
    }
    for (std::uint32_t base : kMillerRabinBases) {
        if (!miller_rabin_round(n, n_minus_1, d, s, base)) return Primality::composite;
    }
    return n < certificate_limit() ? Primality::prime : Primality::unknown;
}

bool is_prime(const Int& n) {
    switch (classify_prime(n)) {
        case Primality::prime:
            return true;
        case Primality::composite:
            return false;
        case Primality::unknown:
            break;
    }
    throw Error(errc::factor_bound_exceeded,
                "no deterministic primality certificate for " + n.to_string());
}

Int Factorization::product() const {
    Int p = 1;
    for (const auto& [prime, exp] : factors) {
        for (unsigned i = 0; i < exp; ++i) p *= prime;
    }
    return p;
}

Factorization factorize(const Int& n, std::uint32_t trial_bound) {
    if (n.sign() <= 0)
        throw Error(errc::bad_arguments, "factorize requires n >= 1, got " + n.to_string());
    Factorization f;

    // The cofactor drops into machine range quickly; keep it there.
    Int c_big = n;
    std::uint64_t c64 = 0;
    bool small = c_big.fits_uint64();
    if (small) c64 = c_big.to_uint64();

    auto strip = [&](std::uint32_t p) {
        unsigned exp = 0;
        if (small) {
            while (c64 % p == 0) {
                c64 /= p;
                ++exp;
            }
        } else {
            while (mod_u32(c_big, p) == 0) {
                c_big = divmod_u32(c_big, p).first;
                ++exp;
            }
            if (c_big.fits_uint64()) {
                small = true;
                c64 = c_big.to_uint64();
            }
        }
        if (exp) f.factors.emplace(Int(p), exp);
    };
    auto cofactor_below = [&](std::uint64_t pp) { return small && c64 < pp; };

    strip(2);
    strip(3);
    std::uint64_t p = 5;
    while (p <= trial_bound && !cofactor_below(p * p)) {
        strip(static_cast<std::uint32_t>(p));
        if (p + 2 <= trial_bound) strip(static_cast<std::uint32_t>(p + 2));
        p += 6;
    }

    Int c = small ? Int(c64) : c_big;
    if (!c.is_one()) {
        // Every composite <= bound^2 has a factor <= bound, all stripped.
        std::uint64_t bound_sq = static_cast<std::uint64_t>(trial_bound) * trial_bound;
        bool certified = cofactor_below(bound_sq + 1) || classify_prime(c) == Primality::prime;
        if (!certified)
            throw Error(errc::factor_bound_exceeded,
                        "cofactor " + c.to_string() + " exceeds trial bound " +
                            std::to_string(trial_bound) + " and is not certified prime");
        f.factors[c] += 1;
    }
    return f;
}

Int euler_phi(const Int& n, std::uint32_t trial_bound) {
    if (n.sign() <= 0)
        throw Error(errc::bad_arguments, "euler_phi requires n >= 1, got " + n.to_string());
    Factorization f = factorize(n, trial_bound);
    Int phi = 1;
    for (const auto& [prime, exp] : f.factors) {
        Int pk = prime - Int(1);
        for (unsigned i = 1; i < exp; ++i) pk *= prime;
        phi *= pk;
    }
    return phi;
}

Int random_bits(std::mt19937_64& rng, std::size_t bits) {
    if (bits == 0) throw Error(errc::bad_arguments, "random_bits requires bits >= 1");
    Int r = Int::pow2(bits - 1);
    if (bits > 1) r += random_below(rng, Int::pow2(bits - 1));
    return r;
}

Int random_below(std::mt19937_64& rng, const Int& m) {
    if (m.sign() <= 0)
        throw Error(errc::bad_arguments, "random_below requires m >= 1, got " + m.to_string());
    std::size_t bits = m.bit_length();
    for (;;) {
        // Rejection sampling over [0, 2^bits).
        Int candidate = 0;
        std::size_t produced = 0;
        while (produced < bits) {
            std::size_t take = std::min<std::size_t>(32, bits - produced);
            std::uint32_t word = static_cast<std::uint32_t>(rng() & ((1ull << take) - 1));
            candidate = candidate * Int::pow2(take) + Int(word);
            produced += take;
        }
        if (candidate < m) return candidate;
    }
}

Int random_prime(std::mt19937_64& rng, std::size_t bits) {
    if (bits < 2 || bits > 80)
        throw Error(errc::bad_arguments,
                    "random_prime requires 2 <= bits <= 80, got " + std::to_string(bits));
    for (;;) {
        Int candidate = random_bits(rng, bits);
        if (candidate.is_even()) candidate += Int(1);
        if (candidate.bit_length() != bits) continue;  // the +1 overflowed the width
        if (classify_prime(candidate) == Primality::prime) return candidate;
    }
}

}  // namespace crtkit
