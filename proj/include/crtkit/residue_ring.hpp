#pragma once

/// Residue class rings Z_n, finite products of them, and computational
/// verification that x -> (x mod m_1, ..., x mod m_r) is a ring isomorphism
/// for pairwise coprime moduli, including the restriction to unit groups.

#include <cstdint>
#include <vector>

#include "crtkit/integer.hpp"

namespace crtkit {

struct ResidueRing {
    Int modulus;  // >= 1

    explicit ResidueRing(Int m);
    bool operator==(const ResidueRing& o) const { return modulus == o.modulus; }
};

class ResidueElement {
public:
    ResidueElement(ResidueRing ring, const Int& value);

    const ResidueRing& ring() const { return ring_; }
    const Int& value() const { return value_; }

    bool operator==(const ResidueElement& o) const {
        return ring_ == o.ring_ && value_ == o.value_;
    }

private:
    ResidueRing ring_;
    Int value_;  // canonical, in [0, modulus)
};

ResidueElement ring_add(const ResidueElement& x, const ResidueElement& y);
ResidueElement ring_mul(const ResidueElement& x, const ResidueElement& y);
ResidueElement ring_neg(const ResidueElement& x);
ResidueElement ring_sub(const ResidueElement& x, const ResidueElement& y);

/// Componentwise ring structure on tuples.
class ProductRing {
public:
    explicit ProductRing(std::vector<ResidueRing> factors) : factors_(std::move(factors)) {}

    const std::vector<ResidueRing>& factors() const { return factors_; }

    std::vector<ResidueElement> element(const std::vector<Int>& values) const;
    std::vector<ResidueElement> add(const std::vector<ResidueElement>& x,
                                    const std::vector<ResidueElement>& y) const;
    std::vector<ResidueElement> mul(const std::vector<ResidueElement>& x,
                                    const std::vector<ResidueElement>& y) const;

private:
    std::vector<ResidueRing> factors_;
};

/// Componentwise reduction (x mod m_1, ..., x mod m_r).
/// Pre: 0 <= x < product of the moduli; throws Error(out_of_range).
std::vector<ResidueElement> sigma(const std::vector<Int>& moduli, const Int& x);

/// The unique x in [0, m) with sigma(x) = values, realized by Garner
/// recombination. Components must be canonical residues.
Int sigma_inverse(const std::vector<Int>& moduli, const std::vector<Int>& values);

struct IsoReport {
    std::uint64_t checked = 0;  // elements verified
    bool bijective = false;
    bool additive = false;
    bool multiplicative = false;

    bool ok() const { return bijective && additive && multiplicative; }
};

struct IsoCheckOptions {
    std::uint64_t exhaustive_bound = 1000000;  // largest ring size accepted
    std::uint64_t full_pair_limit = 1000;      // all pairs up to this size
    std::uint64_t sample_pairs = 100000;       // pairs sampled above it
    std::uint64_t sample_seed = 0x5eed;        // fixed: reports are reproducible
};

/// Exhaustively checks sigma is a bijection Z_m -> Z_m1 x ... x Z_mr and
/// preserves + and * on all element pairs (sampled above full_pair_limit).
/// Throws Error(not_pairwise_coprime | bound_exceeded).
IsoReport verify_ring_iso(const std::vector<Int>& moduli, const IsoCheckOptions& opts = {});

/// Restriction of sigma to the units of Z_pq: bijection onto
/// units(Z_p) x units(Z_q) preserving multiplication. `checked` is the unit
/// count, which equals phi(p)*phi(q); `additive` is vacuously true (the unit
/// group carries only multiplication).
/// Pre: p > 1, q > 1, gcd(p, q) = 1; throws Error(hypothesis_violated |
/// bound_exceeded).
IsoReport verify_unit_group_iso(const Int& p, const Int& q, const IsoCheckOptions& opts = {});

}  // namespace crtkit
