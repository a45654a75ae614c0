#include "crtkit/residue_ring.hpp"

#include <random>

#include "crtkit/crt.hpp"
#include "crtkit/error.hpp"
#include "crtkit/number_theory.hpp"

namespace crtkit {

ResidueRing::ResidueRing(Int m) : modulus(std::move(m)) {
    if (modulus.sign() <= 0)
        throw Error(errc::non_positive_modulus,
                    "ring modulus " + modulus.to_string() + " is not >= 1");
}

ResidueElement::ResidueElement(ResidueRing ring, const Int& value)
    : ring_(std::move(ring)), value_(value.mod(ring_.modulus)) {}

namespace {

void require_same_ring(const ResidueElement& x, const ResidueElement& y) {
    if (!(x.ring() == y.ring()))
        throw Error(errc::ring_mismatch, "elements of Z_" + x.ring().modulus.to_string() +
                                             " and Z_" + y.ring().modulus.to_string());
}

}  // namespace

ResidueElement ring_add(const ResidueElement& x, const ResidueElement& y) {
    require_same_ring(x, y);
    return {x.ring(), x.value() + y.value()};
}

ResidueElement ring_mul(const ResidueElement& x, const ResidueElement& y) {
    require_same_ring(x, y);
    return {x.ring(), x.value() * y.value()};
}

ResidueElement ring_neg(const ResidueElement& x) { return {x.ring(), -x.value()}; }

ResidueElement ring_sub(const ResidueElement& x, const ResidueElement& y) {
    require_same_ring(x, y);
    return {x.ring(), x.value() - y.value()};
}

std::vector<ResidueElement> ProductRing::element(const std::vector<Int>& values) const {
    if (values.size() != factors_.size())
        throw Error(errc::length_mismatch, "tuple arity does not match factor count");
    std::vector<ResidueElement> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out.emplace_back(factors_[i], values[i]);
    return out;
}

std::vector<ResidueElement> ProductRing::add(const std::vector<ResidueElement>& x,
                                             const std::vector<ResidueElement>& y) const {
    if (x.size() != y.size() || x.size() != factors_.size())
        throw Error(errc::length_mismatch, "tuple arity does not match factor count");
    std::vector<ResidueElement> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(ring_add(x[i], y[i]));
    return out;
}

std::vector<ResidueElement> ProductRing::mul(const std::vector<ResidueElement>& x,
                                             const std::vector<ResidueElement>& y) const {
    if (x.size() != y.size() || x.size() != factors_.size())
        throw Error(errc::length_mismatch, "tuple arity does not match factor count");
    std::vector<ResidueElement> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(ring_mul(x[i], y[i]));
    return out;
}

std::vector<ResidueElement> sigma(const std::vector<Int>& moduli, const Int& x) {
    Int m = 1;
    for (const Int& mi : moduli) {
        if (mi.sign() <= 0)
            throw Error(errc::non_positive_modulus,
                        "modulus " + mi.to_string() + " is not >= 1");
        m *= mi;
    }
    if (x.is_negative() || x >= m)
        throw Error(errc::out_of_range,
                    x.to_string() + " is not a canonical representative in [0, " +
                        m.to_string() + ")");
    std::vector<ResidueElement> out;
    out.reserve(moduli.size());
    for (const Int& mi : moduli) out.emplace_back(ResidueRing(mi), x.mod(mi));
    return out;
}

Int sigma_inverse(const std::vector<Int>& moduli, const std::vector<Int>& values) {
    if (moduli.size() != values.size())
        throw Error(errc::length_mismatch, "tuple arity does not match modulus count");
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (values[i].is_negative() || (moduli[i].sign() > 0 && values[i] >= moduli[i]))
            throw Error(errc::out_of_range, "component " + std::to_string(i) +
                                                " is not a canonical residue mod " +
                                                moduli[i].to_string());
    }
    CongruenceSystem s = validate_system(moduli, values);
    return solve_garner(s).u;
}

IsoReport verify_ring_iso(const std::vector<Int>& moduli, const IsoCheckOptions& opts) {
    // Coprimality (the theorem's hypothesis) is enforced by construction.
    CongruenceSystem s = validate_system(moduli, std::vector<Int>(moduli.size(), Int(0)));
    if (s.modulus() > Int(opts.exhaustive_bound))
        throw Error(errc::bound_exceeded, "m = " + s.modulus().to_string() +
                                              " exceeds the exhaustive bound " +
                                              std::to_string(opts.exhaustive_bound));
    const std::uint64_t m = s.modulus().to_uint64();
    const std::size_t r = moduli.size();

    IsoReport report;
    report.checked = m;

    // Bijectivity: m elements into m tuples, so injective implies onto.
    std::vector<char> seen(m, 0);
    report.bijective = true;
    for (std::uint64_t x = 0; x < m; ++x) {
        std::vector<ResidueElement> tuple = sigma(moduli, Int(x));
        std::uint64_t index = 0;
        for (std::size_t i = r; i-- > 0;)
            index = index * moduli[i].to_uint64() + tuple[i].value().to_uint64();
        if (index >= m || seen[index]) {
            report.bijective = false;
            break;
        }
        seen[index] = 1;
    }

    // Homomorphism laws, on all pairs when feasible, sampled otherwise.
    ProductRing product{[&] {
        std::vector<ResidueRing> f;
        for (const Int& mi : moduli) f.emplace_back(mi);
        return f;
    }()};
    report.additive = true;
    report.multiplicative = true;
    auto check_pair = [&](std::uint64_t x, std::uint64_t y) {
        Int xi(x), yi(y);
        std::vector<ResidueElement> sx = sigma(moduli, xi);
        std::vector<ResidueElement> sy = sigma(moduli, yi);
        if (!(sigma(moduli, (xi + yi).mod(s.modulus())) == product.add(sx, sy)))
            report.additive = false;
        if (!(sigma(moduli, (xi * yi).mod(s.modulus())) == product.mul(sx, sy)))
            report.multiplicative = false;
    };
    if (m <= opts.full_pair_limit) {
        for (std::uint64_t x = 0; x < m; ++x)
            for (std::uint64_t y = 0; y < m; ++y) check_pair(x, y);
    } else {
        std::mt19937_64 rng(opts.sample_seed);
        std::uniform_int_distribution<std::uint64_t> dist(0, m - 1);
        for (std::uint64_t i = 0; i < opts.sample_pairs; ++i) check_pair(dist(rng), dist(rng));
    }
    return report;
}

IsoReport verify_unit_group_iso(const Int& p, const Int& q, const IsoCheckOptions& opts) {
    if (p <= Int(1) || q <= Int(1) || !gcd(p, q).is_one())
        throw Error(errc::hypothesis_violated,
                    "requires 1 < p, 1 < q, gcd(p, q) = 1; got p = " + p.to_string() +
                        ", q = " + q.to_string() + ", gcd = " + gcd(p, q).to_string());
    Int m_int = p * q;
    if (m_int > Int(opts.exhaustive_bound))
        throw Error(errc::bound_exceeded, "pq = " + m_int.to_string() +
                                              " exceeds the exhaustive bound " +
                                              std::to_string(opts.exhaustive_bound));
    const std::uint64_t m = m_int.to_uint64();
    const std::uint64_t pu = p.to_uint64();
    const std::uint64_t qu = q.to_uint64();

    std::vector<std::uint64_t> units;
    for (std::uint64_t x = 0; x < m; ++x) {
        if (gcd(Int(x), m_int).is_one()) units.push_back(x);
    }

    IsoReport report;
    report.checked = units.size();
    report.additive = true;  // vacuous: only the multiplicative structure exists

    // Image lands in units(Z_p) x units(Z_q) and is injective; the counting
    // identity phi(pq) = phi(p) phi(q) then makes it onto.
    std::vector<char> seen(m, 0);
    report.bijective = true;
    for (std::uint64_t x : units) {
        std::uint64_t xp = x % pu;
        std::uint64_t xq = x % qu;
        if (!gcd(Int(xp), p).is_one() || !gcd(Int(xq), q).is_one()) {
            report.bijective = false;
            break;
        }
        std::uint64_t index = xp + pu * xq;
        if (seen[index]) {
            report.bijective = false;
            break;
        }
        seen[index] = 1;
    }
    if (report.bijective) {
        Int expected = euler_phi(p) * euler_phi(q);
        if (Int(static_cast<unsigned long long>(units.size())) != expected)
            report.bijective = false;
    }

    report.multiplicative = true;
    auto check_pair = [&](std::uint64_t x, std::uint64_t y) {
        auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
            return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
        };
        std::uint64_t prod = mulmod(x, y, m);
        if (prod % pu != mulmod(x % pu, y % pu, pu)) report.multiplicative = false;
        if (prod % qu != mulmod(x % qu, y % qu, qu)) report.multiplicative = false;
    };
    if (units.size() <= opts.full_pair_limit) {
        for (std::uint64_t x : units)
            for (std::uint64_t y : units) check_pair(x, y);
    } else {
        std::mt19937_64 rng(opts.sample_seed);
        std::uniform_int_distribution<std::size_t> dist(0, units.size() - 1);
        for (std::uint64_t i = 0; i < opts.sample_pairs; ++i)
            check_pair(units[dist(rng)], units[dist(rng)]);
    }
    return report;
}

}  // namespace crtkit
