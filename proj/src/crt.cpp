#include "crtkit/crt.hpp"

#include <utility>

#include "crtkit/error.hpp"
#include "crtkit/number_theory.hpp"

namespace crtkit {

CongruenceSystem CongruenceSystem::validate(std::vector<Int> moduli, std::vector<Int> residues) {
    if (moduli.size() != residues.size())
        throw Error(errc::length_mismatch,
                    std::to_string(moduli.size()) + " moduli vs " +
                        std::to_string(residues.size()) + " residues");
    for (const Int& m : moduli) {
        if (m.sign() <= 0)
            throw Error(errc::non_positive_modulus, "modulus " + m.to_string() + " is not >= 1");
    }
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        for (std::size_t j = i + 1; j < moduli.size(); ++j) {
            Int g = gcd(moduli[i], moduli[j]);
            if (!g.is_one())
                throw Error(errc::not_pairwise_coprime,
                            "gcd(" + moduli[i].to_string() + ", " + moduli[j].to_string() +
                                ") = " + g.to_string());
        }
    }
    CongruenceSystem s;
    s.modulus_ = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        residues[i] = residues[i].mod(moduli[i]);
        s.modulus_ *= moduli[i];
    }
    s.moduli_ = std::move(moduli);
    s.residues_ = std::move(residues);
    return s;
}

CrtSolution solve_search(const CongruenceSystem& s, std::uint64_t bound) {
    if (s.modulus() > Int(bound))
        throw Error(errc::search_bound_exceeded,
                    "m = " + s.modulus().to_string() + " exceeds the search bound " +
                        std::to_string(bound));
    const std::uint64_t m = s.modulus().to_uint64();
    const std::size_t r = s.size();
    std::vector<std::uint64_t> mods(r), targets(r), current(r);
    for (std::size_t i = 0; i < r; ++i) {
        mods[i] = s.moduli()[i].to_uint64();
        targets[i] = s.residues()[i].to_uint64();
        current[i] = 0;  // residues of candidate 0
    }

    std::uint64_t hits = 0;
    std::uint64_t solution = 0;
    for (std::uint64_t candidate = 0; candidate < m; ++candidate) {
        bool all = true;
        for (std::size_t i = 0; i < r; ++i) {
            if (current[i] != targets[i]) {
                all = false;
                break;
            }
        }
        if (all) {
            if (hits == 0) solution = candidate;
            ++hits;
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (++current[i] == mods[i]) current[i] = 0;
        }
    }
    if (hits != 1)
        throw Error(errc::internal_invariant,
                    "scan found " + std::to_string(hits) + " solutions in [0, m); expected 1");
    return {Int(solution), s.modulus(), Int(0)};
}

EulerConstants euler_constants(const CongruenceSystem& s, EulerVariant variant) {
    const Int& m = s.modulus();
    EulerConstants out;
    out.variant = variant;
    out.constants.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Int& mi = s.moduli()[i];
        Int rest = m / mi;  // exact: product of the other moduli
        if (variant == EulerVariant::totient) {
            out.constants.push_back(mod_pow(rest, euler_phi(mi), m));
        } else {
            // rest * (rest^-1 mod m_i) == 1 (mod m_i) and == 0 (mod m_j).
            out.constants.push_back((rest * mod_inverse(rest, mi)).mod(m));
        }
    }
    return out;
}

CrtSolution solve_euler(const CongruenceSystem& s, EulerVariant variant, OperandProbe* probe) {
    EulerConstants constants = euler_constants(s, variant);
    const Int& m = s.modulus();
    Int acc = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Int term = s.residues()[i] * constants.constants[i];
        if (probe) probe->note(term);
        acc += term;
        if (probe) probe->note(acc);
    }
    return {acc.mod(m), m, Int(0)};
}

GarnerPrecomp GarnerPrecomp::build(std::vector<Int> moduli) {
    for (const Int& m : moduli) {
        if (m.sign() <= 0)
            throw Error(errc::non_positive_modulus, "modulus " + m.to_string() + " is not >= 1");
    }
    GarnerPrecomp p;
    p.table_.resize(moduli.size());
    for (std::size_t j = 0; j < moduli.size(); ++j) {
        p.table_[j].reserve(j);
        for (std::size_t i = 0; i < j; ++i) {
            try {
                p.table_[j].push_back(mod_inverse(moduli[i], moduli[j]));
            } catch (const Error& e) {
                if (e.code() == errc::not_coprime)
                    throw Error(errc::not_pairwise_coprime,
                                "gcd(" + moduli[i].to_string() + ", " + moduli[j].to_string() +
                                    ") != 1");
                throw;
            }
        }
    }
    p.moduli_ = std::move(moduli);
    return p;
}

MixedRadixDigits garner_digits(const GarnerPrecomp& p, const std::vector<Int>& residues,
                               OperandProbe* probe) {
    if (residues.size() != p.size())
        throw Error(errc::length_mismatch,
                    std::to_string(p.size()) + " moduli vs " + std::to_string(residues.size()) +
                        " residues");
    MixedRadixDigits out;
    out.digits.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Int& mk = p.moduli()[k];
        Int t = residues[k].mod(mk);
        for (std::size_t i = 0; i < k; ++i) {
            Int diff = t - out.digits[i];
            if (probe) probe->note(diff);
            Int scaled = diff * p.constant(i, k);
            if (probe) probe->note(scaled);
            t = scaled.mod(mk);
        }
        if (probe) probe->note(t);
        out.digits.push_back(std::move(t));
    }
    return out;
}

CrtSolution solve_garner(const CongruenceSystem& s, OperandProbe* probe) {
    if (s.size() == 0) return {Int(0), Int(1), Int(0)};
    GarnerPrecomp pre = GarnerPrecomp::build(s.moduli());
    MixedRadixDigits digits = garner_digits(pre, s.residues(), probe);
    // Horner over the mixed-radix base; intermediates stay below m.
    Int u = digits.digits.back();
    for (std::size_t i = s.size() - 1; i-- > 0;) u = u * s.moduli()[i] + digits.digits[i];
    return {std::move(u), s.modulus(), Int(0)};
}

CrtSolution solve_pair(const Int& m_a, const Int& m_b, const Int& u, const Int& v,
                       OperandProbe* probe) {
    if (m_a.sign() <= 0 || m_b.sign() <= 0)
        throw Error(errc::non_positive_modulus, "moduli must be >= 1");
    ExtGcd e = ext_gcd(m_a, m_b);
    if (!e.g.is_one())
        throw Error(errc::not_coprime, "gcd(" + m_a.to_string() + ", " + m_b.to_string() +
                                           ") = " + e.g.to_string());
    // x == u (mod m_a), x == v (mod m_b): x = u + m_a * ((v - u) * m_a^-1 mod m_b).
    Int t = ((v - u).mod(m_b) * e.x.mod(m_b)).mod(m_b);
    Int scaled = m_a * t;
    if (probe) probe->note(scaled);
    Int x = u.mod(m_a) + scaled;
    if (probe) probe->note(x);
    return {std::move(x), m_a * m_b, Int(0)};
}

CrtSolution solve_fold(const CongruenceSystem& s, OperandProbe* probe) {
    CrtSolution acc{Int(0), Int(1), Int(0)};
    for (std::size_t i = 0; i < s.size(); ++i) {
        acc = solve_pair(acc.modulus, s.moduli()[i], acc.u, s.residues()[i], probe);
    }
    return acc;
}

CrtSolution shift_to_range(const CrtSolution& sol, const Int& a) {
    Int u = a + (sol.u - a).mod(sol.modulus);
    return {std::move(u), sol.modulus, a};
}

std::vector<Int> congruence_witnesses(const CrtSolution& sol, const CongruenceSystem& s) {
    std::vector<Int> witnesses;
    witnesses.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto [q, r] = Int::divmod(sol.u - s.residues()[i], s.moduli()[i]);
        if (!r.is_zero())
            throw Error(errc::not_a_solution,
                        sol.u.to_string() + " is not congruent to " +
                            s.residues()[i].to_string() + " mod " + s.moduli()[i].to_string());
        witnesses.push_back(std::move(q));
    }
    return witnesses;
}

DomainElement solve_generic(const EuclideanDomain& d, const std::vector<DomainElement>& moduli,
                            const std::vector<DomainElement>& residues) {
    if (moduli.size() != residues.size())
        throw Error(errc::length_mismatch,
                    std::to_string(moduli.size()) + " moduli vs " +
                        std::to_string(residues.size()) + " residues");
    for (const DomainElement& m : moduli) {
        if (d.is_zero(m)) throw Error(errc::division_by_zero, "zero modulus");
        if (d.is_unit(m))
            throw Error(errc::invalid_modulus, "unit moduli are not allowed in " + d.name());
    }
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        for (std::size_t j = i + 1; j < moduli.size(); ++j) {
            if (!are_coprime(d, moduli[i], moduli[j]))
                throw Error(errc::not_pairwise_coprime,
                            "moduli " + std::to_string(i) + " and " + std::to_string(j) +
                                " share a non-unit factor");
        }
    }
    if (moduli.empty()) return d.zero();

    // Garner with c_ik = m_i^-1 mod m_k from the extended Euclidean algorithm.
    std::vector<DomainElement> digits;
    digits.reserve(moduli.size());
    for (std::size_t k = 0; k < moduli.size(); ++k) {
        DomainElement t = d.divmod(residues[k], moduli[k]).remainder;
        for (std::size_t i = 0; i < k; ++i) {
            DomainExtGcd e = eu_ext_gcd(d, moduli[i], moduli[k]);
            if (!(e.g == d.one()))
                throw Error(errc::internal_invariant, "coprime moduli with non-unit gcd");
            DomainElement inv = d.divmod(e.x, moduli[k]).remainder;
            t = d.divmod(d.mul(d.sub(t, digits[i]), inv), moduli[k]).remainder;
        }
        digits.push_back(std::move(t));
    }
    DomainElement u = digits.back();
    for (std::size_t i = moduli.size() - 1; i-- > 0;)
        u = d.add(d.mul(u, moduli[i]), digits[i]);
    return u;
}

}  // namespace crtkit
