#pragma once

/// Chinese-Remainder solvers as independent, cross-verifiable strategies
/// over a shared validated system model:
///
///   solve_search  - exhaustive scan, the oracle (non-constructive proof)
///   solve_euler   - M_i constants, via the totient or an ext-gcd variant
///   solve_garner  - mixed-radix digits with precomputed inverses
///   solve_pair    - the restricted two-moduli rule
///   solve_fold    - full theorem as a left fold of the restricted rule
///   solve_generic - Garner lifted to any Euclidean domain
///
/// plus range shifting and arithmetic witness extraction.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "crtkit/euclidean.hpp"
#include "crtkit/integer.hpp"

namespace crtkit {

/// Records the peak bit length of the operands a strategy produces at its
/// modular checkpoints (after each multiplication/accumulation, before the
/// value is reduced or consumed). The final assembly of u itself, common to
/// every strategy and bounded by m, is not a checkpoint.
class OperandProbe {
public:
    void note(const Int& v) {
        std::size_t b = v.bit_length();
        if (b > max_bits_) max_bits_ = b;
    }
    std::size_t max_bits() const { return max_bits_; }

private:
    std::size_t max_bits_ = 0;
};

/// Pairwise-coprime moduli with residues normalized into [0, m_i).
class CongruenceSystem {
public:
    CongruenceSystem() : modulus_(1) {}  // empty system: m = 1

    /// Validates lengths, positivity and pairwise coprimality; normalizes
    /// residues. Throws Error(length_mismatch | non_positive_modulus |
    /// not_pairwise_coprime).
    static CongruenceSystem validate(std::vector<Int> moduli, std::vector<Int> residues);

    std::size_t size() const { return moduli_.size(); }
    const std::vector<Int>& moduli() const { return moduli_; }
    const std::vector<Int>& residues() const { return residues_; }
    /// m = product of the moduli (1 for the empty system).
    const Int& modulus() const { return modulus_; }

private:
    std::vector<Int> moduli_;
    std::vector<Int> residues_;
    Int modulus_;
};

inline CongruenceSystem validate_system(std::vector<Int> moduli, std::vector<Int> residues) {
    return CongruenceSystem::validate(std::move(moduli), std::move(residues));
}

struct CrtSolution {
    Int u;
    Int modulus;
    Int range_start;  // u lies in [range_start, range_start + modulus)
};

enum class EulerVariant { totient, extgcd };

/// The constants M_i with M_i == 1 (mod m_i), M_i == 0 (mod m_j), stored
/// reduced mod m.
struct EulerConstants {
    std::vector<Int> constants;
    EulerVariant variant;
};

/// Triangular table c_ij (i < j) with c_ij * m_i == 1 (mod m_j).
class GarnerPrecomp {
public:
    /// Throws Error(not_pairwise_coprime).
    static GarnerPrecomp build(std::vector<Int> moduli);

    std::size_t size() const { return moduli_.size(); }
    const std::vector<Int>& moduli() const { return moduli_; }
    /// c_ij for i < j, in [0, m_j).
    const Int& constant(std::size_t i, std::size_t j) const { return table_[j][i]; }

private:
    std::vector<Int> moduli_;
    std::vector<std::vector<Int>> table_;  // table_[j] holds c_0j .. c_(j-1)j
};

/// Mixed-radix digits v_i in [0, m_i); the value they stand for is
/// v_1 + v_2*m_1 + v_3*m_1*m_2 + ...
struct MixedRadixDigits {
    std::vector<Int> digits;
};

inline constexpr std::uint64_t kDefaultSearchBound = 1ull << 24;

/// Exhaustive scan over [0, m); asserts the solution is unique. The oracle
/// the constructive strategies are checked against.
/// Throws Error(search_bound_exceeded) when m > bound.
CrtSolution solve_search(const CongruenceSystem& s,
                         std::uint64_t bound = kDefaultSearchBound);

/// Throws Error(factor_bound_exceeded) (totient variant only).
EulerConstants euler_constants(const CongruenceSystem& s, EulerVariant variant);

/// u = (u_1*M_1 + ... + u_r*M_r) mod m.
CrtSolution solve_euler(const CongruenceSystem& s, EulerVariant variant,
                        OperandProbe* probe = nullptr);

inline GarnerPrecomp garner_precompute(std::vector<Int> moduli) {
    return GarnerPrecomp::build(std::move(moduli));
}

/// Digits by the recursive elimination, reducing mod m_k at every step.
MixedRadixDigits garner_digits(const GarnerPrecomp& p, const std::vector<Int>& residues,
                               OperandProbe* probe = nullptr);

/// Garner: digits, then Horner recombination over the mixed-radix base
/// (recombination intermediates never exceed m).
CrtSolution solve_garner(const CongruenceSystem& s, OperandProbe* probe = nullptr);

/// Two-moduli solution by a single extended gcd.
/// Throws Error(not_coprime) when gcd(m_a, m_b) != 1.
CrtSolution solve_pair(const Int& m_a, const Int& m_b, const Int& u, const Int& v,
                       OperandProbe* probe = nullptr);

/// Left fold of solve_pair, accumulating (u, m) from (0, 1).
CrtSolution solve_fold(const CongruenceSystem& s, OperandProbe* probe = nullptr);

/// The unique representative congruent to sol.u in [a, a + m).
CrtSolution shift_to_range(const CrtSolution& sol, const Int& a);

/// x_i with u = residues[i] + x_i * moduli[i], so moduli[i]*x_i + residues[i]
/// is the same value for every i. Throws Error(not_a_solution) if sol does
/// not solve s.
std::vector<Int> congruence_witnesses(const CrtSolution& sol, const CongruenceSystem& s);

/// Garner over an arbitrary Euclidean domain: the canonical remainder r with
/// r == residues[i] (mod moduli[i]) for all i. Moduli must be pairwise
/// coprime, none zero or unit.
DomainElement solve_generic(const EuclideanDomain& d, const std::vector<DomainElement>& moduli,
                            const std::vector<DomainElement>& residues);

}  // namespace crtkit
