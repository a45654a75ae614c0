#pragma once

// Shared generator for random pairwise-coprime congruence systems used by
// the solver tests and the acceptance suite.

#include <cstdint>
#include <random>
#include <vector>

#include "crtkit/crt.hpp"
#include "crtkit/number_theory.hpp"

namespace testgen {

// A system with 2..6 moduli whose product stays below 2^max_bits. Values are
// drawn small first so typical products spread across the whole range.
inline crtkit::CongruenceSystem random_system(std::mt19937_64& rng, std::size_t max_bits = 20) {
    const std::size_t count = 2 + rng() % 5;
    const std::size_t target_bits = 4 + rng() % (max_bits - 3);
    std::vector<crtkit::Int> moduli;
    crtkit::Int product = 1;
    for (std::size_t i = 0; i < count; ++i) {
        crtkit::Int m = 1;
        for (int attempt = 0; attempt < 64; ++attempt) {
            crtkit::Int candidate{static_cast<unsigned long long>(2 + rng() % 99)};
            bool coprime = true;
            for (const crtkit::Int& other : moduli) {
                if (!crtkit::gcd(candidate, other).is_one()) {
                    coprime = false;
                    break;
                }
            }
            if (coprime && (product * candidate).bit_length() <= target_bits) {
                m = candidate;
                break;
            }
        }
        product *= m;  // m = 1 when no candidate fit: vacuous but valid
        moduli.push_back(m);
    }
    std::vector<crtkit::Int> residues;
    residues.reserve(moduli.size());
    for (const crtkit::Int& m : moduli)
        residues.push_back(crtkit::random_below(rng, m));
    return crtkit::validate_system(moduli, residues);
}

}  // namespace testgen
