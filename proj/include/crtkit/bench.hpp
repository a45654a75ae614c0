#pragma once

/// Garner-vs-Euler benchmark: seeded random systems of distinct k-bit prime
/// moduli, per-strategy wall times and instrumented peak operand sizes.
/// Every strategy solves the same inputs and must produce the same u.

#include <cstdint>
#include <string>
#include <vector>

namespace crtkit {

struct BenchParams {
    std::size_t moduli_count = 2;  // r >= 2
    std::size_t moduli_bits = 8;   // k, 8 <= k <= 80
    std::size_t trials = 1;        // t >= 1
    std::uint64_t seed = 0;
};

struct BenchTrial {
    std::size_t trial = 0;
    std::int64_t time_ns = 0;
    std::size_t max_bits = 0;  // peak operand bits at the strategy's checkpoints
};

struct BenchStrategyRow {
    std::string strategy;
    std::vector<BenchTrial> trials;
    std::int64_t median_time_ns = 0;
    std::size_t max_bits = 0;  // maximum over all trials
};

struct BenchReport {
    BenchParams params;
    std::vector<BenchStrategyRow> rows;  // euler-totient, euler-extgcd, garner, fold
    /// Bit length the unreduced M_i = (m/m_i)^phi(m_i) would have, estimated
    /// as phi(m_i) * log2(m/m_i) without materializing the value.
    double raw_euler_constant_bits = 0.0;
};

/// Throws Error(bad_arguments) on parameter violations and
/// Error(internal_invariant) if any two strategies disagree.
BenchReport run_bench(const BenchParams& params);

/// Deterministic apart from the time_ns column.
/// Columns: strategy,r,k,trial,time_ns,max_bits
std::string bench_csv(const BenchReport& report);

}  // namespace crtkit
