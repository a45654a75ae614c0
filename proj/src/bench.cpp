#include "crtkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "crtkit/crt.hpp"
#include "crtkit/error.hpp"
#include "crtkit/number_theory.hpp"

namespace crtkit {

namespace {

double log2_approx(const Int& v) {
    // log2 from the top bits; plenty for a size estimate.
    std::size_t bits = v.bit_length();
    if (bits == 0) return 0.0;
    if (bits <= 63) return std::log2(static_cast<double>(v.to_uint64()));
    Int top = v / Int::pow2(bits - 53);
    return std::log2(static_cast<double>(top.to_uint64())) +
           static_cast<double>(bits - 53);
}

std::int64_t median_ns(std::vector<std::int64_t> times) {
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

}  // namespace

BenchReport run_bench(const BenchParams& params) {
    if (params.moduli_count < 2)
        throw Error(errc::bad_arguments, "bench requires at least 2 moduli");
    if (params.moduli_bits < 8 || params.moduli_bits > 80)
        throw Error(errc::bad_arguments,
                    "bench requires 8 <= moduli-bits <= 80 (deterministic primality range)");
    if (params.trials < 1) throw Error(errc::bad_arguments, "bench requires at least 1 trial");

    struct Strategy {
        std::string name;
        std::function<CrtSolution(const CongruenceSystem&, OperandProbe*)> run;
    };
    const std::vector<Strategy> strategies = {
        {"euler-totient",
         [](const CongruenceSystem& s, OperandProbe* p) {
             return solve_euler(s, EulerVariant::totient, p);
         }},
        {"euler-extgcd",
         [](const CongruenceSystem& s, OperandProbe* p) {
             return solve_euler(s, EulerVariant::extgcd, p);
         }},
        {"garner", [](const CongruenceSystem& s, OperandProbe* p) { return solve_garner(s, p); }},
        {"fold", [](const CongruenceSystem& s, OperandProbe* p) { return solve_fold(s, p); }},
    };

    BenchReport report;
    report.params = params;
    report.rows.resize(strategies.size());
    for (std::size_t i = 0; i < strategies.size(); ++i)
        report.rows[i].strategy = strategies[i].name;

    std::mt19937_64 rng(params.seed);
    for (std::size_t trial = 0; trial < params.trials; ++trial) {
        // Distinct random primes are pairwise coprime by construction.
        std::set<Int> primes;
        while (primes.size() < params.moduli_count)
            primes.insert(random_prime(rng, params.moduli_bits));
        std::vector<Int> moduli(primes.begin(), primes.end());
        std::vector<Int> residues;
        residues.reserve(moduli.size());
        for (const Int& m : moduli) residues.push_back(random_below(rng, m));
        CongruenceSystem system = validate_system(moduli, residues);

        // Unreduced size of the worst M_i: phi(m_i) * log2(m/m_i) bits.
        for (const Int& m : moduli) {
            double phi = std::exp2(log2_approx(m - Int(1)));
            double raw_bits = phi * log2_approx(system.modulus() / m);
            report.raw_euler_constant_bits = std::max(report.raw_euler_constant_bits, raw_bits);
        }

        Int expected;
        for (std::size_t i = 0; i < strategies.size(); ++i) {
            OperandProbe probe;
            auto start = std::chrono::steady_clock::now();
            CrtSolution sol = strategies[i].run(system, &probe);
            auto stop = std::chrono::steady_clock::now();
            if (i == 0) {
                expected = sol.u;
            } else if (!(sol.u == expected)) {
                throw Error(errc::internal_invariant,
                            strategies[i].name + " disagrees with " + strategies[0].name +
                                " on trial " + std::to_string(trial));
            }
            BenchTrial row;
            row.trial = trial;
            row.time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
            row.max_bits = probe.max_bits();
            report.rows[i].trials.push_back(row);
        }
    }

    for (BenchStrategyRow& row : report.rows) {
        std::vector<std::int64_t> times;
        times.reserve(row.trials.size());
        for (const BenchTrial& t : row.trials) {
            times.push_back(t.time_ns);
            row.max_bits = std::max(row.max_bits, t.max_bits);
        }
        row.median_time_ns = median_ns(std::move(times));
    }
    return report;
}

std::string bench_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "strategy,r,k,trial,time_ns,max_bits\n";
    for (const BenchStrategyRow& row : report.rows) {
        for (const BenchTrial& t : row.trials) {
            out << row.strategy << ',' << report.params.moduli_count << ','
                << report.params.moduli_bits << ',' << t.trial << ',' << t.time_ns << ','
                << t.max_bits << '\n';
        }
    }
    return out.str();
}

}  // namespace crtkit
