// crtkit command-line front end.
//
//   solve  --input FILE --strategy S [--range-start A] [--verify]
//          [--domain int|gfp-poly:P]
//   bench  --moduli-count R --moduli-bits K --trials T --seed N [--csv FILE]
//   verify ring-iso M1 M2 ... | unit-iso P Q | theorem5 N
//
// Outputs line-delimited JSON on stdout. Exit codes: 0 success, 2 user
// error (machine-readable {"error": code, "detail": ...} on stderr),
// 3 internal invariant failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crtkit/bench.hpp"
#include "crtkit/crt.hpp"
#include "crtkit/error.hpp"
#include "crtkit/json_io.hpp"
#include "crtkit/number_theory.hpp"

namespace {

using crtkit::Error;
using crtkit::Int;
using crtkit::Json;

int error_exit_code(const std::string& code) {
    return (code == crtkit::errc::internal_invariant ||
            code == crtkit::errc::verification_mismatch)
               ? 3
               : 2;
}

[[noreturn]] void fail(const std::string& code, const std::string& detail) {
    std::cerr << Json{{"error", code}, {"detail", detail}}.dump() << std::endl;
    std::exit(error_exit_code(code));
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(crtkit::errc::bad_input, "cannot open input file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(crtkit::errc::bad_input, std::string("invalid JSON: ") + e.what());
    }
}

struct SolveOptions {
    std::string input_path;
    std::string strategy = "garner";
    std::string domain = "int";
    std::string range_start;  // empty: use the input file's range_start, default 0
    bool verify = false;
};

crtkit::CrtSolution run_strategy(const std::string& name, const crtkit::CongruenceSystem& s) {
    if (name == "search") return crtkit::solve_search(s);
    if (name == "euler-totient") return crtkit::solve_euler(s, crtkit::EulerVariant::totient);
    if (name == "euler-extgcd") return crtkit::solve_euler(s, crtkit::EulerVariant::extgcd);
    if (name == "garner") return crtkit::solve_garner(s);
    if (name == "fold") return crtkit::solve_fold(s);
    if (name == "generic") {
        std::vector<crtkit::DomainElement> moduli(s.moduli().begin(), s.moduli().end());
        std::vector<crtkit::DomainElement> residues(s.residues().begin(), s.residues().end());
        Int u = std::get<Int>(
            crtkit::solve_generic(crtkit::integer_domain(), moduli, residues));
        return {std::move(u), s.modulus(), Int(0)};
    }
    throw Error(crtkit::errc::bad_arguments, "unknown strategy: " + name);
}

int run_solve_int(const SolveOptions& opts, const crtkit::SystemDocument& doc) {
    std::vector<Int> moduli, residues;
    for (const Json& j : doc.moduli) moduli.push_back(crtkit::int_from_json(j));
    for (const Json& j : doc.residues) residues.push_back(crtkit::int_from_json(j));
    crtkit::CongruenceSystem system = crtkit::validate_system(moduli, residues);

    Int range_start = 0;
    if (!opts.range_start.empty()) {
        range_start = Int::from_string(opts.range_start);
    } else if (doc.range_start) {
        range_start = *doc.range_start;
    }

    crtkit::CrtSolution sol = run_strategy(opts.strategy, system);
    sol = crtkit::shift_to_range(sol, range_start);

    Json out{{"u", crtkit::int_to_json(sol.u)},
             {"modulus", crtkit::int_to_json(sol.modulus)},
             {"strategy", opts.strategy}};

    if (opts.verify) {
        for (std::size_t i = 0; i < system.size(); ++i) {
            if (!(sol.u.mod(system.moduli()[i]) == system.residues()[i]))
                fail(crtkit::errc::verification_mismatch,
                     "congruence " + std::to_string(i) + " violated by u = " +
                         sol.u.to_string());
        }
        if (system.modulus() <= Int(crtkit::kDefaultSearchBound)) {
            crtkit::CrtSolution oracle =
                crtkit::shift_to_range(crtkit::solve_search(system), range_start);
            if (!(oracle.u == sol.u))
                fail(crtkit::errc::verification_mismatch,
                     opts.strategy + " returned " + sol.u.to_string() +
                         " but the exhaustive scan found " + oracle.u.to_string());
        }
        Json witnesses = Json::array();
        for (const Int& w : crtkit::congruence_witnesses(sol, system))
            witnesses.push_back(crtkit::int_to_json(w));
        out["witnesses"] = std::move(witnesses);
    }

    std::cout << out.dump() << std::endl;
    return 0;
}

int run_solve_poly(const SolveOptions& opts, const crtkit::SystemDocument& doc,
                   const std::string& prime) {
    if (opts.strategy != "generic")
        throw Error(crtkit::errc::bad_arguments,
                    "polynomial domains require --strategy generic");
    if (!opts.range_start.empty())
        throw Error(crtkit::errc::bad_arguments,
                    "--range-start applies to integer systems only");
    crtkit::PrimeField field{Int::from_string(prime)};
    crtkit::GfpPolyDomain domain = crtkit::gfp_poly_domain(field);

    auto parse_elems = [&](const std::vector<Json>& list) {
        std::vector<crtkit::DomainElement> out;
        for (const Json& j : list) {
            crtkit::SparsePoly q = crtkit::poly_from_json(j);
            if (!(q.field() == field))
                throw Error(crtkit::errc::field_mismatch,
                            "polynomial over GF(" + q.field().p().to_string() +
                                ") in a " + domain.name() + " system");
            out.push_back(crtkit::to_dense(q));
        }
        return out;
    };
    std::vector<crtkit::DomainElement> moduli = parse_elems(doc.moduli);
    std::vector<crtkit::DomainElement> residues = parse_elems(doc.residues);

    crtkit::DomainElement u = crtkit::solve_generic(domain, moduli, residues);
    crtkit::DomainElement modulus = domain.one();
    for (const crtkit::DomainElement& m : moduli) modulus = domain.mul(modulus, m);

    if (opts.verify) {
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            if (!(domain.divmod(u, moduli[i]).remainder ==
                  domain.divmod(residues[i], moduli[i]).remainder))
                fail(crtkit::errc::verification_mismatch,
                     "congruence " + std::to_string(i) + " violated");
        }
    }

    Json out{{"u", crtkit::poly_to_json(std::get<crtkit::DensePoly>(u))},
             {"modulus", crtkit::poly_to_json(std::get<crtkit::DensePoly>(modulus))},
             {"strategy", opts.strategy}};
    std::cout << out.dump() << std::endl;
    return 0;
}

int run_solve(const SolveOptions& opts) {
    Json j = read_json_file(opts.input_path);
    crtkit::SystemDocument doc = crtkit::system_from_json(j);
    if (opts.domain == "int") return run_solve_int(opts, doc);
    if (opts.domain.rfind("gfp-poly:", 0) == 0)
        return run_solve_poly(opts, doc, opts.domain.substr(9));
    throw Error(crtkit::errc::bad_arguments,
                "unknown domain " + opts.domain + "; expected int or gfp-poly:P");
}

struct BenchOptions {
    crtkit::BenchParams params;
    std::string csv_path;
};

int run_bench_cmd(const BenchOptions& opts) {
    crtkit::BenchReport report = crtkit::run_bench(opts.params);
    for (const crtkit::BenchStrategyRow& row : report.rows) {
        Json line{{"strategy", row.strategy},
                  {"moduli_count", report.params.moduli_count},
                  {"moduli_bits", report.params.moduli_bits},
                  {"trials", report.params.trials},
                  {"median_time_ns", row.median_time_ns},
                  {"max_intermediate_bits", row.max_bits}};
        if (row.strategy.rfind("euler", 0) == 0)
            line["raw_constant_bits_estimate"] = report.raw_euler_constant_bits;
        std::cout << line.dump() << "\n";
    }
    std::cout.flush();
    if (!opts.csv_path.empty()) {
        std::ofstream csv(opts.csv_path);
        if (!csv) fail(crtkit::errc::bad_arguments, "cannot write CSV file: " + opts.csv_path);
        csv << crtkit::bench_csv(report);
    }
    return 0;
}

int run_verify(const std::string& target, const std::vector<std::string>& args) {
    if (target == "ring-iso") {
        if (args.empty())
            throw Error(crtkit::errc::bad_arguments, "verify ring-iso needs moduli M1 M2 ...");
        std::vector<Int> moduli;
        for (const std::string& a : args) moduli.push_back(Int::from_string(a));
        crtkit::IsoReport report = crtkit::verify_ring_iso(moduli);
        std::cout << crtkit::iso_report_to_json(report).dump() << std::endl;
        return report.ok() ? 0 : 3;
    }
    if (target == "unit-iso") {
        if (args.size() != 2)
            throw Error(crtkit::errc::bad_arguments, "verify unit-iso needs exactly P Q");
        crtkit::IsoReport report =
            crtkit::verify_unit_group_iso(Int::from_string(args[0]), Int::from_string(args[1]));
        std::cout << crtkit::iso_report_to_json(report).dump() << std::endl;
        return report.ok() ? 0 : 3;
    }
    if (target == "theorem5") {
        if (args.size() != 1)
            throw Error(crtkit::errc::bad_arguments, "verify theorem5 needs exactly N");
        Int n = Int::from_string(args[0]);
        if (n.is_negative() || !n.fits_uint64())
            throw Error(crtkit::errc::bad_arguments, "theorem5 size must be a small natural");
        crtkit::Theorem5Report report =
            crtkit::verify_theorem5(static_cast<std::size_t>(n.to_uint64()));
        std::cout << crtkit::theorem5_report_to_json(report).dump() << std::endl;
        return report.ok() ? 0 : 3;
    }
    throw Error(crtkit::errc::bad_arguments,
                "unknown verify target " + target + "; expected ring-iso | unit-iso | theorem5");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chinese-Remainder solver strategies, benchmarks and theorem checks"};
    app.require_subcommand(1);

    SolveOptions solve_opts;
    CLI::App* solve = app.add_subcommand("solve", "solve a congruence system");
    solve->add_option("--input", solve_opts.input_path, "JSON system document")->required();
    solve->add_option("--strategy", solve_opts.strategy,
                      "search | euler-totient | euler-extgcd | garner | fold | generic");
    solve->add_option("--range-start", solve_opts.range_start,
                      "return the representative in [A, A+m)");
    solve->add_option("--domain", solve_opts.domain, "int (default) or gfp-poly:P");
    solve->add_flag("--verify", solve_opts.verify,
                    "re-check every congruence and compare against the exhaustive scan");

    BenchOptions bench_opts;
    CLI::App* bench = app.add_subcommand("bench", "compare strategies on random prime systems");
    bench->add_option("--moduli-count", bench_opts.params.moduli_count, "r >= 2")->required();
    bench->add_option("--moduli-bits", bench_opts.params.moduli_bits, "k >= 8")->required();
    bench->add_option("--trials", bench_opts.params.trials, "t >= 1")->required();
    bench->add_option("--seed", bench_opts.params.seed, "RNG seed")->required();
    bench->add_option("--csv", bench_opts.csv_path, "write per-trial rows as CSV");

    std::string verify_target;
    std::vector<std::string> verify_args;
    CLI::App* verify = app.add_subcommand("verify", "exhaustive theorem verification");
    verify->add_option("target", verify_target, "ring-iso | unit-iso | theorem5")->required();
    verify->add_option("args", verify_args, "target arguments");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << Json{{"error", crtkit::errc::bad_arguments}, {"detail", e.what()}}.dump()
                  << std::endl;
        return 2;
    }

    try {
        if (solve->parsed()) return run_solve(solve_opts);
        if (bench->parsed()) return run_bench_cmd(bench_opts);
        if (verify->parsed()) return run_verify(verify_target, verify_args);
    } catch (const Error& e) {
        std::cerr << Json{{"error", e.code()}, {"detail", e.what()}}.dump() << std::endl;
        return error_exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", "internal"}, {"detail", e.what()}}.dump() << std::endl;
        return 3;
    }
    return 0;
}
