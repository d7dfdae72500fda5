//
// Copyright (c) 2026 The rangesem authors
//
// This file is part of rangesem. Distributed under the MIT license
// (see the LICENSE file or https://opensource.org/licenses/MIT).
//
#ifndef RANGESEM_CLI_HPP
#define RANGESEM_CLI_HPP

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rangesem/af.hpp"
#include "rangesem/af_io.hpp"
#include "rangesem/mapping.hpp"
#include "rangesem/oracle.hpp"
#include "rangesem/program_io.hpp"
#include "rangesem/range_models.hpp"
#include "rangesem/verify.hpp"

// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 usage or input error, 3 exhaustive cap exceeded.

namespace rangesem::cli {

class usage_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline ArgumentationFramework load_framework(const std::string& file, std::string format,
                                             std::istream& stdin_stream) {
    std::string text;
    if (file == "-") {
        std::ostringstream buffer;
        buffer << stdin_stream.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream stream(file);
        if (!stream)
            throw usage_error("cannot open input file '" + file + "'");
        std::ostringstream buffer;
        buffer << stream.rdbuf();
        text = buffer.str();
    }
    if (format.empty())
        format = file.size() >= 4 && file.substr(file.size() - 4) == ".tgf" ? "tgf" : "apx";
    return format == "tgf" ? parse_tgf(text) : parse_apx(text);
}

inline Reduction parse_reduction(const std::string& name) {
    return name == "RED" ? Reduction::RED : Reduction::GL;
}

inline ExtensionSet extensions_of_models(const MappedProgram& mp,
                                         const std::vector<Interpretation>& models) {
    std::vector<ArgumentSet> out;
    out.reserve(models.size());
    for (Interpretation m : models)
        out.push_back(extension_of(mp, m));
    return make_extension_set(std::move(out));
}

/// The mapping a model-based route compiles for the given semantics.
inline MappingKind mapping_for(const std::string& semantics) {
    return semantics == "stage" ? MappingKind::pi_minus : MappingKind::pi_full;
}

inline ExtensionSet solve(const ArgumentationFramework& af, const std::string& semantics,
                          const std::string& route, Reduction reduction, int cap) {
    if (route == "oracle") {
        if (semantics == "conflict-free")
            return make_extension_set(oracle::conflict_free_sets(af, cap));
        if (semantics == "admissible")
            return make_extension_set(oracle::admissible_sets(af, cap));
        if (semantics == "complete")
            return oracle::complete_extensions(af, cap);
        if (semantics == "grounded")
            return ExtensionSet{{oracle::grounded_extension(af, cap)}};
        if (semantics == "stable")
            return oracle::stable_extensions(af, cap);
        if (semantics == "preferred")
            return oracle::preferred_extensions(af, cap);
        if (semantics == "semi-stable")
            return oracle::semi_stable_extensions(af, cap);
        if (semantics == "stage")
            return oracle::stage_extensions(af, cap);
    } else if (route == "lp") {
        if (semantics == "complete")
            return extensions_of_models(pi_full(af), supported_models(pi_full(af).program, cap));
        if (semantics == "stable")
            return extensions_of_models(pi_full(af), stable_models(pi_full(af).program, cap));
        if (semantics == "preferred")
            return extensions_of_models(pi_full(af), p_stable_models(pi_full(af).program, cap));
        if (semantics == "semi-stable")
            return semi_stable_via_lp(af, reduction, cap);
        if (semantics == "stage")
            return stage_via_lp(af, reduction, cap);
        throw usage_error("route 'lp' supports complete, stable, preferred, semi-stable and "
                          "stage; '" + semantics + "' has no model characterization here");
    } else if (route == "pstable" || route == "twovalued") {
        if (semantics != "semi-stable")
            throw usage_error("route '" + route + "' is only valid for semi-stable");
        return route == "pstable" ? semi_stable_via_pstable(af, cap)
                                  : semi_stable_via_2valued(af, cap);
    }
    throw usage_error("unsupported semantics/route combination");
}

inline MappedProgram compile_mapping(const ArgumentationFramework& af, const std::string& name) {
    if (name == "pi-minus")
        return pi_minus(af);
    if (name == "pi-full")
        return pi_full(af);
    return p_af(af);
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err,
                   std::istream& stdin_stream = std::cin) {
    CLI::App app{"range-based argumentation semantics solver", "rangesem"};
    app.require_subcommand(1);

    // solve
    std::string solve_semantics, solve_route = "oracle", solve_reduction = "GL";
    std::string solve_format, solve_file;
    bool solve_dump = false;
    int solve_cap = kDefaultExhaustiveCap;
    CLI::App* solve = app.add_subcommand("solve", "enumerate extensions of a framework");
    solve->add_option("--semantics", solve_semantics, "semantics to compute")
        ->required()
        ->check(CLI::IsMember({"conflict-free", "admissible", "complete", "grounded", "stable",
                               "preferred", "semi-stable", "stage"}));
    solve->add_option("--route", solve_route, "computation route")
        ->check(CLI::IsMember({"oracle", "lp", "pstable", "twovalued"}));
    solve->add_option("--reduction", solve_reduction, "reduction used by the lp route")
        ->check(CLI::IsMember({"GL", "RED"}));
    solve->add_option("--format", solve_format, "input format (default: by file extension)")
        ->check(CLI::IsMember({"apx", "tgf"}));
    solve->add_flag("--dump-program", solve_dump, "also print the compiled program");
    solve->add_option("--cap", solve_cap, "exhaustive enumeration cap");
    solve->add_option("file", solve_file, "input file, or - for stdin")->required();

    // dump
    std::string dump_mapping, dump_format, dump_file;
    CLI::App* dump = app.add_subcommand("dump", "print the program a mapping compiles to");
    dump->add_option("--mapping", dump_mapping, "mapping to compile")
        ->required()
        ->check(CLI::IsMember({"pi-minus", "pi-full", "p-af"}));
    dump->add_option("--format", dump_format, "input format (default: by file extension)")
        ->check(CLI::IsMember({"apx", "tgf"}));
    dump->add_option("file", dump_file, "input file, or - for stdin")->required();

    // verify
    std::string verify_mode;
    int verify_max_n = 3;
    RandomCampaignParams campaign;
    int verify_cap = kDefaultExhaustiveCap;
    CLI::App* verify = app.add_subcommand("verify", "cross-check the model routes on instance streams");
    verify->add_option("--mode", verify_mode, "exhaustive or random")
        ->required()
        ->check(CLI::IsMember({"exhaustive", "random"}));
    verify->add_option("--max-n", verify_max_n, "largest argument count (exhaustive mode)")
        ->check(CLI::Range(0, 4));
    verify->add_option("--count", campaign.count, "instance count (random mode)");
    verify->add_option("--n-min", campaign.n_min, "smallest argument count (random mode)");
    verify->add_option("--n-max", campaign.n_max, "largest argument count (random mode)");
    verify->add_option("--p", campaign.p_list, "attack probabilities to draw from (random mode)");
    verify->add_option("--seed", campaign.seed, "campaign seed (random mode)");
    verify->add_option("--cap", verify_cap, "exhaustive enumeration cap");

    // bench
    std::vector<int> bench_ns;
    std::vector<std::string> bench_routes = {"lp", "oracle"};
    std::string bench_semantics = "semi-stable";
    double bench_p = 0.25;
    std::uint64_t bench_seed = 1;
    int bench_cap = kDefaultExhaustiveCap;
    CLI::App* bench = app.add_subcommand("bench", "time solve routes on random frameworks");
    bench->add_option("--n", bench_ns, "argument counts to benchmark");
    bench->add_option("--route", bench_routes, "routes to time")
        ->check(CLI::IsMember({"oracle", "lp", "pstable", "twovalued"}));
    bench->add_option("--semantics", bench_semantics, "semantics to time")
        ->check(CLI::IsMember({"conflict-free", "admissible", "complete", "grounded", "stable",
                               "preferred", "semi-stable", "stage"}));
    bench->add_option("--p", bench_p, "attack probability");
    bench->add_option("--seed", bench_seed, "instance seed");
    bench->add_option("--cap", bench_cap, "exhaustive enumeration cap");

    args.insert(args.begin(), "rangesem");
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(solve)) {
            const ArgumentationFramework af =
                detail::load_framework(solve_file, solve_format, stdin_stream);
            if (solve_dump) {
                if (solve_route == "oracle")
                    throw usage_error("--dump-program requires a model-based route");
                const MappedProgram mp = detail::mapping_for(solve_semantics) == MappingKind::pi_minus
                                             ? pi_minus(af)
                                             : pi_full(af);
                out << dump_program(mp.program);
            }
            const ExtensionSet result = detail::solve(af, solve_semantics, solve_route,
                                                      detail::parse_reduction(solve_reduction),
                                                      solve_cap);
            out << format_extension_set(af, result) << "\n";
            return 0;
        }
        if (app.got_subcommand(dump)) {
            const ArgumentationFramework af =
                detail::load_framework(dump_file, dump_format, stdin_stream);
            out << dump_program(detail::compile_mapping(af, dump_mapping).program);
            return 0;
        }
        if (app.got_subcommand(verify)) {
            const VerifySummary summary =
                verify_mode == "exhaustive"
                    ? run_exhaustive_verify(verify_max_n, out, verify_cap)
                    : run_random_verify(campaign, out, verify_cap);
            return summary.ok() ? 0 : 1;
        }
        if (app.got_subcommand(bench)) {
            out << "n\troute\tsemantics\tmedian_ms\n";
            for (int n : bench_ns) {
                const ArgumentationFramework af = random_af(bench_seed, n, bench_p);
                for (const std::string& route : bench_routes) {
                    std::vector<double> runs;
                    for (int rep = 0; rep < 3; ++rep) {
                        const auto start = std::chrono::steady_clock::now();
                        detail::solve(af, bench_semantics, route, Reduction::GL, bench_cap);
                        const auto stop = std::chrono::steady_clock::now();
                        runs.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
                    }
                    std::sort(runs.begin(), runs.end());
                    std::ostringstream row;
                    row << n << "\t" << route << "\t" << bench_semantics << "\t" << std::fixed
                        << std::setprecision(3) << runs[1] << "\n";
                    out << row.str();
                }
            }
            return 0;
        }
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace rangesem::cli

#endif  // RANGESEM_CLI_HPP
