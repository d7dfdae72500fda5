//
// Copyright (c) 2026 The rangesem authors
//
// This file is part of rangesem. Distributed under the MIT license
// (see the LICENSE file or https://opensource.org/licenses/MIT).
//
#ifndef RANGESEM_VERIFY_HPP
#define RANGESEM_VERIFY_HPP

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rangesem/af.hpp"
#include "rangesem/af_io.hpp"
#include "rangesem/mapping.hpp"
#include "rangesem/oracle.hpp"
#include "rangesem/program.hpp"
#include "rangesem/program_io.hpp"
#include "rangesem/range_models.hpp"

// Cross-checking harness: every characterization the model-based routes rely
// on, run per instance against the brute-force oracle.  One check is
// advisory rather than hard: the claim that the range-maximal 2-valued
// models are exactly the GL-supported ones is stated over models whose
// reduct facts can outgrow the oracle range (unattacked attackers compile to
// facts), so disagreements are reported without failing a campaign.

namespace rangesem {

struct CheckResult {
    std::string name;
    bool advisory = false;
    bool pass = true;
    std::string detail;  // offending model / mismatching sets, on failure
};

struct VerificationReport {
    std::string id;
    ArgumentationFramework af;
    std::vector<CheckResult> checks;

    bool hard_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass && !c.advisory)
                return false;
        return true;
    }

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

namespace detail {

inline std::string format_model_list(const NormalProgram& p,
                                     const std::vector<Interpretation>& models) {
    std::string out = "{";
    bool first = true;
    for (Interpretation m : models) {
        if (!first)
            out += ",";
        out += format_interpretation(p, m);
        first = false;
    }
    out += "}";
    return out;
}

inline bool contains_model(const std::vector<Interpretation>& models, Interpretation m) {
    return std::find(models.begin(), models.end(), m) != models.end();
}

}  // namespace detail

inline VerificationReport verify_instance(const ArgumentationFramework& af, std::string id,
                                          int cap = kDefaultExhaustiveCap) {
    VerificationReport report;
    report.id = std::move(id);
    report.af = af;

    const MappedProgram full = pi_full(af);
    const MappedProgram minus = pi_minus(af);

    const auto two_valued_full = two_valued_models(full.program, cap);
    const auto two_valued_minus = two_valued_models(minus.program, cap);
    const auto supported = supported_models(full.program, cap);
    const auto stable = stable_models(full.program, cap);
    const auto p_stable = p_stable_models(full.program, cap);
    const auto gl_supported = gl_supported_models(full, Reduction::GL, cap);
    const auto gl_stage = gl_stage_models(minus, Reduction::GL, cap);

    const ExtensionSet oracle_conflict_free = make_extension_set(oracle::conflict_free_sets(af, cap));
    const ExtensionSet oracle_admissible = make_extension_set(oracle::admissible_sets(af, cap));
    const ExtensionSet oracle_complete = oracle::complete_extensions(af, cap);
    const ExtensionSet oracle_preferred = oracle::preferred_extensions(af, cap);
    const ExtensionSet oracle_stable = oracle::stable_extensions(af, cap);
    const ExtensionSet oracle_semi_stable = oracle::semi_stable_extensions(af, cap);
    const ExtensionSet oracle_stage = oracle::stage_extensions(af, cap);

    const auto add = [&](std::string name, bool pass, std::string detail, bool advisory = false) {
        report.checks.push_back({std::move(name), advisory, pass, pass ? "" : std::move(detail)});
    };

    const auto add_set_check = [&](std::string name, const ExtensionSet& got,
                                   const ExtensionSet& expected) {
        add(std::move(name), got == expected,
            "got=" + format_extension_set(af, got) +
                " expected=" + format_extension_set(af, expected));
    };

    const auto extensions_of = [&](const MappedProgram& mp,
                                   const std::vector<Interpretation>& models) {
        std::vector<ArgumentSet> out;
        for (Interpretation m : models)
            out.push_back(extension_of(mp, m));
        return make_extension_set(std::move(out));
    };

    // Route equivalences against the oracle.
    add_set_check("semi_stable_lp", semi_stable_via_lp(af, Reduction::GL, cap), oracle_semi_stable);
    add_set_check("stage_lp", stage_via_lp(af, Reduction::GL, cap), oracle_stage);
    add_set_check("semi_stable_pstable_route", semi_stable_via_pstable(af, cap), oracle_semi_stable);
    add_set_check("semi_stable_2valued_route", semi_stable_via_2valued(af, cap), oracle_semi_stable);

    // Model-class characterizations of the classical semantics.
    add_set_check("conflict_free_eq_2valued", extensions_of(minus, two_valued_minus),
                  oracle_conflict_free);
    add_set_check("admissible_eq_2valued", extensions_of(full, two_valued_full), oracle_admissible);
    add_set_check("complete_eq_supported", extensions_of(full, supported), oracle_complete);
    add_set_check("preferred_eq_pstable", extensions_of(full, p_stable), oracle_preferred);
    add_set_check("stable_eq_stable", extensions_of(full, stable), oracle_stable);

    // GL-supported models sit between the stable and p-stable models.
    {
        bool pass = true;
        std::string detail;
        for (Interpretation m : stable) {
            if (!detail::contains_model(gl_supported, m)) {
                pass = false;
                detail = "stable model " + format_interpretation(full.program, m) +
                         " is not GL-supported";
                break;
            }
        }
        add("stable_subset_gl_supported", pass, std::move(detail));
    }
    {
        bool pass = true;
        std::string detail;
        for (Interpretation m : gl_supported) {
            if (!detail::contains_model(p_stable, m)) {
                pass = false;
                detail = "GL-supported model " + format_interpretation(full.program, m) +
                         " is not p-stable";
                break;
            }
        }
        add("gl_supported_subset_pstable", pass, std::move(detail));
    }
    add("stable_nonempty_equals_gl_supported", stable.empty() || stable == gl_supported,
        "stable=" + detail::format_model_list(full.program, stable) +
            " gl_supported=" + detail::format_model_list(full.program, gl_supported));

    // Membership in the GL-supported set coincides with range maximality
    // over a candidate pool: hard over the p-stable pool, advisory over the
    // full 2-valued pool (see the header comment).
    const auto membership_check = [&](std::string name, const std::vector<Interpretation>& pool,
                                      bool advisory) {
        std::vector<std::uint64_t> values;
        for (Interpretation m : pool)
            values.push_back(sc1(full.program, m, Reduction::GL).sc_atoms);
        bool pass = true;
        std::string detail;
        for (std::size_t i = 0; i < pool.size() && pass; ++i) {
            bool maximal = true;
            for (std::size_t j = 0; j < pool.size(); ++j) {
                if ((values[i] & ~values[j]) == 0 && values[i] != values[j]) {
                    maximal = false;
                    break;
                }
            }
            const bool selected = detail::contains_model(gl_supported, pool[i]);
            if (maximal != selected) {
                pass = false;
                detail = "model " + format_interpretation(full.program, pool[i]) + " maximal=" +
                         (maximal ? "yes" : "no") + " gl_supported=" + (selected ? "yes" : "no");
            }
        }
        add(std::move(name), pass, std::move(detail), advisory);
    };
    membership_check("range_max_pstable_is_gl_supported", p_stable, false);
    membership_check("range_max_2valued_is_gl_supported", two_valued_full, true);

    // Range-maximal admissible sets equal range-maximal complete extensions
    // (oracle side only; feeds the 2-valued route above).
    {
        const ExtensionSet max_adm = make_extension_set(
            oracle::detail::range_maximal(af, oracle_admissible.extensions));
        const ExtensionSet max_complete = make_extension_set(
            oracle::detail::range_maximal(af, oracle_complete.extensions));
        add_set_check("range_max_admissible_eq_complete", max_adm, max_complete);
    }

    // Reduction interchangeability: same Facts clause by clause, and the
    // same selected model sets under either reduction.
    {
        bool pass = true;
        std::string detail;
        for (const MappedProgram* mp : {&full, &minus}) {
            const std::uint64_t all = mp->program.full_mask();
            for (std::uint64_t bits = 0; pass; ++bits) {
                if (facts(gl_reduce(mp->program, {bits})) != facts(red_reduce(mp->program, {bits}))) {
                    pass = false;
                    detail = to_string(mp->kind);
                    detail += " reduct facts differ at M=" +
                              format_interpretation(mp->program, {bits});
                }
                if (bits == all)
                    break;
            }
        }
        add("facts_gl_eq_red", pass, std::move(detail));
    }
    add("reduction_interchange",
        gl_supported_models(full, Reduction::RED, cap) == gl_supported &&
            gl_stage_models(minus, Reduction::RED, cap) == gl_stage,
        "model selection differs between reductions");

    return report;
}

// ── Campaign drivers ────────────────────────────────────────────────────────

struct VerifySummary {
    long instances = 0;
    long hard_failures = 0;
    long advisory_disagreements = 0;
    std::vector<std::pair<std::string, long>> check_passes;  // per check, in order

    bool ok() const { return hard_failures == 0; }
};

namespace detail {

inline void accumulate(VerifySummary& summary, const VerificationReport& report) {
    ++summary.instances;
    if (!report.hard_pass())
        ++summary.hard_failures;
    bool advisory_failed = false;
    if (summary.check_passes.empty())
        for (const CheckResult& c : report.checks)
            summary.check_passes.emplace_back(c.name, 0);
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        if (report.checks[i].pass)
            ++summary.check_passes[i].second;
        else if (report.checks[i].advisory)
            advisory_failed = true;
    }
    if (advisory_failed)
        ++summary.advisory_disagreements;
}

inline void stream_report(std::ostream& out, const VerificationReport& report,
                          const std::string& meta) {
    if (report.all_pass()) {
        out << "ok   " << report.id << " " << meta << "\n";
        return;
    }
    out << "FAIL " << report.id << " " << meta << " checks=[";
    bool first = true;
    for (const CheckResult& c : report.checks) {
        if (c.pass)
            continue;
        if (!first)
            out << ",";
        out << c.name << (c.advisory ? "(advisory)" : "");
        first = false;
    }
    out << "]\n";
    // Replayable counterexample: the instance itself plus the offending data.
    std::istringstream apx(serialize_apx(report.af));
    for (std::string line; std::getline(apx, line);)
        out << "  | " << line << "\n";
    for (const CheckResult& c : report.checks)
        if (!c.pass)
            out << "  ! " << c.name << ": " << c.detail << "\n";
}

inline void stream_summary(std::ostream& out, const VerifySummary& summary) {
    out << "----\n";
    for (const auto& [name, passes] : summary.check_passes)
        out << "check " << name << ": " << passes << "/" << summary.instances << "\n";
    out << "instances=" << summary.instances << " hard_failures=" << summary.hard_failures
        << " advisory_disagreements=" << summary.advisory_disagreements << "\n";
    out << (summary.ok() ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
}

}  // namespace detail

/// Every framework over n <= max_n arguments, by iterating the n^2-bit
/// attack matrix as a binary counter (bit i*n+j is attack (ai, aj)).
inline VerifySummary run_exhaustive_verify(int max_n, std::ostream& out,
                                           int cap = kDefaultExhaustiveCap) {
    if (max_n < 0 || max_n > 4)
        throw std::invalid_argument("exhaustive mode supports max_n in [0,4]");
    VerifySummary summary;
    for (int n = 0; n <= max_n; ++n) {
        const std::uint64_t matrices = std::uint64_t{1} << (n * n);
        for (std::uint64_t code = 0; code < matrices; ++code) {
            ArgumentationFramework af;
            for (int i = 0; i < n; ++i)
                af.add_argument("a" + std::to_string(i));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if ((code >> (i * n + j)) & 1u)
                        af.add_attack(i, j);
            const std::string id = "ex-n" + std::to_string(n) + "-" + std::to_string(code);
            const VerificationReport report = verify_instance(af, id, cap);
            detail::accumulate(summary, report);
            detail::stream_report(out, report,
                                  "n=" + std::to_string(n) +
                                      " att=" + std::to_string(af.attack_count()));
        }
    }
    detail::stream_summary(out, summary);
    return summary;
}

struct RandomCampaignParams {
    int count = 100;
    int n_min = 4;
    int n_max = 8;
    std::vector<double> p_list = {0.1, 0.2, 0.3, 0.4, 0.5};
    std::uint64_t seed = 42;
};

/// Seeded stream of random instances: per instance the driver draws n
/// uniformly from [n_min, n_max], p from p_list, then a fresh sub-seed for
/// random_af.  Equal parameters give an identical campaign.
inline VerifySummary run_random_verify(const RandomCampaignParams& params, std::ostream& out,
                                       int cap = kDefaultExhaustiveCap) {
    if (params.count < 0 || params.n_min < 0 || params.n_max < params.n_min ||
        params.p_list.empty())
        throw std::invalid_argument("invalid random campaign parameters");
    VerifySummary summary;
    detail::SeededDraw draw(params.seed);
    for (int i = 0; i < params.count; ++i) {
        const int n = params.n_min +
                      static_cast<int>(draw.next_below(
                          static_cast<std::uint64_t>(params.n_max - params.n_min) + 1));
        const double p = params.p_list[draw.next_below(params.p_list.size())];
        const std::uint64_t instance_seed = draw.next_u64();
        const ArgumentationFramework af = random_af(instance_seed, n, p);
        const std::string id = "rnd-" + std::to_string(i);
        const VerificationReport report = verify_instance(af, id, cap);
        detail::accumulate(summary, report);
        std::ostringstream meta;
        meta << "n=" << n << " p=" << std::fixed << std::setprecision(2) << p
             << " seed=" << instance_seed;
        detail::stream_report(out, report, meta.str());
    }
    detail::stream_summary(out, summary);
    return summary;
}

}  // namespace rangesem

#endif  // RANGESEM_VERIFY_HPP
