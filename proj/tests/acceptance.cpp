//
// Copyright (c) 2026 The rangesem authors
//
// This file is part of rangesem. Distributed under the MIT license
// (see the LICENSE file or https://opensource.org/licenses/MIT).
//
// Acceptance suite: one line per criterion, exit 0 iff all pass.  Every
// threshold is fixed here, in code; nothing is left to later calibration.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "rangesem/cli.hpp"
#include "rangesem/oracle.hpp"
#include "rangesem/program_io.hpp"
#include "rangesem/range_models.hpp"
#include "rangesem/verify.hpp"
#include "support.hpp"

using namespace rangesem;

namespace {

struct Criterion {
    std::string name;
    bool pass = false;
    std::string note;
    double seconds = 0.0;
};

std::vector<Criterion> g_criteria;

template <typename Fn>
void criterion(std::string name, Fn&& body) {
    Criterion c;
    c.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
        c.pass = body(c.note);
    } catch (const std::exception& e) {
        c.pass = false;
        c.note = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (c.pass ? "[PASS] " : "[FAIL] ") << g_criteria.size() + 1 << ". " << c.name;
    if (!c.note.empty())
        line << " — " << c.note;
    line << " (" << std::fixed << std::setprecision(1) << c.seconds << "s)";
    std::cout << line.str() << std::endl;
    g_criteria.push_back(std::move(c));
}

/// Every framework over at most max_n arguments, attack matrices as binary
/// counters.
template <typename Fn>
bool for_all_frameworks(int max_n, Fn&& body) {
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
            if (!body(af))
                return false;
        }
    }
    return true;
}

std::string golden_path(const std::string& name) {
    return std::string(RANGESEM_GOLDEN_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    const int code = cli::run_cli(std::move(args), out, err, in);
    return {code, out.str(), err.str()};
}

// The random-program corpus shared by the reduct and sanity criteria:
// 1000 seeded programs with at most 8 atoms and 12 clauses.
std::vector<NormalProgram> random_program_corpus() {
    std::vector<NormalProgram> corpus;
    detail::SeededDraw draw(20260101);
    for (int i = 0; i < 1000; ++i)
        corpus.push_back(test::random_program(draw, 8, 12));
    return corpus;
}

// Kept from the randomized campaign for the reduction-interchange half of
// the reduct criterion.
VerifySummary g_campaign_summary;

}  // namespace

int main() {
    criterion("semi-stable via GL-supported models equals the oracle on all 531 frameworks "
              "with at most 3 arguments (exact set equality)",
              [](std::string& note) {
                  long instances = 0;
                  const bool ok = for_all_frameworks(3, [&](const ArgumentationFramework& af) {
                      ++instances;
                      return semi_stable_via_lp(af) == oracle::semi_stable_extensions(af);
                  });
                  note = std::to_string(instances) + " frameworks";
                  return ok && instances == 531;
              });

    criterion("stage via GL-stage models equals the oracle on the same 531 frameworks "
              "(exact set equality)",
              [](std::string& note) {
                  long instances = 0;
                  const bool ok = for_all_frameworks(3, [&](const ArgumentationFramework& af) {
                      ++instances;
                      return stage_via_lp(af) == oracle::stage_extensions(af);
                  });
                  note = std::to_string(instances) + " frameworks";
                  return ok && instances == 531;
              });

    criterion("randomized campaign: 500 seeded frameworks, n in [4,8], p in {0.1..0.5}; "
              "every route equivalence and model-class characterization holds",
              [](std::string& note) {
                  RandomCampaignParams params;
                  params.count = 500;
                  params.n_min = 4;
                  params.n_max = 8;
                  params.p_list = {0.1, 0.2, 0.3, 0.4, 0.5};
                  params.seed = 42;
                  std::ostringstream sink;
                  g_campaign_summary = run_random_verify(params, sink);
                  note = "hard_failures=" + std::to_string(g_campaign_summary.hard_failures) +
                         " advisory_disagreements=" +
                         std::to_string(g_campaign_summary.advisory_disagreements);
                  return g_campaign_summary.instances == 500 &&
                         g_campaign_summary.hard_failures == 0;
              });

    criterion("reduct interchange: GL and RED reducts share their facts on 1000 random "
              "programs, and both reductions select identical model sets on the campaign",
              [](std::string& note) {
                  long failures = 0;
                  for (const NormalProgram& p : random_program_corpus()) {
                      const std::uint64_t full = p.full_mask();
                      for (std::uint64_t bits = 0;; ++bits) {
                          if (facts(gl_reduce(p, {bits})) != facts(red_reduce(p, {bits})))
                              ++failures;
                          if (bits == full)
                              break;
                      }
                  }
                  long interchange_passes = 0;
                  for (const auto& [name, passes] : g_campaign_summary.check_passes)
                      if (name == "reduction_interchange")
                          interchange_passes = passes;
                  note = "fact mismatches=" + std::to_string(failures) +
                         ", interchange passes=" + std::to_string(interchange_passes) + "/500";
                  return failures == 0 && interchange_passes == 500;
              });

    criterion("golden instances: byte-exact CLI output on the cycle, mutual-attack and "
              "chain frameworks",
              [](std::string& note) {
                  const struct {
                      const char* input;
                      const char* semantics;
                      const char* route;
                      const char* expected;
                  } cases[] = {
                      {"three_cycle.apx", "semi-stable", "lp", "three_cycle_semi_stable.txt"},
                      {"three_cycle.apx", "stage", "lp", "three_cycle_stage.txt"},
                      {"three_cycle.apx", "stable", "lp", "three_cycle_stable.txt"},
                      {"three_cycle.apx", "preferred", "lp", "three_cycle_preferred.txt"},
                      {"mutual.apx", "semi-stable", "lp", "mutual_semi_stable.txt"},
                      {"mutual.apx", "stage", "lp", "mutual_stage.txt"},
                      {"mutual.apx", "stable", "lp", "mutual_stable.txt"},
                      {"chain.apx", "stable", "lp", "chain_stable.txt"},
                      {"chain.apx", "semi-stable", "lp", "chain_semi_stable.txt"},
                      {"chain.apx", "stage", "lp", "chain_stage.txt"},
                      {"chain.apx", "grounded", "oracle", "chain_grounded.txt"},
                  };
                  int mismatches = 0;
                  for (const auto& c : cases) {
                      const CliResult result =
                          run_cli({"solve", "--semantics", c.semantics, "--route", c.route,
                                   golden_path(c.input)});
                      if (result.code != 0 || result.out != read_file(golden_path(c.expected)))
                          ++mismatches;
                  }
                  note = std::to_string(std::size(cases)) + " cases, " +
                         std::to_string(mismatches) + " mismatches";
                  return mismatches == 0;
              });

    criterion("classical sanity on the same 1000 random programs: stable within supported, "
              "stable within minimal within 2-valued, p-stable within 2-valued, definite "
              "programs have exactly their least model stable",
              [](std::string& note) {
                  long failures = 0;
                  const auto contains = [](const std::vector<Interpretation>& models,
                                           Interpretation m) {
                      return std::find(models.begin(), models.end(), m) != models.end();
                  };
                  for (const NormalProgram& p : random_program_corpus()) {
                      const auto two_valued = two_valued_models(p);
                      const auto minimal = minimal_models(p);
                      const auto stable = stable_models(p);
                      const auto supported = supported_models(p);
                      const auto p_stable = p_stable_models(p);
                      for (Interpretation m : stable)
                          if (!contains(supported, m) || !contains(minimal, m))
                              ++failures;
                      for (Interpretation m : minimal)
                          if (!contains(two_valued, m))
                              ++failures;
                      for (Interpretation m : p_stable)
                          if (!contains(two_valued, m))
                              ++failures;
                      if (p.is_definite() &&
                          stable != std::vector<Interpretation>{least_model(p)})
                          ++failures;
                  }
                  note = "violations=" + std::to_string(failures);
                  return failures == 0;
              });

    criterion("determinism: repeated CLI invocations are byte-identical "
              "(bench compared with its machine-dependent timing column masked)",
              [](std::string& note) {
                  const std::vector<std::vector<std::string>> exact = {
                      {"solve", "--semantics", "semi-stable", "--route", "lp",
                       golden_path("three_cycle.apx")},
                      {"solve", "--semantics", "stage", "--route", "lp",
                       golden_path("three_cycle.apx")},
                      {"solve", "--semantics", "preferred", "--route", "oracle",
                       golden_path("mutual.apx")},
                      {"dump", "--mapping", "pi-full", golden_path("chain.apx")},
                      {"verify", "--mode", "exhaustive", "--max-n", "2"},
                      {"verify", "--mode", "random", "--count", "20", "--n-min", "3", "--n-max",
                       "6", "--seed", "5"},
                  };
                  int mismatches = 0;
                  for (const auto& args : exact) {
                      const CliResult a = run_cli(args);
                      const CliResult b = run_cli(args);
                      if (a.code != b.code || a.out != b.out || a.err != b.err)
                          ++mismatches;
                  }
                  const auto mask_timings = [](const std::string& table) {
                      std::istringstream lines(table);
                      std::string line, out;
                      while (std::getline(lines, line)) {
                          const std::size_t last_tab = line.rfind('\t');
                          out += line.substr(0, last_tab) + "\n";
                      }
                      return out;
                  };
                  const std::vector<std::string> bench_args = {"bench", "--n", "4", "--n", "6",
                                                               "--route", "lp", "--route",
                                                               "oracle"};
                  const CliResult a = run_cli(bench_args);
                  const CliResult b = run_cli(bench_args);
                  if (a.code != b.code || mask_timings(a.out) != mask_timings(b.out))
                      ++mismatches;
                  note = "mismatches=" + std::to_string(mismatches);
                  return mismatches == 0;
              });

    criterion("desk-scale performance: semi-stable and stage via the LP route on a seeded "
              "n=12, p=0.25 framework complete in under 30 seconds",
              [](std::string& note) {
                  const ArgumentationFramework af = random_af(8841, 12, 0.25);
                  const std::string apx = serialize_apx(af);
                  const auto start = std::chrono::steady_clock::now();
                  const CliResult semi = run_cli(
                      {"solve", "--semantics", "semi-stable", "--route", "lp", "-"}, apx);
                  const CliResult stage =
                      run_cli({"solve", "--semantics", "stage", "--route", "lp", "-"}, apx);
                  const double elapsed = std::chrono::duration<double>(
                                             std::chrono::steady_clock::now() - start)
                                             .count();
                  std::ostringstream text;
                  text << std::fixed << std::setprecision(2) << elapsed
                       << "s, semi-stable=" << semi.out.substr(0, semi.out.size() - 1)
                       << " stage extensions=" << std::count(stage.out.begin(), stage.out.end(), '[') - 1;
                  note = text.str();
                  return semi.code == 0 && stage.code == 0 && elapsed < 30.0;
              });

    int failed = 0;
    for (const Criterion& c : g_criteria)
        if (!c.pass)
            ++failed;
    std::cout << "----" << std::endl;
    std::cout << (failed == 0 ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << " ("
              << g_criteria.size() - failed << "/" << g_criteria.size() << " criteria)"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
