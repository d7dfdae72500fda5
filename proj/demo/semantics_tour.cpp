//
// Copyright (c) 2026 The rangesem authors
//
// This file is part of rangesem. Distributed under the MIT license
// (see the LICENSE file or https://opensource.org/licenses/MIT).
//
// Library walkthrough: compile a framework to its logic programs, look at
// the model classes, and compare every semantics route against the oracle.
// Reads an apx file when given one, otherwise runs on a built-in example.

#include <fstream>
#include <iostream>
#include <sstream>

#include "rangesem/af_io.hpp"
#include "rangesem/oracle.hpp"
#include "rangesem/program_io.hpp"
#include "rangesem/range_models.hpp"

using namespace rangesem;

int main(int argc, char** argv) {
    ArgumentationFramework af;
    if (argc > 1) {
        std::ifstream in(argv[1]);
        if (!in) {
            std::cerr << "cannot open " << argv[1] << "\n";
            return 1;
        }
        af = parse_apx(in);
    } else {
        // A 3-cycle with a pendant argument: d attacks the cycle member a.
        af = parse_apx("arg(a).\narg(b).\narg(c).\narg(d).\n"
                       "att(a,b).\natt(b,c).\natt(c,a).\natt(d,a).\n");
    }

    std::cout << "framework:\n" << serialize_apx(af) << "\n";

    const MappedProgram minus = pi_minus(af);
    const MappedProgram full = pi_full(af);
    std::cout << "conflict-freeness program:\n" << dump_program(minus.program) << "\n";
    std::cout << "with reinstatement clauses:\n" << dump_program(full.program) << "\n";

    const auto show = [&](const char* label, const ExtensionSet& es) {
        std::cout << label << ": " << format_extension_set(af, es) << "\n";
    };
    show("grounded   ", ExtensionSet{{oracle::grounded_extension(af)}});
    show("complete   ", oracle::complete_extensions(af));
    show("preferred  ", oracle::preferred_extensions(af));
    show("stable     ", oracle::stable_extensions(af));
    show("semi-stable", oracle::semi_stable_extensions(af));
    show("stage      ", oracle::stage_extensions(af));

    std::cout << "\nmodel-based routes:\n";
    show("semi-stable via GL-supported models", semi_stable_via_lp(af));
    show("semi-stable via p-stable models    ", semi_stable_via_pstable(af));
    show("semi-stable via 2-valued models    ", semi_stable_via_2valued(af));
    show("stage via GL-stage models          ", stage_via_lp(af));

    const bool agree = semi_stable_via_lp(af) == oracle::semi_stable_extensions(af) &&
                       stage_via_lp(af) == oracle::stage_extensions(af);
    std::cout << "\nroutes " << (agree ? "agree" : "DISAGREE") << " with the oracle\n";
    return agree ? 0 : 1;
}
