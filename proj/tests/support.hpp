//
// Copyright (c) 2026 The rangesem authors
//
// This file is part of rangesem. Distributed under the MIT license
// (see the LICENSE file or https://opensource.org/licenses/MIT).
//
#ifndef RANGESEM_TESTS_SUPPORT_HPP
#define RANGESEM_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rangesem/af.hpp"
#include "rangesem/program.hpp"

namespace rangesem::test {

inline ArgumentationFramework make_af(
    std::initializer_list<std::string> names,
    std::initializer_list<std::pair<std::string, std::string>> attacks = {}) {
    ArgumentationFramework af;
    for (const std::string& n : names)
        af.add_argument(n);
    for (const auto& [from, to] : attacks)
        af.add_attack(af.index_of(from), af.index_of(to));
    return af;
}

inline ArgumentSet args_of(const ArgumentationFramework& af,
                           std::initializer_list<std::string> names) {
    ArgumentSet s;
    for (const std::string& n : names)
        s.insert(af.index_of(n));
    return s;
}

inline ExtensionSet exts_of(const ArgumentationFramework& af,
                            std::initializer_list<std::initializer_list<std::string>> sets) {
    std::vector<ArgumentSet> members;
    for (const auto& set : sets)
        members.push_back(args_of(af, set));
    return make_extension_set(std::move(members));
}

inline Interpretation atoms_of(const NormalProgram& p,
                               std::initializer_list<std::string> names) {
    Interpretation m;
    for (const std::string& n : names)
        m.insert(p.index_of_atom(n));
    return m;
}

/// Small random normal programs for the reduct and model-class property
/// tests: up to max_atoms atoms p0.., up to max_clauses clauses, each body
/// atom drawn independently into B+, B- or neither.
inline NormalProgram random_program(detail::SeededDraw& draw, int max_atoms, int max_clauses) {
    NormalProgram p;
    const int atoms = 1 + static_cast<int>(draw.next_below(static_cast<std::uint64_t>(max_atoms)));
    for (int i = 0; i < atoms; ++i)
        p.add_atom("p" + std::to_string(i));
    const int clauses =
        static_cast<int>(draw.next_below(static_cast<std::uint64_t>(max_clauses) + 1));
    for (int c = 0; c < clauses; ++c) {
        NormalClause clause;
        clause.head = static_cast<int>(draw.next_below(static_cast<std::uint64_t>(atoms)));
        for (int a = 0; a < atoms; ++a) {
            const std::uint64_t r = draw.next_below(10);
            if (r < 3)
                clause.positive |= std::uint64_t{1} << a;
            else if (r < 6)
                clause.negative |= std::uint64_t{1} << a;
        }
        p.add_clause(clause);
    }
    return p;
}

}  // namespace rangesem::test

#endif  // RANGESEM_TESTS_SUPPORT_HPP
