//
// Copyright (c) 2026 The rangesem authors
//
// This file is part of rangesem. Distributed under the MIT license
// (see the LICENSE file or https://opensource.org/licenses/MIT).
//
#ifndef RANGESEM_MAPPING_HPP
#define RANGESEM_MAPPING_HPP

#include <stdexcept>
#include <string>

#include "rangesem/af.hpp"
#include "rangesem/program.hpp"

namespace rangesem {

enum class MappingKind { pi_minus, pi_full, p_af };

inline std::string_view to_string(MappingKind k) {
    switch (k) {
        case MappingKind::pi_minus: return "pi-minus";
        case MappingKind::pi_full: return "pi-full";
        case MappingKind::p_af: return "p-af";
    }
    return "?";
}

// ── MappedProgram ───────────────────────────────────────────────────────────
// A compiled framework together with its source.  For pi_minus and pi_full
// the signature is exactly {def(a) | a in AR} — including arguments no
// clause mentions, so that unattacked arguments survive into signature
// complements.  Atom ordinals equal argument ordinals by construction.

struct MappedProgram {
    NormalProgram program;
    ArgumentationFramework framework;
    MappingKind kind = MappingKind::pi_minus;
};

namespace detail {

inline NormalProgram def_signature(const ArgumentationFramework& af) {
    NormalProgram p;
    for (int i = 0; i < af.size(); ++i)
        p.add_atom("def(" + af.name(i) + ")");
    return p;
}

inline void add_conflict_clauses(NormalProgram& p, const ArgumentationFramework& af) {
    // def(a) <- not def(b) for every attack (b,a): a is defeated as soon as
    // one of its attackers is not.
    for (const auto& [attacker, target] : af.attack_pairs())
        p.add_clause(target, 0, std::uint64_t{1} << attacker);
}

inline void add_reinstatement_clauses(NormalProgram& p, const ArgumentationFramework& af) {
    // def(a) <- def(c1), ..., def(ck) for every attack (b,a), where the ci
    // are the attackers of b.  An unattacked b leaves an empty conjunction,
    // which compiles to the fact def(a) <- true.
    for (const auto& [attacker, target] : af.attack_pairs())
        p.add_clause(target, af.attackers_of(attacker), 0);
}

}  // namespace detail

/// The conflict-freeness program: one clause per attack, def atoms for every
/// argument in the signature.
inline MappedProgram pi_minus(const ArgumentationFramework& af) {
    MappedProgram mp{detail::def_signature(af), af, MappingKind::pi_minus};
    detail::add_conflict_clauses(mp.program, af);
    return mp;
}

/// The conflict-freeness plus reinstatement program; its clause set is a
/// superset of pi_minus(af)'s.
inline MappedProgram pi_full(const ArgumentationFramework& af) {
    MappedProgram mp{detail::def_signature(af), af, MappingKind::pi_full};
    detail::add_conflict_clauses(mp.program, af);
    detail::add_reinstatement_clauses(mp.program, af);
    return mp;
}

/// The acceptance-atom program: x <- not y1, ..., not yk over x's attackers;
/// unattacked arguments compile to facts.
inline MappedProgram p_af(const ArgumentationFramework& af) {
    MappedProgram mp;
    mp.framework = af;
    mp.kind = MappingKind::p_af;
    for (int i = 0; i < af.size(); ++i)
        mp.program.add_atom(af.name(i));
    for (int i = 0; i < af.size(); ++i)
        mp.program.add_clause(i, 0, af.attackers_of(i));
    return mp;
}

namespace detail {

inline void require_def_mapping(const MappedProgram& mp, std::string_view op) {
    if (mp.kind == MappingKind::p_af)
        throw std::invalid_argument(std::string(op) +
                                    " is defined for pi-minus and pi-full mappings only");
}

}  // namespace detail

/// The arguments whose def atom is NOT in m — the extension induced by a
/// model of a def-atom program.
inline ArgumentSet extension_of(const MappedProgram& mp, Interpretation m) {
    detail::require_def_mapping(mp, "extension_of");
    return {~m.bits & mp.program.full_mask()};
}

/// The arguments whose def atom is a fact of the GL reduct at m; together
/// with extension_of this forms the model's range.
inline ArgumentSet range_plus_of(const MappedProgram& mp, Interpretation m) {
    detail::require_def_mapping(mp, "range_plus_of");
    return {facts(gl_reduce(mp.program, m))};
}

}  // namespace rangesem

#endif  // RANGESEM_MAPPING_HPP
