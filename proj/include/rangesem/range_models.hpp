//
// Copyright (c) 2026 The rangesem authors
//
// This file is part of rangesem. Distributed under the MIT license
// (see the LICENSE file or https://opensource.org/licenses/MIT).
//
#ifndef RANGESEM_RANGE_MODELS_HPP
#define RANGESEM_RANGE_MODELS_HPP

#include <stdexcept>
#include <vector>

#include "rangesem/af.hpp"
#include "rangesem/mapping.hpp"
#include "rangesem/program.hpp"

// The range of an extension (E union E+) has a logic-programming
// counterpart: Facts(R(P,M)) union (signature \ M), where R is a reduction.
// Selecting the models whose value under that schema is subset-maximal
// yields the semi-stable extensions (from supported models of pi_full) and
// the stage extensions (from 2-valued models of pi_minus).

namespace rangesem {

/// Which reduction instantiates the schema.  Both give the same Facts, so
/// the selected model sets coincide; the choice is exposed so that this
/// interchangeability stays testable.
enum class Reduction { GL, RED };

struct RangeValue {
    std::uint64_t sc_atoms = 0;  // Facts(R(P,M)) | (signature \ M)
    Interpretation source_model;
};

inline RangeValue sc1(const NormalProgram& p, Interpretation m, Reduction r) {
    const NormalProgram reduct = r == Reduction::GL ? gl_reduce(p, m) : red_reduce(p, m);
    return {facts(reduct) | (p.full_mask() & ~m.bits), m};
}

namespace detail {

/// Pairwise subset-maximality filter over the candidates' sc values; all
/// maximal elements are kept, ties included.
inline std::vector<Interpretation> sc_maximal(const NormalProgram& p,
                                              const std::vector<Interpretation>& candidates,
                                              Reduction r) {
    std::vector<std::uint64_t> values;
    values.reserve(candidates.size());
    for (Interpretation m : candidates)
        values.push_back(sc1(p, m, r).sc_atoms);
    std::vector<Interpretation> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            if ((values[i] & ~values[j]) == 0 && values[i] != values[j]) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.push_back(candidates[i]);
    }
    return out;
}

}  // namespace detail

/// The supported models of pi_full(af) whose sc value is subset-maximal
/// among all supported models.
inline std::vector<Interpretation> gl_supported_models(const MappedProgram& mp,
                                                       Reduction r = Reduction::GL,
                                                       int cap = kDefaultExhaustiveCap) {
    if (mp.kind != MappingKind::pi_full)
        throw std::invalid_argument("gl_supported_models expects a pi-full mapping");
    return detail::sc_maximal(mp.program, supported_models(mp.program, cap), r);
}

/// The 2-valued models of pi_minus(af) whose sc value is subset-maximal
/// among all 2-valued models.
inline std::vector<Interpretation> gl_stage_models(const MappedProgram& mp,
                                                   Reduction r = Reduction::GL,
                                                   int cap = kDefaultExhaustiveCap) {
    if (mp.kind != MappingKind::pi_minus)
        throw std::invalid_argument("gl_stage_models expects a pi-minus mapping");
    return detail::sc_maximal(mp.program, two_valued_models(mp.program, cap), r);
}

namespace detail {

inline ExtensionSet extensions_of_models(const MappedProgram& mp,
                                         const std::vector<Interpretation>& models) {
    std::vector<ArgumentSet> out;
    out.reserve(models.size());
    for (Interpretation m : models)
        out.push_back(extension_of(mp, m));
    return make_extension_set(std::move(out));
}

/// Extensions of the models in `candidates` whose range (extension plus
/// reduct facts) is subset-maximal within `candidates`.
inline ExtensionSet range_maximal_extensions(const MappedProgram& mp,
                                             const std::vector<Interpretation>& candidates) {
    std::vector<ArgumentSet> ranges;
    ranges.reserve(candidates.size());
    for (Interpretation m : candidates)
        ranges.push_back(set_union(extension_of(mp, m), range_plus_of(mp, m)));
    std::vector<ArgumentSet> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            if (is_proper_subset(ranges[i], ranges[j])) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.push_back(extension_of(mp, candidates[i]));
    }
    return make_extension_set(std::move(out));
}

}  // namespace detail

/// Semi-stable extensions as extensions of GL-supported models.
inline ExtensionSet semi_stable_via_lp(const ArgumentationFramework& af,
                                       Reduction r = Reduction::GL,
                                       int cap = kDefaultExhaustiveCap) {
    const MappedProgram mp = pi_full(af);
    return detail::extensions_of_models(mp, gl_supported_models(mp, r, cap));
}

/// Semi-stable extensions as range-maximal p-stable models of pi_full(af).
inline ExtensionSet semi_stable_via_pstable(const ArgumentationFramework& af,
                                            int cap = kDefaultExhaustiveCap) {
    const MappedProgram mp = pi_full(af);
    return detail::range_maximal_extensions(mp, p_stable_models(mp.program, cap));
}

/// Semi-stable extensions as range-maximal 2-valued models of pi_full(af).
inline ExtensionSet semi_stable_via_2valued(const ArgumentationFramework& af,
                                            int cap = kDefaultExhaustiveCap) {
    const MappedProgram mp = pi_full(af);
    return detail::range_maximal_extensions(mp, two_valued_models(mp.program, cap));
}

/// Stage extensions as extensions of GL-stage models.
inline ExtensionSet stage_via_lp(const ArgumentationFramework& af,
                                 Reduction r = Reduction::GL,
                                 int cap = kDefaultExhaustiveCap) {
    const MappedProgram mp = pi_minus(af);
    return detail::extensions_of_models(mp, gl_stage_models(mp, r, cap));
}

}  // namespace rangesem

#endif  // RANGESEM_RANGE_MODELS_HPP
