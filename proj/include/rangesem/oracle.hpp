//
// Copyright (c) 2026 The rangesem authors
//
// This file is part of rangesem. Distributed under the MIT license
// (see the LICENSE file or https://opensource.org/licenses/MIT).
//
#ifndef RANGESEM_ORACLE_HPP
#define RANGESEM_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "rangesem/af.hpp"

// Ground-truth implementation of the argumentation semantics, straight from
// the set-theoretic definitions by exhaustive sweep over argument subsets.
// This is the oracle the model-based routes are checked against, so it is
// kept definitionally transparent: every function below mirrors one
// definition, with no shortcuts that would blur that correspondence.

namespace rangesem::oracle {

/// No attack between two members of s (self-attackers excluded).
inline bool is_conflict_free(const ArgumentationFramework& af, ArgumentSet s) {
    for (int a : member_indices(s.bits))
        if ((af.targets_of(a) & s.bits) != 0)
            return false;
    return true;
}

/// Every attacker of x is attacked by s.
inline bool is_acceptable(const ArgumentationFramework& af, int x, ArgumentSet s) {
    return (af.attackers_of(x) & ~attacked_by(af, s).bits) == 0;
}

/// Conflict-free and every member acceptable with respect to s.
inline bool is_admissible(const ArgumentationFramework& af, ArgumentSet s) {
    if (!is_conflict_free(af, s))
        return false;
    for (int a : member_indices(s.bits))
        if (!is_acceptable(af, a, s))
            return false;
    return true;
}

namespace detail {

template <typename Pred>
std::vector<ArgumentSet> sweep(const ArgumentationFramework& af, int cap, Pred keep) {
    check_cap("argument-subset sweep", af.size(), cap);
    std::vector<ArgumentSet> out;
    const std::uint64_t full = af.all_arguments().bits;
    for (std::uint64_t bits = 0;; ++bits) {
        if (keep(ArgumentSet{bits}))
            out.push_back({bits});
        if (bits == full)
            break;
    }
    return out;
}

/// The members of `candidates` whose range is subset-maximal within
/// `candidates`.
inline std::vector<ArgumentSet> range_maximal(const ArgumentationFramework& af,
                                              const std::vector<ArgumentSet>& candidates) {
    std::vector<ArgumentSet> ranges;
    ranges.reserve(candidates.size());
    for (ArgumentSet s : candidates)
        ranges.push_back(range_of(af, s));
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
            out.push_back(candidates[i]);
    }
    return out;
}

}  // namespace detail

inline std::vector<ArgumentSet> conflict_free_sets(const ArgumentationFramework& af,
                                                   int cap = kDefaultExhaustiveCap) {
    return detail::sweep(af, cap, [&](ArgumentSet s) { return is_conflict_free(af, s); });
}

inline std::vector<ArgumentSet> admissible_sets(const ArgumentationFramework& af,
                                                int cap = kDefaultExhaustiveCap) {
    return detail::sweep(af, cap, [&](ArgumentSet s) { return is_admissible(af, s); });
}

/// Admissible sets containing every argument they render acceptable.
inline ExtensionSet complete_extensions(const ArgumentationFramework& af,
                                        int cap = kDefaultExhaustiveCap) {
    auto members = detail::sweep(af, cap, [&](ArgumentSet s) {
        if (!is_admissible(af, s))
            return false;
        for (int x = 0; x < af.size(); ++x)
            if (!s.contains(x) && is_acceptable(af, x, s))
                return false;
        return true;
    });
    return make_extension_set(std::move(members));
}

/// The unique subset-minimal complete extension.
inline ArgumentSet grounded_extension(const ArgumentationFramework& af,
                                      int cap = kDefaultExhaustiveCap) {
    const ExtensionSet complete = complete_extensions(af, cap);
    for (ArgumentSet candidate : complete.extensions) {
        bool least = true;
        for (ArgumentSet other : complete.extensions)
            if (!is_subset(candidate, other))
                least = false;
        if (least)
            return candidate;
    }
    // Uniqueness of the least complete extension is a classical theorem;
    // reaching this line means the sweep above is broken.
    throw std::logic_error("no least complete extension found");
}

/// Admissible sets attacking every outside argument.
inline ExtensionSet stable_extensions(const ArgumentationFramework& af,
                                      int cap = kDefaultExhaustiveCap) {
    auto members = detail::sweep(af, cap, [&](ArgumentSet s) {
        return is_admissible(af, s) && range_of(af, s) == af.all_arguments();
    });
    return make_extension_set(std::move(members));
}

/// Subset-maximal admissible sets.
inline ExtensionSet preferred_extensions(const ArgumentationFramework& af,
                                         int cap = kDefaultExhaustiveCap) {
    const std::vector<ArgumentSet> admissible = admissible_sets(af, cap);
    std::vector<ArgumentSet> members;
    for (ArgumentSet s : admissible) {
        bool maximal = true;
        for (ArgumentSet other : admissible) {
            if (is_proper_subset(s, other)) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            members.push_back(s);
    }
    return make_extension_set(std::move(members));
}

/// Complete extensions with subset-maximal range.
inline ExtensionSet semi_stable_extensions(const ArgumentationFramework& af,
                                           int cap = kDefaultExhaustiveCap) {
    return make_extension_set(
        detail::range_maximal(af, complete_extensions(af, cap).extensions));
}

/// Conflict-free sets with subset-maximal range.
inline ExtensionSet stage_extensions(const ArgumentationFramework& af,
                                     int cap = kDefaultExhaustiveCap) {
    return make_extension_set(detail::range_maximal(af, conflict_free_sets(af, cap)));
}

}  // namespace rangesem::oracle

#endif  // RANGESEM_ORACLE_HPP
