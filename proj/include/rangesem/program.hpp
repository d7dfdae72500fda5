//
// Copyright (c) 2026 The rangesem authors
//
// This file is part of rangesem. Distributed under the MIT license
// (see the LICENSE file or https://opensource.org/licenses/MIT).
//
#ifndef RANGESEM_PROGRAM_HPP
#define RANGESEM_PROGRAM_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rangesem/af.hpp"

namespace rangesem {

/// A 2-valued model candidate: the subset of the signature set to true.
struct Interpretation {
    std::uint64_t bits = 0;

    constexpr bool contains(int i) const { return (bits >> i) & 1u; }
    constexpr void insert(int i) { bits |= std::uint64_t{1} << i; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }

    friend constexpr bool operator==(Interpretation, Interpretation) = default;
};

constexpr bool is_subset(Interpretation a, Interpretation b) { return (a.bits & ~b.bits) == 0; }
constexpr bool is_proper_subset(Interpretation a, Interpretation b) { return is_subset(a, b) && a.bits != b.bits; }

/// head <- positive body, negated negative body.  Atoms are signature
/// ordinals; a clause with both masks empty is a fact (head <- true).
struct NormalClause {
    int head = 0;
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;

    bool is_fact() const { return positive == 0 && negative == 0; }
    bool is_definite() const { return negative == 0; }

    friend auto operator<=>(const NormalClause&, const NormalClause&) = default;
};

// ── NormalProgram ───────────────────────────────────────────────────────────
// A finite clause set over an explicit signature.  The signature may contain
// atoms that occur in no clause; such atoms are unconstrained in every model
// but still participate in enumeration and in signature complements.
// Clauses are kept deduplicated in (head, positive, negative) order, so two
// programs over the same signature compare equal iff their clause sets do.

class NormalProgram {
public:
    NormalProgram() = default;

    int add_atom(std::string name) {
        if (name.empty())
            throw std::invalid_argument("atom name must be non-empty");
        if (index_of_atom(name) >= 0)
            throw std::invalid_argument("duplicate atom name: " + name);
        if (atom_count() >= kMaxArguments)
            throw std::invalid_argument("too many atoms (limit " +
                                        std::to_string(kMaxArguments) + ")");
        atom_names_.push_back(std::move(name));
        return atom_count() - 1;
    }

    int atom_count() const { return static_cast<int>(atom_names_.size()); }

    const std::string& atom_name(int i) const {
        check_atom(i);
        return atom_names_[static_cast<std::size_t>(i)];
    }

    int index_of_atom(std::string_view name) const {
        for (std::size_t i = 0; i < atom_names_.size(); ++i)
            if (atom_names_[i] == name)
                return static_cast<int>(i);
        return -1;
    }

    void add_clause(NormalClause c) {
        check_atom(c.head);
        check_mask(c.positive);
        check_mask(c.negative);
        const auto pos = std::lower_bound(clauses_.begin(), clauses_.end(), c);
        if (pos == clauses_.end() || *pos != c)
            clauses_.insert(pos, c);
    }

    void add_clause(int head, std::uint64_t positive, std::uint64_t negative) {
        add_clause(NormalClause{head, positive, negative});
    }

    std::span<const NormalClause> clauses() const { return clauses_; }

    bool is_definite() const {
        for (const NormalClause& c : clauses_)
            if (!c.is_definite())
                return false;
        return true;
    }

    std::uint64_t full_mask() const {
        if (atom_names_.empty())
            return 0;
        return ~std::uint64_t{0} >> (64 - atom_names_.size());
    }

    /// A program with the same signature and no clauses.
    NormalProgram same_signature() const {
        NormalProgram p;
        p.atom_names_ = atom_names_;
        return p;
    }

    friend bool operator==(const NormalProgram&, const NormalProgram&) = default;

private:
    void check_atom(int i) const {
        if (i < 0 || i >= atom_count())
            throw std::out_of_range("atom ordinal " + std::to_string(i) +
                                    " outside signature of size " + std::to_string(atom_count()));
    }

    void check_mask(std::uint64_t mask) const {
        if ((mask & ~full_mask()) != 0)
            throw std::out_of_range("body mask mentions atoms outside the signature");
    }

    std::vector<std::string> atom_names_;
    std::vector<NormalClause> clauses_;
};

// ── Basic evaluation ────────────────────────────────────────────────────────

/// Heads of the clauses with empty bodies.
inline std::uint64_t facts(const NormalProgram& p) {
    std::uint64_t out = 0;
    for (const NormalClause& c : p.clauses())
        if (c.is_fact())
            out |= std::uint64_t{1} << c.head;
    return out;
}

/// Classical satisfaction: every clause whose body holds under m has its
/// head in m.
inline bool is_classical_model(const NormalProgram& p, Interpretation m) {
    for (const NormalClause& c : p.clauses()) {
        const bool body_true = (c.positive & m.bits) == c.positive && (c.negative & m.bits) == 0;
        if (body_true && !m.contains(c.head))
            return false;
    }
    return true;
}

/// All 2-valued models, as ascending subset codes over the atom ordinals.
inline std::vector<Interpretation> two_valued_models(const NormalProgram& p,
                                                     int cap = kDefaultExhaustiveCap) {
    check_cap("model enumeration", p.atom_count(), cap);
    std::vector<Interpretation> out;
    const std::uint64_t full = p.full_mask();
    for (std::uint64_t bits = 0;; ++bits) {
        if (is_classical_model(p, {bits}))
            out.push_back({bits});
        if (bits == full)
            break;
    }
    return out;
}

/// The subset-minimal 2-valued models.
inline std::vector<Interpretation> minimal_models(const NormalProgram& p,
                                                  int cap = kDefaultExhaustiveCap) {
    const std::vector<Interpretation> models = two_valued_models(p, cap);
    std::vector<Interpretation> out;
    for (Interpretation m : models) {
        bool minimal = true;
        for (Interpretation other : models) {
            if (is_proper_subset(other, m)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            out.push_back(m);
    }
    return out;
}

/// Least model of a definite program: the fixpoint of adding heads of
/// clauses whose positive body is already derived, starting from the empty
/// set.  Reached in at most |signature| rounds.
inline Interpretation least_model(const NormalProgram& p) {
    if (!p.is_definite())
        throw std::invalid_argument("least_model requires a definite program");
    std::uint64_t derived = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (const NormalClause& c : p.clauses()) {
            if ((c.positive & derived) == c.positive && !((derived >> c.head) & 1u)) {
                derived |= std::uint64_t{1} << c.head;
                changed = true;
            }
        }
    }
    return {derived};
}

// ── Reducts ─────────────────────────────────────────────────────────────────

/// Gelfond-Lifschitz reduct P^S: drop every clause with a negative literal
/// inside S, erase the negative body of the rest.  Always definite.
inline NormalProgram gl_reduce(const NormalProgram& p, Interpretation s) {
    NormalProgram out = p.same_signature();
    for (const NormalClause& c : p.clauses())
        if ((c.negative & s.bits) == 0)
            out.add_clause(c.head, c.positive, 0);
    return out;
}

/// RED(P,M): keep every clause, shrinking its negative body to the part
/// inside M.
inline NormalProgram red_reduce(const NormalProgram& p, Interpretation m) {
    NormalProgram out = p.same_signature();
    for (const NormalClause& c : p.clauses())
        out.add_clause(c.head, c.positive, c.negative & m.bits);
    return out;
}

// ── Stable models ───────────────────────────────────────────────────────────

inline bool is_stable_model(const NormalProgram& p, Interpretation s) {
    return least_model(gl_reduce(p, s)) == s;
}

inline std::vector<Interpretation> stable_models(const NormalProgram& p,
                                                 int cap = kDefaultExhaustiveCap) {
    check_cap("stable-model enumeration", p.atom_count(), cap);
    std::vector<Interpretation> out;
    const std::uint64_t full = p.full_mask();
    for (std::uint64_t bits = 0;; ++bits) {
        if (is_stable_model(p, {bits}))
            out.push_back({bits});
        if (bits == full)
            break;
    }
    return out;
}

// ── Classical entailment and p-stable models ────────────────────────────────

/// P, read as a classical theory with `not` as classical negation, entails
/// every atom of m.  Equivalently m is contained in the intersection of all
/// classical models over the full signature.
inline bool entails(const NormalProgram& p, Interpretation m, int cap = kDefaultExhaustiveCap) {
    check_cap("entailment check", p.atom_count(), cap);
    std::uint64_t common = p.full_mask();
    const std::uint64_t full = p.full_mask();
    for (std::uint64_t bits = 0;; ++bits) {
        if (is_classical_model(p, {bits})) {
            common &= bits;
            if ((m.bits & ~common) != 0)
                return false;
        }
        if (bits == full)
            break;
    }
    return (m.bits & ~common) == 0;
}

/// M is p-stable iff RED(P,M) both models M classically and entails it.
inline bool is_p_stable(const NormalProgram& p, Interpretation m,
                        int cap = kDefaultExhaustiveCap) {
    const NormalProgram red = red_reduce(p, m);
    return is_classical_model(red, m) && entails(red, m, cap);
}

inline std::vector<Interpretation> p_stable_models(const NormalProgram& p,
                                                   int cap = kDefaultExhaustiveCap) {
    check_cap("p-stable enumeration", p.atom_count(), cap);
    std::vector<Interpretation> out;
    const std::uint64_t full = p.full_mask();
    for (std::uint64_t bits = 0;; ++bits) {
        if (is_p_stable(p, {bits}, cap))
            out.push_back({bits});
        if (bits == full)
            break;
    }
    return out;
}

// ── Supported models ────────────────────────────────────────────────────────

/// A 2-valued model where every true atom is the head of a clause whose
/// body holds under m.
inline bool is_supported_model(const NormalProgram& p, Interpretation m) {
    if (!is_classical_model(p, m))
        return false;
    std::uint64_t supported = 0;
    for (const NormalClause& c : p.clauses())
        if ((c.positive & m.bits) == c.positive && (c.negative & m.bits) == 0)
            supported |= std::uint64_t{1} << c.head;
    return (m.bits & ~supported) == 0;
}

inline std::vector<Interpretation> supported_models(const NormalProgram& p,
                                                    int cap = kDefaultExhaustiveCap) {
    check_cap("supported-model enumeration", p.atom_count(), cap);
    std::vector<Interpretation> out;
    const std::uint64_t full = p.full_mask();
    for (std::uint64_t bits = 0;; ++bits) {
        if (is_supported_model(p, {bits}))
            out.push_back({bits});
        if (bits == full)
            break;
    }
    return out;
}

}  // namespace rangesem

#endif  // RANGESEM_PROGRAM_HPP
