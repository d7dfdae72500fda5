//
// Copyright (c) 2026 The rangesem authors
//
// This file is part of rangesem. Distributed under the MIT license
// (see the LICENSE file or https://opensource.org/licenses/MIT).
//
#ifndef RANGESEM_AF_HPP
#define RANGESEM_AF_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rangesem {

/// Hard representation limit: sets are stored as 64-bit masks.
inline constexpr int kMaxArguments = 63;

/// Default cap on the universe size of exhaustive subset sweeps (2^20
/// interpretations).  Every enumerating operation takes the cap as a
/// parameter so callers can raise it up to kMaxArguments.
inline constexpr int kDefaultExhaustiveCap = 20;

/// Thrown when an exhaustive operation is asked to sweep a universe
/// larger than the configured cap.
class cap_exceeded : public std::runtime_error {
public:
    cap_exceeded(std::string_view what_kind, int size, int cap)
        : std::runtime_error("exhaustive " + std::string(what_kind) + " over " +
                             std::to_string(size) + " elements exceeds cap of " +
                             std::to_string(cap)) {}
};

inline void check_cap(std::string_view what_kind, int size, int cap) {
    if (cap > kMaxArguments)
        cap = kMaxArguments;
    if (size > cap)
        throw cap_exceeded(what_kind, size, cap);
}

// ── Bit-indexed sets ────────────────────────────────────────────────────────
// Arguments and atoms carry dense ordinals, so subsets are 64-bit masks.
// ArgumentSet lives in argument space, Interpretation (program.hpp) in atom
// space; both are plain value types.

struct ArgumentSet {
    std::uint64_t bits = 0;

    constexpr bool contains(int i) const { return (bits >> i) & 1u; }
    constexpr void insert(int i) { bits |= std::uint64_t{1} << i; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }

    friend constexpr bool operator==(ArgumentSet, ArgumentSet) = default;
};

constexpr bool is_subset(ArgumentSet a, ArgumentSet b) { return (a.bits & ~b.bits) == 0; }
constexpr bool is_proper_subset(ArgumentSet a, ArgumentSet b) { return is_subset(a, b) && a.bits != b.bits; }
constexpr ArgumentSet set_union(ArgumentSet a, ArgumentSet b) { return {a.bits | b.bits}; }

/// Ascending ordinals of the members of a mask.
inline std::vector<int> member_indices(std::uint64_t bits) {
    std::vector<int> out;
    for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest));
    return out;
}

/// Ordering used wherever collections of sets are canonicalized: compare the
/// ascending member sequences lexicographically ([] < [a] < [a,b] < [b]).
inline bool sequence_less(std::uint64_t a, std::uint64_t b) {
    const std::vector<int> va = member_indices(a);
    const std::vector<int> vb = member_indices(b);
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

/// An argument with its dense ordinal inside the owning framework.
struct Argument {
    std::string name;
    int index = 0;
};

// ── ArgumentationFramework ──────────────────────────────────────────────────
// A finite set of named arguments plus a binary attack relation, both fixed
// at construction time.  Self-attacks are permitted.  All values are
// immutable once built, so concurrent reads are unrestricted.

class ArgumentationFramework {
public:
    ArgumentationFramework() = default;

    /// Declares a fresh argument and returns its ordinal.  Names must be
    /// non-empty and unique within the framework.
    int add_argument(std::string name) {
        if (name.empty())
            throw std::invalid_argument("argument name must be non-empty");
        if (index_of(name) >= 0)
            throw std::invalid_argument("duplicate argument name: " + name);
        if (size() >= kMaxArguments)
            throw std::invalid_argument("too many arguments (limit " +
                                        std::to_string(kMaxArguments) + ")");
        names_.push_back(std::move(name));
        attackers_.push_back(0);
        targets_.push_back(0);
        return static_cast<int>(names_.size()) - 1;
    }

    void add_attack(int from, int to) {
        check_index(from);
        check_index(to);
        targets_[static_cast<std::size_t>(from)] |= bit(to);
        attackers_[static_cast<std::size_t>(to)] |= bit(from);
    }

    int size() const { return static_cast<int>(names_.size()); }

    const std::string& name(int i) const {
        check_index(i);
        return names_[static_cast<std::size_t>(i)];
    }

    Argument argument(int i) const { return {name(i), i}; }

    /// Ordinal of the named argument, or -1 if undeclared.
    int index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return static_cast<int>(i);
        return -1;
    }

    bool has_attack(int from, int to) const {
        check_index(from);
        check_index(to);
        return (targets_[static_cast<std::size_t>(from)] >> to) & 1u;
    }

    /// Mask of the arguments attacking `target`.
    std::uint64_t attackers_of(int target) const {
        check_index(target);
        return attackers_[static_cast<std::size_t>(target)];
    }

    /// Mask of the arguments attacked by `source`.
    std::uint64_t targets_of(int source) const {
        check_index(source);
        return targets_[static_cast<std::size_t>(source)];
    }

    ArgumentSet all_arguments() const {
        if (names_.empty())
            return {};
        return {~std::uint64_t{0} >> (64 - names_.size())};
    }

    int attack_count() const {
        int n = 0;
        for (std::uint64_t t : targets_)
            n += std::popcount(t);
        return n;
    }

    /// All attacks as (attacker, target) ordinal pairs in lexicographic order.
    std::vector<std::pair<int, int>> attack_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int from = 0; from < size(); ++from)
            for (int to : member_indices(targets_[static_cast<std::size_t>(from)]))
                out.emplace_back(from, to);
        return out;
    }

    friend bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b) {
        return a.names_ == b.names_ && a.targets_ == b.targets_;
    }

private:
    static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

    void check_index(int i) const {
        if (i < 0 || i >= size())
            throw std::out_of_range("argument index " + std::to_string(i) +
                                    " out of range (framework has " +
                                    std::to_string(size()) + " arguments)");
    }

    std::vector<std::string> names_;
    std::vector<std::uint64_t> attackers_;  // attackers_[t]: sources attacking t
    std::vector<std::uint64_t> targets_;    // targets_[s]: targets attacked by s
};

/// S+ : the arguments attacked by some member of `s`.
inline ArgumentSet attacked_by(const ArgumentationFramework& af, ArgumentSet s) {
    std::uint64_t out = 0;
    for (int i : member_indices(s.bits))
        out |= af.targets_of(i);
    return {out};
}

/// E ∪ E+, the range of `s`.
inline ArgumentSet range_of(const ArgumentationFramework& af, ArgumentSet s) {
    return set_union(s, attacked_by(af, s));
}

// ── ExtensionSet ────────────────────────────────────────────────────────────

/// The output of any semantics: a duplicate-free collection of argument
/// sets in canonical (member-sequence lexicographic) order.
struct ExtensionSet {
    std::vector<ArgumentSet> extensions;

    void canonicalize() {
        std::sort(extensions.begin(), extensions.end(),
                  [](ArgumentSet a, ArgumentSet b) { return sequence_less(a.bits, b.bits); });
        extensions.erase(std::unique(extensions.begin(), extensions.end()), extensions.end());
    }

    bool contains(ArgumentSet s) const {
        return std::find(extensions.begin(), extensions.end(), s) != extensions.end();
    }

    friend bool operator==(const ExtensionSet&, const ExtensionSet&) = default;
};

inline ExtensionSet make_extension_set(std::vector<ArgumentSet> members) {
    ExtensionSet out{std::move(members)};
    out.canonicalize();
    return out;
}

// ── Random instance generation ──────────────────────────────────────────────

namespace detail {

/// std::mt19937_64 emits a standard-specified sequence, so raw draws are
/// reproducible across platforms.  Standard distributions are not; this maps
/// a raw draw to [0,1) with the usual 53-bit trick instead.
class SeededDraw {
public:
    explicit SeededDraw(std::uint64_t seed) : engine_(seed) {}

    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw from [0, n).
    std::uint64_t next_below(std::uint64_t n) { return engine_() % n; }

private:
    std::mt19937_64 engine_;
};

}  // namespace detail

/// Erdos–Renyi style instance: n arguments named a0..a(n-1); each of the n^2
/// ordered pairs (self-pairs included) is drawn independently with
/// probability p, visiting pairs in row-major order with one draw per pair.
/// Equal (seed, n, p) yields an identical framework on every platform.
inline ArgumentationFramework random_af(std::uint64_t seed, int n, double p) {
    if (n < 0 || n > kMaxArguments)
        throw std::invalid_argument("argument count out of range");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("attack probability must be in [0,1]");
    ArgumentationFramework af;
    for (int i = 0; i < n; ++i)
        af.add_argument("a" + std::to_string(i));
    detail::SeededDraw draw(seed);
    for (int from = 0; from < n; ++from)
        for (int to = 0; to < n; ++to)
            if (draw.next_unit() < p)
                af.add_attack(from, to);
    return af;
}

}  // namespace rangesem

#endif  // RANGESEM_AF_HPP
