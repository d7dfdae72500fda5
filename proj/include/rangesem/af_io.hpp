//
// Copyright (c) 2026 The rangesem authors
//
// This file is part of rangesem. Distributed under the MIT license
// (see the LICENSE file or https://opensource.org/licenses/MIT).
//
#ifndef RANGESEM_AF_IO_HPP
#define RANGESEM_AF_IO_HPP

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include "rangesem/af.hpp"

namespace rangesem {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline bool is_valid_name(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!is_name_char(c))
            return false;
    return true;
}

}  // namespace detail

// ── apx format ──────────────────────────────────────────────────────────────
// One statement per line: `arg(<name>).` or `att(<name>,<name>).`; comments
// start with `%`; blank lines allowed.  Attack endpoints must be declared by
// an earlier arg line.

inline ArgumentationFramework parse_apx(std::istream& in) {
    ArgumentationFramework af;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '%')
            continue;
        const bool is_arg = line.substr(0, 4) == "arg(";
        const bool is_att = line.substr(0, 4) == "att(";
        if (!is_arg && !is_att)
            throw parse_error(line_no, "expected arg(...). or att(...,...): '" + raw + "'");
        if (line.substr(line.size() >= 2 ? line.size() - 2 : 0) != ").")
            throw parse_error(line_no, "statement must end with ').'");
        std::string_view inner = detail::trim(line.substr(4, line.size() - 6));
        if (is_arg) {
            if (!detail::is_valid_name(inner))
                throw parse_error(line_no, "invalid argument name '" + std::string(inner) + "'");
            if (af.index_of(inner) >= 0)
                throw parse_error(line_no, "duplicate arg declaration '" + std::string(inner) + "'");
            af.add_argument(std::string(inner));
        } else {
            const std::size_t comma = inner.find(',');
            if (comma == std::string_view::npos)
                throw parse_error(line_no, "att requires two comma-separated arguments");
            std::string_view from = detail::trim(inner.substr(0, comma));
            std::string_view to = detail::trim(inner.substr(comma + 1));
            if (!detail::is_valid_name(from) || !detail::is_valid_name(to))
                throw parse_error(line_no, "invalid att statement '" + raw + "'");
            const int fi = af.index_of(from);
            const int ti = af.index_of(to);
            if (fi < 0)
                throw parse_error(line_no, "undeclared argument '" + std::string(from) + "'");
            if (ti < 0)
                throw parse_error(line_no, "undeclared argument '" + std::string(to) + "'");
            af.add_attack(fi, ti);
        }
    }
    return af;
}

inline ArgumentationFramework parse_apx(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_apx(in);
}

/// Emits arg lines in index order, then att lines in lexicographic
/// (attacker, target) index order; LF endings.  Round-trips through
/// parse_apx to an identical framework.
inline std::string serialize_apx(const ArgumentationFramework& af) {
    std::string out;
    for (int i = 0; i < af.size(); ++i) {
        out += "arg(";
        out += af.name(i);
        out += ").\n";
    }
    for (const auto& [from, to] : af.attack_pairs()) {
        out += "att(";
        out += af.name(from);
        out += ",";
        out += af.name(to);
        out += ").\n";
    }
    return out;
}

// ── tgf format ──────────────────────────────────────────────────────────────
// Node lines (one id per line), a `#` separator, then edge lines `<id> <id>`.

inline ArgumentationFramework parse_tgf(std::istream& in) {
    ArgumentationFramework af;
    std::string raw;
    int line_no = 0;
    bool seen_separator = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = detail::trim(raw);
        if (line.empty())
            continue;
        if (line == "#") {
            if (seen_separator)
                throw parse_error(line_no, "duplicate '#' separator");
            seen_separator = true;
            continue;
        }
        if (!seen_separator) {
            if (line.find_first_of(" \t") != std::string_view::npos)
                throw parse_error(line_no, "missing '#' separator before edge lines");
            if (!detail::is_valid_name(line))
                throw parse_error(line_no, "invalid node id '" + std::string(line) + "'");
            if (af.index_of(line) >= 0)
                throw parse_error(line_no, "duplicate node id '" + std::string(line) + "'");
            af.add_argument(std::string(line));
        } else {
            std::istringstream fields{std::string(line)};
            std::string from, to, extra;
            if (!(fields >> from >> to) || (fields >> extra))
                throw parse_error(line_no, "edge line must be '<id> <id>'");
            const int fi = af.index_of(from);
            const int ti = af.index_of(to);
            if (fi < 0)
                throw parse_error(line_no, "unknown node id '" + from + "'");
            if (ti < 0)
                throw parse_error(line_no, "unknown node id '" + to + "'");
            af.add_attack(fi, ti);
        }
    }
    if (!seen_separator)
        throw parse_error(line_no, "missing '#' separator");
    return af;
}

inline ArgumentationFramework parse_tgf(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_tgf(in);
}

// ── Canonical result rendering ──────────────────────────────────────────────

/// `[a,c]` with members in index order.
inline std::string format_argument_set(const ArgumentationFramework& af, ArgumentSet s) {
    std::string out = "[";
    bool first = true;
    for (int i : member_indices(s.bits)) {
        if (!first)
            out += ",";
        out += af.name(i);
        first = false;
    }
    out += "]";
    return out;
}

/// `[[a,c],[b]]`: extensions in canonical order, one line, no spaces.
inline std::string format_extension_set(const ArgumentationFramework& af, const ExtensionSet& es) {
    std::string out = "[";
    bool first = true;
    for (ArgumentSet s : es.extensions) {
        if (!first)
            out += ",";
        out += format_argument_set(af, s);
        first = false;
    }
    out += "]";
    return out;
}

}  // namespace rangesem

#endif  // RANGESEM_AF_IO_HPP
