//
// Copyright (c) 2026 The rangesem authors
//
// This file is part of rangesem. Distributed under the MIT license
// (see the LICENSE file or https://opensource.org/licenses/MIT).
//
#ifndef RANGESEM_PROGRAM_IO_HPP
#define RANGESEM_PROGRAM_IO_HPP

#include <sstream>
#include <string>
#include <string_view>

#include "rangesem/af_io.hpp"
#include "rangesem/program.hpp"

namespace rangesem {

// Debug text format: a leading `% sig: a1 a2 ...` line declares the
// signature, then one clause per line, `head :- b1, b2, not c1.`; facts as
// `head.`.  Atom names may contain parentheses so that def(x) atoms render
// verbatim.  Clauses appear in canonical (head, positive code, negative
// code) order.

inline std::string dump_program(const NormalProgram& p) {
    std::string out = "% sig:";
    for (int i = 0; i < p.atom_count(); ++i) {
        out += " ";
        out += p.atom_name(i);
    }
    out += "\n";
    for (const NormalClause& c : p.clauses()) {
        out += p.atom_name(c.head);
        if (!c.is_fact()) {
            out += " :- ";
            bool first = true;
            for (int i : member_indices(c.positive)) {
                if (!first)
                    out += ", ";
                out += p.atom_name(i);
                first = false;
            }
            for (int i : member_indices(c.negative)) {
                if (!first)
                    out += ", ";
                out += "not ";
                out += p.atom_name(i);
                first = false;
            }
        }
        out += ".\n";
    }
    return out;
}

namespace detail {

inline bool is_atom_char(char c) {
    return is_name_char(c) || c == '(' || c == ')';
}

inline bool is_valid_atom_name(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!is_atom_char(c))
            return false;
    return true;
}

}  // namespace detail

inline NormalProgram parse_program(std::istream& in) {
    NormalProgram p;
    std::string raw;
    int line_no = 0;
    bool seen_sig = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = detail::trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '%') {
            std::string_view body = detail::trim(line.substr(1));
            if (!seen_sig && body.substr(0, 4) == "sig:") {
                std::istringstream atoms{std::string(body.substr(4))};
                std::string name;
                while (atoms >> name) {
                    if (!detail::is_valid_atom_name(name))
                        throw parse_error(line_no, "invalid atom name '" + name + "'");
                    if (p.index_of_atom(name) >= 0)
                        throw parse_error(line_no, "duplicate atom '" + name + "' in signature");
                    p.add_atom(name);
                }
                seen_sig = true;
            }
            continue;  // other comment lines are skipped
        }
        if (!seen_sig)
            throw parse_error(line_no, "program must start with a '% sig: ...' line");
        if (line.back() != '.')
            throw parse_error(line_no, "clause must end with '.'");
        line = detail::trim(line.substr(0, line.size() - 1));
        std::string_view head = line;
        std::string_view body;
        const std::size_t arrow = line.find(":-");
        if (arrow != std::string_view::npos) {
            head = detail::trim(line.substr(0, arrow));
            body = detail::trim(line.substr(arrow + 2));
        }
        const auto atom_id = [&](std::string_view name) {
            if (!detail::is_valid_atom_name(name))
                throw parse_error(line_no, "invalid atom '" + std::string(name) + "'");
            const int id = p.index_of_atom(name);
            if (id < 0)
                throw parse_error(line_no, "atom '" + std::string(name) + "' not in signature");
            return id;
        };
        NormalClause clause;
        clause.head = atom_id(head);
        while (!body.empty()) {
            std::size_t comma = body.find(',');
            std::string_view literal = detail::trim(body.substr(0, comma));
            body = comma == std::string_view::npos ? std::string_view{}
                                                   : detail::trim(body.substr(comma + 1));
            if (literal.empty())
                throw parse_error(line_no, "empty literal in clause body");
            if (literal.substr(0, 4) == "not " || literal.substr(0, 4) == "not\t")
                clause.negative |= std::uint64_t{1} << atom_id(detail::trim(literal.substr(4)));
            else
                clause.positive |= std::uint64_t{1} << atom_id(literal);
        }
        p.add_clause(clause);
    }
    if (!seen_sig)
        throw parse_error(line_no, "missing '% sig: ...' line");
    return p;
}

inline NormalProgram parse_program(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_program(in);
}

/// `{a,b}` with atoms in ordinal order; used in reports and tests.
inline std::string format_interpretation(const NormalProgram& p, Interpretation m) {
    std::string out = "{";
    bool first = true;
    for (int i : member_indices(m.bits)) {
        if (!first)
            out += ",";
        out += p.atom_name(i);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace rangesem

#endif  // RANGESEM_PROGRAM_IO_HPP
