#pragma once

/**
 * @file io.hpp
 * @brief Text formats: ideal files and monomial expressions.
 *
 * Ideal file:
 *
 *     ring: a b c d e f
 *     gens: a*b, a*c, a*d, d*e, d*f
 *
 * Monomial expressions follow `monomial := term ('*' term)*` with
 * `term := var ('^' positiveInt)?`; the literal `1` denotes the unit
 * monomial. Blank lines and lines starting with '#' are ignored.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hsi/monomial.hpp"

namespace hsi {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                             message),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Variable names in ring order.
class VariableNames {
public:
    VariableNames() = default;
    explicit VariableNames(std::vector<std::string> names) : names_(std::move(names))
    {
        for (std::size_t i = 0; i < names_.size(); ++i)
            index_.emplace(names_[i], i);
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& operator[](std::size_t i) const { return names_[i]; }

    std::optional<std::size_t> find(std::string_view name) const
    {
        const auto it = index_.find(std::string(name));
        return it == index_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct IdealDocument {
    VariableNames variables;
    MonomialIdeal ideal = MonomialIdeal::zero(1);
    std::size_t redundant_generators = 0;  // dropped while minimalizing
};

/// `a*b^2*d`; the unit monomial prints as `1`. Exact inverse of parse_monomial.
inline std::string format_monomial(const Monomial& u, const VariableNames& vars)
{
    if (u.arity() != vars.size())
        throw input_error("monomial arity does not match the variable list");
    std::string out;
    for (std::size_t i = 0; i < u.arity(); ++i) {
        if (u[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += vars[i];
        if (u[i] > 1)
            out += '^' + std::to_string(u[i]);
    }
    return out.empty() ? "1" : out;
}

namespace detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
inline bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

/// Cursor over a single line; columns are 1-based.
class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line, std::size_t column_offset = 0)
        : text_(text), line_(line), offset_(column_offset)
    {
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end()
    {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void advance() { ++pos_; }
    std::size_t column() const { return offset_ + pos_ + 1; }

    [[noreturn]] void fail(const std::string& message) const { throw parse_error(line_, column(), message); }
    [[noreturn]] void fail_at(std::size_t column, const std::string& message) const
    {
        throw parse_error(line_, column, message);
    }

    std::string_view identifier()
    {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_]))
            fail("expected a variable name");
        while (pos_ < text_.size() && is_ident_char(text_[pos_]))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::int64_t positive_int(std::int64_t limit)
    {
        skip_space();
        const std::size_t start = pos_;
        std::int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > limit) {
                pos_ = start;
                fail("exponent exceeds limit");
            }
            ++pos_;
        }
        if (pos_ == start)
            fail("malformed exponent: expected a positive integer");
        if (value == 0) {
            pos_ = start;
            fail("malformed exponent: must be at least 1");
        }
        return value;
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

inline Monomial parse_monomial(LineCursor& cur, const VariableNames& vars, std::int64_t limit)
{
    std::vector<std::int64_t> e(vars.size(), 0);
    if (cur.peek() == '1') {
        cur.advance();
        return to_monomial(vars.size(), e, limit);
    }
    for (;;) {
        cur.skip_space();
        const std::size_t col = cur.column();
        const std::string_view name = cur.identifier();
        const auto idx = vars.find(name);
        if (!idx)
            cur.fail_at(col, "unknown variable '" + std::string(name) + "'");
        std::int64_t power = 1;
        if (cur.peek() == '^') {
            cur.advance();
            power = cur.positive_int(limit);
        }
        if (e[*idx] + power > limit)
            cur.fail("exponent exceeds limit");
        e[*idx] += power;
        if (cur.peek() != '*')
            break;
        cur.advance();
    }
    return to_monomial(vars.size(), e, limit);
}

} // namespace detail

/// Parses one monomial expression over `vars`; the whole string must be consumed.
inline Monomial parse_monomial(std::string_view text, const VariableNames& vars,
                               std::int64_t limit = default_exponent_limit)
{
    detail::LineCursor cur(text, 1);
    Monomial u = detail::parse_monomial(cur, vars, limit);
    if (!cur.at_end())
        cur.fail("unexpected trailing input");
    return u;
}

/**
 * Parses a comma- or newline-separated list of monomials, e.g. an order file.
 * '#' starts a comment line.
 */
inline std::vector<Monomial> parse_monomial_list(std::string_view text, const VariableNames& vars,
                                                 std::int64_t limit = default_exponent_limit)
{
    std::vector<Monomial> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        detail::LineCursor cur(line, line_no);
        if (!cur.at_end() && cur.peek() != '#') {
            for (;;) {
                out.push_back(detail::parse_monomial(cur, vars, limit));
                if (cur.at_end())
                    break;
                if (cur.peek() != ',')
                    cur.fail("expected ',' between monomials");
                cur.advance();
                if (cur.at_end())
                    break;
            }
        }
        start = end + 1;
    }
    return out;
}

/**
 * Reads an ideal file. The generators are minimalized; the number of dropped
 * redundant generators is recorded so callers can warn about it.
 */
inline IdealDocument parse_ideal_file(std::string_view text, std::int64_t limit = default_exponent_limit)
{
    std::optional<VariableNames> vars;
    std::optional<std::vector<Monomial>> gens;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        detail::LineCursor cur(line, line_no);
        if (cur.at_end() || cur.peek() == '#')
            continue;
        const std::size_t key_col = cur.column();
        const std::string key(cur.identifier());
        if (cur.peek() != ':')
            cur.fail("expected ':' after '" + key + "'");
        cur.advance();

        if (key == "ring") {
            if (vars)
                cur.fail_at(key_col, "duplicate 'ring' line");
            std::vector<std::string> names;
            while (!cur.at_end()) {
                const std::size_t col = cur.column();
                std::string name(cur.identifier());
                if (std::find(names.begin(), names.end(), name) != names.end())
                    cur.fail_at(col, "duplicate variable '" + name + "'");
                names.push_back(std::move(name));
            }
            if (names.empty())
                cur.fail("empty ring: at least one variable is required");
            vars.emplace(std::move(names));
        } else if (key == "gens") {
            if (gens)
                cur.fail_at(key_col, "duplicate 'gens' line");
            if (!vars)
                cur.fail_at(key_col, "'gens' before 'ring'");
            std::vector<Monomial> list;
            if (!cur.at_end()) {
                for (;;) {
                    list.push_back(detail::parse_monomial(cur, *vars, limit));
                    if (cur.at_end())
                        break;
                    if (cur.peek() != ',')
                        cur.fail("expected ',' between generators");
                    cur.advance();
                }
            }
            gens = std::move(list);
        } else {
            cur.fail_at(key_col, "unknown key '" + key + "'");
        }
    }
    if (!vars)
        throw parse_error(line_no == 0 ? 1 : line_no, 1, "missing 'ring' line");
    if (!gens)
        throw parse_error(line_no == 0 ? 1 : line_no, 1, "missing 'gens' line");

    IdealDocument doc;
    const std::size_t given = gens->size();
    doc.ideal = minimal_generators(vars->size(), std::move(*gens));
    doc.redundant_generators = given - doc.ideal.size();
    doc.variables = std::move(*vars);
    return doc;
}

/// Inverse of parse_ideal_file for a minimal ideal.
inline std::string format_ideal_file(const MonomialIdeal& I, const VariableNames& vars)
{
    std::string out = "ring:";
    for (const auto& v : vars.names())
        out += ' ' + v;
    out += "\ngens:";
    for (std::size_t k = 0; k < I.size(); ++k)
        out += (k == 0 ? " " : ", ") + format_monomial(I.generators()[k], vars);
    out += '\n';
    return out;
}

} // namespace hsi
