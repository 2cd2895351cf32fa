#pragma once

#include <stdexcept>
#include <string>

namespace cwbd {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A requested object cannot exist for the given parameters (failed
// precondition, violated existence condition, ...).  CLI exit code 2.
class infeasible_error : public error {
public:
    explicit infeasible_error(const std::string& what) : error(what) {}
};

// A bounded search ran out of its node budget before completing.
// Always reported, never silently swallowed.  CLI exit code 3.
class budget_error : public error {
public:
    explicit budget_error(const std::string& what) : error(what) {}
};

// Malformed or semantically invalid input file.  CLI exit code 1.
// line/column are 1-based; 0 means "not applicable / unknown".
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        std::string s = what + " (line " + std::to_string(line);
        if (column != 0) s += ", column " + std::to_string(column);
        return s + ")";
    }

    std::size_t line_;
    std::size_t column_;
};

// An internal consistency check failed; indicates a bug, not bad input.
class internal_error : public error {
public:
    explicit internal_error(const std::string& what) : error("internal error: " + what) {}
};

} // namespace cwbd
