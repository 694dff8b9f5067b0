#ifndef VIRBI_ERRORS_HPP
#define VIRBI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace virbi {

/// Invalid configuration: mismatched coefficient algebras, bad structure
/// tables, malformed windows, out-of-range basis data.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax error in the expression grammar, annotated with 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

} // namespace virbi

#endif
