#ifndef CHORAL_ERRORS_HPP
#define CHORAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace choral {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Semantic errors: assumption violations, dialect mixes, operator
/// preconditions. CLI exit code 1.
class SemanticError : public Error {
public:
    using Error::Error;
};

/// An operator produced an empty family at some pair.
class AssumptionViolation : public SemanticError {
public:
    using SemanticError::SemanticError;
};

/// A configured resource cap was exceeded. CLI exit code 3.
class CapError : public Error {
public:
    using Error::Error;
};

/// Parse errors carry a 1-based source position. CLI exit code 2.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg, std::string token = {})
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": " + msg + (token.empty() ? "" : " (near '" + token + "')")),
          line_(line), column_(column), message_(msg), token_(std::move(token)) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }
    const std::string& token() const { return token_; }

private:
    int line_;
    int column_;
    std::string message_;
    std::string token_;
};

/// Resource caps for the exponential enumeration steps. All values are
/// deliberate guards for a desk-scale tool: blow-ups fail loudly.
struct Limits {
    std::size_t max_interval_atoms = 24;   // free atoms in an interval enumeration
    std::size_t max_dom_atoms      = 20;   // choice-atom domain for extensionalization
    std::size_t max_sweep_atoms    = 12;   // signature size for exhaustive pair sweeps
    std::size_t max_states         = 1u << 20;  // visited sets in reachability searches
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

} // namespace choral

#endif
