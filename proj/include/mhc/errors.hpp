#ifndef MHC_ERRORS_HPP
#define MHC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mhc {

/// Base class for all recoverable input errors; the CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad argument to a library-level constructor or operation.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

struct SourceLoc {
    int line = 1;
    int column = 1;
    bool operator==(const SourceLoc&) const = default;
};

inline std::string loc_prefix(SourceLoc loc) {
    return std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

/// Syntax error in the expression DSL; message carries the expected-token set.
class ParseError : public Error {
public:
    ParseError(SourceLoc loc, const std::string& msg)
        : Error(loc_prefix(loc) + ": " + msg), loc_(loc) {}
    SourceLoc loc() const { return loc_; }

private:
    SourceLoc loc_;
};

/// Post-parse constraint violation (arity, dimensions, unresolved names).
class SemanticError : public Error {
public:
    SemanticError(SourceLoc loc, const std::string& msg)
        : Error(loc_prefix(loc) + ": " + msg), loc_(loc) {}
    SourceLoc loc() const { return loc_; }

private:
    SourceLoc loc_;
};

}  // namespace mhc

#endif
