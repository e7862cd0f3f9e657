#ifndef MHC_TABLE_IO_HPP
#define MHC_TABLE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mhc/variety.hpp"

namespace mhc {

/// Malformed table file; message carries "<source>:<line>".
class TableParseError : public Error {
public:
    TableParseError(const std::string& source, int line, const std::string& msg)
        : Error(source + ":" + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Well-formed file whose table breaks a hard invariant; one entry per
/// offending cell and rule.
class TableValidationError : public Error {
public:
    TableValidationError(const std::string& source, std::vector<TableViolation> violations);
    const std::vector<TableViolation>& violations() const { return violations_; }

private:
    std::vector<TableViolation> violations_;
};

/// Reads one table record:
///
///   variety <name> dim <d>
///   h <i> <p> tate <k> <mult>
///   h <i> <p> atom <id> weight <w> hodge <a>:<b>=<m>[,...] mult <mult>
///   end
///
/// '#' starts a comment line; fields are whitespace-separated; one record
/// per file. The loaded table is validated: hard violations reject the file,
/// lints are appended to `warnings` when given.
VarietyTable load_table(std::istream& in, const std::string& source,
                        std::vector<std::string>* warnings = nullptr);

VarietyTable load_table_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// Inverse of load_table on tables whose atoms are all declared (simple).
/// Composite tensor pseudo-atoms have no file syntax and are rejected.
std::string dump_table(const VarietyTable& table);

}  // namespace mhc

#endif
