#include "mhc/table_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mhc {

TableValidationError::TableValidationError(const std::string& source,
                                           std::vector<TableViolation> violations)
    : Error([&] {
          std::string msg = source + ": table rejected:";
          for (const auto& v : violations)
              msg += "\n  " + to_string(v);
          return msg;
      }()),
      violations_(std::move(violations)) {}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string field;
    while (in >> field)
        out.push_back(field);
    return out;
}

long long parse_int(const std::string& field, const std::string& source, int line,
                    const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw TableParseError(source, line, std::string("bad ") + what + " '" + field + "'");
    return value;
}

int parse_small_int(const std::string& field, const std::string& source, int line,
                    const char* what) {
    long long value = parse_int(field, source, line, what);
    if (value < -1'000'000'000 || value > 1'000'000'000)
        throw TableParseError(source, line, std::string(what) + " '" + field +
                                                "' out of supported range");
    return static_cast<int>(value);
}

bool valid_identifier(const std::string& name) {
    if (name.empty())
        return false;
    auto head = name[0];
    if (!((head >= 'a' && head <= 'z') || (head >= 'A' && head <= 'Z') || head == '_'))
        return false;
    for (char c : name)
        if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_'))
            return false;
    return true;
}

// "<a>:<b>=<m>[,<a>:<b>=<m>...]"
HodgeAtom::HodgeNumbers parse_hodge_numbers(const std::string& field, const std::string& source,
                                            int line) {
    HodgeAtom::HodgeNumbers numbers;
    size_t pos = 0;
    while (pos < field.size()) {
        size_t comma = field.find(',', pos);
        std::string entry = field.substr(pos, comma == std::string::npos ? comma : comma - pos);
        size_t colon = entry.find(':');
        size_t equals = entry.find('=');
        if (colon == std::string::npos || equals == std::string::npos || equals < colon)
            throw TableParseError(source, line,
                                  "bad hodge entry '" + entry + "', expected a:b=m");
        int a = parse_small_int(entry.substr(0, colon), source, line, "hodge index");
        int b = parse_small_int(entry.substr(colon + 1, equals - colon - 1), source, line,
                                "hodge index");
        long long mult = parse_int(entry.substr(equals + 1), source, line, "hodge multiplicity");
        if (a < 0 || b < 0)
            throw TableParseError(source, line, "hodge indices must be nonnegative in '" + entry +
                                                    "'");
        if (mult <= 0)
            throw TableParseError(source, line, "hodge multiplicity must be positive in '" +
                                                    entry + "'");
        if (numbers.count({a, b}))
            throw TableParseError(source, line, "duplicate hodge index in '" + field + "'");
        numbers[{a, b}] = mult;
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (numbers.empty())
        throw TableParseError(source, line, "empty hodge number list");
    return numbers;
}

}  // namespace

VarietyTable load_table(std::istream& in, const std::string& source,
                        std::vector<std::string>* warnings) {
    std::string line;
    int line_no = 0;
    auto next_fields = [&](std::vector<std::string>& fields) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            fields = split_fields(line);
            if (fields.empty() || fields[0][0] == '#')
                continue;
            return true;
        }
        return false;
    };

    std::vector<std::string> fields;
    if (!next_fields(fields))
        throw TableParseError(source, line_no, "empty file, expected 'variety <name> dim <d>'");
    if (fields.size() != 4 || fields[0] != "variety" || fields[2] != "dim")
        throw TableParseError(source, line_no, "expected 'variety <name> dim <d>'");
    const std::string& name = fields[1];
    if (!valid_identifier(name))
        throw TableParseError(source, line_no, "table name '" + name +
                                                   "' is not a valid identifier");
    int dim = parse_small_int(fields[3], source, line_no, "dimension");
    if (dim < 0)
        throw TableParseError(source, line_no, "dimension must be nonnegative");

    VarietyTable table(name, dim, Provenance::loaded);
    bool saw_end = false;
    while (next_fields(fields)) {
        if (fields[0] == "end") {
            if (fields.size() != 1)
                throw TableParseError(source, line_no, "unexpected fields after 'end'");
            saw_end = true;
            break;
        }
        if (fields[0] != "h")
            throw TableParseError(source, line_no, "expected 'h' row or 'end', got '" +
                                                       fields[0] + "'");
        if (fields.size() < 5)
            throw TableParseError(source, line_no, "truncated 'h' row");
        int degree = parse_small_int(fields[1], source, line_no, "degree");
        int step = parse_small_int(fields[2], source, line_no, "step");
        const std::string& kind = fields[3];
        if (kind == "tate") {
            if (fields.size() != 6)
                throw TableParseError(source, line_no,
                                      "expected 'h <i> <p> tate <k> <mult>'");
            int k = parse_small_int(fields[4], source, line_no, "tate power");
            long long mult = parse_int(fields[5], source, line_no, "multiplicity");
            if (mult <= 0)
                throw TableParseError(source, line_no, "multiplicity must be positive");
            table.add_entry(degree, step, HodgeAtom::tate(k), mult);
        } else if (kind == "atom") {
            if (fields.size() != 11 || fields[5] != "weight" || fields[7] != "hodge" ||
                fields[9] != "mult")
                throw TableParseError(
                    source, line_no,
                    "expected 'h <i> <p> atom <id> weight <w> hodge <a>:<b>=<m>[,...] mult <mult>'");
            const std::string& id = fields[4];
            if (!valid_identifier(id))
                throw TableParseError(source, line_no,
                                      "atom id '" + id + "' is not a valid identifier");
            int weight = parse_small_int(fields[6], source, line_no, "weight");
            if (weight < 0)
                throw TableParseError(source, line_no, "atom weight must be nonnegative");
            HodgeAtom::HodgeNumbers numbers = parse_hodge_numbers(fields[8], source, line_no);
            long long mult = parse_int(fields[10], source, line_no, "multiplicity");
            if (mult <= 0)
                throw TableParseError(source, line_no, "multiplicity must be positive");
            try {
                table.add_entry(degree, step, HodgeAtom::named(id, weight, std::move(numbers)),
                                mult);
            } catch (const InputError& e) {
                throw TableParseError(source, line_no, e.what());
            }
        } else {
            throw TableParseError(source, line_no, "unknown row kind '" + kind +
                                                       "', expected 'tate' or 'atom'");
        }
    }
    if (!saw_end)
        throw TableParseError(source, line_no, "missing 'end' line");
    while (next_fields(fields))
        throw TableParseError(source, line_no, "trailing content after 'end'");

    std::vector<TableViolation> hard;
    for (auto& violation : validate_table(table)) {
        if (violation.lint) {
            if (warnings != nullptr)
                warnings->push_back(source + ": " + to_string(violation));
        } else {
            hard.push_back(std::move(violation));
        }
    }
    if (!hard.empty())
        throw TableValidationError(source, std::move(hard));
    return table;
}

VarietyTable load_table_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open table file '" + path + "'");
    return load_table(in, path, warnings);
}

std::string dump_table(const VarietyTable& table) {
    std::ostringstream out;
    out << "variety " << table.name() << " dim " << table.dimension() << "\n";
    for (const auto& [key, cls] : table.cells()) {
        for (const auto& [atom, mult] : cls.terms()) {
            out << "h " << key.first << " " << key.second << " ";
            if (atom.is_tate()) {
                out << "tate " << atom.tate_power() << " " << mult << "\n";
            } else {
                if (!atom.simple())
                    throw InputError("cannot serialize composite tensor atom '" + atom.id() +
                                     "'");
                out << "atom " << atom.id() << " weight " << atom.weight() << " hodge ";
                bool first = true;
                for (const auto& [index, count] : atom.hodge_numbers()) {
                    if (!first)
                        out << ",";
                    first = false;
                    out << index.first << ":" << index.second << "=" << count;
                }
                out << " mult " << mult << "\n";
            }
        }
    }
    out << "end\n";
    return out.str();
}

}  // namespace mhc
