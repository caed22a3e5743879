// Minimal TOML subset for the CLI input files: [section] headers, `key =
// value` pairs, integers, double-quoted strings, and (nested) arrays.
// Comments start with '#'. Exactly what the documented input schema needs.
#ifndef HOPFCALC_TOMLMINI_HPP
#define HOPFCALC_TOMLMINI_HPP

#include "hopfcalc/numbers.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hopfcalc {
namespace tomlmini {

struct Value {
    enum class Kind { integer, string, array };
    Kind kind = Kind::integer;
    std::int64_t integer = 0;
    std::string str;
    std::vector<Value> items;

    bool is_integer() const { return kind == Kind::integer; }
    bool is_string() const { return kind == Kind::string; }
    bool is_array() const { return kind == Kind::array; }
};

struct Document {
    // section -> key -> value; top-level keys live under the empty section
    std::map<std::string, std::map<std::string, Value>> sections;

    const Value* find(const std::string& section, const std::string& key) const;
};

Document parse(const std::string& text); // throws ParseError with byte offset

} // namespace tomlmini
} // namespace hopfcalc

#endif
