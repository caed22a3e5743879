#include "hopfcalc/tomlmini.hpp"

#include <cctype>

namespace hopfcalc {
namespace tomlmini {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos, msg); }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool done() const { return pos >= text.size(); }

    void skip_inline_ws() {
        while (!done() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    }
    void skip_ws_and_comments() {
        for (;;) {
            skip_inline_ws();
            if (peek() == '#') {
                while (!done() && text[pos] != '\n')
                    ++pos;
            } else if (peek() == '\n' || peek() == '\r') {
                ++pos;
            } else {
                return;
            }
        }
    }

    std::string parse_key() {
        std::size_t start = pos;
        while (!done() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                           text[pos] == '_' || text[pos] == '-'))
            ++pos;
        if (pos == start)
            fail("expected a key");
        return text.substr(start, pos - start);
    }

    Value parse_value() {
        skip_inline_ws();
        char c = peek();
        if (c == '"') {
            ++pos;
            Value v;
            v.kind = Value::Kind::string;
            while (!done() && text[pos] != '"') {
                if (text[pos] == '\\' && pos + 1 < text.size()) {
                    ++pos;
                    char e = text[pos];
                    v.str += e == 'n' ? '\n' : e == 't' ? '\t' : e;
                } else {
                    v.str += text[pos];
                }
                ++pos;
            }
            if (done())
                fail("unterminated string");
            ++pos;
            return v;
        }
        if (c == '[') {
            ++pos;
            Value v;
            v.kind = Value::Kind::array;
            skip_ws_and_comments();
            if (peek() == ']') {
                ++pos;
                return v;
            }
            for (;;) {
                v.items.push_back(parse_value());
                skip_ws_and_comments();
                if (peek() == ',') {
                    ++pos;
                    skip_ws_and_comments();
                    if (peek() == ']') { // trailing comma
                        ++pos;
                        return v;
                    }
                    continue;
                }
                if (peek() == ']') {
                    ++pos;
                    return v;
                }
                fail("expected ',' or ']' in array");
            }
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            if (c == '-')
                ++pos;
            while (!done() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == start || (text[start] == '-' && pos == start + 1))
                fail("expected an integer");
            Value v;
            v.kind = Value::Kind::integer;
            v.integer = std::stoll(text.substr(start, pos - start));
            return v;
        }
        fail("expected a value (integer, string or array)");
    }
};

} // namespace

const Value* Document::find(const std::string& section, const std::string& key) const {
    auto s = sections.find(section);
    if (s == sections.end())
        return nullptr;
    auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
}

Document parse(const std::string& text) {
    Document doc;
    Cursor cur{text};
    std::string section;
    for (;;) {
        cur.skip_ws_and_comments();
        if (cur.done())
            return doc;
        if (cur.peek() == '[') {
            ++cur.pos;
            cur.skip_inline_ws();
            section = cur.parse_key();
            cur.skip_inline_ws();
            if (cur.peek() != ']')
                cur.fail("expected ']' after section name");
            ++cur.pos;
            continue;
        }
        std::string key = cur.parse_key();
        cur.skip_inline_ws();
        if (cur.peek() != '=')
            cur.fail("expected '=' after key");
        ++cur.pos;
        Value v = cur.parse_value();
        if (!doc.sections[section].emplace(key, std::move(v)).second)
            cur.fail("duplicate key '" + key + "'");
    }
}

} // namespace tomlmini
} // namespace hopfcalc
