#ifndef KUMMER_CLI_CONFIG_HPP
#define KUMMER_CLI_CONFIG_HPP

#include <cctype>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kummer/errors.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"

namespace kummer::cli {

using exact::BigInt;
using exact::Rational;
using exact::UniPolyQ;

/// A scalar or a flat list, kept as text until a typed getter reads it.
struct ConfigValue {
    bool is_list = false;
    std::vector<std::string> items;  // one item for scalars
};

/// Flat key/value configuration. Numbers never pass through floating point.
class Config {
public:
    void set(const std::string& key, ConfigValue v) {
        if (!entries_.emplace(key, std::move(v)).second) throw InputError("duplicate key '" + key + "'");
    }
    bool has(const std::string& key) const { return entries_.count(key) != 0; }
    const std::map<std::string, ConfigValue>& entries() const { return entries_; }

    void require_known(const std::set<std::string>& allowed) const {
        for (const auto& [k, v] : entries_)
            if (!allowed.count(k)) throw InputError("unknown key '" + k + "'");
    }

    const ConfigValue& value(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) throw InputError("missing key '" + key + "'");
        return it->second;
    }

    std::string scalar(const std::string& key) const {
        const auto& v = value(key);
        if (v.is_list) throw InputError("key '" + key + "' expects a single value, got a list");
        return v.items[0];
    }

    std::uint64_t uint(const std::string& key) const;
    std::uint64_t uint_or(const std::string& key, std::uint64_t def) const { return has(key) ? uint(key) : def; }
    bool boolean(const std::string& key) const;
    std::vector<std::uint64_t> uint_list(const std::string& key) const;
    UniPolyQ poly(const std::string& key) const;

private:
    std::map<std::string, ConfigValue> entries_;
};

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

inline std::string unquote(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') || (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

inline BigInt parse_integer(const std::string& text) {
    std::string s = trim(text);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw InputError("expected an integer, got '" + text + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw InputError("expected an integer, got '" + text + "'");
    BigInt n(s.substr(i));
    return s[0] == '-' ? BigInt(-n) : n;
}

/// "a" or "a/b" with b nonzero.
inline Rational parse_rational(const std::string& text) {
    std::string s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    BigInt den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(parse_integer(s.substr(0, slash)), den);
}

/// Sums of terms c, c*x, c x^k, x^k with c an integer or a/b; the variable is x, t or theta.
inline UniPolyQ parse_poly_expression(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InputError("empty polynomial");
    std::vector<Rational> c;
    auto add = [&c](int k, const Rational& a) {
        if (static_cast<int>(c.size()) <= k) c.resize(static_cast<std::size_t>(k) + 1);
        c[static_cast<std::size_t>(k)] += a;
    };
    std::size_t i = 0;
    auto fail = [&text](const std::string& why) { throw InputError("cannot parse polynomial '" + text + "': " + why); };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail("expected + or -");
        }
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        Rational coef = 1;
        bool have_coef = j > i;
        if (have_coef) coef = parse_rational(s.substr(i, j - i));
        i = j;
        bool star = false;
        if (have_coef && i < s.size() && s[i] == '*') {
            star = true;
            ++i;
        }
        int k = 0;
        bool have_var = false;
        for (const char* v : {"theta", "x", "t"}) {
            std::string name(v);
            if (s.compare(i, name.size(), name) == 0) {
                have_var = true;
                i += name.size();
                break;
            }
        }
        if (have_var) {
            k = 1;
            if (i < s.size() && s[i] == '^') {
                std::size_t e = ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (e == i) fail("missing exponent");
                if (i - e > 3) fail("exponent too large");
                k = std::stoi(s.substr(e, i - e));
            }
        } else if (!have_coef) {
            fail("empty term");
        } else if (star) {
            fail("dangling *");
        }
        add(k, coef * sign);
    }
    return UniPolyQ(std::move(c));
}

inline std::uint64_t Config::uint(const std::string& key) const {
    BigInt n = parse_integer(scalar(key));
    if (n < 0 || n > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw InputError("key '" + key + "' must be a nonnegative 64-bit integer");
    return static_cast<std::uint64_t>(n);
}

inline bool Config::boolean(const std::string& key) const {
    std::string s = scalar(key);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw InputError("key '" + key + "' expects true or false");
}

inline std::vector<std::uint64_t> Config::uint_list(const std::string& key) const {
    const auto& v = value(key);
    std::vector<std::uint64_t> out;
    for (const auto& s : v.items) {
        BigInt n = parse_integer(s);
        if (n < 0 || n > BigInt(std::numeric_limits<std::uint64_t>::max()))
            throw InputError("key '" + key + "' holds an out-of-range entry '" + s + "'");
        out.push_back(static_cast<std::uint64_t>(n));
    }
    return out;
}

/// A list is read as ascending coefficients; a scalar as an expression.
inline UniPolyQ Config::poly(const std::string& key) const {
    const auto& v = value(key);
    if (!v.is_list) return parse_poly_expression(v.items[0]);
    std::vector<Rational> c;
    for (const auto& s : v.items) c.push_back(parse_rational(s));
    return UniPolyQ(std::move(c));
}

inline ConfigValue parse_text_value(const std::string& raw) {
    std::string s = trim(raw);
    ConfigValue v;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw InputError("unterminated list '" + s + "'");
        v.is_list = true;
        std::string body = trim(s.substr(1, s.size() - 2));
        if (body.empty()) return v;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = unquote(trim(item));
            if (item.empty()) throw InputError("empty list entry in '" + s + "'");
            v.items.push_back(item);
        }
        return v;
    }
    v.items.push_back(unquote(s));
    return v;
}

/// Lines "key = value"; '#' starts a comment.
inline Config parse_key_value(const std::string& text) {
    Config cfg;
    std::stringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw InputError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw InputError("line " + std::to_string(lineno) + ": empty key");
        cfg.set(key, parse_text_value(line.substr(eq + 1)));
    }
    return cfg;
}

inline std::string json_scalar(const nlohmann::ordered_json& j, const std::string& key) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return j.dump();
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    if (j.is_number_float())
        throw InputError("key '" + key + "': floating-point numbers are not accepted; write \"num/den\" as a string");
    throw InputError("key '" + key + "': unsupported value " + j.dump());
}

/// A JSON object whose values are scalars or flat arrays of scalars.
inline Config parse_json_config(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON config: ") + e.what());
    }
    if (!j.is_object()) throw InputError("JSON config must be an object");
    Config cfg;
    for (const auto& [k, v] : j.items()) {
        ConfigValue cv;
        if (v.is_array()) {
            cv.is_list = true;
            for (const auto& x : v) cv.items.push_back(json_scalar(x, k));
        } else {
            cv.items.push_back(json_scalar(v, k));
        }
        cfg.set(k, cv);
    }
    return cfg;
}

inline Config parse_config(const std::string& text) {
    std::string t = trim(text);
    if (!t.empty() && t.front() == '{') return parse_json_config(t);
    return parse_key_value(text);
}

inline Config load_config(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot read config file '" + path + "'");
        buf << in.rdbuf();
    }
    return parse_config(buf.str());
}

}  // namespace kummer::cli

#endif
