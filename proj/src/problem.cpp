#include "multlab/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <variant>

namespace multlab {

namespace {

using Value = std::variant<std::string, std::int64_t, std::vector<std::string>,
                           std::vector<std::int64_t>>;

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw InputError("problem file line " + std::to_string(line) + ": " + message);
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

/// Drops a trailing comment; '#' inside strings is kept.
std::string strip_comment(std::string_view s) {
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (in_string && s[i] == '\\') {
      ++i;
    } else if (s[i] == '"') {
      in_string = !in_string;
    } else if (s[i] == '#' && !in_string) {
      return std::string(s.substr(0, i));
    }
  }
  return std::string(s);
}

int bracket_balance(std::string_view s) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (in_string && s[i] == '\\') {
      ++i;
    } else if (s[i] == '"') {
      in_string = !in_string;
    } else if (!in_string && s[i] == '[') {
      ++depth;
    } else if (!in_string && s[i] == ']') {
      --depth;
    }
  }
  return depth;
}

class ValueParser {
 public:
  ValueParser(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  Value parse() {
    skip();
    Value v = at('[') ? array() : scalar();
    skip();
    if (pos_ != s_.size()) fail(line_, "unexpected text after value: '" + std::string(s_.substr(pos_)) + "'");
    return v;
  }

 private:
  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Value scalar() {
    if (at('"')) return string();
    return integer();
  }

  std::string string() {
    ++pos_;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\') {
        if (++pos_ == s_.size()) break;
        const char c = s_[pos_];
        if (c == 'n') {
          out += '\n';
        } else if (c == 't') {
          out += '\t';
        } else if (c == '"' || c == '\\') {
          out += c;
        } else {
          fail(line_, std::string("unsupported escape \\") + c);
        }
      } else {
        out += s_[pos_];
      }
      ++pos_;
    }
    if (!at('"')) fail(line_, "unterminated string");
    ++pos_;
    return out;
  }

  std::int64_t integer() {
    std::size_t end = pos_;
    if (end < s_.size() && (s_[end] == '-' || s_[end] == '+')) ++end;
    while (end < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
    std::string digits;
    for (std::size_t i = pos_; i < end; ++i)
      if (s_[i] != '_' && s_[i] != '+') digits += s_[i];
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size()) {
      fail(line_, "expected a string, an integer or an array at '" + std::string(s_.substr(pos_)) + "'");
    }
    pos_ = end;
    return v;
  }

  Value array() {
    ++pos_;
    std::vector<std::string> strings;
    std::vector<std::int64_t> ints;
    for (;;) {
      skip();
      if (at(']')) break;
      if (at('"')) {
        if (!ints.empty()) fail(line_, "arrays must not mix strings and integers");
        strings.push_back(string());
      } else {
        if (!strings.empty()) fail(line_, "arrays must not mix strings and integers");
        ints.push_back(integer());
      }
      skip();
      if (at(',')) {
        ++pos_;
        continue;
      }
      if (!at(']')) fail(line_, "expected ',' or ']' in array");
    }
    ++pos_;
    if (!ints.empty()) return ints;
    return strings;
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::vector<std::string> as_strings(const Value& v, const std::string& key, std::size_t line) {
  if (const auto* s = std::get_if<std::vector<std::string>>(&v)) return *s;
  if (const auto* i = std::get_if<std::vector<std::int64_t>>(&v); i && i->empty()) return {};
  fail(line, key + " must be an array of strings");
}

std::vector<std::uint32_t> as_counts(const Value& v, const std::string& key, std::size_t line) {
  std::vector<std::uint32_t> out;
  if (const auto* s = std::get_if<std::vector<std::string>>(&v); s && s->empty()) return out;
  const auto* i = std::get_if<std::vector<std::int64_t>>(&v);
  if (i == nullptr) fail(line, key + " must be an array of integers");
  for (auto x : *i) {
    if (x <= 0 || x > 65535) fail(line, key + " entries must lie in 1..65535");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

std::string as_string(const Value& v, const std::string& key, std::size_t line) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  fail(line, key + " must be a string");
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string string_array(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + quote(v[i]);
  return out + "]";
}

template <class T>
std::string int_array(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

}  // namespace

const std::vector<std::string>& known_options() {
  static const std::vector<std::string> keys = {
      "chi_scan",     "chi_window",      "colon_scan", "colon_window", "degree_bound",
      "dimension",    "hs_window",       "initial_ceiling", "koszul_order", "max_ambient",
      "n_ceiling",    "n_max",           "n_max_limit", "sop_ceiling",  "sop_window"};
  return keys;
}

RingSpec ProblemFile::ring() const {
  if (ring_kind == "poly-local") {
    if (!exponents.empty()) throw InputError("ring.exponents is only allowed for monomial-curve");
    return RingSpec::poly_local(vars);
  }
  if (ring_kind == "monomial-curve") {
    if (!vars.empty()) throw InputError("ring.vars is only allowed for poly-local");
    return RingSpec::monomial_curve(exponents);
  }
  throw InputError("ring.kind must be \"poly-local\" or \"monomial-curve\", got \"" + ring_kind + "\"");
}

std::int64_t ProblemFile::option(const std::string& key, std::int64_t fallback, std::int64_t lo,
                                 std::int64_t hi) const {
  auto it = options.find(key);
  if (it == options.end()) return fallback;
  if (it->second < lo || it->second > hi) {
    throw InputError("options." + key + " = " + std::to_string(it->second) + " is outside [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return it->second;
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile p;
  bool has_kind = false;
  std::map<std::string, std::size_t> seen;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "malformed section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (section != "ring" && section != "module" && section != "options") {
        fail(line_no, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    const std::size_t start_line = line_no;
    while (bracket_balance(value) > 0 && std::getline(in, raw)) {
      ++line_no;
      value += " " + trim(strip_comment(raw));
    }
    if (bracket_balance(value) != 0) fail(start_line, "unbalanced brackets");
    if (key.empty()) fail(start_line, "missing key");
    const std::string full = section.empty() ? key : section + "." + key;
    if (seen.count(full)) {
      fail(start_line, "duplicate key " + full + " (first on line " + std::to_string(seen[full]) + ")");
    }
    seen[full] = start_line;
    const Value v = ValueParser(value, start_line).parse();

    if (full == "ring.kind") {
      p.ring_kind = as_string(v, full, start_line);
      has_kind = true;
    } else if (full == "ring.vars") {
      p.vars = as_strings(v, full, start_line);
    } else if (full == "ring.exponents") {
      p.exponents = as_counts(v, full, start_line);
    } else if (full == "module.annihilator") {
      p.annihilator = as_strings(v, full, start_line);
    } else if (full == "field") {
      p.field = as_string(v, full, start_line);
      parse_field(p.field);
    } else if (full == "q") {
      p.q = as_strings(v, full, start_line);
    } else if (full == "a") {
      p.a = as_strings(v, full, start_line);
    } else if (full == "factor") {
      p.factor = as_strings(v, full, start_line);
      if (p.factor.size() != 2) fail(start_line, "factor must have exactly two entries");
    } else if (full == "powers") {
      p.powers = as_counts(v, full, start_line);
    } else if (full.rfind("options.", 0) == 0) {
      const std::string name = full.substr(8);
      const auto& keys = known_options();
      if (std::find(keys.begin(), keys.end(), name) == keys.end()) {
        fail(start_line, "unknown option " + name);
      }
      const auto* i = std::get_if<std::int64_t>(&v);
      if (i == nullptr) fail(start_line, full + " must be an integer");
      p.options[name] = *i;
    } else {
      fail(start_line, "unknown key " + full);
    }
  }
  if (!has_kind) throw InputError("problem file: ring.kind is required");
  p.ring();  // validates the ring now so errors point at the file
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read problem file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string to_text(const ProblemFile& p) {
  std::ostringstream out;
  out << "field = " << quote(p.field) << "\n";
  out << "q = " << string_array(p.q) << "\n";
  out << "a = " << string_array(p.a) << "\n";
  if (!p.factor.empty()) out << "factor = " << string_array(p.factor) << "\n";
  if (!p.powers.empty()) out << "powers = " << int_array(p.powers) << "\n";
  out << "\n[ring]\nkind = " << quote(p.ring_kind) << "\n";
  if (p.ring_kind == "monomial-curve") {
    out << "exponents = " << int_array(p.exponents) << "\n";
  } else {
    out << "vars = " << string_array(p.vars) << "\n";
  }
  out << "\n[module]\nannihilator = " << string_array(p.annihilator) << "\n";
  if (!p.options.empty()) {
    out << "\n[options]\n";
    for (const auto& [k, v] : p.options) out << k << " = " << v << "\n";
  }
  return out.str();
}

Limits limits_of(const ProblemFile& p) {
  Limits l;
  l.n_ceiling = static_cast<std::uint32_t>(p.option("n_ceiling", l.n_ceiling, 2, 4096));
  l.max_ambient = static_cast<std::size_t>(p.option("max_ambient", static_cast<std::int64_t>(l.max_ambient),
                                                    16, 200000));
  return l;
}

HilbertOptions hilbert_options_of(const ProblemFile& p) {
  HilbertOptions h;
  h.n_max = static_cast<std::uint32_t>(p.option("n_max", h.n_max, 1, 4096));
  h.n_max_limit = static_cast<std::uint32_t>(
      p.option("n_max_limit", std::max<std::int64_t>(h.n_max_limit, h.n_max), h.n_max, 4096));
  h.window = static_cast<std::uint32_t>(p.option("hs_window", h.window, 1, 64));
  if (p.options.count("dimension")) {
    h.dimension = static_cast<std::uint32_t>(p.option("dimension", 0, 0, 64));
  }
  return h;
}

}  // namespace multlab
