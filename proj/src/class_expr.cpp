#include "fatpoints/class_expr.hpp"

#include <cctype>
#include <sstream>

namespace fatpoints {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Int parse_int(const std::string& s) {
  if (!is_integer_token(s))
    throw std::invalid_argument("expected an integer, got '" + s + "'");
  return Int(s);
}

// Cursor over the exponent-notation string with whitespace skipping.
struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument(std::string("expected '") + c + "' in '" + s +
                                  "'");
  }
  Int integer() {
    skip();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(
                                             s[start]))))
      throw std::invalid_argument("expected an integer in '" + s + "'");
    return Int(s.substr(start, i - start));
  }
  bool done() {
    skip();
    return i == s.size();
  }
};

ParsedClass parse_exponent_notation(const std::string& s) {
  Cursor c{s};
  c.skip();
  if (c.i >= s.size() || (s[c.i] != 'L' && s[c.i] != 'l'))
    throw std::invalid_argument("exponent notation must start with 'L': '" + s +
                                "'");
  ++c.i;
  const Int dim = c.integer();
  if (dim < 2 || dim > 64)
    throw std::invalid_argument("ambient dimension out of range in '" + s + "'");
  ParsedClass out;
  out.notation_dim = dim.convert_to<int>();
  c.expect('(');
  out.degree = c.integer();
  if (c.eat(';')) {
    c.skip();
    if (c.i < s.size() && s[c.i] != ')') {
      for (;;) {
        const Int m = c.integer();
        Int count = 1;
        if (c.eat('^')) {
          count = c.integer();
          if (count < 1)
            throw std::invalid_argument("exponent must be >= 1 in '" + s + "'");
        }
        for (Int k = 0; k < count; ++k) out.mults.push_back(m);
        if (!c.eat(',')) break;
      }
    }
  }
  c.expect(')');
  if (!c.done())
    throw std::invalid_argument("trailing characters in '" + s + "'");
  return out;
}

}  // namespace

ParsedClass parse_class_tokens(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw std::invalid_argument("missing class");
  if (tokens.size() == 1 && tokens[0].find('(') != std::string::npos)
    return parse_exponent_notation(tokens[0]);
  ParsedClass out;
  out.degree = parse_int(tokens[0]);
  for (std::size_t i = 1; i < tokens.size(); ++i)
    out.mults.push_back(parse_int(tokens[i]));
  return out;
}

std::string format_plain(const DivisorClass& c) {
  std::ostringstream os;
  os << c.degree();
  for (const Int& m : c.mults()) os << ' ' << m;
  return os.str();
}

std::string format_exponent(const DivisorClass& c) {
  std::ostringstream os;
  os << 'L' << c.ambient_dim() << '(' << c.degree();
  const auto& m = c.mults();
  if (!m.empty()) {
    os << ';';
    std::size_t i = 0;
    while (i < m.size()) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (i) os << ',';
      os << m[i];
      if (j - i > 1) os << '^' << (j - i);
      i = j;
    }
  }
  os << ')';
  return os.str();
}

}  // namespace fatpoints
