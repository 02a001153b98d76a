#include "staircase/ideal_file.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace staircase {

parse_error::parse_error(const std::string& msg, int line_, int col_)
    : malformed_input("line " + std::to_string(line_) + ", col " +
                      std::to_string(col_) + ": " + msg),
      line(line_),
      col(col_) {}

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct LineScanner {
  const std::string& text;
  int line;
  int pos = 0;  // 0-based within the line

  int col() const { return pos + 1; }
  bool done() const { return pos >= static_cast<int>(text.size()); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  [[noreturn]] void err(const std::string& msg) const { throw parse_error(msg, line, col()); }

  std::string name() {
    skip_ws();
    if (done() || !name_start(peek())) err("expected a variable name");
    int start = pos;
    while (!done() && name_char(peek())) ++pos;
    return text.substr(start, pos - start);
  }

  Exponent positive_int() {
    skip_ws();
    int start = pos;
    bool neg = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("expected an exponent", line, start + 1);
    Exponent v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000000) throw parse_error("exponent too large", line, start + 1);
      ++pos;
    }
    if (neg || v == 0)
      throw parse_error("exponent must be a positive integer", line, start + 1);
    return v;
  }
};

ExponentVector parse_monomial(LineScanner& sc, const std::map<std::string, int>& vars) {
  std::vector<Exponent> exps(vars.size(), 0);
  while (true) {
    sc.skip_ws();
    int name_col = sc.col();
    std::string n = sc.name();
    auto it = vars.find(n);
    if (it == vars.end()) throw parse_error("unknown variable '" + n + "'", sc.line, name_col);
    Exponent e = 1;
    sc.skip_ws();
    if (!sc.done() && sc.peek() == '^') {
      ++sc.pos;
      e = sc.positive_int();
    }
    exps[it->second] += e;
    sc.skip_ws();
    if (!sc.done() && sc.peek() == '*') {
      ++sc.pos;
      continue;
    }
    break;
  }
  return ExponentVector(std::move(exps));
}

std::vector<ExponentVector> parse_monomial_list(LineScanner& sc,
                                                const std::map<std::string, int>& vars) {
  std::vector<ExponentVector> out;
  while (true) {
    out.push_back(parse_monomial(sc, vars));
    sc.skip_ws();
    if (!sc.done() && sc.peek() == ',') {
      ++sc.pos;
      continue;
    }
    if (!sc.done()) sc.err("unexpected trailing text");
    return out;
  }
}

}  // namespace

ParsedIdealFile parse_ideal_file(const std::string& text) {
  std::vector<std::string> names;
  std::map<std::string, int> var_index;
  bool seen_vars = false, seen_quotient = false, seen_ideal = false;
  std::vector<ExponentVector> quotient_gens, ideal_gens;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    LineScanner sc{line, line_no};
    sc.skip_ws();
    int key_col = sc.col();
    std::string key = sc.name();
    sc.skip_ws();
    if (sc.done() || sc.peek() != ':')
      throw parse_error("expected ':' after section name", line_no, sc.col());
    ++sc.pos;

    if (key == "vars") {
      if (seen_vars) throw parse_error("duplicate 'vars' section", line_no, key_col);
      seen_vars = true;
      sc.skip_ws();
      while (!sc.done()) {
        int name_col = sc.col();
        std::string n = sc.name();
        if (var_index.count(n))
          throw parse_error("duplicate variable '" + n + "'", line_no, name_col);
        var_index[n] = static_cast<int>(names.size());
        names.push_back(n);
        sc.skip_ws();
      }
      if (names.empty()) throw parse_error("'vars' lists no variables", line_no, key_col);
    } else if (key == "quotient") {
      if (!seen_vars) throw parse_error("'quotient' before 'vars'", line_no, key_col);
      if (seen_quotient) throw parse_error("duplicate 'quotient' section", line_no, key_col);
      seen_quotient = true;
      quotient_gens = parse_monomial_list(sc, var_index);
    } else if (key == "ideal") {
      if (!seen_vars) throw parse_error("'ideal' before 'vars'", line_no, key_col);
      if (seen_ideal) throw parse_error("duplicate 'ideal' section", line_no, key_col);
      seen_ideal = true;
      ideal_gens = parse_monomial_list(sc, var_index);
    } else {
      throw parse_error("unknown section '" + key + "'", line_no, key_col);
    }
  }
  if (!seen_vars) throw parse_error("missing 'vars' section", line_no + 1, 1);
  if (!seen_ideal) throw parse_error("missing 'ideal' section", line_no + 1, 1);

  ParsedIdealFile out;
  out.var_names = names;
  int nv = static_cast<int>(names.size());
  out.ring = make_ring(nv, make_ideal(nv, std::move(quotient_gens)));
  out.ideal = make_ideal(nv, std::move(ideal_gens));
  return out;
}

std::string format_monomial(const ExponentVector& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& a, const std::vector<std::string>& names) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.gens.size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(a.gens[i], names);
  }
  return out;
}

std::vector<std::string> default_var_names(int nvars) {
  static const char* base[] = {"x", "y", "z", "w", "u", "v"};
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i)
    names.push_back(i < 6 ? base[i] : "t" + std::to_string(i - 6));
  return names;
}

}  // namespace staircase
