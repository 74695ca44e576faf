#include "job.hpp"

#include <cctype>
#include <set>

#include "qci/error.hpp"

namespace qci::cli {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : s_(text) {}

  bool done() const { return i_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }
  int line() const { return line_; }
  int column() const { return col_; }

  char get() {
    const char c = s_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  // Skips blanks; newlines too when `newlines` is set.
  void skip_space(bool newlines = true) {
    while (!done()) {
      const char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') get();
      } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        get();
      } else {
        break;
      }
    }
  }

  void expect(char c, const char* context) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "' " + context + (done() ? ", got end of input" : ""));
    get();
  }

  std::string identifier() {
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected an identifier");
    std::string out;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) out += get();
    return out;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

std::string trim_right(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

// "x12" -> ("x", 12); no trailing digits -> nullopt.
std::optional<std::pair<std::string, long>> split_index(const std::string& id) {
  std::size_t k = id.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(id[k - 1]))) --k;
  if (k == id.size() || k == 0 || id.size() - k > 6) return std::nullopt;
  return std::make_pair(id.substr(0, k), std::stol(id.substr(k)));
}

std::vector<std::string> parse_variables(Scanner& sc) {
  sc.expect('[', "after the field");
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& v, int line, int col) {
    if (!seen.insert(v).second) throw ParseError("variable '" + v + "' declared twice", line, col);
    out.push_back(v);
  };
  sc.skip_space();
  if (sc.peek() == ']') sc.fail("a ring needs at least one variable");
  while (true) {
    sc.skip_space();
    const int line = sc.line(), col = sc.column();
    const std::string first = sc.identifier();
    sc.skip_space();
    if (sc.peek() == '.') {
      sc.get();
      if (sc.peek() != '.') sc.fail("expected '..' in a variable range");
      sc.get();
      sc.skip_space();
      const int l2 = sc.line(), c2 = sc.column();
      const std::string last = sc.identifier();
      const auto a = split_index(first), b = split_index(last);
      if (!a) throw ParseError("range start '" + first + "' has no numeric suffix", line, col);
      if (!b || b->first != a->first) throw ParseError("range end '" + last + "' does not match '" + first + "'", l2, c2);
      if (b->second < a->second) throw ParseError("empty variable range " + first + ".." + last, l2, c2);
      for (long i = a->second; i <= b->second; ++i) add(a->first + std::to_string(i), line, col);
    } else {
      add(first, line, col);
    }
    sc.skip_space();
    if (sc.peek() == ',') {
      sc.get();
      continue;
    }
    sc.expect(']', "to close the variable list");
    return out;
  }
}

// Comma separated items up to the matching ')'. The '(' is already consumed.
std::vector<Located> parse_list(Scanner& sc) {
  std::vector<Located> out;
  Located cur;
  bool started = false;
  int depth = 0;
  auto flush = [&](bool closing) {
    cur.text = trim_right(cur.text);
    if (cur.text.empty()) {
      if (closing && out.empty()) return;
      sc.fail("empty polynomial in list");
    }
    out.push_back(cur);
    cur = {};
    started = false;
  };
  while (true) {
    if (!started) sc.skip_space();
    if (sc.done()) sc.fail("unterminated list, expected ')'");
    const char c = sc.peek();
    if (depth == 0 && (c == ',' || c == ')')) {
      flush(c == ')');
      sc.get();
      if (c == ')') return out;
      continue;
    }
    if (c == '#') {
      sc.skip_space();
      continue;
    }
    if (!started) {
      cur.line = sc.line();
      cur.column = sc.column();
      started = true;
    }
    if (c == '(') ++depth;
    if (c == ')') --depth;
    cur.text += sc.get();
  }
}

}  // namespace

void parse_input(std::string_view text, JobSpec& job) {
  Scanner sc(text);
  while (true) {
    while (true) {
      sc.skip_space();
      if (sc.peek() != ';') break;
      sc.get();
    }
    if (sc.done()) return;
    const int line = sc.line(), col = sc.column();
    const std::string keyword = sc.identifier();
    if (keyword == "ring") {
      if (job.ring) throw ParseError("second ring statement", line, col);
      RingSpec r;
      sc.skip_space();
      r.field.line = sc.line();
      r.field.column = sc.column();
      r.field.text = sc.identifier();
      r.variables = parse_variables(sc);
      sc.skip_space(false);
      if (sc.peek() == '/') {
        sc.get();
        sc.expect('(', "after '/'");
        r.relations = parse_list(sc);
      }
      job.ring = std::move(r);
    } else if (keyword == "ideal") {
      if (job.ideal) throw ParseError("second ideal statement", line, col);
      sc.expect('(', "after 'ideal'");
      job.ideal = parse_list(sc);
    } else if (keyword == "element") {
      sc.skip_space(false);
      Located e{"", sc.line(), sc.column()};
      while (!sc.done() && sc.peek() != '\n' && sc.peek() != ';' && sc.peek() != '#') e.text += sc.get();
      e.text = trim_right(e.text);
      if (e.text.empty()) sc.fail("expected a polynomial after 'element'");
      job.elements.push_back(std::move(e));
    } else {
      throw ParseError("unknown statement '" + keyword + "', expected ring, ideal or element", line, col);
    }
    sc.skip_space(false);
    if (!sc.done() && sc.peek() != '\n' && sc.peek() != ';') sc.fail("unexpected text after statement");
  }
}

}  // namespace qci::cli
