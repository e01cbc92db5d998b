#ifndef SELFSIM_PARSER_HPP
#define SELFSIM_PARSER_HPP

// Reader for the line-oriented presentation format:
//
//   degree: 2
//   involutions: a, b, c, d
//   gen a = perm (1 2) | e, e
//   gen b = perm () | a, c
//
// '#' starts a comment. Section words may reference generators declared on
// later lines.

#include <cctype>
#include <cstddef>
#include <istream>
#include <iterator>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"

namespace selfsim {

namespace detail {

using Code = ParseError::Code;

struct RawToken {
  std::string name;
  bool inverse = false;
  std::size_t line = 0, column = 0;
};

struct RawRule {
  std::string name;
  std::size_t line = 0, column = 0;
  Perm root_perm;
  std::vector<std::vector<RawToken>> sections;
};

class LineCursor {
public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string &what, Code code = Code::syntax) const {
    throw ParseError(code, line_, pos_ + 1, what);
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return pos_ + 1; }
  bool at_end() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  /// Requires at least one blank.
  void expect_space() {
    if (at_end() || (text_[pos_] != ' ' && text_[pos_] != '\t'))
      fail("expected a space");
    skip_space();
  }

  void expect(std::string_view literal) {
    if (text_.substr(pos_, literal.size()) != literal)
      fail("expected '" + std::string(literal) + "'");
    pos_ += literal.size();
  }

  bool accept(char ch) {
    if (peek() != ch)
      return false;
    ++pos_;
    return true;
  }

  std::string name() {
    if (at_end() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("expected a generator name");
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000)
        fail("integer too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  void expect_end() {
    skip_space();
    if (!at_end())
      fail("unexpected trailing text");
  }

private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
    line.remove_suffix(1);
  return line;
}

inline Perm parse_cycles(LineCursor &cur, int degree) {
  Perm perm = identity_perm(static_cast<std::size_t>(degree));
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  if (cur.peek() != '(')
    cur.fail("expected '(' starting a cycle");
  bool first = true;
  while (cur.peek() == '(') {
    const std::size_t col = cur.column();
    cur.expect("(");
    if (cur.accept(')')) {
      if (!first || cur.peek() == '(')
        cur.fail("the empty cycle '()' must stand alone");
      return perm;
    }
    first = false;
    std::vector<int> cycle;
    for (;;) {
      const std::size_t at = cur.column();
      const int point = cur.integer();
      if (point < 1 || point > degree)
        throw ParseError(Code::syntax, cur.line(), at,
                         "point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      if (used[static_cast<std::size_t>(point - 1)])
        throw ParseError(Code::syntax, cur.line(), at,
                         "point " + std::to_string(point) + " appears twice in the permutation");
      used[static_cast<std::size_t>(point - 1)] = true;
      cycle.push_back(point - 1);
      if (cur.accept(')'))
        break;
      cur.expect_space();
      if (cur.peek() == ')') {
        cur.accept(')');
        break;
      }
    }
    if (cycle.size() < 2)
      throw ParseError(Code::syntax, cur.line(), col, "a cycle needs at least two points");
    for (std::size_t k = 0; k < cycle.size(); ++k)
      perm[static_cast<std::size_t>(cycle[k])] = static_cast<std::uint32_t>(cycle[(k + 1) % cycle.size()]);
  }
  return perm;
}

inline std::vector<RawToken> parse_word_tokens(LineCursor &cur) {
  std::vector<RawToken> tokens;
  cur.skip_space();
  if (cur.peek() == 'e') {
    // "e" alone is the identity; otherwise it is the first letter of a name.
    const std::size_t col = cur.column();
    std::string n = cur.name();
    if (n == "e")
      return tokens;
    RawToken t{n, false, cur.line(), col};
    if (cur.peek() == '^') {
      cur.expect("^-1");
      t.inverse = true;
    }
    tokens.push_back(t);
  }
  for (;;) {
    cur.skip_space();
    if (cur.at_end() || cur.peek() == ',')
      break;
    RawToken t{"", false, cur.line(), cur.column()};
    t.name = cur.name();
    if (t.name == "e")
      cur.fail("'e' must stand alone as the empty word");
    if (cur.peek() == '^') {
      cur.expect("^-1");
      t.inverse = true;
    }
    tokens.push_back(t);
  }
  if (tokens.empty())
    cur.fail("expected a word");
  return tokens;
}

} // namespace detail

/// Parses a presentation; every deviation from the grammar is a ParseError.
inline WreathPresentation parse_presentation(std::string_view text) {
  using detail::Code;
  using detail::LineCursor;

  int degree = 0;
  bool have_header = false;
  bool have_involutions = false;
  std::vector<detail::RawToken> involution_names;
  std::vector<detail::RawRule> raw_rules;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++line_no;
    const std::string_view line = detail::strip_comment(text.substr(start, end - start));
    start = end + 1;

    LineCursor cur(line, line_no);
    cur.skip_space();
    if (cur.at_end())
      continue;

    if (!have_header) {
      cur.expect("degree:");
      cur.expect_space();
      const std::size_t col = cur.column();
      degree = cur.integer();
      if (degree < 2 || degree > 9)
        throw ParseError(Code::degree_out_of_range, line_no, col,
                         "degree " + std::to_string(degree) + " outside [2,9]");
      cur.expect_end();
      have_header = true;
      continue;
    }

    if (line.substr(line.find_first_not_of(" \t")).starts_with("involutions:")) {
      if (have_involutions || !raw_rules.empty())
        cur.fail("the involutions line must directly follow the degree header");
      cur.expect("involutions:");
      cur.expect_space();
      for (;;) {
        detail::RawToken t{"", false, line_no, cur.column()};
        t.name = cur.name();
        involution_names.push_back(t);
        cur.skip_space();
        if (!cur.accept(','))
          break;
        cur.skip_space();
      }
      cur.expect_end();
      have_involutions = true;
      continue;
    }

    detail::RawRule rule;
    cur.expect("gen");
    cur.expect_space();
    rule.line = line_no;
    rule.column = cur.column();
    rule.name = cur.name();
    cur.skip_space();
    cur.expect("=");
    cur.skip_space();
    cur.expect("perm");
    cur.expect_space();
    rule.root_perm = detail::parse_cycles(cur, degree);
    cur.skip_space();
    cur.expect("|");
    for (;;) {
      rule.sections.push_back(detail::parse_word_tokens(cur));
      cur.skip_space();
      if (!cur.accept(','))
        break;
    }
    cur.expect_end();
    if (rule.sections.size() != static_cast<std::size_t>(degree))
      throw ParseError(Code::syntax, line_no, rule.column,
                       "generator '" + rule.name + "' has " + std::to_string(rule.sections.size()) +
                           " section words, expected " + std::to_string(degree));
    raw_rules.push_back(std::move(rule));
  }

  if (!have_header)
    throw ParseError(Code::syntax, 1, 1, "missing 'degree:' header");
  if (raw_rules.empty())
    throw ParseError(Code::syntax, line_no, 1, "no generator lines");

  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t g = 0; g < raw_rules.size(); ++g) {
    const auto &r = raw_rules[g];
    if (!index.emplace(r.name, g).second)
      throw ParseError(Code::duplicate_generator, r.line, r.column, "duplicate generator '" + r.name + "'");
  }
  auto resolve = [&](const detail::RawToken &t) {
    auto it = index.find(t.name);
    if (it == index.end())
      throw ParseError(Code::undeclared_generator, t.line, t.column, "undeclared generator '" + t.name + "'");
    return it->second;
  };

  std::vector<GeneratorRule> rules;
  for (auto &r : raw_rules) {
    GeneratorRule rule{r.name, std::move(r.root_perm), {}, false};
    for (const auto &tokens : r.sections) {
      std::vector<Symbol> symbols;
      for (const auto &t : tokens)
        symbols.push_back({resolve(t), t.inverse});
      rule.sections.emplace_back(std::move(symbols));
    }
    rules.push_back(std::move(rule));
  }
  for (const auto &t : involution_names)
    rules[resolve(t)].involutive = true;

  return WreathPresentation(degree, std::move(rules));
}

inline WreathPresentation parse_presentation(std::istream &in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_presentation(text);
}

} // namespace selfsim

#endif // SELFSIM_PARSER_HPP
