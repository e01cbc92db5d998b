#ifndef SELFSIM_PRESENTATION_HPP
#define SELFSIM_PRESENTATION_HPP

// Wreath-recursion presentations: each generator is a root permutation of
// {1,...,d} together with d section words, one per letter.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace selfsim {

/// One signed generator reference.
struct Symbol {
  std::uint32_t generator = 0;
  bool inverse = false;

  Symbol inverted() const noexcept { return {generator, !inverse}; }
  friend bool operator==(const Symbol &, const Symbol &) = default;
};

/// A group element as an (unreduced) product of generators. Acting on the
/// tree, the rightmost symbol is applied first.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  static Word generator(std::uint32_t g, bool inverse = false) { return Word({Symbol{g, inverse}}); }

  const std::vector<Symbol> &symbols() const noexcept { return symbols_; }
  std::size_t length() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  Word inverse() const {
    std::vector<Symbol> out(symbols_.rbegin(), symbols_.rend());
    for (auto &s : out)
      s = s.inverted();
    return Word(std::move(out));
  }

  /// Product this·rhs (rhs acts first).
  friend Word operator*(const Word &lhs, const Word &rhs) {
    std::vector<Symbol> out = lhs.symbols_;
    out.insert(out.end(), rhs.symbols_.begin(), rhs.symbols_.end());
    return Word(std::move(out));
  }

  friend bool operator==(const Word &, const Word &) = default;

private:
  std::vector<Symbol> symbols_;
};

struct GeneratorRule {
  std::string name;
  Perm root_perm;             // on {0,...,d-1}
  std::vector<Word> sections; // sections[i]: section at letter i+1
  bool involutive = false;
};

class WreathPresentation {
public:
  WreathPresentation(int degree, std::vector<GeneratorRule> rules) : degree_(degree), rules_(std::move(rules)) {
    if (degree_ < 2 || degree_ > 9)
      throw UsageError("degree " + std::to_string(degree_) + " outside [2,9]");
    if (rules_.empty())
      throw UsageError("presentation has no generators");
    for (std::size_t g = 0; g < rules_.size(); ++g) {
      const auto &rule = rules_[g];
      for (std::size_t h = 0; h < g; ++h)
        if (rules_[h].name == rule.name)
          throw UsageError("duplicate generator '" + rule.name + "'");
      if (rule.root_perm.size() != static_cast<std::size_t>(degree_) || !is_bijection(rule.root_perm))
        throw UsageError("root permutation of '" + rule.name + "' is not a permutation of 1.." + std::to_string(degree_));
      if (rule.sections.size() != static_cast<std::size_t>(degree_))
        throw UsageError("generator '" + rule.name + "' needs exactly " + std::to_string(degree_) + " sections");
      for (const auto &w : rule.sections)
        for (const auto &s : w.symbols())
          if (s.generator >= rules_.size())
            throw UsageError("section of '" + rule.name + "' references an undeclared generator");
    }
  }

  int degree() const noexcept { return degree_; }
  std::size_t generator_count() const noexcept { return rules_.size(); }
  const std::vector<GeneratorRule> &rules() const noexcept { return rules_; }
  const GeneratorRule &rule(std::uint32_t g) const { return rules_.at(g); }
  const std::string &name(std::uint32_t g) const { return rules_.at(g).name; }

  std::optional<std::uint32_t> find(std::string_view name) const {
    for (std::uint32_t g = 0; g < rules_.size(); ++g)
      if (rules_[g].name == name)
        return g;
    return std::nullopt;
  }

  /// Cancels g·g^-1 and g^-1·g. With declared involutions also rewrites
  /// g^-1 to g and cancels g·g.
  Word reduce(const Word &w) const {
    std::vector<Symbol> stack;
    stack.reserve(w.length());
    for (Symbol s : w.symbols()) {
      const bool invol = rules_[s.generator].involutive;
      if (invol)
        s.inverse = false;
      if (!stack.empty() && stack.back().generator == s.generator &&
          (stack.back().inverse != s.inverse || invol)) {
        stack.pop_back();
        continue;
      }
      stack.push_back(s);
    }
    return Word(std::move(stack));
  }

  /// Tokens separated by spaces; "e" for the empty word.
  std::string render(const Word &w) const {
    if (w.empty())
      return "e";
    std::string out;
    for (const auto &s : w.symbols()) {
      if (!out.empty())
        out += ' ';
      out += rules_[s.generator].name;
      if (s.inverse)
        out += "^-1";
    }
    return out;
  }

  /// Parses the token syntax of the presentation format ("e", "a b^-1 c").
  Word parse_word(std::string_view text) const {
    std::vector<Symbol> symbols;
    std::istringstream in{std::string(text)};
    std::string token;
    bool saw_e = false;
    while (in >> token) {
      if (token == "e") {
        saw_e = true;
        continue;
      }
      bool inv = false;
      if (token.size() > 3 && token.ends_with("^-1")) {
        inv = true;
        token.resize(token.size() - 3);
      }
      auto g = find(token);
      if (!g)
        throw UsageError("unknown generator '" + token + "' in word '" + std::string(text) + "'");
      symbols.push_back({*g, inv});
    }
    if (saw_e && !symbols.empty())
      throw UsageError("'e' must stand alone in word '" + std::string(text) + "'");
    return Word(std::move(symbols));
  }

  /// Renders the presentation in the file format; stable across runs.
  std::string to_text() const {
    std::string out = "degree: " + std::to_string(degree_) + "\n";
    std::string invols;
    for (const auto &r : rules_)
      if (r.involutive)
        invols += (invols.empty() ? "" : ", ") + r.name;
    if (!invols.empty())
      out += "involutions: " + invols + "\n";
    for (const auto &r : rules_) {
      out += "gen " + r.name + " = perm " + cycle_notation(r.root_perm) + " |";
      for (std::size_t i = 0; i < r.sections.size(); ++i)
        out += (i ? ", " : " ") + render(r.sections[i]);
      out += "\n";
    }
    return out;
  }

  /// FNV-1a of to_text(), as 16 hex digits.
  std::string fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : to_text()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int k = 15; k >= 0; --k, h >>= 4)
      s[static_cast<std::size_t>(k)] = hex[h & 0xf];
    return s;
  }

private:
  int degree_;
  std::vector<GeneratorRule> rules_;
};

} // namespace selfsim

#endif // SELFSIM_PRESENTATION_HPP
