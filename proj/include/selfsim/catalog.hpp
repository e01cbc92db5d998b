#ifndef SELFSIM_CATALOG_HPP
#define SELFSIM_CATALOG_HPP

// Built-in groups: the Grigorchuk group, its overgroup with generators
// bt, ct, dt, and the three ternary groups generated by a = (1 2 3) and one
// directed generator.

#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "parser.hpp"
#include "presentation.hpp"
#include "tree.hpp"

namespace selfsim {

struct CatalogEntry {
  std::string key;
  std::string source; // presentation file text
  WreathPresentation presentation;
  Ray default_ray;

  int degree() const noexcept { return presentation.degree(); }

  /// Number of suborbits of the parabolic stabilizer at level n.
  int expected_rank(int n) const { return degree() == 2 ? n + 1 : 2 * n + 1; }

  /// Degrees of the irreducible components of the level-n quasi-regular
  /// representation, ascending.
  std::vector<long long> expected_degrees(int n) const {
    if (n == 0)
      return {1};
    std::vector<long long> out(static_cast<std::size_t>(degree() == 2 ? 2 : 3), 1);
    long long power = 1;
    for (int i = 1; i <= n - 1; ++i) {
      power *= degree();
      out.push_back(power);
      if (degree() == 3)
        out.push_back(power);
    }
    return out;
  }
};

inline const std::vector<std::string_view> &builtin_keys() {
  static const std::vector<std::string_view> keys{"grigorchuk", "grigorchuk-tilde", "gamma", "gamma-bar",
                                                  "gupta-sidki"};
  return keys;
}

inline std::string_view builtin_source(std::string_view key) {
  if (key == "grigorchuk")
    return "degree: 2\n"
           "involutions: a, b, c, d\n"
           "gen a = perm (1 2) | e, e\n"
           "gen b = perm () | a, c\n"
           "gen c = perm () | a, d\n"
           "gen d = perm () | e, b\n";
  if (key == "grigorchuk-tilde")
    return "degree: 2\n"
           "involutions: a, bt, ct, dt\n"
           "gen a = perm (1 2) | e, e\n"
           "gen bt = perm () | a, ct\n"
           "gen ct = perm () | e, dt\n"
           "gen dt = perm () | e, bt\n";
  if (key == "gamma")
    return "degree: 3\n"
           "gen a = perm (1 2 3) | e, e, e\n"
           "gen r = perm () | a, e, r\n";
  if (key == "gamma-bar")
    return "degree: 3\n"
           "gen a = perm (1 2 3) | e, e, e\n"
           "gen s = perm () | a, a, s\n";
  if (key == "gupta-sidki")
    return "degree: 3\n"
           "gen a = perm (1 2 3) | e, e, e\n"
           "gen t = perm () | a, a^-1, t\n";
  throw UsageError("unknown builtin group '" + std::string(key) + "'");
}

inline CatalogEntry builtin(std::string_view key) {
  const std::string_view source = builtin_source(key);
  WreathPresentation pres = parse_presentation(source);
  Ray ray = Ray::rightmost(pres.degree());
  return CatalogEntry{std::string(key), std::string(source), std::move(pres), std::move(ray)};
}

} // namespace selfsim

#endif // SELFSIM_CATALOG_HPP
