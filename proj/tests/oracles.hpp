#ifndef SELFSIM_TESTS_ORACLES_HPP
#define SELFSIM_TESTS_ORACLES_HPP

// Test-only reference computations that do not go through the library's
// recursion engine.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace oracle {

/// Grigorchuk generators acting on binary strings over {'1','2'}:
/// a swaps the first letter; b = (a, c), c = (a, d), d = (1, b).
inline std::string grigorchuk_act(char g, std::string v) {
  std::size_t pos = 0;
  while (pos < v.size()) {
    if (g == 'a') {
      v[pos] = v[pos] == '1' ? '2' : '1';
      return v;
    }
    if (g == 'e')
      return v;
    const bool left = v[pos] == '1';
    ++pos;
    switch (g) {
    case 'b': g = left ? 'a' : 'c'; break;
    case 'c': g = left ? 'a' : 'd'; break;
    case 'd': g = left ? 'e' : 'b'; break;
    }
  }
  return v;
}

/// Word acts rightmost letter first.
inline std::string grigorchuk_word_act(const std::string &word, std::string v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    v = grigorchuk_act(*it, v);
  return v;
}

inline std::vector<std::string> binary_level(int n) {
  std::vector<std::string> out{""};
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> next;
    for (const auto &s : out) {
      next.push_back(s + '1');
      next.push_back(s + '2');
    }
    out = std::move(next);
  }
  return out;
}

/// Order of a word on level n by repeated application to every vertex.
inline std::size_t grigorchuk_order(const std::string &word, int n) {
  const auto points = binary_level(n);
  std::vector<std::string> current = points;
  for (std::size_t k = 1;; ++k) {
    for (auto &v : current)
      v = grigorchuk_word_act(word, v);
    if (current == points)
      return k;
  }
}

/// |G_n| by closure over tuples of images.
inline std::size_t grigorchuk_group_order(int n) {
  const auto points = binary_level(n);
  std::set<std::vector<std::string>> seen{points};
  std::vector<std::vector<std::string>> queue{points};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (char g : std::string("abcd")) {
      auto next = queue[head];
      for (auto &v : next)
        v = grigorchuk_act(g, v);
      if (seen.insert(next).second)
        queue.push_back(next);
    }
  }
  return queue.size();
}

} // namespace oracle

#endif // SELFSIM_TESTS_ORACLES_HPP
