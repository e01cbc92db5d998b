#ifndef SELFSIM_TREE_HPP
#define SELFSIM_TREE_HPP

// Rooted d-ary tree vocabulary: vertices are strings over {1,...,d}.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace selfsim {

using Letter = std::uint8_t;

/// Upper bound on the number of points of a level that may be materialized.
struct SizeCap {
  std::size_t max_points = std::size_t{1} << 20;
};

/// d^n, or ResourceError when it exceeds the cap.
inline std::size_t level_size(int degree, int level, SizeCap cap = {}) {
  if (degree < 2)
    throw UsageError("tree degree must be at least 2, got " + std::to_string(degree));
  if (level < 0)
    throw UsageError("level must be nonnegative, got " + std::to_string(level));
  std::size_t size = 1;
  for (int k = 0; k < level; ++k) {
    size *= static_cast<std::size_t>(degree);
    if (size > cap.max_points)
      throw ResourceError(std::to_string(degree) + "^" + std::to_string(level) +
                          " points exceed the size cap of " + std::to_string(cap.max_points));
  }
  return size;
}

class Vertex {
public:
  Vertex() = default;
  explicit Vertex(int degree) : degree_(degree) {}
  Vertex(int degree, std::vector<Letter> letters) : degree_(degree), letters_(std::move(letters)) {
    for (Letter x : letters_)
      if (x < 1 || x > degree_)
        throw UsageError("letter " + std::to_string(int(x)) + " outside [1," + std::to_string(degree_) + "]");
  }

  /// Parses a digit string; "-" and "" denote the root.
  static Vertex parse(int degree, std::string_view text) {
    Vertex v(degree);
    if (text == "-")
      return v;
    for (char ch : text) {
      if (ch < '1' || ch > '9' || ch - '0' > degree)
        throw UsageError("invalid vertex '" + std::string(text) + "' for degree " + std::to_string(degree));
      v.letters_.push_back(static_cast<Letter>(ch - '0'));
    }
    return v;
  }

  /// Inverse of index(): the vertex of the given level with this lexicographic rank.
  static Vertex from_index(int degree, int level, std::size_t index) {
    std::vector<Letter> letters(static_cast<std::size_t>(level));
    for (int k = level - 1; k >= 0; --k) {
      letters[static_cast<std::size_t>(k)] = static_cast<Letter>(index % degree + 1);
      index /= degree;
    }
    return Vertex(degree, std::move(letters));
  }

  int degree() const noexcept { return degree_; }
  int level() const noexcept { return static_cast<int>(letters_.size()); }
  bool is_root() const noexcept { return letters_.empty(); }
  const std::vector<Letter> &letters() const noexcept { return letters_; }
  Letter operator[](std::size_t k) const { return letters_[k]; }

  /// Lexicographic rank among the vertices of the same level.
  std::size_t index() const noexcept {
    std::size_t idx = 0;
    for (Letter x : letters_)
      idx = idx * degree_ + (x - 1);
    return idx;
  }

  Vertex prefix(int length) const {
    return Vertex(degree_, std::vector<Letter>(letters_.begin(), letters_.begin() + length));
  }
  Vertex suffix(int from) const {
    return Vertex(degree_, std::vector<Letter>(letters_.begin() + from, letters_.end()));
  }
  Vertex child(Letter x) const {
    Vertex v = *this;
    v.letters_.push_back(x);
    return v;
  }
  Vertex concat(const Vertex &tail) const {
    Vertex v = *this;
    v.letters_.insert(v.letters_.end(), tail.letters_.begin(), tail.letters_.end());
    return v;
  }

  std::string to_string() const {
    if (letters_.empty())
      return "-";
    std::string s;
    for (Letter x : letters_)
      s.push_back(static_cast<char>('0' + x));
    return s;
  }

  friend bool operator==(const Vertex &, const Vertex &) = default;
  friend auto operator<=>(const Vertex &, const Vertex &) = default;

private:
  int degree_ = 2;
  std::vector<Letter> letters_;
};

/// All d^n vertices of level n in lexicographic order; position = canonical index.
inline std::vector<Vertex> vertices_at_level(int degree, int level, SizeCap cap = {}) {
  const std::size_t count = level_size(degree, level, cap);
  std::vector<Vertex> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(Vertex::from_index(degree, level, i));
  return out;
}

/// Eventually periodic infinite ray: head followed by tail repeated forever.
struct Ray {
  Vertex head;
  std::vector<Letter> periodic_tail;

  /// The ray d d d ...
  static Ray rightmost(int degree) {
    return Ray{Vertex(degree), {static_cast<Letter>(degree)}};
  }

  /// Accepts "dinf" / "d^inf", a digit string (periodic tail) or "head(tail)".
  static Ray parse(int degree, std::string_view text) {
    if (text == "dinf" || text == "d^inf")
      return rightmost(degree);
    Ray ray{Vertex(degree), {}};
    std::string_view tail = text;
    if (auto open = text.find('('); open != std::string_view::npos) {
      if (text.back() != ')' || open + 2 > text.size() - 1)
        throw UsageError("malformed ray '" + std::string(text) + "'");
      ray.head = Vertex::parse(degree, text.substr(0, open));
      tail = text.substr(open + 1, text.size() - open - 2);
    }
    if (tail.empty())
      throw UsageError("ray '" + std::string(text) + "' has an empty periodic part");
    ray.periodic_tail = Vertex::parse(degree, tail).letters();
    return ray;
  }

  std::string to_string() const {
    std::string tail;
    for (Letter x : periodic_tail)
      tail.push_back(static_cast<char>('0' + x));
    return (head.is_root() ? "" : head.to_string()) + "(" + tail + ")";
  }
};

/// First n letters of the ray.
inline Vertex ray_prefix(const Ray &ray, int n) {
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    if (k < ray.head.level())
      letters.push_back(ray.head[static_cast<std::size_t>(k)]);
    else
      letters.push_back(ray.periodic_tail[static_cast<std::size_t>(k - ray.head.level()) % ray.periodic_tail.size()]);
  }
  return Vertex(ray.head.degree(), std::move(letters));
}

} // namespace selfsim

#endif // SELFSIM_TREE_HPP
