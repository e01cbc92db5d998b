#ifndef SELFSIM_PERMUTATION_HPP
#define SELFSIM_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace selfsim {

/// Permutation of {0,...,N-1}; perm[x] is the image of x.
using Perm = std::vector<std::uint32_t>;
using BigInt = boost::multiprecision::cpp_int;

inline Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

/// outer ∘ inner: apply inner first.
inline Perm compose(const Perm &outer, const Perm &inner) {
  Perm out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x)
    out[x] = outer[inner[x]];
  return out;
}

inline Perm inverse(const Perm &p) {
  Perm out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    out[p[x]] = static_cast<std::uint32_t>(x);
  return out;
}

inline bool is_identity(const Perm &p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != x)
      return false;
  return true;
}

inline bool is_bijection(const Perm &p) {
  std::vector<bool> seen(p.size(), false);
  for (auto y : p) {
    if (y >= p.size() || seen[y])
      return false;
    seen[y] = true;
  }
  return true;
}

inline std::vector<std::size_t> cycle_lengths(const Perm &p) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x])
      continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

/// lcm of the cycle lengths.
inline BigInt perm_order(const Perm &p) {
  BigInt order = 1;
  for (std::size_t len : cycle_lengths(p)) {
    BigInt l = len;
    order = order / boost::multiprecision::gcd(order, l) * l;
  }
  return order;
}

/// Cycle notation on the 1-based points, fixed points omitted; "()" for the identity.
inline std::string cycle_notation(const Perm &p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x)
      continue;
    out += "(";
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      if (y != x)
        out += " ";
      out += std::to_string(y + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

/// FNV-1a over the image array.
inline std::uint64_t fingerprint(const Perm &p) {
  std::uint64_t h = 1469598103934665603ull;
  for (auto y : p) {
    for (int b = 0; b < 4; ++b) {
      h ^= (y >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return h;
}

struct PermHash {
  std::size_t operator()(const Perm &p) const noexcept { return static_cast<std::size_t>(fingerprint(p)); }
};

} // namespace selfsim

#endif // SELFSIM_PERMUTATION_HPP
