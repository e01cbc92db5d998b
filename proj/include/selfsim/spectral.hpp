#ifndef SELFSIM_SPECTRAL_HPP
#define SELFSIM_SPECTRAL_HPP

// Irreducible decomposition of a multiplicity-free permutation representation
// from its (commutative) orbital scheme.
//
// The intersection matrices B_i (left multiplication by class i in the
// double-coset basis) commute, so a generic real combination of them has a
// simple spectrum and its eigenvectors diagonalize every B_i at once. Row j
// of the eigenvalue matrix P is a character of the Hecke algebra; the
// degree of the matching irreducible constituent is
//
//   m_j = N / sum_i |P[j][i]|^2 / k_i.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "orbital_scheme.hpp"

namespace selfsim {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr std::uint64_t default_seed = 20010101;
inline constexpr double cluster_tolerance = 1e-8;
inline constexpr double integrality_tolerance = 1e-6;
inline constexpr int max_seed_retries = 5;

/// B_i[k][j] = p[i][j][k]. Checks B_i B_j = sum_k p[i][j][k] B_k exactly.
inline std::vector<IntMatrix> intersection_matrices(const OrbitalScheme &s) {
  const auto r = static_cast<Eigen::Index>(s.rank);
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < s.rank; ++i) {
    IntMatrix b(r, r);
    for (Eigen::Index k = 0; k < r; ++k)
      for (Eigen::Index j = 0; j < r; ++j)
        b(k, j) = s.p(i, static_cast<std::size_t>(j), static_cast<std::size_t>(k));
    out.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < s.rank; ++i)
    for (std::size_t j = 0; j < s.rank; ++j) {
      IntMatrix expected = IntMatrix::Zero(r, r);
      for (std::size_t k = 0; k < s.rank; ++k)
        expected += s.p(i, j, k) * out[k];
      if (out[i] * out[j] != expected)
        throw IntegrityError("intersection matrices are not a representation: B_" + std::to_string(i) + " B_" +
                             std::to_string(j) + " != sum_k p[i][j][k] B_k");
    }
  return out;
}

namespace detail {

/// Coefficients in [1,2) from a fixed 64-bit generator; identical on every platform.
inline std::vector<double> generic_coefficients(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> c(count);
  for (auto &x : c)
    x = 1.0 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return c;
}

inline bool simple_spectrum(const Eigen::VectorXcd &values, double tol) {
  double scale = 1.0;
  for (Eigen::Index a = 0; a < values.size(); ++a)
    scale = std::max(scale, std::abs(values(a)));
  for (Eigen::Index a = 0; a < values.size(); ++a)
    for (Eigen::Index b = a + 1; b < values.size(); ++b)
      if (std::abs(values(a) - values(b)) <= tol * scale)
        return false;
  return true;
}

inline double rounded(double x) { return std::round(x * 1e6) / 1e6; }

inline bool row_less(const Eigen::MatrixXcd &p, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index i = 0; i < p.cols(); ++i) {
    const double ar = rounded(p(a, i).real()), br = rounded(p(b, i).real());
    if (ar != br)
      return ar < br;
    const double ai = rounded(p(a, i).imag()), bi = rounded(p(b, i).imag());
    if (ai != bi)
      return ai < bi;
  }
  return false;
}

inline Eigen::MatrixXcd permute_rows(const Eigen::MatrixXcd &p, const std::vector<Eigen::Index> &order) {
  Eigen::MatrixXcd out(p.rows(), p.cols());
  for (std::size_t j = 0; j < order.size(); ++j)
    out.row(static_cast<Eigen::Index>(j)) = p.row(order[j]);
  return out;
}

} // namespace detail

struct EigenSystem {
  /// eigenvalues(j, i): eigenvalue of B_i on common eigenvector j; row 0 is
  /// the all-ones eigenvector, where eigenvalues(0, i) = k_i.
  Eigen::MatrixXcd eigenvalues;
  std::uint64_t seed_used = default_seed;
  double tolerance_used = cluster_tolerance;
};

/// Simultaneous diagonalization of a commuting family of integer matrices.
inline EigenSystem common_eigensystem(const std::vector<IntMatrix> &matrices, std::uint64_t seed = default_seed) {
  if (matrices.empty())
    throw UsageError("common_eigensystem needs at least one matrix");
  const Eigen::Index r = matrices.front().rows();
  for (std::size_t a = 0; a < matrices.size(); ++a)
    for (std::size_t b = a + 1; b < matrices.size(); ++b)
      if (matrices[a] * matrices[b] != matrices[b] * matrices[a])
        throw IntegrityError("matrices " + std::to_string(a) + " and " + std::to_string(b) + " do not commute");

  std::vector<Eigen::MatrixXcd> complex_mats;
  for (const auto &m : matrices)
    complex_mats.push_back(m.cast<double>().cast<std::complex<double>>());

  for (int attempt = 0; attempt <= max_seed_retries; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    const auto coeffs = detail::generic_coefficients(matrices.size(), s);
    Eigen::MatrixXcd generic = Eigen::MatrixXcd::Zero(r, r);
    for (std::size_t i = 0; i < matrices.size(); ++i)
      generic += coeffs[i] * complex_mats[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(generic);
    if (solver.info() != Eigen::Success || !detail::simple_spectrum(solver.eigenvalues(), cluster_tolerance))
      continue;

    Eigen::MatrixXcd p(r, static_cast<Eigen::Index>(matrices.size()));
    for (Eigen::Index j = 0; j < r; ++j) {
      const Eigen::VectorXcd v = solver.eigenvectors().col(j);
      const std::complex<double> norm = v.dot(v);
      for (std::size_t i = 0; i < matrices.size(); ++i)
        p(j, static_cast<Eigen::Index>(i)) = v.dot(complex_mats[i] * v) / norm;
    }

    // Trivial character: B_i 1 = k_i 1, with k_i the row sums of B_i.
    Eigen::VectorXcd valencies(p.cols());
    for (std::size_t i = 0; i < matrices.size(); ++i)
      valencies(static_cast<Eigen::Index>(i)) = static_cast<double>(matrices[i].row(0).sum());
    Eigen::Index trivial = 0;
    double best = INFINITY;
    for (Eigen::Index j = 0; j < r; ++j) {
      const double dist = (p.row(j).transpose() - valencies).norm();
      if (dist < best) {
        best = dist;
        trivial = j;
      }
    }
    std::vector<Eigen::Index> order{trivial};
    for (Eigen::Index j = 0; j < r; ++j)
      if (j != trivial)
        order.push_back(j);
    std::sort(order.begin() + 1, order.end(), [&](auto a, auto b) { return detail::row_less(p, a, b); });
    return {detail::permute_rows(p, order), s, cluster_tolerance};
  }
  throw NumericalError("no seed in [" + std::to_string(seed) + ", " + std::to_string(seed + max_seed_retries) +
                       "] separates the common eigenspaces");
}

/// Degrees m_j; each must lie within 1e-6 of a positive integer and they must sum to N.
inline std::vector<long long> multiplicities(const Eigen::MatrixXcd &eigenvalues,
                                             const std::vector<long long> &valencies, std::size_t points) {
  std::vector<long long> m;
  long long total = 0;
  for (Eigen::Index j = 0; j < eigenvalues.rows(); ++j) {
    double denom = 0;
    for (Eigen::Index i = 0; i < eigenvalues.cols(); ++i)
      denom += std::norm(eigenvalues(j, i)) / static_cast<double>(valencies[static_cast<std::size_t>(i)]);
    const double value = static_cast<double>(points) / denom;
    const double nearest = std::round(value);
    if (!(std::abs(value - nearest) <= integrality_tolerance) || nearest < 1)
      throw NumericalError("multiplicity " + std::to_string(value) + " of eigenspace " + std::to_string(j) +
                           " is not a positive integer");
    m.push_back(static_cast<long long>(nearest));
    total += m.back();
  }
  if (total != static_cast<long long>(points))
    throw NumericalError("multiplicities sum to " + std::to_string(total) + ", expected " + std::to_string(points));
  return m;
}

struct SpectralData {
  std::size_t rank = 1;
  Eigen::MatrixXcd eigenvalues;
  std::vector<long long> multiplicities;
  double tolerance_used = cluster_tolerance;
  std::uint64_t seed_used = default_seed;

  /// max |S S* - I| with S[j][i] = sqrt(m_j / (N k_i)) P[j][i].
  double orthogonality_residual(const std::vector<long long> &valencies, std::size_t points) const {
    Eigen::MatrixXcd s = eigenvalues;
    for (Eigen::Index j = 0; j < s.rows(); ++j)
      for (Eigen::Index i = 0; i < s.cols(); ++i)
        s(j, i) *= std::sqrt(static_cast<double>(multiplicities[static_cast<std::size_t>(j)]) /
                             (static_cast<double>(points) * static_cast<double>(valencies[static_cast<std::size_t>(i)])));
    return (s * s.adjoint() - Eigen::MatrixXcd::Identity(s.rows(), s.rows())).cwiseAbs().maxCoeff();
  }
};

/// Full spectral pipeline on a commutative scheme. Rows after the trivial one
/// are ordered by multiplicity, then by the rounded eigenvalue row.
inline SpectralData spectral_decomposition(const OrbitalScheme &scheme, std::uint64_t seed = default_seed) {
  if (!is_commutative(scheme))
    throw UsageError("scheme is not commutative; the permutation representation is not multiplicity-free");
  const auto eig = common_eigensystem(intersection_matrices(scheme), seed);
  auto m = multiplicities(eig.eigenvalues, scheme.valencies, scheme.points);
  std::vector<Eigen::Index> order(m.size());
  for (std::size_t j = 0; j < m.size(); ++j)
    order[j] = static_cast<Eigen::Index>(j);
  std::stable_sort(order.begin() + 1, order.end(), [&](auto a, auto b) {
    if (m[static_cast<std::size_t>(a)] != m[static_cast<std::size_t>(b)])
      return m[static_cast<std::size_t>(a)] < m[static_cast<std::size_t>(b)];
    return detail::row_less(eig.eigenvalues, a, b);
  });
  SpectralData out;
  out.rank = scheme.rank;
  out.eigenvalues = detail::permute_rows(eig.eigenvalues, order);
  for (auto j : order)
    out.multiplicities.push_back(m[static_cast<std::size_t>(j)]);
  out.tolerance_used = eig.tolerance_used;
  out.seed_used = eig.seed_used;
  const double residual = out.orthogonality_residual(scheme.valencies, scheme.points);
  if (!(residual <= integrality_tolerance))
    throw NumericalError("eigenvalue matrix fails orthogonality: residual " + std::to_string(residual));
  return out;
}

inline std::vector<long long> sorted_degrees(std::vector<long long> m) {
  std::sort(m.begin(), m.end());
  return m;
}

/// Degrees of the irreducible constituents of the level-n quasi-regular
/// representation, ascending.
inline std::vector<long long> degree_multiset(const WreathPresentation &pres, int n, const Ray &ray,
                                              std::uint64_t seed = default_seed, const SchemeOptions &opts = {}) {
  return sorted_degrees(spectral_decomposition(build_scheme(pres, n, ray, opts), seed).multiplicities);
}

/// True iff every element of `small` occurs in `large` at least as often.
inline bool is_submultiset(std::vector<long long> small, std::vector<long long> large) {
  std::sort(small.begin(), small.end());
  std::sort(large.begin(), large.end());
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

/// Degrees at level n are contained in the degrees at level n+1.
inline bool tower_nesting_check(const WreathPresentation &pres, int n, const Ray &ray,
                                std::uint64_t seed = default_seed, const SchemeOptions &opts = {}) {
  return is_submultiset(degree_multiset(pres, n, ray, seed, opts), degree_multiset(pres, n + 1, ray, seed, opts));
}

inline constexpr std::size_t dense_oracle_limit = 243;

/// Eigenvalue cluster sizes of a generic combination of the N x N class
/// adjacency matrices; ascending. Independent of the intersection numbers.
inline std::vector<long long> dense_commutant_oracle(const WreathPresentation &pres, int n, const Ray &ray,
                                                     std::uint64_t seed = default_seed) {
  const std::size_t points = level_size(pres.degree(), n);
  if (points > dense_oracle_limit)
    throw ResourceError("dense oracle limited to " + std::to_string(dense_oracle_limit) + " points, level has " +
                        std::to_string(points));
  const PairLabeler labeler(pres, n, ray);
  const auto big_n = static_cast<Eigen::Index>(points);

  for (int attempt = 0; attempt <= max_seed_retries; ++attempt) {
    const auto coeffs = detail::generic_coefficients(labeler.rank(), seed + static_cast<std::uint64_t>(attempt));
    Eigen::MatrixXd generic(big_n, big_n);
    for (Eigen::Index x = 0; x < big_n; ++x)
      for (Eigen::Index y = 0; y < big_n; ++y)
        generic(x, y) = coeffs[labeler.label(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y))];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(generic, false);
    if (solver.info() != Eigen::Success)
      continue;
    const Eigen::VectorXcd values = solver.eigenvalues();
    double scale = 1.0;
    for (Eigen::Index a = 0; a < big_n; ++a)
      scale = std::max(scale, std::abs(values(a)));

    // Values closer than `join` belong together; a pair between `join` and
    // `separate` is ambiguous and triggers a reseed.
    const double join = 1e-7 * scale, separate = 1e-4 * scale;
    detail::DisjointSets sets(points);
    bool ambiguous = false;
    for (Eigen::Index a = 0; a < big_n && !ambiguous; ++a)
      for (Eigen::Index b = a + 1; b < big_n; ++b) {
        const double dist = std::abs(values(a) - values(b));
        if (dist <= join) {
          sets.unite(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
        } else if (dist < separate) {
          ambiguous = true;
          break;
        }
      }
    if (ambiguous)
      continue;
    std::vector<long long> size(points, 0);
    for (std::uint32_t a = 0; a < points; ++a)
      ++size[sets.find(a)];
    std::vector<long long> out;
    for (auto c : size)
      if (c > 0)
        out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
  }
  throw NumericalError("dense oracle: eigenvalue clustering stayed ambiguous after reseeding");
}

} // namespace selfsim

#endif // SELFSIM_SPECTRAL_HPP
