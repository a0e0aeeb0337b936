#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's product, extension or determinant code: blades are handled as
// index lists, determinants and inverses go through Eigen.

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ga/basis.hpp"
#include "ga/multivector.hpp"

namespace oracle {

using Rng = std::mt19937_64;

inline Eigen::MatrixXd to_eigen(const ga::Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

inline ga::Matrix from_eigen(const Eigen::MatrixXd& e) {
  ga::Matrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  for (Eigen::Index r = 0; r < e.rows(); ++r)
    for (Eigen::Index c = 0; c < e.cols(); ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = e(r, c);
  return m;
}

/// Masks with popcount k in increasing order.
inline std::vector<std::uint32_t> subsets(int n, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

inline std::vector<int> members(std::uint32_t m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (m & (1u << i)) out.push_back(i);
  return out;
}

/// k-th compound matrix: entry (I, J) is the minor of rows I and columns J.
inline Eigen::MatrixXd compound(const Eigen::MatrixXd& a, int k) {
  const int n = static_cast<int>(a.rows());
  const auto sets = subsets(n, k);
  Eigen::MatrixXd c(sets.size(), sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (k == 0) {
        c(i, j) = 1.0;
        continue;
      }
      const auto ri = members(sets[i]);
      const auto cj = members(sets[j]);
      Eigen::MatrixXd sub(k, k);
      for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) sub(r, s) = a(ri[static_cast<std::size_t>(r)], cj[static_cast<std::size_t>(s)]);
      c(i, j) = sub.determinant();
    }
  }
  return c;
}

/// Product of two basis blades given as index lists in any order, with
/// e_i e_i = diag[i]. Bubble-sorts the concatenation, counting swaps and
/// contracting equal neighbours. Returns the coefficient and the mask.
inline std::pair<double, std::uint32_t> blade_product(std::vector<int> a, const std::vector<int>& b,
                                                      const std::vector<double>& diag) {
  a.insert(a.end(), b.begin(), b.end());
  double coeff = 1.0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        coeff = -coeff;
        changed = true;
      } else if (a[i] == a[i + 1]) {
        coeff *= diag[static_cast<std::size_t>(a[i])];
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(i), a.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  std::uint32_t mask = 0;
  for (int i : a) mask |= 1u << i;
  return {coeff, mask};
}

enum class ProductKind { clifford, wedge, left, right, scalar };

/// Bilinear extension of the blade oracle with grade selection.
inline std::vector<double> product(std::span<const double> x, std::span<const double> y, ProductKind kind,
                                   const std::vector<double>& diag) {
  std::vector<double> out(x.size(), 0.0);
  for (std::uint32_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0.0) continue;
    for (std::uint32_t b = 0; b < y.size(); ++b) {
      if (y[b] == 0.0) continue;
      const int ra = std::popcount(a);
      const int rb = std::popcount(b);
      const auto [c, m] = blade_product(members(a), members(b), diag);
      const int g = std::popcount(m);
      bool keep = true;
      switch (kind) {
        case ProductKind::clifford: break;
        case ProductKind::wedge: keep = g == ra + rb; break;
        case ProductKind::left: keep = rb >= ra && g == rb - ra; break;
        case ProductKind::right: keep = ra >= rb && g == ra - rb; break;
        case ProductKind::scalar: keep = g == 0 && ra == rb; break;
      }
      if (keep) out[m] += c * x[a] * y[b];
    }
  }
  return out;
}

/// Sign of the permutation that sorts the concatenation of J and its complement.
inline double complement_sign(std::uint32_t j, int n) {
  std::vector<int> seq = members(j);
  const auto rest = members(((1u << n) - 1) & ~j);
  seq.insert(seq.end(), rest.begin(), rest.end());
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t k = i + 1; k < seq.size(); ++k)
      if (seq[i] > seq[k]) ++inversions;
  return (inversions & 1) ? -1.0 : 1.0;
}

// ---------------------------------------------------------------- random data

inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline ga::Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ga::Matrix m(rows, cols);
  for (double& v : m.data()) v = uniform(rng);
  return m;
}

inline double condition_number(const Eigen::MatrixXd& a) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) == 0.0 ? INFINITY : s(0) / s(s.size() - 1);
}

/// Random n x n matrix with condition number below max_cond.
inline ga::Matrix random_well_conditioned(Rng& rng, int n, double max_cond = 1e6) {
  while (true) {
    ga::Matrix m = random_matrix(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    if (condition_number(to_eigen(m)) < max_cond) return m;
  }
}

inline ga::Multivector random_multivector(Rng& rng, const ga::AlgebraContext& ctx) {
  ga::Multivector x(ctx);
  for (double& c : x.coeffs()) c = uniform(rng);
  return x;
}

inline ga::Multivector random_homogeneous(Rng& rng, const ga::AlgebraContext& ctx, int k) {
  ga::Multivector x(ctx);
  for (std::uint32_t m = 0; m < ctx.blade_count(); ++m)
    if (std::popcount(m) == k) x[m] = uniform(rng);
  return x;
}

inline Eigen::MatrixXd random_orthogonal(Rng& rng, int n) {
  Eigen::MatrixXd a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = uniform(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
}

/// Symmetric matrix with `negatives` negative eigenvalues, magnitudes in
/// [0.5, 3], rotated by a random orthogonal matrix.
inline ga::Matrix random_metric(Rng& rng, int n, int negatives) {
  Eigen::VectorXd lambda(n);
  for (int i = 0; i < n; ++i) lambda(i) = uniform(rng, 0.5, 3.0) * (i < negatives ? -1.0 : 1.0);
  const Eigen::MatrixXd q = random_orthogonal(rng, n);
  Eigen::MatrixXd g = q * lambda.asDiagonal() * q.transpose();
  g = 0.5 * (g + g.transpose());
  return from_eigen(g);
}

// ---------------------------------------------------------------- comparisons

/// |a - b| <= rel * max(1, |a|, |b|)
inline bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool close(std::span<const double> a, std::span<const double> b, double rel) {
  if (a.size() != b.size()) return false;
  double scale = 1.0;
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
    diff = std::max(diff, std::abs(a[i] - b[i]));
  }
  return diff <= rel * scale;
}

inline bool close(const ga::Multivector& a, const ga::Multivector& b, double rel) {
  return close(a.coeffs(), b.coeffs(), rel);
}

inline bool close(const ga::Matrix& a, const ga::Matrix& b, double rel) {
  return a.rows() == b.rows() && a.cols() == b.cols() && close(a.data(), b.data(), rel);
}

inline bool close(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double rel) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         close(std::span<const double>(a.data(), static_cast<std::size_t>(a.size())),
               std::span<const double>(b.data(), static_cast<std::size_t>(b.size())), rel);
}

}  // namespace oracle
