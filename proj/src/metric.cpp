#include "ga/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "ga/error.hpp"
#include "ga/operators.hpp"

namespace ga {
namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr int kMaxSweeps = 100;

double max_off_diagonal(const Matrix& a) {
  double off = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) off = std::max(off, std::abs(a(i, j)));
  return off;
}

}  // namespace

std::vector<double> jacobi_eigen(const Matrix& sym, Matrix& vecs) {
  const std::size_t n = sym.rows();
  Matrix a = sym;
  vecs = Matrix::identity(n);
  const double stop = 1e-13 * std::max(sym.max_abs(), std::numeric_limits<double>::min());

  for (int sweep = 0; sweep < kMaxSweeps && max_off_diagonal(a) >= stop; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a(r, p);
            const double arq = a(r, q);
            a(r, p) = a(p, r) = c * arp - s * arq;
            a(r, q) = a(q, r) = s * arp + c * arq;
          }
          const double vrp = vecs(r, p);
          const double vrq = vecs(r, q);
          vecs(r, p) = c * vrp - s * vrq;
          vecs(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  std::vector<double> lambda(n);
  for (std::size_t i = 0; i < n; ++i) lambda[i] = a(i, i);
  return lambda;
}

MetricStructure::MetricStructure(LinOp g, LinOp g_inv, std::vector<double> lambda, LinOp q_vecs, LinOp h,
                                 LinOp eta, LinOp h_star, int p, int q, double det)
    : g_(std::move(g)),
      g_inv_(std::move(g_inv)),
      lambda_(std::move(lambda)),
      q_vecs_(std::move(q_vecs)),
      h_(std::move(h)),
      eta_(std::move(eta)),
      h_star_(std::move(h_star)),
      p_(p),
      q_(q),
      det_(det) {}

MetricStructure MetricStructure::from_matrix(const AlgebraContext& ctx, const Matrix& m) {
  const auto n = static_cast<std::size_t>(ctx.dim());
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorKind::shape_mismatch, "metric matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(std::abs(m(i, j) - m(j, i)) <= kSymmetryTol)) {
        throw Error(ErrorKind::asymmetric, "metric matrix is not symmetric at entries (" + std::to_string(i + 1) +
                                               "," + std::to_string(j + 1) + ") and (" + std::to_string(j + 1) +
                                               "," + std::to_string(i + 1) + ")");
      }
    }
  }
  const Matrix sym = (m + m.transpose()) * 0.5;

  Matrix vecs;
  const std::vector<double> raw = jacobi_eigen(sym, vecs);
  const double scale = std::max(1.0, sym.max_abs());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(std::abs(raw[i]) > ctx.tol_abs() * scale)) {
      throw Error(ErrorKind::degenerate, "metric is degenerate (eigenvalue " + std::to_string(raw[i]) + ")");
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool pa = raw[a] > 0.0;
    const bool pb = raw[b] > 0.0;
    if (pa != pb) return pa;
    return std::abs(raw[a]) > std::abs(raw[b]);
  });

  std::vector<double> lambda(n);
  Matrix q(n, n);
  int p_count = 0;
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = order[c];
    lambda[c] = raw[src];
    if (lambda[c] > 0.0) ++p_count;
    // Sign convention: the largest-magnitude component of each eigenvector is positive.
    std::size_t big = 0;
    for (std::size_t r = 1; r < n; ++r)
      if (std::abs(vecs(r, src)) > std::abs(vecs(big, src))) big = r;
    const double flip = vecs(big, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t r = 0; r < n; ++r) q(r, c) = flip * vecs(r, src);
  }

  Matrix h(n, n);
  Matrix h_star(n, n);
  Matrix eta(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const double root = std::sqrt(std::abs(lambda[r]));
    eta(r, r) = lambda[r] > 0.0 ? 1.0 : -1.0;
    for (std::size_t c = 0; c < n; ++c) {
      h(r, c) = root * q(c, r);
      h_star(r, c) = q(c, r) / root;
    }
  }

  LinOp g(ctx, sym);
  LinOp g_inv = inverse(g);
  const double det = determinant(g);
  return MetricStructure(std::move(g), std::move(g_inv), std::move(lambda), LinOp(ctx, std::move(q)),
                         LinOp(ctx, std::move(h)), LinOp(ctx, std::move(eta)), LinOp(ctx, std::move(h_star)),
                         p_count, static_cast<int>(n) - p_count, det);
}

MetricStructure MetricStructure::identity(const AlgebraContext& ctx) {
  return from_matrix(ctx, Matrix::identity(static_cast<std::size_t>(ctx.dim())));
}

MetricStructure MetricStructure::diagonal(const AlgebraContext& ctx, const std::vector<double>& diag) {
  const auto n = static_cast<std::size_t>(ctx.dim());
  if (diag.size() != n) {
    throw Error(ErrorKind::shape_mismatch, "diagonal metric needs " + std::to_string(n) + " entries, got " +
                                               std::to_string(diag.size()));
  }
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = diag[i];
  return from_matrix(ctx, m);
}

double g_scalar_product(const MetricStructure& m, const Multivector& x, const Multivector& y) {
  return scalar_product(apply_extended(m.g(), x), y);
}

Multivector g_contraction(const MetricStructure& m, const Multivector& x, const Multivector& y, Side side,
                          bool inverse) {
  const LinOp& g = inverse ? m.g_inverse() : m.g();
  if (side == Side::left) return left_contraction(apply_extended(g, x), y);
  return right_contraction(x, apply_extended(g, y));
}

Multivector g_clifford_product(const MetricStructure& m, const Multivector& x, const Multivector& y,
                               bool inverse) {
  const LinOp& q = m.eigenvectors();
  const LinOp qt = q.transpose();
  std::vector<double> diag = m.eigenvalues();
  if (inverse)
    for (double& d : diag) d = 1.0 / d;
  const Multivector z = diagonal_clifford_product(apply_extended(qt, x), apply_extended(qt, y), diag);
  return apply_extended(q, z);
}

GradeSetExtensor extended_block(const LinOp& t, GradeSet s) {
  const auto& ctx = t.context();
  const auto blades = blades_in(ctx.dim(), s);
  Matrix m(blades.size(), blades.size());
  for (std::size_t c = 0; c < blades.size(); ++c) {
    const Multivector img = apply_extended(t, Multivector::blade(ctx, blades[c]));
    for (std::size_t r = 0; r < blades.size(); ++r) m(r, c) = img[blades[r]];
  }
  return GradeSetExtensor(ctx, s, s, std::move(m));
}

GradeSetExtensor adjoint_metric(const GradeSetExtensor& t, const MetricStructure& m) {
  t.context().require_same(m.context());
  const GradeSetExtensor g_cod = extended_block(m.g(), t.codomain());
  const GradeSetExtensor g_inv_dom = extended_block(m.g_inverse(), t.domain());
  return g_inv_dom.compose(adjoint(t).compose(g_cod));
}

LinOp adjoint_metric(const LinOp& t, const MetricStructure& m) {
  t.context().require_same(m.context());
  return m.g_inverse().compose(adjoint(t)).compose(m.g());
}

}  // namespace ga
