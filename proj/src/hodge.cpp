#include "ga/hodge.hpp"

#include <cmath>

#include "ga/error.hpp"
#include "ga/operators.hpp"

namespace ga {
namespace {

void require_kind(const VolumeElement& vol, VolumeKind kind) {
  if (vol.kind != kind) {
    throw Error(ErrorKind::invalid_argument,
                kind == VolumeKind::standard ? "expected a standard volume element" : "expected a metric volume element");
  }
}

double sign_q(const MetricStructure& m) { return (m.q() & 1) ? -1.0 : 1.0; }

}  // namespace

VolumeElement standard_volume(const AlgebraContext& ctx) {
  return {Multivector::pseudoscalar(ctx), VolumeKind::standard, 1.0};
}

VolumeElement standard_volume(const Basis& b) {
  const Multivector lower = b.wedge_all();
  const Multivector upper = b.reciprocal().wedge_all();
  return {std::sqrt(scalar_product(lower, lower)) * upper, VolumeKind::standard, 1.0};
}

Multivector hodge_standard(const Multivector& x) { return hodge_standard(x, standard_volume(x.context())); }

Multivector hodge_standard(const Multivector& x, const VolumeElement& vol) {
  require_kind(vol, VolumeKind::standard);
  return left_contraction(reversion(x), vol.tau);
}

Multivector hodge_standard_inv(const Multivector& x) { return hodge_standard_inv(x, standard_volume(x.context())); }

Multivector hodge_standard_inv(const Multivector& x, const VolumeElement& vol) {
  require_kind(vol, VolumeKind::standard);
  return right_contraction(vol.tau, reversion(x));
}

VolumeElement metric_volume(const MetricStructure& m) {
  return {std::sqrt(std::abs(m.det())) * Multivector::pseudoscalar(m.context()), VolumeKind::metric, m.det()};
}

VolumeElement metric_volume(const MetricStructure& m, const Basis& b) {
  m.context().require_same(b.context());
  // g(e_wedge) . e_wedge rather than against e^wedge: only this scaling makes
  // the result equal sqrt|det g| tau for bases that are not unimodular.
  const Multivector lower = b.wedge_all();
  const Multivector upper = b.reciprocal().wedge_all();
  const double s = std::abs(g_scalar_product(m, lower, lower));
  return {std::sqrt(s) * upper, VolumeKind::metric, m.det()};
}

Multivector hodge_metric(const MetricStructure& m, const Multivector& x) {
  return hodge_metric(m, x, metric_volume(m));
}

Multivector hodge_metric(const MetricStructure& m, const Multivector& x, const VolumeElement& vol) {
  require_kind(vol, VolumeKind::metric);
  return g_contraction(m, reversion(x), vol.tau, Side::left, true);
}

Multivector hodge_metric_inv(const MetricStructure& m, const Multivector& x) {
  return hodge_metric_inv(m, x, metric_volume(m));
}

Multivector hodge_metric_inv(const MetricStructure& m, const Multivector& x, const VolumeElement& vol) {
  require_kind(vol, VolumeKind::metric);
  return sign_q(m) * g_contraction(m, vol.tau, reversion(x), Side::right, true);
}

Multivector hodge_metric_via_standard(const MetricStructure& m, const Multivector& x) {
  return hodge_metric_via_standard(m, x, standard_volume(m.context()));
}

Multivector hodge_metric_via_standard(const MetricStructure& m, const Multivector& x, const VolumeElement& vol) {
  const double factor = sign_q(m) / std::sqrt(std::abs(m.det()));
  return factor * apply_extended(m.g(), hodge_standard(x, vol));
}

Multivector hodge_metric_via_gauge(const MetricStructure& m, const Multivector& x) {
  return hodge_metric_via_gauge(m, x, standard_volume(m.context()));
}

Multivector hodge_metric_via_gauge(const MetricStructure& m, const Multivector& x, const VolumeElement& vol) {
  require_kind(vol, VolumeKind::standard);
  const double sgn_h = determinant(m.h()) < 0.0 ? -1.0 : 1.0;
  const Multivector y = apply_extended(m.h_star(), x);
  // *_eta: eta is its own inverse and tau_eta = tau.
  const Multivector star_eta = left_contraction(apply_extended(m.eta(), reversion(y)), vol.tau);
  return sgn_h * apply_extended(adjoint(m.h()), star_eta);
}

}  // namespace ga
