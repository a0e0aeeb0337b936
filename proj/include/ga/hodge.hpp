#pragma once

#include "ga/basis.hpp"
#include "ga/metric.hpp"
#include "ga/multivector.hpp"

namespace ga {

enum class VolumeKind { standard, metric };

/// A volume pseudoscalar. metric_det is det[g] for metric volumes and 1 for
/// standard ones.
struct VolumeElement {
  Multivector tau;
  VolumeKind kind = VolumeKind::standard;
  double metric_det = 1.0;
};

/// tau = e_1 ^ ... ^ e_n of the orthonormal frame.
VolumeElement standard_volume(const AlgebraContext& ctx);
/// tau = sqrt(e_wedge . e_wedge) e^wedge for an arbitrary basis. Its sign
/// follows the orientation of the basis.
VolumeElement standard_volume(const Basis& b);

/// *X = reversion(X) _| tau
Multivector hodge_standard(const Multivector& x);
Multivector hodge_standard(const Multivector& x, const VolumeElement& vol);
/// *^-1 X = tau |_ reversion(X)
Multivector hodge_standard_inv(const Multivector& x);
Multivector hodge_standard_inv(const Multivector& x, const VolumeElement& vol);

/// tau_g = sqrt|det g| tau on the orthonormal frame.
VolumeElement metric_volume(const MetricStructure& m);
/// tau_g = sqrt|g-bar(e_wedge) . e_wedge| e^wedge = sqrt|det g| tau
VolumeElement metric_volume(const MetricStructure& m, const Basis& b);

/// *_g X = (g-bar^-1 reversion(X)) _| tau_g
Multivector hodge_metric(const MetricStructure& m, const Multivector& x);
Multivector hodge_metric(const MetricStructure& m, const Multivector& x, const VolumeElement& vol);
/// *_g^-1 X = (-1)^q tau_g |_ (g-bar^-1 reversion(X))
Multivector hodge_metric_inv(const MetricStructure& m, const Multivector& x);
Multivector hodge_metric_inv(const MetricStructure& m, const Multivector& x, const VolumeElement& vol);

/// ((-1)^q / sqrt|det g|) g-bar(*X), with * taken against the standard volume.
Multivector hodge_metric_via_standard(const MetricStructure& m, const Multivector& x);
Multivector hodge_metric_via_standard(const MetricStructure& m, const Multivector& x, const VolumeElement& vol);

/// sgn(det h) h-bar+(*_eta(h-bar*(X))), where *_eta uses the standard volume.
Multivector hodge_metric_via_gauge(const MetricStructure& m, const Multivector& x);
Multivector hodge_metric_via_gauge(const MetricStructure& m, const Multivector& x, const VolumeElement& vol);

}  // namespace ga
