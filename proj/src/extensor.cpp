#include "ga/extensor.hpp"

#include <string>
#include <utility>

#include "ga/error.hpp"

namespace ga {
namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorKind::shape_mismatch, std::string(what) + " matrix must be " +
                                               std::to_string(rows) + "x" + std::to_string(cols) +
                                               ", got " + std::to_string(m.rows()) + "x" +
                                               std::to_string(m.cols()));
  }
}

void require_grade(int k, int dim) {
  if (k < 0 || k > dim) {
    throw Error(ErrorKind::out_of_range, "grade " + std::to_string(k) + " outside 0.." + std::to_string(dim));
  }
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- LinOp

LinOp::LinOp(AlgebraContext ctx, Matrix m) : ctx_(ctx), m_(std::move(m)) {
  const auto n = static_cast<std::size_t>(ctx_.dim());
  require_shape(m_, n, n, "linear operator");
}

LinOp LinOp::identity(AlgebraContext ctx) {
  return LinOp(ctx, Matrix::identity(static_cast<std::size_t>(ctx.dim())));
}

LinOp LinOp::from_images(AlgebraContext ctx, const std::vector<std::vector<double>>& images) {
  const auto n = static_cast<std::size_t>(ctx.dim());
  if (images.size() != n) throw Error(ErrorKind::shape_mismatch, "need one image per basis vector");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, images[j]);
  return LinOp(ctx, std::move(m));
}

std::vector<double> LinOp::apply(std::span<const double> v) const { return multiply(m_, v); }

Multivector LinOp::apply(const Multivector& v) const {
  ctx_.require_same(v.context());
  const auto coords = v.vector_part();
  return Multivector::vector(ctx_, apply(std::span<const double>(coords)));
}

Multivector LinOp::image(int j) const {
  return Multivector::vector(ctx_, m_.column(static_cast<std::size_t>(j)));
}

LinOp LinOp::compose(const LinOp& inner) const {
  ctx_.require_same(inner.ctx_);
  return LinOp(ctx_, multiply(m_, inner.m_));
}

LinOp LinOp::symmetric_part() const { return LinOp(ctx_, (m_ + m_.transpose()) * 0.5); }
LinOp LinOp::skew_part() const { return LinOp(ctx_, (m_ - m_.transpose()) * 0.5); }

LinOp& LinOp::operator+=(const LinOp& o) {
  ctx_.require_same(o.ctx_);
  m_ += o.m_;
  return *this;
}
LinOp& LinOp::operator-=(const LinOp& o) {
  ctx_.require_same(o.ctx_);
  m_ -= o.m_;
  return *this;
}
LinOp& LinOp::operator*=(double s) {
  m_ *= s;
  return *this;
}

// ------------------------------------------------------- GeneralExtensor

GeneralExtensor::GeneralExtensor(AlgebraContext ctx, Matrix m) : ctx_(ctx), m_(std::move(m)) {
  require_shape(m_, ctx_.blade_count(), ctx_.blade_count(), "general extensor");
}

GeneralExtensor GeneralExtensor::identity(AlgebraContext ctx) {
  return GeneralExtensor(ctx, Matrix::identity(ctx.blade_count()));
}

Multivector GeneralExtensor::apply(const Multivector& x) const {
  ctx_.require_same(x.context());
  return Multivector(ctx_, multiply(m_, x.coeffs()));
}

GeneralExtensor GeneralExtensor::compose(const GeneralExtensor& inner) const {
  ctx_.require_same(inner.ctx_);
  return GeneralExtensor(ctx_, multiply(m_, inner.m_));
}

GeneralExtensor GeneralExtensor::symmetric_part() const {
  return GeneralExtensor(ctx_, (m_ + m_.transpose()) * 0.5);
}
GeneralExtensor GeneralExtensor::skew_part() const {
  return GeneralExtensor(ctx_, (m_ - m_.transpose()) * 0.5);
}

GeneralExtensor& GeneralExtensor::operator+=(const GeneralExtensor& o) {
  ctx_.require_same(o.ctx_);
  m_ += o.m_;
  return *this;
}
GeneralExtensor& GeneralExtensor::operator-=(const GeneralExtensor& o) {
  ctx_.require_same(o.ctx_);
  m_ -= o.m_;
  return *this;
}
GeneralExtensor& GeneralExtensor::operator*=(double s) {
  m_ *= s;
  return *this;
}

// ------------------------------------------------------ GradeSetExtensor

GradeSetExtensor::GradeSetExtensor(AlgebraContext ctx, GradeSet domain, GradeSet codomain, Matrix m)
    : ctx_(ctx), domain_(domain), codomain_(codomain), m_(std::move(m)) {
  domain_.validate(ctx_.dim());
  codomain_.validate(ctx_.dim());
  in_ = blades_in(ctx_.dim(), domain_);
  out_ = blades_in(ctx_.dim(), codomain_);
  require_shape(m_, out_.size(), in_.size(), "grade-set extensor");
}

GradeSetExtensor GradeSetExtensor::zero(AlgebraContext ctx, GradeSet domain, GradeSet codomain) {
  return GradeSetExtensor(ctx, domain, codomain,
                          Matrix(blades_in(ctx.dim(), codomain).size(), blades_in(ctx.dim(), domain).size()));
}

GradeSetExtensor GradeSetExtensor::restrict(const GeneralExtensor& g, GradeSet domain, GradeSet codomain) {
  GradeSetExtensor out = zero(g.context(), domain, codomain);
  for (std::size_t r = 0; r < out.out_.size(); ++r)
    for (std::size_t c = 0; c < out.in_.size(); ++c) out.m_(r, c) = g.matrix()(out.out_[r], out.in_[c]);
  return out;
}

GradeSetExtensor GradeSetExtensor::from_linop(const LinOp& t) {
  return GradeSetExtensor(t.context(), GradeSet{1}, GradeSet{1}, t.matrix());
}

Multivector GradeSetExtensor::apply(const Multivector& x) const {
  ctx_.require_same(x.context());
  std::vector<double> in(in_.size());
  for (std::size_t c = 0; c < in_.size(); ++c) in[c] = x[in_[c]];
  const auto y = multiply(m_, in);
  Multivector out(ctx_);
  for (std::size_t r = 0; r < out_.size(); ++r) out[out_[r]] = y[r];
  return out;
}

GradeSetExtensor GradeSetExtensor::compose(const GradeSetExtensor& inner) const {
  ctx_.require_same(inner.ctx_);
  if (!(inner.codomain_ == domain_)) {
    throw Error(ErrorKind::shape_mismatch, "composition needs inner codomain == outer domain");
  }
  return GradeSetExtensor(ctx_, inner.domain_, codomain_, multiply(m_, inner.m_));
}

GradeSetExtensor GradeSetExtensor::transpose() const {
  return GradeSetExtensor(ctx_, codomain_, domain_, m_.transpose());
}

GeneralExtensor GradeSetExtensor::to_general() const {
  Matrix m(ctx_.blade_count(), ctx_.blade_count());
  for (std::size_t r = 0; r < out_.size(); ++r)
    for (std::size_t c = 0; c < in_.size(); ++c) m(out_[r], in_[c]) = m_(r, c);
  return GeneralExtensor(ctx_, std::move(m));
}

// ------------------------------------------------------------ PQExtensor

PQExtensor::PQExtensor(AlgebraContext ctx, int p, int q, Matrix m)
    : ctx_(ctx), p_(p), q_(q), m_(std::move(m)) {
  require_grade(p, ctx_.dim());
  require_grade(q, ctx_.dim());
  in_ = blades_of_grade(ctx_.dim(), p);
  out_ = blades_of_grade(ctx_.dim(), q);
  require_shape(m_, out_.size(), in_.size(), "(p,q)-extensor");
}

PQExtensor PQExtensor::zero(AlgebraContext ctx, int p, int q) {
  require_grade(p, ctx.dim());
  require_grade(q, ctx.dim());
  return PQExtensor(ctx, p, q,
                    Matrix(binomial(ctx.dim(), q), binomial(ctx.dim(), p)));
}

PQExtensor PQExtensor::restrict(const GeneralExtensor& g, int p, int q) {
  const auto block = GradeSetExtensor::restrict(g, GradeSet::single(p), GradeSet::single(q));
  return PQExtensor(g.context(), p, q, block.matrix());
}

Multivector PQExtensor::apply(const Multivector& x) const { return as_grade_set().apply(x); }

GradeSetExtensor PQExtensor::as_grade_set() const {
  return GradeSetExtensor(ctx_, GradeSet::single(p_), GradeSet::single(q_), m_);
}

// --------------------------------------------------- ElementaryKExtensor

ElementaryKExtensor::ElementaryKExtensor(AlgebraContext ctx, int k, int q, Matrix values)
    : ctx_(ctx), k_(k), q_(q), values_(std::move(values)) {
  if (k < 1) throw Error(ErrorKind::out_of_range, "arity must be at least 1");
  require_grade(q, ctx_.dim());
  const std::uint64_t rows = ipow(static_cast<std::uint64_t>(ctx_.dim()), k);
  if (rows * binomial(ctx_.dim(), q) > (std::uint64_t{1} << 24)) {
    throw Error(ErrorKind::limit_exceeded, "elementary extensor too large to materialize");
  }
  out_ = blades_of_grade(ctx_.dim(), q);
  require_shape(values_, rows, out_.size(), "elementary k-extensor");
}

ElementaryKExtensor ElementaryKExtensor::zero(AlgebraContext ctx, int k, int q) {
  const std::uint64_t rows = ipow(static_cast<std::uint64_t>(ctx.dim()), k);
  return ElementaryKExtensor(ctx, k, q, Matrix(rows, binomial(ctx.dim(), q)));
}

ElementaryKExtensor ElementaryKExtensor::from_pq(const PQExtensor& t) {
  if (t.p() != 1) throw Error(ErrorKind::invalid_argument, "only (1,q)-extensors are elementary 1-extensors");
  return ElementaryKExtensor(t.context(), 1, t.q(), t.matrix().transpose());
}

Multivector ElementaryKExtensor::evaluate(std::span<const Multivector> vectors) const {
  if (vectors.size() != static_cast<std::size_t>(k_)) {
    throw Error(ErrorKind::shape_mismatch, "elementary extensor of arity " + std::to_string(k_) +
                                               " given " + std::to_string(vectors.size()) + " arguments");
  }
  const auto n = static_cast<std::size_t>(ctx_.dim());
  std::vector<std::vector<double>> coords;
  for (const auto& v : vectors) {
    ctx_.require_same(v.context());
    coords.push_back(v.vector_part());
  }
  // Multilinearity: sum over index tuples of prod_i v_i[j_i] * t(e_j...).
  std::vector<double> acc(out_.size(), 0.0);
  std::vector<std::size_t> idx(static_cast<std::size_t>(k_), 0);
  for (std::size_t r = 0; r < values_.rows(); ++r) {
    double w = 1.0;
    for (std::size_t i = 0; i < idx.size() && w != 0.0; ++i) w *= coords[i][idx[i]];
    if (w != 0.0) {
      const auto row = values_.row(r);
      for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += w * row[c];
    }
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < n) break;
      idx[i] = 0;
    }
  }
  Multivector out(ctx_);
  for (std::size_t c = 0; c < out_.size(); ++c) out[out_[c]] = acc[c];
  return out;
}

// ------------------------------------------------------------ dimensions

std::uint64_t dim_grade_set(int dim, GradeSet s) {
  s.validate(dim);
  std::uint64_t total = 0;
  for (int k : s.grades()) total += binomial(dim, k);
  return total;
}

std::uint64_t dim_extensor_space(int dim, std::span<const GradeSet> arguments, GradeSet codomain) {
  std::uint64_t total = dim_grade_set(dim, codomain);
  for (const auto& a : arguments) total *= dim_grade_set(dim, a);
  return total;
}

std::uint64_t dim_pq_space(int dim, int p, int q) {
  require_grade(p, dim);
  require_grade(q, dim);
  const GradeSet arg = GradeSet::single(p);
  return dim_extensor_space(dim, std::span<const GradeSet>(&arg, 1), GradeSet::single(q));
}

std::uint64_t dim_general_space(int dim) {
  const GradeSet all = GradeSet::all(dim);
  return dim_extensor_space(dim, std::span<const GradeSet>(&all, 1), all);
}

std::uint64_t dim_elementary_space(int dim, int k, int q) {
  require_grade(q, dim);
  const std::vector<GradeSet> args(static_cast<std::size_t>(k), GradeSet::single(1));
  return dim_extensor_space(dim, args, GradeSet::single(q));
}

}  // namespace ga
