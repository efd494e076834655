#include "schwarzkit/projections.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "schwarzkit/jsonfmt.hpp"

namespace schwarzkit {

Projector::Projector(std::size_t dim, std::vector<CVector> family)
    : dim_(dim), family_(std::move(family)) {}

Projector Projector::zero(std::size_t dim) {
  if (dim == 0) throw ParameterError("Projector::zero: dim must be >= 1");
  return Projector(dim, {});
}

Projector Projector::identity(std::size_t dim) {
  std::vector<CVector> family;
  family.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) family.push_back(CVector::basis(dim, k));
  return make_projector(std::move(family));
}

Projector make_projector(std::vector<CVector> family, double gram_tol) {
  if (family.empty()) {
    // A rank-0 projector carries no ambient dimension of its own; dim() == 0
    // marks it as matching vectors of any dimension.
    return Projector(0, {});
  }
  const std::size_t dim = family[0].dim();
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].dim() != dim) {
      throw DimensionError("make_projector: member " + std::to_string(i) + " has dim " +
                           std::to_string(family[i].dim()) + ", expected " +
                           std::to_string(dim));
    }
  }
  if (family.size() > dim) {
    throw ValidationError("make_projector: family of size " + std::to_string(family.size()) +
                          " cannot be orthonormal in dimension " + std::to_string(dim));
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      const Complex g = inner(family[i], family[j]);
      const double expected = (i == j) ? 1.0 : 0.0;
      const double dev = std::abs(g - Complex{expected, 0.0});
      if (dev > gram_tol) {
        throw ValidationError("make_projector: family is not orthonormal at pair (" +
                              std::to_string(i) + ", " + std::to_string(j) + "): |<u_" +
                              std::to_string(i) + ",u_" + std::to_string(j) + "> - " +
                              (i == j ? "1" : "0") + "| = " + jsonfmt::number(dev) +
                              " exceeds " + jsonfmt::number(gram_tol));
      }
    }
  }
  return Projector(dim, std::move(family));
}

namespace {

void require_dim(const Projector& P, const CVector& x, const char* op) {
  if (P.dim() != 0 && x.dim() != P.dim()) {
    throw DimensionError(std::string(op) + ": vector dim " + std::to_string(x.dim()) +
                         " does not match projector dim " + std::to_string(P.dim()));
  }
}

}  // namespace

std::vector<Complex> Projector::coefficients(const CVector& x) const {
  require_dim(*this, x, "Projector::coefficients");
  std::vector<Complex> c;
  c.reserve(family_.size());
  for (const CVector& u : family_) c.push_back(inner(x, u));
  return c;
}

CVector Projector::apply(const CVector& x) const {
  const std::vector<Complex> c = coefficients(x);
  std::vector<Complex> out(dim_ == 0 ? x.dim() : dim_, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < family_.size(); ++j) {
    for (std::size_t k = 0; k < dim_; ++k) out[k] += c[j] * family_[j][k];
  }
  return CVector(std::move(out));
}

double Projector::quadratic_form(const CVector& x) const {
  const std::vector<Complex> c = coefficients(x);
  CompensatedSum s;
  for (const Complex& v : c) {
    s.add(v.real() * v.real());
    s.add(v.imag() * v.imag());
  }
  return s.value();
}

Complex Projector::cross_form(const CVector& x, const CVector& y) const {
  require_dim(*this, x, "Projector::cross_form");
  require_dim(*this, y, "Projector::cross_form");
  CompensatedSum re, im;
  for (const CVector& u : family_) {
    const Complex a = inner(x, u);
    const Complex b = inner(y, u);  // <u, y> = conj(<y, u>)
    // a * conj(b)
    re.add(a.real() * b.real());
    re.add(a.imag() * b.imag());
    im.add(a.imag() * b.real());
    im.add(-a.real() * b.imag());
  }
  return Complex{re.value(), im.value()};
}

ProjectionBounds projection_bound(const Projector& P, const CVector& x, const CVector& y,
                                  const Tolerance& tol) {
  require_dim(P, x, "projection_bound");
  require_dim(P, y, "projection_bound");

  const double nx = norm(x);
  const double ny = norm(y);
  const Complex xy = inner(x, y);
  const Complex pxy = P.cross_form(x, y);

  // <Px,x> and <Py,y> are sums of |coefficient|^2; clamp only rounding dust.
  double qx = P.quadratic_form(x);
  double qy = P.quadratic_form(y);
  if (qx < 0.0 && qx >= -tol.slack(qx, nx * nx)) qx = 0.0;
  if (qy < 0.0 && qy >= -tol.slack(qy, ny * ny)) qy = 0.0;

  const double bessel = std::sqrt(qx) * std::sqrt(qy);
  const BoundReport refinement =
      make_report("projection", nx * ny, bessel + std::abs(xy - pxy), tol);

  // Both chain sides are differences that cancel when the pair is near
  // parallel; (a - b) = (a^2 - b^2)/(a + b) with a structurally nonnegative
  // numerator keeps them meaningful at any scale.
  const double lhs_den = nx * ny + std::abs(xy);
  const double lhs = lhs_den > 0.0 ? gram_modulus(x, y) / lhs_den : 0.0;

  // In coefficient space: <Px,x><Py,y> - |<Px,y>|^2 is the Gram determinant of
  // the coefficient vectors, so reuse the same rejection kernel.
  double rhs = 0.0;
  if (P.rank() > 0) {
    const CVector cx(P.coefficients(x));
    const CVector cy(P.coefficients(y));
    const double rhs_den = bessel + std::abs(pxy);
    rhs = rhs_den > 0.0 ? gram_modulus(cx, cy) / rhs_den : 0.0;
  }
  const BoundReport chain = make_report("projection_chain", lhs, rhs, tol);

  return ProjectionBounds{refinement, chain};
}

}  // namespace schwarzkit
