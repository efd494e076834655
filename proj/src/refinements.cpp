#include "schwarzkit/refinements.hpp"

#include <cmath>
#include <string>

namespace schwarzkit {

std::string mode_name(Mode m) { return m == Mode::Modulus ? "modulus" : "real"; }

void MetricParams::validate() const {
  if (!(std::isfinite(p) && p >= 2.0)) {
    throw ParameterError("MetricParams: p must be finite and >= 2, got " + std::to_string(p));
  }
}

namespace {

void require_same_dim(const CVector& a, const CVector& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

void require_unit(const CVector& e, const Tolerance& tol, const char* op) {
  const double n = norm(e);
  if (std::abs(n - 1.0) > tol.slack(n, 1.0)) {
    throw ValidationError(std::string(op) + ": e must be a unit vector, ||e|| = " +
                          std::to_string(n));
  }
}

void require_nonzero(const CVector& v, const char* op, const char* name) {
  if (v.is_zero()) {
    throw ValidationError(std::string(op) + ": " + name + " must be nonzero");
  }
}

double mode_scalar(const Complex& v, Mode mode) {
  return mode == Mode::Modulus ? std::abs(v) : std::abs(v.real());
}

double sin2_of(const CVector& a, const CVector& b, Mode mode, const Tolerance& tol) {
  return mode == Mode::Modulus ? sin2_modulus(a, b, tol) : sin2_real(a, b, tol);
}

double gram_of(const CVector& a, const CVector& b, Mode mode) {
  return mode == Mode::Modulus ? gram_modulus(a, b) : gram_real(a, b);
}

}  // namespace

BoundReport schwarz_bound(const CVector& x, const CVector& y, const Tolerance& tol) {
  require_same_dim(x, y, "schwarz_bound");
  return make_report("schwarz", norm(x) * norm(y), std::abs(inner(x, y)), tol);
}

BoundReport quad_refinement(const CVector& x, const CVector& y, const CVector& z,
                            const Tolerance& tol) {
  require_same_dim(x, y, "quad_refinement");
  require_same_dim(x, z, "quad_refinement");
  // Both Gram factors are nonnegative by construction, so the lhs never goes
  // negative from rounding even when z is (near) parallel to x or y.
  const double lhs = gram_modulus(z, x) * gram_modulus(z, y);
  const Complex num = inner(x, y) * norm_squared(z) - inner(x, z) * inner(z, y);
  const double r = std::abs(num);
  return make_report("quad", lhs, r * r, tol);
}

ChainResult rs_chain(const CVector& x, const CVector& y, const CVector& e,
                     const Tolerance& tol) {
  require_same_dim(x, y, "rs_chain");
  require_same_dim(x, e, "rs_chain");
  require_unit(e, tol, "rs_chain");

  const Complex xy = inner(x, y);
  const Complex through_e = inner(x, e) * inner(e, y);

  ChainResult c;
  c.product_norms = norm(x) * norm(y);
  c.split_sum = std::abs(xy - through_e) + std::abs(through_e);
  c.inner_modulus = std::abs(xy);
  c.upper = make_report("chain_upper", c.product_norms, c.split_sum, tol);
  c.lower = make_report("chain_lower", c.split_sum, c.inner_modulus, tol);
  return c;
}

BoundReport detp_bound(const CVector& x, const CVector& y, const CVector& e,
                       const MetricParams& params, const Tolerance& tol) {
  params.validate();
  require_same_dim(x, y, "detp_bound");
  require_same_dim(x, e, "detp_bound");
  require_unit(e, tol, "detp_bound");
  require_nonzero(x, "detp_bound", "x");
  require_nonzero(y, "detp_bound", "y");

  const double p = params.p;
  const double nx = norm(x);
  const double ny = norm(y);
  const double scale = std::pow(nx * ny, p);

  // lhs = (||x|| ||y||)^p (1 - r^p) with r = u/(||x|| ||y||); 1 - r^p comes from
  // the squared sine so near-parallel pairs keep relative accuracy.
  const double lhs = scale * dp_pth_power(sin2_of(x, y, params.mode, tol), p);

  // The determinant equals ||x|| ||y|| ((1 - t'^p)^(1/p) - (1 - s'^p)^(1/p))
  // with s' = s/||x||, t' = t/||y||: a difference of unit-sphere distance
  // values to e. (||x||^p - s^p) >= 0 holds exactly in this form, so the
  // 1/p-th powers never see a negative argument.
  const double fy = dp_from_sin2(sin2_of(y, e, params.mode, tol), p);
  const double fx = dp_from_sin2(sin2_of(x, e, params.mode, tol), p);
  const double det = nx * ny * (fy - fx);
  const double rhs = std::pow(std::abs(det), p);

  return make_report("detp_" + mode_name(params.mode), lhs, rhs, tol);
}

BoundReport det2_bound(const CVector& x, const CVector& y, const CVector& e, Mode mode,
                       const Tolerance& tol) {
  require_same_dim(x, y, "det2_bound");
  require_same_dim(x, e, "det2_bound");
  require_unit(e, tol, "det2_bound");

  const double s = mode_scalar(inner(x, e), mode);
  const double t = mode_scalar(inner(y, e), mode);

  // ||y||^2 - t^2 = gram(e, y) for unit e: nonnegative by construction.
  const double A = std::sqrt(gram_of(e, y, mode));
  const double B = std::sqrt(gram_of(e, x, mode));
  const double det = s * A - t * B;

  const double lhs = gram_of(x, y, mode);

  std::string label = "det2_" + mode_name(mode);
  const bool bessel = s <= tol.abs_eps;
  if (bessel) label += ":bessel";

  BoundReport r = make_report(std::move(label), lhs, det * det, tol);

  // x proportional to e collapses the second column; the bound is an identity
  // there and the report must say so even if the gap test alone is borderline.
  const double nx = norm(x);
  if (std::abs(nx - s) <= tol.slack(nx, s)) {
    r.equality = true;
    r.satisfied = true;
  }
  return r;
}

}  // namespace schwarzkit
