#include "schwarzkit/projective_metrics.hpp"

#include <cmath>
#include <string>

namespace schwarzkit {

namespace {

void require_same_dim(const CVector& a, const CVector& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

void require_p(double p) {
  if (!(std::isfinite(p) && p >= 2.0)) {
    throw ParameterError("distance exponent p must be finite and >= 2, got " +
                         std::to_string(p));
  }
}

void require_nonzero(const CVector& v, const char* op) {
  if (v.is_zero()) {
    throw ValidationError(std::string(op) + ": zero vector has no direction");
  }
}

}  // namespace

double d_p(const CVector& x, const CVector& y, double p, const Tolerance& tol) {
  require_p(p);
  require_same_dim(x, y, "d_p");
  require_nonzero(x, "d_p");
  require_nonzero(y, "d_p");
  return dp_from_sin2(sin2_modulus(x, y, tol), p);
}

double delta_p(const CVector& x, const CVector& y, double p, const Tolerance& tol) {
  require_p(p);
  require_same_dim(x, y, "delta_p");
  require_nonzero(x, "delta_p");
  require_nonzero(y, "delta_p");
  return dp_from_sin2(sin2_real(x, y, tol), p);
}

double dp_noise_floor(double p, const Tolerance& tol) {
  require_p(p);
  return dp_from_sin2(std::min(1.0, tol.abs_eps * tol.abs_eps), p);
}

namespace {

// cos of the Psi angle, clamped to [0, 1]; clamping beyond tol is internal.
double cos_psi(const CVector& x, const CVector& y, const Tolerance& tol) {
  const double denom = norm(x) * norm(y);
  double r = std::abs(inner(x, y)) / denom;
  if (r > 1.0) {
    if ((r - 1.0) * denom > tol.slack(denom, denom)) {
      throw InternalError("cos Psi ratio " + std::to_string(r) + " exceeds 1 beyond tolerance");
    }
    r = 1.0;
  }
  return r;
}

// signed cos of the Phi angle, clamped to [-1, 1].
double cos_phi(const CVector& x, const CVector& y, const Tolerance& tol) {
  const double denom = norm(x) * norm(y);
  double r = inner(x, y).real() / denom;
  if (std::abs(r) > 1.0) {
    if ((std::abs(r) - 1.0) * denom > tol.slack(denom, denom)) {
      throw InternalError("cos Phi ratio " + std::to_string(r) +
                          " outside [-1,1] beyond tolerance");
    }
    r = std::clamp(r, -1.0, 1.0);
  }
  return r;
}

double sin_psi(const CVector& x, const CVector& y, const Tolerance& tol) {
  return std::sqrt(sin2_modulus(x, y, tol));
}

double sin_phi(const CVector& x, const CVector& y, const Tolerance& tol) {
  return std::sqrt(sin2_real(x, y, tol));
}

}  // namespace

AngleValue angle(const CVector& x, const CVector& y, AngleKind kind, const Tolerance& tol) {
  require_same_dim(x, y, "angle");
  require_nonzero(x, "angle");
  require_nonzero(y, "angle");
  // atan2(sin, cos) keeps full relative accuracy at small angles, where acos
  // of a cosine computed near 1 would quantize to ~1e-8 steps.
  if (kind == AngleKind::Psi) {
    return AngleValue{std::atan2(sin_psi(x, y, tol), cos_psi(x, y, tol)), kind};
  }
  return AngleValue{std::atan2(sin_phi(x, y, tol), cos_phi(x, y, tol)), kind};
}

BoundReport triangle_check(TriangleKind kind, const CVector& x, const CVector& y,
                           const CVector& z, double p, const Tolerance& tol) {
  require_same_dim(x, y, "triangle_check");
  require_same_dim(x, z, "triangle_check");
  require_nonzero(x, "triangle_check");
  require_nonzero(y, "triangle_check");
  require_nonzero(z, "triangle_check");

  switch (kind) {
    case TriangleKind::CosLower: {
      const double lhs = cos_psi(x, y, tol);
      const double rhs = cos_psi(x, z, tol) * cos_psi(z, y, tol) -
                         sin_psi(x, z, tol) * sin_psi(z, y, tol);
      return make_report("cos_lower", lhs, rhs, tol);
    }
    case TriangleKind::LinPsi: {
      const double sum = angle(x, z, AngleKind::Psi, tol).radians +
                         angle(z, y, AngleKind::Psi, tol).radians;
      return make_report("angle_psi", sum, angle(x, y, AngleKind::Psi, tol).radians, tol);
    }
    case TriangleKind::Krein: {
      const double sum = angle(x, z, AngleKind::Phi, tol).radians +
                         angle(z, y, AngleKind::Phi, tol).radians;
      return make_report("angle_phi", sum, angle(x, y, AngleKind::Phi, tol).radians, tol);
    }
    case TriangleKind::WangZhangSinPsi: {
      const double sum = sin_psi(x, z, tol) + sin_psi(z, y, tol);
      return make_report("sin_psi", sum, sin_psi(x, y, tol), tol);
    }
    case TriangleKind::SinPhi: {
      const double sum = sin_phi(x, z, tol) + sin_phi(z, y, tol);
      return make_report("sin_phi", sum, sin_phi(x, y, tol), tol);
    }
    case TriangleKind::Dp:
    case TriangleKind::DeltaP: {
      require_p(p);
      const bool modulus = kind == TriangleKind::Dp;
      const auto dist = [&](const CVector& a, const CVector& b) {
        return modulus ? d_p(a, b, p, tol) : delta_p(a, b, p, tol);
      };
      const double sum = dist(x, z) + dist(z, y);
      // Three distance evaluations, each uncertain to the d_p noise floor:
      // widen the absolute slack accordingly or rounding on parallel inputs
      // shows up as a fake violation.
      Tolerance widened = tol;
      widened.abs_eps += 3.0 * dp_noise_floor(p, tol);
      return make_report(modulus ? "dist_p" : "dist_delta_p", sum, dist(x, y), widened);
    }
  }
  throw ParameterError("triangle_check: unknown kind");
}

}  // namespace schwarzkit
