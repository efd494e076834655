#include "schwarzkit/ntuple_apps.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace schwarzkit {

namespace {

void require_same_dim(const CVector& a, const CVector& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": length mismatch " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

void require_p(double p, const char* op) {
  if (!(std::isfinite(p) && p >= 2.0)) {
    throw ParameterError(std::string(op) + ": p must be finite and >= 2, got " +
                         std::to_string(p));
  }
}

// num/den in [0, 1] up to rounding; clamp dust, reject real excess.
double unit_ratio(double num, double den, const Tolerance& tol, const char* op) {
  if (den == 0.0) return 0.0;
  double r = num / den;
  if (r < 0.0 || r > 1.0) {
    const double excess = r < 0.0 ? -r : r - 1.0;
    if (excess * den > tol.slack(num, den)) {
      throw InternalError(std::string(op) + ": ratio " + std::to_string(r) +
                          " outside [0,1] beyond tolerance");
    }
    r = std::clamp(r, 0.0, 1.0);
  }
  return r;
}

// (||x|| ||y||)^p (1 - u^p / (||x||^p ||y||^p)) with u = |<x,y>|; 0 for zero tuples.
double pform_lhs(const CVector& x, const CVector& y, double p, const Tolerance& tol) {
  const double nx = norm(x);
  const double ny = norm(y);
  if (nx == 0.0 || ny == 0.0) return 0.0;
  return std::pow(nx * ny, p) * dp_pth_power(sin2_modulus(x, y, tol), p);
}

// Direct sum over k != m of |v_k|^2: never computed as total - term.
std::vector<double> tail_sums(const CVector& v) {
  const std::size_t n = v.dim();
  std::vector<double> tails(n);
  for (std::size_t m = 0; m < n; ++m) {
    CompensatedSum s;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == m) continue;
      s.add(v[k].real() * v[k].real());
      s.add(v[k].imag() * v[k].imag());
    }
    tails[m] = s.value();
  }
  return tails;
}

}  // namespace

NTupleReport general_e_bound(const CVector& x, const CVector& y, const CVector& e, double p,
                             NTupleOrder order, const Tolerance& tol) {
  require_same_dim(x, y, "general_e_bound");
  require_same_dim(x, e, "general_e_bound");

  NTupleReport out;
  out.family = NTupleFamily::GeneralWeight;
  if (order == NTupleOrder::PForm) {
    out.base = detp_bound(x, y, e, MetricParams{p, Mode::Modulus}, tol);
    out.base.label = "ntuple_general_p";
  } else if (order == NTupleOrder::Quadratic) {
    out.base = det2_bound(x, y, e, Mode::Modulus, tol);
    const auto colon = out.base.label.find(':');
    out.base.label = colon == std::string::npos
                         ? "ntuple_general_quad"
                         : "ntuple_general_quad" + out.base.label.substr(colon);
  } else {
    throw ParameterError("general_e_bound: P2Simple applies to basis_max_bound only");
  }
  return out;
}

NTupleReport basis_max_bound(const CVector& x, const CVector& y, double p, NTupleOrder order,
                             const Tolerance& tol) {
  require_same_dim(x, y, "basis_max_bound");
  if (order == NTupleOrder::PForm) require_p(p, "basis_max_bound");

  const std::size_t n = x.dim();
  const double nx = norm(x);
  const double ny = norm(y);
  const double nx2 = nx * nx;
  const double ny2 = ny * ny;
  const std::vector<double> tx = tail_sums(x);
  const std::vector<double> ty = tail_sums(y);

  double best = -1.0;
  std::size_t best_m = 0;
  for (std::size_t m = 0; m < n; ++m) {
    double value = 0.0;
    switch (order) {
      case NTupleOrder::PForm: {
        if (nx > 0.0 && ny > 0.0) {
          const double fx = dp_from_sin2(unit_ratio(tx[m], nx2, tol, "basis_max_bound"), p);
          const double fy = dp_from_sin2(unit_ratio(ty[m], ny2, tol, "basis_max_bound"), p);
          value = std::pow(nx * ny * std::abs(fy - fx), p);
        }
        break;
      }
      case NTupleOrder::Quadratic: {
        const double det = std::abs(x[m]) * std::sqrt(ty[m]) - std::abs(y[m]) * std::sqrt(tx[m]);
        value = det * det;
        break;
      }
      case NTupleOrder::P2Simple: {
        const double det = nx * std::sqrt(ty[m]) - ny * std::sqrt(tx[m]);
        value = det * det;
        break;
      }
    }
    if (value > best) {  // strict: ties keep the smallest m
      best = value;
      best_m = m;
    }
  }

  const double lhs =
      order == NTupleOrder::PForm ? pform_lhs(x, y, p, tol) : gram_modulus(x, y);
  const char* label = order == NTupleOrder::PForm      ? "ntuple_basis_p"
                      : order == NTupleOrder::Quadratic ? "ntuple_basis_quad"
                                                        : "ntuple_basis_p2";
  NTupleReport out;
  out.family = NTupleFamily::BasisMax;
  out.base = make_report(label, lhs, best, tol);
  out.argmax_m = best_m + 1;  // positions are 1-based in reports
  return out;
}

NTupleReport mean_bound(const CVector& x, const CVector& y, double p, NTupleOrder order,
                        const Tolerance& tol) {
  require_same_dim(x, y, "mean_bound");
  if (order == NTupleOrder::P2Simple) {
    throw ParameterError("mean_bound: P2Simple applies to basis_max_bound only");
  }
  if (order == NTupleOrder::PForm) require_p(p, "mean_bound");

  const std::size_t n = x.dim();
  const double dn = static_cast<double>(n);

  const auto mean_of = [&](const CVector& v) {
    CompensatedSum re, im;
    for (std::size_t k = 0; k < n; ++k) {
      re.add(v[k].real());
      im.add(v[k].imag());
    }
    return Complex{re.value() / dn, im.value() / dn};
  };
  // Two-pass centered second moment: nonnegative by construction and exact in
  // the constant-tuple case, where the sum-of-squares difference would cancel.
  const auto variance_of = [&](const CVector& v, const Complex& mean) {
    CompensatedSum s;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex c = v[k] - mean;
      s.add(c.real() * c.real());
      s.add(c.imag() * c.imag());
    }
    return s.value() / dn;
  };

  const Complex mean_x = mean_of(x);
  const Complex mean_y = mean_of(y);
  const double mx = std::abs(mean_x);
  const double my = std::abs(mean_y);
  const double var_x = variance_of(x, mean_x);
  const double var_y = variance_of(y, mean_y);

  NTupleReport out;
  out.family = NTupleFamily::UniformMean;

  if (order == NTupleOrder::Quadratic) {
    const double det = mx * std::sqrt(var_y) - my * std::sqrt(var_x);
    out.base = make_report("ntuple_mean_quad", gram_modulus(x, y), dn * dn * det * det, tol);
    return out;
  }

  // PForm: root mean squares ax, ay; det = ax ay (f(my/ay) - f(mx/ax)) with
  // f(c) = (1 - c^p)^(1/p) fed by 1 - c^2 = var / rms^2.
  const double ax = norm(x) / std::sqrt(dn);
  const double ay = norm(y) / std::sqrt(dn);
  double det = 0.0;
  if (ax > 0.0 && ay > 0.0) {
    const double fx = dp_from_sin2(unit_ratio(var_x, ax * ax, tol, "mean_bound"), p);
    const double fy = dp_from_sin2(unit_ratio(var_y, ay * ay, tol, "mean_bound"), p);
    det = ax * ay * (fy - fx);
  }
  const double rhs = std::pow(dn * std::abs(det), p);
  out.base = make_report("ntuple_mean_p", pform_lhs(x, y, p, tol), rhs, tol);
  return out;
}

}  // namespace schwarzkit
