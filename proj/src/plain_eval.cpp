#include "schwarzkit/plain_eval.hpp"

#include <algorithm>
#include <cmath>

namespace schwarzkit::plain {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

double mag(const Vec& x, bool real_part, const Vec& y) {
  const Cx v = dot(x, y);
  return real_part ? std::abs(v.real()) : std::abs(v);
}

double pos(double v) { return v < 0.0 ? 0.0 : v; }

}  // namespace

Cx dot(const Vec& x, const Vec& y) {
  Cx s{0.0, 0.0};
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * std::conj(y[k]);
  return s;
}

double nrm(const Vec& x) {
  double s = 0.0;
  for (const Cx& c : x) s += std::norm(c);
  return std::sqrt(s);
}

double schwarz_gap(const Vec& x, const Vec& y) { return nrm(x) * nrm(y) - std::abs(dot(x, y)); }

double projection_gap(const Vec& x, const Vec& y, const std::vector<Vec>& family) {
  double qx = 0.0, qy = 0.0;
  Cx pxy{0.0, 0.0};
  for (const Vec& u : family) {
    const Cx cx = dot(x, u);
    const Cx cy = dot(y, u);
    qx += std::norm(cx);
    qy += std::norm(cy);
    pxy += cx * std::conj(cy);
  }
  return nrm(x) * nrm(y) - (std::sqrt(qx) * std::sqrt(qy) + std::abs(dot(x, y) - pxy));
}

double projection_chain_gap(const Vec& x, const Vec& y, const std::vector<Vec>& family) {
  double qx = 0.0, qy = 0.0;
  Cx pxy{0.0, 0.0};
  for (const Vec& u : family) {
    const Cx cx = dot(x, u);
    const Cx cy = dot(y, u);
    qx += std::norm(cx);
    qy += std::norm(cy);
    pxy += cx * std::conj(cy);
  }
  const double lhs = nrm(x) * nrm(y) - std::abs(dot(x, y));
  const double rhs = std::sqrt(qx) * std::sqrt(qy) - std::abs(pxy);
  return lhs - rhs;
}

double quad_gap(const Vec& x, const Vec& y, const Vec& z) {
  const double nz2 = nrm(z) * nrm(z);
  const double a = nrm(x) * nrm(x) * nz2 - std::norm(dot(x, z));
  const double b = nrm(y) * nrm(y) * nz2 - std::norm(dot(y, z));
  const double r = std::abs(dot(x, y) * nz2 - dot(x, z) * dot(z, y));
  return a * b - r * r;
}

double chain_upper_gap(const Vec& x, const Vec& y, const Vec& e) {
  const Cx through = dot(x, e) * dot(e, y);
  return nrm(x) * nrm(y) - (std::abs(dot(x, y) - through) + std::abs(through));
}

double chain_lower_gap(const Vec& x, const Vec& y, const Vec& e) {
  const Cx through = dot(x, e) * dot(e, y);
  return std::abs(dot(x, y) - through) + std::abs(through) - std::abs(dot(x, y));
}

double detp_gap(const Vec& x, const Vec& y, const Vec& e, double p, bool real_part) {
  const double nx = nrm(x), ny = nrm(y);
  const double s = mag(x, real_part, e);
  const double t = mag(y, real_part, e);
  const double u = mag(x, real_part, y);
  const double lhs = std::pow(nx, p) * std::pow(ny, p) - std::pow(u, p);
  const double det = nx * std::pow(pos(std::pow(ny, p) - std::pow(t, p)), 1.0 / p) -
                     ny * std::pow(pos(std::pow(nx, p) - std::pow(s, p)), 1.0 / p);
  return lhs - std::pow(std::abs(det), p);
}

double det2_gap(const Vec& x, const Vec& y, const Vec& e, bool real_part) {
  const double nx = nrm(x), ny = nrm(y);
  const double s = mag(x, real_part, e);
  const double t = mag(y, real_part, e);
  const double u = mag(x, real_part, y);
  const double lhs = nx * nx * ny * ny - u * u;
  const double det =
      s * std::sqrt(pos(ny * ny - t * t)) - t * std::sqrt(pos(nx * nx - s * s));
  return lhs - det * det;
}

namespace {

double cosp(const Vec& a, const Vec& b) {
  return clamp01(std::abs(dot(a, b)) / (nrm(a) * nrm(b)));
}

double cosr(const Vec& a, const Vec& b) {
  const double r = dot(a, b).real() / (nrm(a) * nrm(b));
  return std::min(1.0, std::max(-1.0, r));
}

double dpv(const Vec& a, const Vec& b, double p) {
  const double r = cosp(a, b);
  return std::pow(pos(1.0 - std::pow(r, p)), 1.0 / p);
}

double deltapv(const Vec& a, const Vec& b, double p) {
  const double r = std::abs(dot(a, b).real()) / (nrm(a) * nrm(b));
  return std::pow(pos(1.0 - std::pow(clamp01(r), p)), 1.0 / p);
}

}  // namespace

double cos_lower_gap(const Vec& x, const Vec& y, const Vec& z) {
  const double cxz = cosp(x, z), czy = cosp(z, y);
  const double sxz = std::sqrt(pos(1.0 - cxz * cxz));
  const double szy = std::sqrt(pos(1.0 - czy * czy));
  return cosp(x, y) - (cxz * czy - sxz * szy);
}

double psi_triangle_gap(const Vec& x, const Vec& y, const Vec& z) {
  return std::acos(cosp(x, z)) + std::acos(cosp(z, y)) - std::acos(cosp(x, y));
}

double phi_triangle_gap(const Vec& x, const Vec& y, const Vec& z) {
  return std::acos(cosr(x, z)) + std::acos(cosr(z, y)) - std::acos(cosr(x, y));
}

double sin_psi_triangle_gap(const Vec& x, const Vec& y, const Vec& z) {
  const auto s = [](const Vec& a, const Vec& b) {
    const double c = cosp(a, b);
    return std::sqrt(pos(1.0 - c * c));
  };
  return s(x, z) + s(z, y) - s(x, y);
}

double sin_phi_triangle_gap(const Vec& x, const Vec& y, const Vec& z) {
  const auto s = [](const Vec& a, const Vec& b) {
    const double c = cosr(a, b);
    return std::sqrt(pos(1.0 - c * c));
  };
  return s(x, z) + s(z, y) - s(x, y);
}

double dp_triangle_gap(const Vec& x, const Vec& y, const Vec& z, double p) {
  return dpv(x, z, p) + dpv(z, y, p) - dpv(x, y, p);
}

double deltap_triangle_gap(const Vec& x, const Vec& y, const Vec& z, double p) {
  return deltapv(x, z, p) + deltapv(z, y, p) - deltapv(x, y, p);
}

double ntuple_general_p_gap(const Vec& x, const Vec& y, const Vec& e, double p) {
  return detp_gap(x, y, e, p, false);
}

double ntuple_general_quad_gap(const Vec& x, const Vec& y, const Vec& e) {
  return det2_gap(x, y, e, false);
}

namespace {

double tail(const Vec& v, std::size_t m) {
  double s = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k != m) s += std::norm(v[k]);
  }
  return s;
}

}  // namespace

double ntuple_basis_p_gap(const Vec& x, const Vec& y, double p) {
  const double nx = nrm(x), ny = nrm(y);
  const double lhs = std::pow(nx, p) * std::pow(ny, p) - std::pow(std::abs(dot(x, y)), p);
  double best = 0.0;
  for (std::size_t m = 0; m < x.size(); ++m) {
    const double det =
        nx * std::pow(pos(std::pow(ny, p) - std::pow(std::abs(y[m]), p)), 1.0 / p) -
        ny * std::pow(pos(std::pow(nx, p) - std::pow(std::abs(x[m]), p)), 1.0 / p);
    best = std::max(best, std::pow(std::abs(det), p));
  }
  return lhs - best;
}

double ntuple_basis_quad_gap(const Vec& x, const Vec& y) {
  const double nx = nrm(x), ny = nrm(y);
  const double lhs = nx * nx * ny * ny - std::norm(dot(x, y));
  double best = 0.0;
  for (std::size_t m = 0; m < x.size(); ++m) {
    const double det = std::abs(x[m]) * std::sqrt(tail(y, m)) -
                       std::abs(y[m]) * std::sqrt(tail(x, m));
    best = std::max(best, det * det);
  }
  return lhs - best;
}

double ntuple_basis_p2_gap(const Vec& x, const Vec& y) {
  const double nx = nrm(x), ny = nrm(y);
  const double lhs = nx * nx * ny * ny - std::norm(dot(x, y));
  double best = 0.0;
  for (std::size_t m = 0; m < x.size(); ++m) {
    const double det = nx * std::sqrt(tail(y, m)) - ny * std::sqrt(tail(x, m));
    best = std::max(best, det * det);
  }
  return lhs - best;
}

double ntuple_mean_p_gap(const Vec& x, const Vec& y, double p) {
  const double n = static_cast<double>(x.size());
  const double nx = nrm(x), ny = nrm(y);
  const double lhs = std::pow(nx, p) * std::pow(ny, p) - std::pow(std::abs(dot(x, y)), p);
  Cx mx{0, 0}, my{0, 0};
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  const double ax = nx / std::sqrt(n), ay = ny / std::sqrt(n);
  const double det =
      ax * std::pow(pos(std::pow(ay, p) - std::pow(std::abs(my), p)), 1.0 / p) -
      ay * std::pow(pos(std::pow(ax, p) - std::pow(std::abs(mx), p)), 1.0 / p);
  return lhs - std::pow(n * std::abs(det), p);
}

double ntuple_mean_quad_gap(const Vec& x, const Vec& y) {
  const double n = static_cast<double>(x.size());
  const double nx = nrm(x), ny = nrm(y);
  const double lhs = nx * nx * ny * ny - std::norm(dot(x, y));
  Cx mx{0, 0}, my{0, 0};
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  const double vx = pos(nx * nx / n - std::norm(mx));
  const double vy = pos(ny * ny / n - std::norm(my));
  const double det = std::abs(mx) * std::sqrt(vy) - std::abs(my) * std::sqrt(vx);
  return lhs - n * n * det * det;
}

}  // namespace schwarzkit::plain
