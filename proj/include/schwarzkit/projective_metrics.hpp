#pragma once

#include "schwarzkit/bound_report.hpp"
#include "schwarzkit/core_linalg.hpp"

namespace schwarzkit {

// Scale-invariant distance (1 - |<x,y>|^p / (||x||^p ||y||^p))^(1/p), p >= 2.
// x, y nonzero.
double d_p(const CVector& x, const CVector& y, double p,
           const Tolerance& tol = Tolerance::standard());

// Same with |Re<x,y>|: invariant under real rescaling only.
double delta_p(const CVector& x, const CVector& y, double p,
               const Tolerance& tol = Tolerance::standard());

// Absolute evaluation uncertainty of one d_p / delta_p value. The squared
// sine underneath is accurate to abs_eps^2 near zero, and the p-th root
// amplifies that floor to ((p/2) abs_eps^2)^(1/p): two numerically parallel
// vectors can produce a d_10 near 1e-3 from rounding alone. Comparisons of
// d_p values sharper than this floor are meaningless.
double dp_noise_floor(double p, const Tolerance& tol);

enum class AngleKind {
  Psi,  // arccos(|<x,y>| / (||x|| ||y||)) in [0, pi/2]
  Phi   // arccos(Re<x,y> / (||x|| ||y||)) in [0, pi]
};

struct AngleValue {
  double radians = 0.0;
  AngleKind kind = AngleKind::Psi;
};

AngleValue angle(const CVector& x, const CVector& y, AngleKind kind,
                 const Tolerance& tol = Tolerance::standard());

enum class TriangleKind {
  CosLower,        // cos Psi_xy >= cos Psi_xz cos Psi_zy - sin Psi_xz sin Psi_zy
  LinPsi,          // Psi_xy <= Psi_xz + Psi_zy
  Krein,           // Phi_xy <= Phi_xz + Phi_zy
  WangZhangSinPsi, // sin Psi_xy <= sin Psi_xz + sin Psi_zy
  SinPhi,          // sin-form of the Phi angle defect
  Dp,              // d_p(x,y) <= d_p(x,z) + d_p(z,y)
  DeltaP           // same for delta_p
};

// Verifies the selected inequality on the triple. The report is oriented so
// that lhs is the side that must dominate: for the triangle forms lhs is the
// two-leg sum and rhs the single term; for CosLower lhs is cos Psi_xy.
// p is consulted only by Dp / DeltaP.
BoundReport triangle_check(TriangleKind kind, const CVector& x, const CVector& y,
                           const CVector& z, double p = 2.0,
                           const Tolerance& tol = Tolerance::standard());

}  // namespace schwarzkit
