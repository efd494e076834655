#pragma once

#include <string>

#include "schwarzkit/bound_report.hpp"
#include "schwarzkit/core_linalg.hpp"

namespace schwarzkit {

// Which scalar the bounds act on: the full modulus |<.,.>| or |Re<.,.>|.
enum class Mode { Modulus, RealPart };

std::string mode_name(Mode m);

struct MetricParams {
  double p = 2.0;
  Mode mode = Mode::Modulus;
  void validate() const;  // p >= 2 and finite
};

// Baseline: ||x|| ||y|| >= |<x,y>|.
BoundReport schwarz_bound(const CVector& x, const CVector& y,
                          const Tolerance& tol = Tolerance::standard());

// Quadratic three-vector refinement:
//   (||x||^2||z||^2 - |<x,z>|^2)(||y||^2||z||^2 - |<y,z>|^2)
//     >= |<x,y>||z||^2 - <x,z><z,y>|^2
BoundReport quad_refinement(const CVector& x, const CVector& y, const CVector& z,
                            const Tolerance& tol = Tolerance::standard());

// Two-step chain through a unit vector e:
//   a = ||x|| ||y||  >=  b = |<x,y> - <x,e><e,y>| + |<x,e><e,y>|  >=  c = |<x,y>|
struct ChainResult {
  double product_norms = 0.0;  // a
  double split_sum = 0.0;      // b
  double inner_modulus = 0.0;  // c
  BoundReport upper;           // a >= b
  BoundReport lower;           // b >= c
};

ChainResult rs_chain(const CVector& x, const CVector& y, const CVector& e,
                     const Tolerance& tol = Tolerance::standard());

// p-th power refinement through a unit vector e (x, y nonzero, p >= 2):
//   ||x||^p ||y||^p - u^p  >=  | ||x|| (||y||^p - t^p)^(1/p) - ||y|| (||x||^p - s^p)^(1/p) |^p
// with s, t, u the modulus (or |Re .|) of <x,e>, <y,e>, <x,y>.
BoundReport detp_bound(const CVector& x, const CVector& y, const CVector& e,
                       const MetricParams& params,
                       const Tolerance& tol = Tolerance::standard());

// Quadratic (p = 2) variant, valid for all x, y:
//   ||x||^2 ||y||^2 - u^2  >=  ( s sqrt(||y||^2 - t^2) - t sqrt(||x||^2 - s^2) )^2
// When s = 0 (within abs_eps) the bound collapses to the one-term Bessel
// inequality; the label gains a ":bessel" suffix. When ||x|| = s the pair
// (x, e) is proportional and the equality flag is forced on.
BoundReport det2_bound(const CVector& x, const CVector& y, const CVector& e, Mode mode,
                       const Tolerance& tol = Tolerance::standard());

}  // namespace schwarzkit
