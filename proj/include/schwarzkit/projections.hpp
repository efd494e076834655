#pragma once

#include <cstddef>
#include <vector>

#include "schwarzkit/bound_report.hpp"
#include "schwarzkit/core_linalg.hpp"

namespace schwarzkit {

// Orthogonal projector onto the span of a finite orthonormal family.
// The family is validated at construction: |<u_i,u_j> - delta_ij| <= gram_tol
// entrywise, and any offending pair is named in the error. An empty family is
// the zero projector; built that way it has dim() == 0 and accepts vectors of
// any dimension, while Projector::zero(dim) pins the ambient space.
class Projector {
 public:
  static constexpr double kGramTol = 1e-8;

  // rank 0 on the given space
  static Projector zero(std::size_t dim);
  // projector onto the whole space (standard basis family)
  static Projector identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return family_.size(); }
  const std::vector<CVector>& family() const { return family_; }

  // P x = sum_j <x, u_j> u_j
  CVector apply(const CVector& x) const;
  // <x, u_j> for each member
  std::vector<Complex> coefficients(const CVector& x) const;
  // <P x, x> = sum_j |<x, u_j>|^2: nonnegative by construction
  double quadratic_form(const CVector& x) const;
  // <P x, y> = sum_j <x, u_j> <u_j, y>
  Complex cross_form(const CVector& x, const CVector& y) const;

  friend Projector make_projector(std::vector<CVector> family, double gram_tol);

 private:
  Projector(std::size_t dim, std::vector<CVector> family);
  std::size_t dim_;
  std::vector<CVector> family_;
};

Projector make_projector(std::vector<CVector> family, double gram_tol = Projector::kGramTol);

// The two stacked refinements a projector induces on a Schwarz pair:
//   refinement: ||x|| ||y||            >= sqrt(<Px,x><Py,y>) + |<x,y> - <Px,y>|
//   chain:      ||x|| ||y|| - |<x,y>|  >= sqrt(<Px,x><Py,y>) - |<Px,y>|  (>= 0)
struct ProjectionBounds {
  BoundReport refinement;
  BoundReport chain;
};

ProjectionBounds projection_bound(const Projector& P, const CVector& x, const CVector& y,
                                  const Tolerance& tol = Tolerance::standard());

}  // namespace schwarzkit
