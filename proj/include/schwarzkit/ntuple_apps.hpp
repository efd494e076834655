#pragma once

#include <optional>

#include "schwarzkit/bound_report.hpp"
#include "schwarzkit/core_linalg.hpp"
#include "schwarzkit/refinements.hpp"

namespace schwarzkit {

enum class NTupleFamily { GeneralWeight, BasisMax, UniformMean };
enum class NTupleOrder {
  PForm,     // p-th power determinant bound, p >= 2
  Quadratic, // p = 2 form squared, valid for all tuples
  P2Simple   // p = 2 with the complementary tail sums written directly
};

struct NTupleReport {
  BoundReport base;
  // Position (1-based) of the basis vector attaining the max; BasisMax only.
  std::optional<std::size_t> argmax_m;
  NTupleFamily family = NTupleFamily::GeneralWeight;
};

// Bound through an arbitrary unit weight tuple e (sum |e_k|^2 = 1). Evaluates
// the standard-inner-product instance of detp_bound (PForm) or det2_bound
// (Quadratic); x, y must be nonzero for PForm. P2Simple is not defined here.
NTupleReport general_e_bound(const CVector& x, const CVector& y, const CVector& e, double p,
                             NTupleOrder order, const Tolerance& tol = Tolerance::standard());

// Maximum of the basis-vector instances e = delta_m over m = 1..n, with the
// attaining position recorded. Tail sums over k != m are accumulated directly,
// never as a difference. Ties resolve to the smallest m.
NTupleReport basis_max_bound(const CVector& x, const CVector& y, double p, NTupleOrder order,
                             const Tolerance& tol = Tolerance::standard());

// Uniform weight e = (1/sqrt(n), ..., 1/sqrt(n)): mean-and-variance shape.
// Quadratic order is the n^2-scaled two-column determinant with |mean| and
// centered second moment square roots; PForm the n^p-scaled analogue.
NTupleReport mean_bound(const CVector& x, const CVector& y, double p, NTupleOrder order,
                        const Tolerance& tol = Tolerance::standard());

}  // namespace schwarzkit
