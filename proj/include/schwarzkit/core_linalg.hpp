#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "schwarzkit/errors.hpp"

namespace schwarzkit {

using Complex = std::complex<double>;

// Comparison slack: slack(a, b) = abs_eps + rel_eps * max(|a|, |b|).
// Every inequality check in the library goes through this policy.
struct Tolerance {
  double rel_eps = 1e-9;
  double abs_eps = 1e-12;

  // Both epsilons must sit in [0, 1e-3]; anything looser is a configuration bug.
  void validate() const;

  double slack(double a, double b) const;
  // Slack for detecting equality of a bound: abs_eps + rel_eps * max(1, |lhs|).
  double equality_slack(double lhs) const;
  bool close(double a, double b) const;

  static const Tolerance& standard();
};

// Finite-dimensional complex vector. Entries are validated finite at
// construction; dim >= 1 always holds.
class CVector {
 public:
  explicit CVector(std::vector<Complex> entries);
  static CVector zeros(std::size_t dim);
  static CVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> entries() const { return entries_; }

  bool is_zero() const;

 private:
  std::vector<Complex> entries_;
};

// <x, y> = sum_k x_k * conj(y_k): linear in the first slot, conjugate-linear in
// the second. Accumulated with compensated (Neumaier) summation.
Complex inner(const CVector& x, const CVector& y);

double norm_squared(const CVector& x);
double norm(const CVector& x);

// Errors on the zero vector.
CVector normalize(const CVector& x);

// ||x||^2 ||y||^2 - |<x,y>|^2, evaluated as ||x||^2 * ||y - proj_x(y)||^2 so the
// result is nonnegative by construction and keeps relative accuracy when x and y
// are nearly parallel. Returns 0 when x = 0.
double gram_modulus(const CVector& x, const CVector& y);

// ||x||^2 ||y||^2 - (Re<x,y>)^2 via the same rejection, with a real coefficient.
double gram_real(const CVector& x, const CVector& y);

// sin^2 of the projective angle: gram / (||x||^2 ||y||^2), clamped to [0, 1].
// Both vectors must be nonzero. A clamp beyond tol is an InternalError.
double sin2_modulus(const CVector& x, const CVector& y,
                    const Tolerance& tol = Tolerance::standard());
double sin2_real(const CVector& x, const CVector& y,
                 const Tolerance& tol = Tolerance::standard());

// 1 - c^p for c = sqrt(1 - sin2), computed without cancellation at c -> 1.
// Requires sin2 in [0, 1] and p >= 2 (validated by callers).
double dp_pth_power(double sin2, double p);

// (1 - c^p)^(1/p): the unit-vector distance value used across the bound family.
double dp_from_sin2(double sin2, double p);

// Compensated running sum (Neumaier variant) for plain doubles.
class CompensatedSum {
 public:
  void add(double v);
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace schwarzkit
