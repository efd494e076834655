#include "schwarzkit/core_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#ifdef __FAST_MATH__
#error "schwarzkit relies on IEEE-compliant float semantics; do not build with -ffast-math"
#endif

namespace schwarzkit {

void Tolerance::validate() const {
  auto bad = [](double v) { return !(v >= 0.0 && v <= 1e-3); };
  if (bad(rel_eps) || bad(abs_eps)) {
    throw ParameterError("Tolerance epsilons must lie in [0, 1e-3], got rel_eps=" +
                         std::to_string(rel_eps) + " abs_eps=" + std::to_string(abs_eps));
  }
}

double Tolerance::slack(double a, double b) const {
  return abs_eps + rel_eps * std::max(std::abs(a), std::abs(b));
}

double Tolerance::equality_slack(double lhs) const {
  return abs_eps + rel_eps * std::max(1.0, std::abs(lhs));
}

bool Tolerance::close(double a, double b) const { return std::abs(a - b) <= slack(a, b); }

const Tolerance& Tolerance::standard() {
  static const Tolerance t{};
  return t;
}

CVector::CVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw ValidationError("CVector needs at least one entry");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!std::isfinite(entries_[i].real()) || !std::isfinite(entries_[i].imag())) {
      throw ValidationError("CVector entry " + std::to_string(i) + " is not finite");
    }
  }
}

CVector CVector::zeros(std::size_t dim) {
  return CVector(std::vector<Complex>(dim, Complex{0.0, 0.0}));
}

CVector CVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw ParameterError("basis index " + std::to_string(index) + " out of range for dim " +
                         std::to_string(dim));
  }
  std::vector<Complex> e(dim, Complex{0.0, 0.0});
  e[index] = Complex{1.0, 0.0};
  return CVector(std::move(e));
}

bool CVector::is_zero() const {
  for (const Complex& c : entries_) {
    if (c.real() != 0.0 || c.imag() != 0.0) return false;
  }
  return true;
}

void CompensatedSum::add(double v) {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v)) {
    carry_ += (sum_ - t) + v;
  } else {
    carry_ += (v - t) + sum_;
  }
  sum_ = t;
}

namespace {

void require_same_dim(const CVector& x, const CVector& y, const char* op) {
  if (x.dim() != y.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(x.dim()) +
                         " vs " + std::to_string(y.dim()));
  }
}

}  // namespace

Complex inner(const CVector& x, const CVector& y) {
  require_same_dim(x, y, "inner");
  CompensatedSum re, im;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    const Complex a = x[k];
    const Complex b = y[k];
    // a * conj(b), accumulated component-wise so each partial product is compensated.
    re.add(a.real() * b.real());
    re.add(a.imag() * b.imag());
    im.add(a.imag() * b.real());
    im.add(-a.real() * b.imag());
  }
  return Complex{re.value(), im.value()};
}

double norm_squared(const CVector& x) {
  CompensatedSum s;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    s.add(x[k].real() * x[k].real());
    s.add(x[k].imag() * x[k].imag());
  }
  return s.value();
}

double norm(const CVector& x) { return std::sqrt(norm_squared(x)); }

CVector normalize(const CVector& x) {
  const double n = norm(x);
  if (n == 0.0) {
    throw ValidationError("normalize: zero vector has no direction");
  }
  std::vector<Complex> out(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k) out[k] = x[k] / n;
  return CVector(std::move(out));
}

namespace {

// Shared rejection kernel: ||x||^2 * ||y - c x||^2 with c chosen so the result
// equals the Gram determinant of the given variant. The subtraction cancels to
// the perpendicular component, so tiny results keep relative accuracy instead of
// drowning in ||x||^2 ||y||^2-scale rounding.
double gram_via_rejection(const CVector& x, const CVector& y, Complex coeff, double nx2) {
  CompensatedSum s;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    const Complex perp = y[k] - coeff * x[k];
    s.add(perp.real() * perp.real());
    s.add(perp.imag() * perp.imag());
  }
  return nx2 * s.value();
}

}  // namespace

double gram_modulus(const CVector& x, const CVector& y) {
  require_same_dim(x, y, "gram_modulus");
  const double nx2 = norm_squared(x);
  if (nx2 == 0.0) return 0.0;
  const Complex c = inner(y, x) / nx2;
  return gram_via_rejection(x, y, c, nx2);
}

double gram_real(const CVector& x, const CVector& y) {
  require_same_dim(x, y, "gram_real");
  const double nx2 = norm_squared(x);
  if (nx2 == 0.0) return 0.0;
  const Complex c{inner(y, x).real() / nx2, 0.0};
  return gram_via_rejection(x, y, c, nx2);
}

namespace {

double sin2_from_gram(double gram, double nx2, double ny2, const Tolerance& tol,
                      const char* op) {
  if (nx2 == 0.0 || ny2 == 0.0) {
    throw ValidationError(std::string(op) + ": zero vector has no direction");
  }
  const double denom = nx2 * ny2;
  double ratio = gram / denom;
  if (ratio < 0.0 || ratio > 1.0) {
    const double excess = ratio < 0.0 ? -ratio : ratio - 1.0;
    if (excess * denom > tol.slack(gram, denom)) {
      throw InternalError(std::string(op) + ": sin^2 ratio " + std::to_string(ratio) +
                          " outside [0,1] beyond tolerance");
    }
    ratio = std::clamp(ratio, 0.0, 1.0);
  }
  return ratio;
}

}  // namespace

namespace {

bool lex_less(const CVector& a, const CVector& b) {
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (a[k].real() != b[k].real()) return a[k].real() < b[k].real();
    if (a[k].imag() != b[k].imag()) return a[k].imag() < b[k].imag();
  }
  return false;
}

// Anchor the rejection on a canonically chosen argument (larger norm, then
// lexicographically larger) so the squared sine is bitwise symmetric in its
// arguments. Distances built on it then satisfy the symmetry axiom exactly,
// not just within rounding - which matters because the p-th root would
// amplify an eps-level asymmetry near parallel vectors to eps^(2/p).
template <typename Gram>
double sin2_canonical(const CVector& x, const CVector& y, const Tolerance& tol,
                      const char* op, Gram&& gram) {
  const double nx2 = norm_squared(x);
  const double ny2 = norm_squared(y);
  const bool swap = ny2 > nx2 || (ny2 == nx2 && lex_less(x, y));
  const CVector& a = swap ? y : x;
  const CVector& b = swap ? x : y;
  return sin2_from_gram(gram(a, b), nx2, ny2, tol, op);
}

}  // namespace

double sin2_modulus(const CVector& x, const CVector& y, const Tolerance& tol) {
  return sin2_canonical(x, y, tol, "sin2_modulus",
                        [](const CVector& a, const CVector& b) { return gram_modulus(a, b); });
}

double sin2_real(const CVector& x, const CVector& y, const Tolerance& tol) {
  return sin2_canonical(x, y, tol, "sin2_real",
                        [](const CVector& a, const CVector& b) { return gram_real(a, b); });
}

double dp_pth_power(double sin2, double p) {
  // 1 - (1 - sin2)^(p/2) without cancellation: exact 0 at sin2 = 0, exact 1 at sin2 = 1.
  if (sin2 <= 0.0) return 0.0;
  if (sin2 >= 1.0) return 1.0;
  return -std::expm1(0.5 * p * std::log1p(-sin2));
}

double dp_from_sin2(double sin2, double p) { return std::pow(dp_pth_power(sin2, p), 1.0 / p); }

}  // namespace schwarzkit
