#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "schwarzkit/errors.hpp"
#include "schwarzkit/harness.hpp"
#include "schwarzkit/projective_metrics.hpp"

using namespace schwarzkit;

namespace {
CVector cv(std::vector<Complex> v) { return CVector(std::move(v)); }
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kPi = std::acos(-1.0);

CVector scaled(const CVector& x, Complex g) {
  std::vector<Complex> v(x.entries().begin(), x.entries().end());
  for (Complex& c : v) c *= g;
  return CVector(std::move(v));
}
}  // namespace

TEST_CASE("d_p examples") {
  const CVector x = cv({1.0, 0.0});
  const CVector bisector = cv({kInvSqrt2, kInvSqrt2});
  for (double p : {2.0, 3.0, 10.0}) {
    CHECK(d_p(x, scaled(x, Complex{0.0, -3.5}), p) == 0.0);      // colinear
    CHECK(d_p(x, cv({0.0, 1.0}), p) == 1.0);                     // orthogonal
  }
  CHECK(d_p(x, bisector, 2.0) == doctest::Approx(0.70710678118654752).epsilon(1e-15));
  CHECK_THROWS_AS(d_p(x, CVector::zeros(2), 2.0), ValidationError);
  CHECK_THROWS_AS(d_p(x, x, 1.5), ParameterError);
}

TEST_CASE("delta_p examples") {
  const CVector x = cv({1.0, 0.0});
  CHECK(delta_p(x, x, 3.0) == 0.0);
  // colinear over C but orthogonal for the real-part pairing
  CHECK(delta_p(x, cv({{0.0, 1.0}, {0.0, 0.0}}), 2.0) == 1.0);
  CHECK(delta_p(x, cv({kInvSqrt2, kInvSqrt2}), 3.0) ==
        doctest::Approx(0.86465771455483635).epsilon(1e-15));
}

TEST_CASE("complex pair oracle at p = 7/2") {
  const CVector x = cv({{1.0, 2.0}, {3.0, -1.0}});
  const CVector y = cv({{2.0, -1.0}, {1.0, 1.0}});
  CHECK(d_p(x, y, 3.5) == doctest::Approx(0.99861067919680246).epsilon(1e-14));
  CHECK(delta_p(x, y, 3.5) == doctest::Approx(0.99906035061754269).epsilon(1e-14));
  CHECK(angle(x, y, AngleKind::Psi).radians ==
        doctest::Approx(1.3508083493994372).epsilon(1e-14));
  CHECK(angle(x, y, AngleKind::Phi).radians ==
        doctest::Approx(1.3743553353586567).epsilon(1e-14));
}

TEST_CASE("angles") {
  const CVector x = cv({1.0, 0.0});
  CHECK(angle(x, x, AngleKind::Psi).radians == 0.0);
  CHECK(angle(x, x, AngleKind::Phi).radians == 0.0);

  const AngleValue anti_psi = angle(x, cv({-1.0, 0.0}), AngleKind::Psi);
  CHECK(anti_psi.radians == 0.0);
  CHECK(anti_psi.kind == AngleKind::Psi);
  CHECK(angle(x, cv({-1.0, 0.0}), AngleKind::Phi).radians ==
        doctest::Approx(kPi).epsilon(1e-15));

  CHECK(angle(x, cv({kInvSqrt2, kInvSqrt2}), AngleKind::Psi).radians ==
        doctest::Approx(0.78539816339744831).epsilon(1e-14));
  CHECK(angle(x, cv({kInvSqrt2, kInvSqrt2}), AngleKind::Phi).radians ==
        doctest::Approx(0.78539816339744831).epsilon(1e-14));

  CHECK_THROWS_AS(angle(x, CVector::zeros(2), AngleKind::Psi), ValidationError);

  // Psi stays in [0, pi/2], Phi in [0, pi]
  VectorGen gen(3, ScalarField::Complex);
  for (int i = 0; i < 300; ++i) {
    const CVector a = gen.draw_gaussian(3);
    const CVector b = gen.draw_gaussian(3);
    const double psi = angle(a, b, AngleKind::Psi).radians;
    const double phi = angle(a, b, AngleKind::Phi).radians;
    CHECK(psi >= 0.0);
    CHECK(psi <= kPi / 2 + 1e-15);
    CHECK(phi >= 0.0);
    CHECK(phi <= kPi + 1e-15);
    CHECK(psi <= phi + 1e-15);  // |cos| >= cos pointwise
  }
}

TEST_CASE("noise floor of the p-th root") {
  const Tolerance tol;
  CHECK(dp_noise_floor(2.0, tol) == doctest::Approx(1e-12).epsilon(1e-6));
  CHECK(dp_noise_floor(10.0, tol) == doctest::Approx(0.0046762422391131066).epsilon(1e-10));
  CHECK(dp_noise_floor(3.0, tol) > dp_noise_floor(2.0, tol));
  CHECK(dp_noise_floor(10.0, tol) > dp_noise_floor(3.0, tol));
}

TEST_CASE("metric axioms on random triples") {
  VectorGen gen(1234, ScalarField::Complex);
  const Tolerance tol;
  for (int i = 0; i < 2000; ++i) {
    const std::size_t dim = 1 + gen.uniform_index(6);
    const CVector x = gen.draw(dim);
    const CVector y = gen.draw(dim);
    const CVector z = gen.draw(dim);
    if (x.is_zero() || y.is_zero() || z.is_zero()) continue;
    for (double p : {2.0, 3.5}) {
      const double dxy = d_p(x, y, p);
      CHECK(dxy >= 0.0);
      CHECK(dxy <= 1.0);
      CHECK(d_p(x, x, p) == 0.0);                 // identity, exact
      CHECK(d_p(y, x, p) == dxy);                 // symmetry, bitwise
      CHECK(triangle_check(TriangleKind::Dp, x, y, z, p).satisfied);
      CHECK(triangle_check(TriangleKind::DeltaP, x, y, z, p).satisfied);
      CHECK(delta_p(x, y, p) >= dxy - tol.slack(1.0, 1.0));
    }
  }
}

TEST_CASE("d_p is projectively invariant") {
  VectorGen gen(77, ScalarField::Complex);
  for (int i = 0; i < 300; ++i) {
    const CVector x = gen.draw_gaussian(4);
    const CVector y = gen.draw_gaussian(4);
    const Complex a{0.3, -1.7};
    const Complex b{-2.5, 0.4};
    for (double p : {2.0, 10.0}) {
      const double base = d_p(x, y, p);
      // scaling changes the computed value by at most the evaluation noise
      const double floor = dp_noise_floor(p, Tolerance::standard());
      CHECK(d_p(scaled(x, a), scaled(y, b), p) ==
            doctest::Approx(base).epsilon(1e-9).scale(2.0 * floor));
    }
  }
}

TEST_CASE("triangle examples") {
  const CVector x = cv({1.0, 0.0});
  const CVector y = cv({0.0, 1.0});
  const CVector z = cv({kInvSqrt2, kInvSqrt2});

  SUBCASE("x = y makes every single term vanish") {
    for (TriangleKind k :
         {TriangleKind::LinPsi, TriangleKind::Krein, TriangleKind::WangZhangSinPsi,
          TriangleKind::SinPhi, TriangleKind::Dp, TriangleKind::DeltaP}) {
      const BoundReport r = triangle_check(k, x, x, z, 3.0);
      CHECK(r.satisfied);
      CHECK(std::abs(r.rhs) < 1e-12);
    }
  }
  SUBCASE("bisector equality for the psi sum") {
    const BoundReport r = triangle_check(TriangleKind::LinPsi, x, y, z);
    CHECK(r.label == "angle_psi");
    CHECK(r.lhs == doctest::Approx(kPi / 2).epsilon(1e-14));  // pi/4 + pi/4
    CHECK(r.rhs == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(r.equality);
  }
  SUBCASE("sine form through the bisector") {
    const BoundReport r = triangle_check(TriangleKind::WangZhangSinPsi, x, y, z);
    CHECK(r.label == "sin_psi");
    CHECK(r.lhs == doctest::Approx(1.4142135623730950).epsilon(1e-14));
    CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.satisfied);
  }
  SUBCASE("cosine lower bound is tight on the bisector triple") {
    const BoundReport r = triangle_check(TriangleKind::CosLower, x, y, z);
    CHECK(r.label == "cos_lower");
    CHECK(r.lhs == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));  // cos(pi/2)
    CHECK(r.rhs == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(r.satisfied);
  }
  SUBCASE("p is validated where it participates") {
    CHECK_THROWS_AS(triangle_check(TriangleKind::Dp, x, y, z, 1.0), ParameterError);
    CHECK_THROWS_AS(triangle_check(TriangleKind::DeltaP, x, y, z, 0.5), ParameterError);
    CHECK_NOTHROW(triangle_check(TriangleKind::LinPsi, x, y, z, 0.5));  // p unused
  }
}

TEST_CASE("all seven triangle kinds hold on random triples") {
  VectorGen gen(88, ScalarField::Complex);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t dim = 1 + gen.uniform_index(6);
    const CVector x = gen.draw(dim);
    const CVector y = gen.draw(dim);
    const CVector z = gen.draw(dim);
    if (x.is_zero() || y.is_zero() || z.is_zero()) continue;
    for (TriangleKind k :
         {TriangleKind::CosLower, TriangleKind::LinPsi, TriangleKind::Krein,
          TriangleKind::WangZhangSinPsi, TriangleKind::SinPhi, TriangleKind::Dp,
          TriangleKind::DeltaP}) {
      CHECK(triangle_check(k, x, y, z, 3.0).satisfied);
    }
  }
}

TEST_CASE("cosine bound and psi sum flag agreement below pi") {
  // when the two legs sum to at most pi, cos(sum) <= cos is the same statement
  // as the linear triangle inequality; the flags must agree there.
  VectorGen gen(99, ScalarField::Complex);
  int compared = 0;
  for (int i = 0; i < 2000; ++i) {
    const CVector x = gen.draw_gaussian(3);
    const CVector y = gen.draw_gaussian(3);
    const CVector z = gen.draw_gaussian(3);
    const double legs = angle(x, z, AngleKind::Psi).radians +
                        angle(z, y, AngleKind::Psi).radians;
    if (legs > kPi) continue;
    ++compared;
    const bool lin = triangle_check(TriangleKind::LinPsi, x, y, z).satisfied;
    const bool cos_form = triangle_check(TriangleKind::CosLower, x, y, z).satisfied;
    CHECK(lin == cos_form);
  }
  CHECK(compared > 1500);  // psi legs are at most pi/2 each, so nearly all qualify
}
