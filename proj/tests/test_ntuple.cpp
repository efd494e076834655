#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "schwarzkit/errors.hpp"
#include "schwarzkit/harness.hpp"
#include "schwarzkit/ntuple_apps.hpp"
#include "schwarzkit/refinements.hpp"

using namespace schwarzkit;

namespace {
CVector cv(std::vector<Complex> v) { return CVector(std::move(v)); }

CVector uniform_weight(std::size_t n) {
  return CVector(std::vector<Complex>(n, Complex{1.0 / std::sqrt(double(n)), 0.0}));
}
}  // namespace

TEST_CASE("single entry collapses every bound") {
  const CVector x = cv({{2.0, -3.0}});
  const CVector y = cv({{0.5, 1.0}});
  for (double p : {2.0, 3.0}) {
    const NTupleReport g = general_e_bound(x, y, cv({1.0}), p, NTupleOrder::PForm);
    CHECK(std::abs(g.base.lhs) < 1e-12);
    CHECK(std::abs(g.base.rhs) < 1e-12);
    CHECK(g.base.equality);

    const NTupleReport b = basis_max_bound(x, y, p, NTupleOrder::PForm);
    CHECK(std::abs(b.base.lhs) < 1e-12);
    CHECK(std::abs(b.base.rhs) < 1e-12);
    REQUIRE(b.argmax_m.has_value());
    CHECK(*b.argmax_m == 1);

    const NTupleReport m = mean_bound(x, y, p, NTupleOrder::PForm);
    CHECK(std::abs(m.base.lhs) < 1e-12);
    CHECK(std::abs(m.base.rhs) < 1e-12);
  }
  CHECK(std::abs(basis_max_bound(x, y, 2.0, NTupleOrder::P2Simple).base.rhs) < 1e-12);
  CHECK(std::abs(mean_bound(x, y, 2.0, NTupleOrder::Quadratic).base.rhs) < 1e-12);
}

TEST_CASE("general weight examples") {
  const CVector x = cv({1.0, 0.0});
  const CVector y = cv({0.0, 1.0});

  const NTupleReport q =
      general_e_bound(x, y, cv({1.0, 0.0}), 2.0, NTupleOrder::Quadratic);
  CHECK(q.base.label == "ntuple_general_quad");
  CHECK(q.base.lhs == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(q.base.rhs == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(q.base.equality);
  CHECK(q.family == NTupleFamily::GeneralWeight);

  // orthogonal weight: the quadratic form degenerates to its one-term branch
  const NTupleReport bessel =
      general_e_bound(x, cv({1.0, 1.0}), cv({0.0, 1.0}), 2.0, NTupleOrder::Quadratic);
  CHECK(bessel.base.label == "ntuple_general_quad:bessel");

  CHECK_THROWS_AS(general_e_bound(x, y, cv({1.0, 1.0}), 2.0, NTupleOrder::Quadratic),
                  ValidationError);
  CHECK_THROWS_AS(general_e_bound(x, y, cv({1.0, 0.0}), 2.0, NTupleOrder::P2Simple),
                  ParameterError);
  CHECK_THROWS_AS(general_e_bound(x, cv({1.0}), cv({1.0, 0.0}), 2.0, NTupleOrder::PForm),
                  DimensionError);
}

TEST_CASE("general weight matches the two-vector bounds") {
  VectorGen gen(111, ScalarField::Complex);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + gen.uniform_index(7);
    const CVector x = gen.draw_gaussian(n);
    const CVector y = gen.draw_gaussian(n);
    const CVector e = normalize(gen.draw_gaussian(n));

    const NTupleReport gp = general_e_bound(x, y, e, 3.0, NTupleOrder::PForm);
    const BoundReport direct = detp_bound(x, y, e, MetricParams{3.0, Mode::Modulus});
    CHECK(gp.base.lhs == direct.lhs);
    CHECK(gp.base.rhs == direct.rhs);
    CHECK(gp.base.satisfied == direct.satisfied);

    const NTupleReport gq = general_e_bound(x, y, e, 2.0, NTupleOrder::Quadratic);
    const BoundReport direct2 = det2_bound(x, y, e, Mode::Modulus);
    CHECK(gq.base.lhs == direct2.lhs);
    CHECK(gq.base.rhs == direct2.rhs);
  }
}

TEST_CASE("basis max examples") {
  SUBCASE("identical tuples vanish") {
    const CVector x = cv({{1.0, 1.0}, {2.0, 0.0}, {0.0, -1.0}});
    for (NTupleOrder ord :
         {NTupleOrder::PForm, NTupleOrder::Quadratic, NTupleOrder::P2Simple}) {
      const NTupleReport r = basis_max_bound(x, x, 3.0, ord);
      CHECK(std::abs(r.base.lhs) < 1e-12);
      CHECK(std::abs(r.base.rhs) < 1e-12);
      CHECK(r.base.equality);
      CHECK(r.family == NTupleFamily::BasisMax);
    }
  }
  SUBCASE("orthonormal pair: first position attains the max") {
    const NTupleReport r =
        basis_max_bound(cv({1.0, 0.0}), cv({0.0, 1.0}), 2.0, NTupleOrder::Quadratic);
    CHECK(r.base.label == "ntuple_basis_quad");
    CHECK(r.base.lhs == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.base.rhs == doctest::Approx(1.0).epsilon(1e-15));
    REQUIRE(r.argmax_m.has_value());
    CHECK(*r.argmax_m == 1);
    CHECK(r.base.equality);
  }
  SUBCASE("plus-minus pair: the simple p=2 determinants cancel") {
    const NTupleReport r =
        basis_max_bound(cv({1.0, 1.0}), cv({1.0, -1.0}), 2.0, NTupleOrder::P2Simple);
    CHECK(r.base.label == "ntuple_basis_p2");
    CHECK(r.base.lhs == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(r.base.rhs == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(r.base.satisfied);
  }
  SUBCASE("complex p = 3 oracle") {
    const NTupleReport r = basis_max_bound(cv({{1.0, 2.0}, {3.0, -1.0}}),
                                           cv({{2.0, -1.0}, {1.0, 1.0}}), 3.0,
                                           NTupleOrder::PForm);
    CHECK(r.base.label == "ntuple_basis_p");
    CHECK(r.base.lhs == doctest::Approx(1064.7494905382589).epsilon(1e-13));
    CHECK(r.base.rhs == doctest::Approx(8.1871287841007619).epsilon(1e-12));
    REQUIRE(r.argmax_m.has_value());
    CHECK(*r.argmax_m == 1);
  }
  SUBCASE("p validation applies to the p-form only") {
    const CVector x = cv({1.0, 0.0});
    CHECK_THROWS_AS(basis_max_bound(x, x, 1.0, NTupleOrder::PForm), ParameterError);
    CHECK_NOTHROW(basis_max_bound(x, x, 1.0, NTupleOrder::Quadratic));
  }
}

TEST_CASE("basis max dominates every single-position bound") {
  VectorGen gen(222, ScalarField::Complex);
  const Tolerance tol;
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 2 + gen.uniform_index(9);
    const CVector x = gen.draw_gaussian(n);
    const CVector y = gen.draw_gaussian(n);
    for (NTupleOrder ord : {NTupleOrder::PForm, NTupleOrder::Quadratic}) {
      const NTupleReport best = basis_max_bound(x, y, 3.0, ord);
      double observed = 0.0;
      std::size_t observed_m = 0;
      for (std::size_t m = 0; m < n; ++m) {
        const NTupleReport at =
            general_e_bound(x, y, CVector::basis(n, m), 3.0, ord);
        CHECK(best.base.rhs >= at.base.rhs - tol.slack(best.base.rhs, at.base.rhs));
        if (at.base.rhs > observed) {
          observed = at.base.rhs;
          observed_m = m + 1;
        }
      }
      CHECK(best.base.rhs ==
            doctest::Approx(observed).epsilon(1e-9).scale(1.0 + best.base.lhs));
      if (best.base.rhs > 1e-9) CHECK(*best.argmax_m == observed_m);
    }
  }
}

TEST_CASE("basis max is permutation covariant") {
  VectorGen gen(333, ScalarField::Complex);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 3 + gen.uniform_index(6);
    const CVector x = gen.draw_gaussian(n);
    const CVector y = gen.draw_gaussian(n);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t k = n; k > 1; --k) std::swap(perm[k - 1], perm[gen.uniform_index(k)]);

    std::vector<Complex> px(n), py(n);
    for (std::size_t k = 0; k < n; ++k) {
      px[k] = x[perm[k]];
      py[k] = y[perm[k]];
    }
    const NTupleReport base = basis_max_bound(x, y, 2.0, NTupleOrder::Quadratic);
    const NTupleReport shuf =
        basis_max_bound(CVector(px), CVector(py), 2.0, NTupleOrder::Quadratic);
    CHECK(shuf.base.lhs == doctest::Approx(base.base.lhs).epsilon(1e-12));
    CHECK(shuf.base.rhs == doctest::Approx(base.base.rhs).epsilon(1e-9).scale(1.0));
    // the attained position moves with the permutation when the max is unique
    if (base.argmax_m && shuf.argmax_m && base.base.rhs > 1e-9) {
      CHECK(perm[*shuf.argmax_m - 1] == *base.argmax_m - 1);
    }

    const NTupleReport mbase = mean_bound(x, y, 2.0, NTupleOrder::Quadratic);
    const NTupleReport mshuf =
        mean_bound(CVector(px), CVector(py), 2.0, NTupleOrder::Quadratic);
    CHECK(mshuf.base.lhs == doctest::Approx(mbase.base.lhs).epsilon(1e-12));
    CHECK(mshuf.base.rhs ==
          doctest::Approx(mbase.base.rhs).epsilon(1e-9).scale(1.0 + mbase.base.lhs));
  }
}

TEST_CASE("mean bound examples") {
  SUBCASE("constant tuples are equality cases") {
    const CVector x = cv(std::vector<Complex>(4, Complex{2.0, -1.0}));
    const CVector y = cv(std::vector<Complex>(4, Complex{0.5, 3.0}));
    const NTupleReport r = mean_bound(x, y, 2.0, NTupleOrder::Quadratic);
    CHECK(std::abs(r.base.lhs) < 1e-10);
    CHECK(std::abs(r.base.rhs) < 1e-10);
    CHECK(r.base.equality);
    CHECK(r.family == NTupleFamily::UniformMean);
  }
  SUBCASE("orthonormal pair: centered moments cancel the determinant") {
    const NTupleReport r =
        mean_bound(cv({1.0, 0.0}), cv({0.0, 1.0}), 2.0, NTupleOrder::Quadratic);
    CHECK(r.base.label == "ntuple_mean_quad");
    CHECK(r.base.lhs == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.base.rhs == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
  }
  SUBCASE("integer triple oracle, quadratic") {
    const NTupleReport r =
        mean_bound(cv({1.0, 2.0, 3.0}), cv({1.0, 1.0, 2.0}), 2.0, NTupleOrder::Quadratic);
    CHECK(r.base.lhs == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(r.base.rhs == doctest::Approx(0.19145805259864220).epsilon(1e-12));
    CHECK(r.base.satisfied);
  }
  SUBCASE("integer triple oracle, p = 3") {
    const NTupleReport r =
        mean_bound(cv({1.0, 2.0, 3.0}), cv({1.0, 1.0, 2.0}), 3.0, NTupleOrder::PForm);
    CHECK(r.base.label == "ntuple_mean_p");
    CHECK(r.base.lhs == doctest::Approx(40.872716752581121).epsilon(1e-14));
    CHECK(r.base.rhs == doctest::Approx(0.074628185327495730).epsilon(1e-12));
  }
}

TEST_CASE("mean bound equals the general bound at the uniform weight") {
  VectorGen gen(444, ScalarField::Complex);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + gen.uniform_index(9);
    const CVector x = gen.draw_gaussian(n);
    const CVector y = gen.draw_gaussian(n);
    const CVector e = uniform_weight(n);
    for (double p : {2.0, 3.0}) {
      const NTupleReport mean = mean_bound(x, y, p, NTupleOrder::PForm);
      const NTupleReport gen_e = general_e_bound(x, y, e, p, NTupleOrder::PForm);
      CHECK(mean.base.lhs == doctest::Approx(gen_e.base.lhs).epsilon(1e-12));
      CHECK(mean.base.rhs ==
            doctest::Approx(gen_e.base.rhs).epsilon(1e-8).scale(1.0 + mean.base.lhs));
    }
  }
}

TEST_CASE("real-tuple mean bound holds broadly") {
  VectorGen gen(555, ScalarField::Real);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + gen.uniform_index(16);
    const CVector x = gen.draw(n);
    const CVector y = gen.draw(n);
    const NTupleReport quad = mean_bound(x, y, 2.0, NTupleOrder::Quadratic);
    CHECK(quad.base.satisfied);
    CHECK(mean_bound(x, y, 3.0, NTupleOrder::PForm).base.satisfied);
    CHECK(basis_max_bound(x, y, 2.0, NTupleOrder::P2Simple).base.satisfied);
  }
}
