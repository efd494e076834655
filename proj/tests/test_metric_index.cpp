#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "schwarzkit/errors.hpp"
#include "schwarzkit/harness.hpp"
#include "schwarzkit/metric_index.hpp"
#include "schwarzkit/projective_metrics.hpp"

using namespace schwarzkit;

namespace {

std::vector<CVector> random_points(VectorGen& gen, std::size_t n, std::size_t dim) {
  std::vector<CVector> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    CVector v = gen.draw(dim);
    if (!v.is_zero()) pts.push_back(std::move(v));
  }
  return pts;
}

// The reference the tree must reproduce: brute force over every stored point,
// ordered by (distance, id).
std::vector<Neighbor> scan_nn(const VPIndex& idx, const CVector& q, std::size_t k) {
  std::vector<Neighbor> all;
  for (const ProjectivePoint& pt : idx.points()) {
    all.push_back({pt.id, d_p(q, pt.rep, idx.exponent())});
  }
  std::sort(all.begin(), all.end(), [](const Neighbor& a, const Neighbor& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.id < b.id;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

std::vector<Neighbor> scan_range(const VPIndex& idx, const CVector& q, double r,
                                 const Tolerance& tol) {
  std::vector<Neighbor> hits;
  for (const ProjectivePoint& pt : idx.points()) {
    const double d = d_p(q, pt.rep, idx.exponent());
    if (range_includes(d, r, tol)) hits.push_back({pt.id, d});
  }
  std::sort(hits.begin(), hits.end(), [](const Neighbor& a, const Neighbor& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.id < b.id;
  });
  return hits;
}

void check_same(const std::vector<Neighbor>& got, const std::vector<Neighbor>& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].id == want[i].id);
    CHECK(got[i].distance == doctest::Approx(want[i].distance).epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("build edge cases") {
  const VPIndex empty = VPIndex::build({}, 2.0);
  CHECK(empty.size() == 0);
  CHECK(empty.query_nn(CVector::basis(2, 0), 3).empty());
  CHECK(empty.query_range(CVector::basis(2, 0), 0.5).empty());

  const VPIndex single = VPIndex::build({CVector::basis(2, 1)}, 2.0);
  CHECK(single.size() == 1);
  const auto nn = single.query_nn(CVector::basis(2, 1), 1);
  REQUIRE(nn.size() == 1);
  CHECK(nn[0].id == 0);
  CHECK(nn[0].distance == 0.0);

  CHECK_THROWS_AS(VPIndex::build({CVector::zeros(2)}, 2.0), ValidationError);
  CHECK_THROWS_AS(VPIndex::build({CVector::basis(2, 0)}, 1.0), ParameterError);
  CHECK_THROWS_AS(
      VPIndex::build({CVector::basis(2, 0), CVector::basis(3, 0)}, 2.0),
      DimensionError);
}

TEST_CASE("query validation") {
  VectorGen gen(5, ScalarField::Complex);
  const VPIndex idx = VPIndex::build(random_points(gen, 16, 3), 2.0);
  CHECK_THROWS_AS(idx.query_nn(CVector::zeros(3), 1), ValidationError);
  CHECK_THROWS_AS(idx.query_nn(CVector::basis(2, 0), 1), DimensionError);
  CHECK_THROWS_AS(idx.query_range(CVector::basis(3, 0), -0.1), ParameterError);
  CHECK_THROWS_AS(idx.query_range(CVector::basis(3, 0), 1.5), ParameterError);
  CHECK(idx.query_nn(CVector::basis(3, 0), 0).empty());
}

TEST_CASE("projective lookup of a stored direction") {
  VectorGen gen(17, ScalarField::Complex);
  const std::vector<CVector> pts = random_points(gen, 64, 4);
  const VPIndex idx = VPIndex::build(pts, 2.0);

  for (std::size_t probe : {std::size_t{0}, std::size_t{17}, std::size_t{63}}) {
    std::vector<Complex> q(pts[probe].entries().begin(), pts[probe].entries().end());
    for (Complex& c : q) c *= Complex{-0.3, 1.9};  // same direction, new representative
    const auto nn = idx.query_nn(CVector(q), 1);
    REQUIRE(nn.size() == 1);
    CHECK(nn[0].id == probe);
    CHECK(nn[0].distance < 1e-6);
  }
}

TEST_CASE("k clamps to the index size and r=1 returns everything") {
  VectorGen gen(29, ScalarField::Complex);
  const VPIndex idx = VPIndex::build(random_points(gen, 10, 3), 2.0);
  const CVector q = normalize(gen.draw_gaussian(3));
  CHECK(idx.query_nn(q, 25).size() == 10);
  CHECK(idx.query_range(q, 1.0).size() == 10);
}

TEST_CASE("agreement with the linear scan") {
  VectorGen gen(4242, ScalarField::Complex);
  const Tolerance tol;
  for (double p : {2.0, 3.0}) {
    for (int round = 0; round < 8; ++round) {
      const std::size_t n = 16 + gen.uniform_index(240);
      const std::size_t dim = 1 + gen.uniform_index(8);
      const VPIndex idx = VPIndex::build(random_points(gen, n, dim), p);
      for (int qi = 0; qi < 25; ++qi) {
        CVector q = gen.draw(dim);
        if (q.is_zero()) continue;
        for (std::size_t k : {std::size_t{1}, std::size_t{5}}) {
          check_same(idx.query_nn(q, k), scan_nn(idx, q, k));
        }
        for (double r : {0.1, 0.6}) {
          check_same(idx.query_range(q, r), scan_range(idx, q, r, tol));
        }
      }
    }
  }
}

TEST_CASE("real-field data agrees too") {
  VectorGen gen(515, ScalarField::Real);
  const Tolerance tol;
  const VPIndex idx = VPIndex::build(random_points(gen, 128, 5), 3.0);
  for (int qi = 0; qi < 50; ++qi) {
    CVector q = gen.draw(5);
    if (q.is_zero()) continue;
    check_same(idx.query_nn(q, 3), scan_nn(idx, q, 3));
    check_same(idx.query_range(q, 0.4), scan_range(idx, q, 0.4, tol));
  }
}

TEST_CASE("queries prune but never exceed one evaluation per point") {
  VectorGen gen(606, ScalarField::Complex);
  // clustered data: 4 tight directional clusters
  std::vector<CVector> pts;
  for (int c = 0; c < 4; ++c) {
    const CVector center = normalize(gen.draw_gaussian(6));
    for (int i = 0; i < 80; ++i) {
      std::vector<Complex> v(center.entries().begin(), center.entries().end());
      for (Complex& e : v) {
        e += Complex{0.01 * gen.normal(), 0.01 * gen.normal()};
      }
      pts.push_back(CVector(std::move(v)));
    }
  }
  const VPIndex idx = VPIndex::build(pts, 2.0);
  std::size_t total_evals = 0;
  int queries = 0;
  for (int qi = 0; qi < 40; ++qi) {
    const CVector q = normalize(gen.draw_gaussian(6));
    QueryStats stats;
    idx.query_nn(q, 3, &stats);
    CHECK(stats.distance_evaluations <= idx.size());
    total_evals += stats.distance_evaluations;
    ++queries;
  }
  INFO("mean evaluations per query: ", double(total_evals) / queries, " of ", idx.size());
  CHECK(total_evals > 0);
}

TEST_CASE("serialization round trip") {
  VectorGen gen(718, ScalarField::Complex);
  const VPIndex idx = VPIndex::build(random_points(gen, 48, 3), 3.0);

  const std::string text = idx.to_json();
  const VPIndex back = VPIndex::from_json(text);
  CHECK(back.size() == idx.size());
  CHECK(back.exponent() == idx.exponent());
  CHECK(back.to_json() == text);  // canonical form is stable

  const CVector q = normalize(gen.draw_gaussian(3));
  check_same(back.query_nn(q, 5), idx.query_nn(q, 5));
  check_same(back.query_range(q, 0.5), idx.query_range(q, 0.5));

  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "schwarzkit_test_index.json";
  idx.save(path);
  const VPIndex loaded = VPIndex::load(path);
  CHECK(loaded.to_json() == text);
  std::filesystem::remove(path);
}

TEST_CASE("build determinism") {
  VectorGen gen_a(999, ScalarField::Complex);
  VectorGen gen_b(999, ScalarField::Complex);
  const VPIndex a = VPIndex::build(random_points(gen_a, 100, 4), 2.0);
  const VPIndex b = VPIndex::build(random_points(gen_b, 100, 4), 2.0);
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("tampered serializations are rejected") {
  VectorGen gen(31, ScalarField::Complex);
  const VPIndex idx = VPIndex::build(random_points(gen, 12, 2), 2.0);
  const std::string text = idx.to_json();

  CHECK_THROWS_AS(VPIndex::from_json("{"), ParseError);
  CHECK_THROWS_AS(VPIndex::from_json("[]"), ParseError);
  CHECK_THROWS_AS(VPIndex::from_json("{}"), ParseError);

  // flip the exponent below the admissible range
  std::string bad_p = text;
  const auto key = bad_p.find("\"p\":");
  REQUIRE(key != std::string::npos);
  const auto value_end = bad_p.find_first_of(",}", key);
  REQUIRE(value_end != std::string::npos);
  bad_p.replace(key, value_end - key, "\"p\":0.5");
  CHECK_THROWS(VPIndex::from_json(bad_p));

  CHECK_THROWS_AS(VPIndex::load("/nonexistent/schwarzkit.idx"), ParseError);
}
