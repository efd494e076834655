#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "schwarzkit/core_linalg.hpp"

namespace schwarzkit {

// A direction stored in the index: id is the position in the build input,
// rep the normalized representative.
struct ProjectivePoint {
  std::size_t id = 0;
  CVector rep;
};

struct Neighbor {
  std::size_t id = 0;
  double distance = 0.0;
};

struct QueryStats {
  std::size_t distance_evaluations = 0;
};

// Does the distance qualify for a radius-r result set under the tolerance policy?
bool range_includes(double distance, double radius, const Tolerance& tol);

// Vantage-point tree over the projective distance d_p. Build is deterministic
// for a fixed input order: the vantage is the first element of each partition
// and mu the lower median of the distances to it. Queries are const and
// thread-safe; exact agreement with a linear scan (ties by smaller id) is part
// of the contract.
class VPIndex {
 public:
  static VPIndex build(const std::vector<CVector>& points, double p,
                       const Tolerance& tol = Tolerance::standard());

  std::size_t size() const { return points_.size(); }
  double exponent() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::vector<ProjectivePoint>& points() const { return points_; }

  // k nearest neighbors ordered by (distance, id); fewer when k > size.
  std::vector<Neighbor> query_nn(const CVector& q, std::size_t k,
                                 QueryStats* stats = nullptr) const;
  // All points with d <= r (+ tolerance), ordered by (distance, id).
  std::vector<Neighbor> query_range(const CVector& q, double r,
                                    QueryStats* stats = nullptr) const;

  std::string to_json() const;
  static VPIndex from_json(const std::string& text,
                           const Tolerance& tol = Tolerance::standard());
  void save(const std::filesystem::path& path) const;
  static VPIndex load(const std::filesystem::path& path,
                      const Tolerance& tol = Tolerance::standard());

 private:
  struct Node {
    std::size_t point = 0;  // index into points_
    double mu = 0.0;
    int inside = -1;   // index into nodes_, -1 = none
    int outside = -1;
  };

  VPIndex() = default;
  int build_partition(std::vector<std::size_t>& ids, std::size_t begin, std::size_t end);
  void validate_structure(const Tolerance& tol) const;

  double p_ = 2.0;
  std::size_t dim_ = 0;
  Tolerance tol_;
  std::vector<ProjectivePoint> points_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace schwarzkit
