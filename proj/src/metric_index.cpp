#include "schwarzkit/metric_index.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "schwarzkit/jsonfmt.hpp"
#include "schwarzkit/projective_metrics.hpp"

namespace schwarzkit {

bool range_includes(double distance, double radius, const Tolerance& tol) {
  return distance <= radius + tol.slack(distance, radius);
}

namespace {

// d_p values live in [0, 1]; this pad absorbs the few-ulp wobble between a
// triangle-inequality bound and a directly computed distance so pruning never
// drops a candidate the linear scan would keep.
double prune_pad(const Tolerance& tol) { return tol.abs_eps + tol.rel_eps; }

void require_exponent(double p) {
  if (!(std::isfinite(p) && p >= 2.0)) {
    throw ParameterError("VPIndex: exponent p must be finite and >= 2, got " +
                         std::to_string(p));
  }
}

}  // namespace

VPIndex VPIndex::build(const std::vector<CVector>& points, double p, const Tolerance& tol) {
  require_exponent(p);
  tol.validate();

  VPIndex idx;
  idx.p_ = p;
  idx.tol_ = tol;
  if (points.empty()) return idx;

  idx.dim_ = points[0].dim();
  idx.points_.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != idx.dim_) {
      throw DimensionError("VPIndex::build: point " + std::to_string(i) + " has dim " +
                           std::to_string(points[i].dim()) + ", expected " +
                           std::to_string(idx.dim_));
    }
    if (points[i].is_zero()) {
      throw ValidationError("VPIndex::build: point " + std::to_string(i) +
                            " is the zero vector and has no direction");
    }
    idx.points_.push_back(ProjectivePoint{i, normalize(points[i])});
  }

  std::vector<std::size_t> ids(points.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  idx.nodes_.reserve(points.size());
  idx.root_ = idx.build_partition(ids, 0, ids.size());
  return idx;
}

int VPIndex::build_partition(std::vector<std::size_t>& ids, std::size_t begin,
                             std::size_t end) {
  if (begin >= end) return -1;
  const std::size_t vantage = ids[begin];

  Node node;
  node.point = vantage;
  const int node_index = static_cast<int>(nodes_.size());
  nodes_.push_back(node);

  const std::size_t rest = end - begin - 1;
  if (rest == 0) return node_index;

  std::vector<double> dist(rest);
  for (std::size_t i = 0; i < rest; ++i) {
    dist[i] = d_p(points_[vantage].rep, points_[ids[begin + 1 + i]].rep, p_, tol_);
  }

  std::vector<double> sorted(dist);
  std::sort(sorted.begin(), sorted.end());
  const double mu = sorted[(rest - 1) / 2];  // lower median

  // Stable split: inside (d <= mu) first, preserving relative order.
  std::vector<std::size_t> inside, outside;
  inside.reserve(rest);
  outside.reserve(rest);
  for (std::size_t i = 0; i < rest; ++i) {
    (dist[i] <= mu ? inside : outside).push_back(ids[begin + 1 + i]);
  }
  std::copy(inside.begin(), inside.end(), ids.begin() + begin + 1);
  std::copy(outside.begin(), outside.end(), ids.begin() + begin + 1 + inside.size());

  const std::size_t mid = begin + 1 + inside.size();
  const int in_child = build_partition(ids, begin + 1, mid);
  const int out_child = build_partition(ids, mid, end);
  nodes_[node_index].mu = mu;
  nodes_[node_index].inside = in_child;
  nodes_[node_index].outside = out_child;
  return node_index;
}

namespace {

struct HeapEntry {
  double distance;
  std::size_t id;
  bool operator<(const HeapEntry& o) const {  // max-heap on (distance, id)
    if (distance != o.distance) return distance < o.distance;
    return id < o.id;
  }
};

}  // namespace

std::vector<Neighbor> VPIndex::query_nn(const CVector& q, std::size_t k,
                                        QueryStats* stats) const {
  if (stats) stats->distance_evaluations = 0;
  std::vector<Neighbor> out;
  if (k == 0 || points_.empty()) return out;
  if (q.dim() != dim_) {
    throw DimensionError("VPIndex::query_nn: query dim " + std::to_string(q.dim()) +
                         " does not match index dim " + std::to_string(dim_));
  }

  std::priority_queue<HeapEntry> heap;  // worst candidate on top
  const double pad = prune_pad(tol_);

  const std::function<void(int)> visit = [&](int ni) {
    if (ni < 0) return;
    const Node& node = nodes_[ni];
    const double dv = d_p(q, points_[node.point].rep, p_, tol_);
    if (stats) ++stats->distance_evaluations;

    const HeapEntry cand{dv, points_[node.point].id};
    if (heap.size() < k) {
      heap.push(cand);
    } else if (cand < heap.top()) {
      heap.pop();
      heap.push(cand);
    }

    const bool full = heap.size() == k;
    const double worst = full ? heap.top().distance : 1.0;
    const bool skip_inside = full && node.inside >= 0 && dv - node.mu > worst + pad;
    const bool skip_outside = full && node.outside >= 0 && node.mu - dv > worst + pad;

    if (dv <= node.mu) {
      if (!skip_inside) visit(node.inside);
      // Re-read the bound: the heap may have tightened while inside was explored.
      const double w2 = heap.size() == k ? heap.top().distance : 1.0;
      if (!(heap.size() == k && node.outside >= 0 && node.mu - dv > w2 + pad)) {
        visit(node.outside);
      }
    } else {
      if (!skip_outside) visit(node.outside);
      const double w2 = heap.size() == k ? heap.top().distance : 1.0;
      if (!(heap.size() == k && node.inside >= 0 && dv - node.mu > w2 + pad)) {
        visit(node.inside);
      }
    }
  };
  visit(root_);

  out.reserve(heap.size());
  while (!heap.empty()) {
    out.push_back(Neighbor{heap.top().id, heap.top().distance});
    heap.pop();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Neighbor> VPIndex::query_range(const CVector& q, double r,
                                           QueryStats* stats) const {
  if (stats) stats->distance_evaluations = 0;
  if (!(std::isfinite(r) && r >= 0.0 && r <= 1.0)) {
    throw ParameterError("VPIndex::query_range: radius must be in [0, 1], got " +
                         std::to_string(r));
  }
  std::vector<Neighbor> out;
  if (points_.empty()) return out;
  if (q.dim() != dim_) {
    throw DimensionError("VPIndex::query_range: query dim " + std::to_string(q.dim()) +
                         " does not match index dim " + std::to_string(dim_));
  }

  const double pad = prune_pad(tol_);
  // Inclusion slack grows with the radius; make the pruning bound cover it.
  const double reach = r + tol_.slack(1.0, r) + pad;

  const std::function<void(int)> visit = [&](int ni) {
    if (ni < 0) return;
    const Node& node = nodes_[ni];
    const double dv = d_p(q, points_[node.point].rep, p_, tol_);
    if (stats) ++stats->distance_evaluations;
    if (range_includes(dv, r, tol_)) {
      out.push_back(Neighbor{points_[node.point].id, dv});
    }
    if (node.inside >= 0 && dv - node.mu <= reach) visit(node.inside);
    if (node.outside >= 0 && node.mu - dv <= reach) visit(node.outside);
  };
  visit(root_);

  std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.id < b.id;
  });
  return out;
}

std::string VPIndex::to_json() const {
  jsonfmt::Writer w;
  w.begin_object();
  w.key("format").value(std::string("schwarzkit.vpindex.v1"));
  w.key("p").value(p_);
  w.key("dim").value(static_cast<std::uint64_t>(dim_));
  w.key("points").begin_array();
  for (const ProjectivePoint& pt : points_) {
    std::vector<Complex> entries(pt.rep.entries().begin(), pt.rep.entries().end());
    w.raw(jsonfmt::complex_array(entries));
  }
  w.end_array();

  const std::function<void(int)> emit = [&](int ni) {
    if (ni < 0) {
      w.value_null();
      return;
    }
    const Node& n = nodes_[ni];
    w.begin_object();
    w.key("point").value(static_cast<std::uint64_t>(points_[n.point].id));
    w.key("mu").value(n.mu);
    w.key("inside");
    emit(n.inside);
    w.key("outside");
    emit(n.outside);
    w.end_object();
  };
  w.key("tree");
  emit(root_);
  w.end_object();
  return w.str();
}

namespace {

using nlohmann::json;

CVector vector_from_json(const json& jv, std::size_t where) {
  if (!jv.is_array() || jv.empty()) {
    throw ParseError("vpindex: point " + std::to_string(where) +
                     " must be a nonempty array of [re, im] pairs");
  }
  std::vector<Complex> entries;
  entries.reserve(jv.size());
  for (const json& pair : jv) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ParseError("vpindex: point " + std::to_string(where) +
                       " has a malformed [re, im] entry");
    }
    entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return CVector(std::move(entries));
}

}  // namespace

VPIndex VPIndex::from_json(const std::string& text, const Tolerance& tol) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("vpindex: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("p") || !j.contains("dim") || !j.contains("points") ||
      !j.contains("tree")) {
    throw ParseError("vpindex: expected object with p, dim, points, tree");
  }
  if (!j["p"].is_number()) throw ParseError("vpindex: p must be a number");
  const double p = j["p"].get<double>();
  require_exponent(p);
  if (!j["dim"].is_number_unsigned()) throw ParseError("vpindex: dim must be unsigned");
  const std::size_t dim = j["dim"].get<std::size_t>();
  if (!j["points"].is_array()) throw ParseError("vpindex: points must be an array");

  VPIndex idx;
  idx.p_ = p;
  idx.dim_ = dim;
  idx.tol_ = tol;
  const json& jpoints = j["points"];
  idx.points_.reserve(jpoints.size());
  for (std::size_t i = 0; i < jpoints.size(); ++i) {
    CVector v = vector_from_json(jpoints[i], i);
    if (v.dim() != dim) {
      throw ParseError("vpindex: point " + std::to_string(i) + " has dim " +
                       std::to_string(v.dim()) + ", header says " + std::to_string(dim));
    }
    const double n = norm(v);
    if (std::abs(n - 1.0) > 1e-8) {
      throw ParseError("vpindex: point " + std::to_string(i) +
                       " is not a unit representative (||v|| = " + std::to_string(n) + ")");
    }
    idx.points_.push_back(ProjectivePoint{i, std::move(v)});
  }
  if (jpoints.empty() && dim != 0) {
    throw ParseError("vpindex: empty index must have dim 0");
  }

  // Rebuild the node array from the nested tree.
  std::vector<bool> seen(idx.points_.size(), false);
  const std::function<int(const json&)> read = [&](const json& jn) -> int {
    if (jn.is_null()) return -1;
    if (!jn.is_object() || !jn.contains("point") || !jn.contains("mu")) {
      throw ParseError("vpindex: tree node must be null or {point, mu, inside, outside}");
    }
    if (!jn["point"].is_number_unsigned()) throw ParseError("vpindex: node point id malformed");
    const std::size_t id = jn["point"].get<std::size_t>();
    if (id >= idx.points_.size()) {
      throw ParseError("vpindex: node references point " + std::to_string(id) +
                       " out of range");
    }
    if (seen[id]) {
      throw ParseError("vpindex: point " + std::to_string(id) +
                       " appears in more than one node");
    }
    seen[id] = true;
    if (!jn["mu"].is_number()) throw ParseError("vpindex: node mu malformed");
    Node node;
    node.point = id;  // ids equal positions after load
    node.mu = jn["mu"].get<double>();
    const int self = static_cast<int>(idx.nodes_.size());
    idx.nodes_.push_back(node);
    const int inside = read(jn.contains("inside") ? jn["inside"] : json(nullptr));
    const int outside = read(jn.contains("outside") ? jn["outside"] : json(nullptr));
    idx.nodes_[self].inside = inside;
    idx.nodes_[self].outside = outside;
    return self;
  };
  idx.root_ = read(j["tree"]);

  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw ParseError("vpindex: point " + std::to_string(i) + " missing from the tree");
    }
  }
  idx.validate_structure(tol);
  return idx;
}

void VPIndex::validate_structure(const Tolerance& tol) const {
  const double pad = 1e-9;
  (void)tol;
  // For every node: all points in the inside subtree sit within mu (+pad) of the
  // vantage, all outside points beyond mu (-pad).
  const std::function<void(int, std::vector<std::size_t>&)> collect =
      [&](int ni, std::vector<std::size_t>& acc) {
        if (ni < 0) return;
        acc.push_back(nodes_[ni].point);
        collect(nodes_[ni].inside, acc);
        collect(nodes_[ni].outside, acc);
      };
  const std::function<void(int)> check = [&](int ni) {
    if (ni < 0) return;
    const Node& n = nodes_[ni];
    std::vector<std::size_t> in_pts, out_pts;
    collect(n.inside, in_pts);
    collect(n.outside, out_pts);
    for (std::size_t w : in_pts) {
      const double d = d_p(points_[n.point].rep, points_[w].rep, p_, tol_);
      if (d > n.mu + pad) {
        throw ParseError("vpindex: inside point " + std::to_string(points_[w].id) +
                         " violates partition radius at vantage " +
                         std::to_string(points_[n.point].id));
      }
    }
    for (std::size_t w : out_pts) {
      const double d = d_p(points_[n.point].rep, points_[w].rep, p_, tol_);
      if (d <= n.mu - pad) {
        throw ParseError("vpindex: outside point " + std::to_string(points_[w].id) +
                         " violates partition radius at vantage " +
                         std::to_string(points_[n.point].id));
      }
    }
    check(n.inside);
    check(n.outside);
  };
  check(root_);
}

void VPIndex::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("vpindex: cannot open " + path.string() + " for writing");
  }
  const std::string text = to_json();
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.put('\n');
  if (!out) throw ParseError("vpindex: write to " + path.string() + " failed");
}

VPIndex VPIndex::load(const std::filesystem::path& path, const Tolerance& tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("vpindex: cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str(), tol);
}

}  // namespace schwarzkit
