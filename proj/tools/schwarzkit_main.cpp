// schwarzkit command line: bound computation, projective metrics, vantage-point
// index queries, and the randomized verification suite.
//
// Exit codes: 0 = success and every checked inequality satisfied;
//             1 = at least one violation confirmed by the independent
//                 plain-evaluation route;
//             2 = usage or input error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schwarzkit/harness.hpp"
#include "schwarzkit/jsonfmt.hpp"
#include "schwarzkit/metric_index.hpp"
#include "schwarzkit/ntuple_apps.hpp"
#include "schwarzkit/plain_eval.hpp"
#include "schwarzkit/projections.hpp"
#include "schwarzkit/projective_metrics.hpp"
#include "schwarzkit/refinements.hpp"
#include "schwarzkit/vector_io.hpp"

namespace {

using namespace schwarzkit;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) { return jsonfmt::number(v); }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

const CVector& vector_at(const VectorSet& set, std::size_t idx, const char* what) {
  if (idx >= set.vectors.size()) {
    throw ValidationError(std::string(what) + " index " + std::to_string(idx) +
                          " out of range (file has " + std::to_string(set.vectors.size()) +
                          " vectors, indices are 0-based)");
  }
  return set.vectors[idx];
}

plain::Vec to_plain(const CVector& v) {
  return plain::Vec(v.entries().begin(), v.entries().end());
}

// ---------------------------------------------------------------------------
// bound

struct EvaluatedBound {
  BoundReport report;
  double plain_gap = 0.0;
  bool confirmed = false;  // report violated and the plain route agrees
  std::optional<std::size_t> argmax_m;
};

struct BoundArgs {
  std::string input;
  std::size_t x = 0;
  std::size_t y = 0;
  std::vector<std::size_t> e;
  std::optional<std::size_t> z;
  std::string method;
  double p = 2.0;
  std::string mode = "modulus";
  std::string json_out;
};

// Bounds built around one direction vector expect it normalized; doing that
// here keeps raw data files usable. A note goes to stderr when it mattered.
CVector unit_direction(const CVector& raw, const Tolerance& tol, std::size_t idx) {
  const double n = norm(raw);
  const CVector e = normalize(raw);
  if (std::abs(n - 1.0) > tol.slack(n, 1.0) * 1e3) {
    std::fprintf(stderr, "note: vector %zu has norm %s; using its direction\n", idx,
                 fmt(n).c_str());
  }
  return e;
}

int run_bound(const BoundArgs& args) {
  const Tolerance tol = Tolerance::standard();
  const VectorSet set = load_vectors(args.input);
  const CVector& x = vector_at(set, args.x, "--x");
  const CVector& y = vector_at(set, args.y, "--y");
  const Mode mode = args.mode == "real" ? Mode::RealPart : Mode::Modulus;
  const bool real_part = mode == Mode::RealPart;

  const auto need_one_e = [&]() -> CVector {
    if (args.e.size() != 1) {
      throw ValidationError("method " + args.method + " needs exactly one --e index");
    }
    return unit_direction(vector_at(set, args.e[0], "--e"), tol, args.e[0]);
  };
  const auto need_z = [&]() -> const CVector& {
    if (!args.z) throw ValidationError("method " + args.method + " needs --z");
    return vector_at(set, *args.z, "--z");
  };

  std::vector<EvaluatedBound> results;
  const auto push = [&](const BoundReport& r, double pg,
                        std::optional<std::size_t> argmax = std::nullopt) {
    EvaluatedBound eb;
    eb.report = r;
    eb.plain_gap = pg;
    eb.confirmed = !r.satisfied && pg < -tol.slack(r.lhs, r.rhs);
    eb.argmax_m = argmax;
    results.push_back(eb);
  };

  const plain::Vec px = to_plain(x);
  const plain::Vec py = to_plain(y);

  if (args.method == "schwarz") {
    push(schwarz_bound(x, y, tol), plain::schwarz_gap(px, py));
  } else if (args.method == "projection") {
    std::vector<CVector> family;
    std::vector<plain::Vec> plain_family;
    for (std::size_t idx : args.e) {
      family.push_back(vector_at(set, idx, "--e"));
      plain_family.push_back(to_plain(family.back()));
    }
    const Projector P = family.empty() ? Projector::zero(set.dim) : make_projector(family);
    const ProjectionBounds pb = projection_bound(P, x, y, tol);
    push(pb.refinement, plain::projection_gap(px, py, plain_family));
    push(pb.chain, plain::projection_chain_gap(px, py, plain_family));
  } else if (args.method == "quad") {
    const CVector& z = need_z();
    push(quad_refinement(x, y, z, tol), plain::quad_gap(px, py, to_plain(z)));
  } else if (args.method == "rs") {
    const CVector e = need_one_e();
    const plain::Vec pe = to_plain(e);
    const ChainResult c = rs_chain(x, y, e, tol);
    push(c.upper, plain::chain_upper_gap(px, py, pe));
    push(c.lower, plain::chain_lower_gap(px, py, pe));
  } else if (args.method == "detp") {
    const CVector e = need_one_e();
    push(detp_bound(x, y, e, MetricParams{args.p, mode}, tol),
         plain::detp_gap(px, py, to_plain(e), args.p, real_part));
  } else if (args.method == "det2") {
    const CVector e = need_one_e();
    push(det2_bound(x, y, e, mode, tol), plain::det2_gap(px, py, to_plain(e), real_part));
  } else if (args.method == "ntuple-general-p") {
    const CVector e = need_one_e();
    push(general_e_bound(x, y, e, args.p, NTupleOrder::PForm, tol).base,
         plain::ntuple_general_p_gap(px, py, to_plain(e), args.p));
  } else if (args.method == "ntuple-general-quad") {
    const CVector e = need_one_e();
    push(general_e_bound(x, y, e, 2.0, NTupleOrder::Quadratic, tol).base,
         plain::ntuple_general_quad_gap(px, py, to_plain(e)));
  } else if (args.method == "ntuple-basis-p") {
    const NTupleReport r = basis_max_bound(x, y, args.p, NTupleOrder::PForm, tol);
    push(r.base, plain::ntuple_basis_p_gap(px, py, args.p), r.argmax_m);
  } else if (args.method == "ntuple-basis-quad") {
    const NTupleReport r = basis_max_bound(x, y, 2.0, NTupleOrder::Quadratic, tol);
    push(r.base, plain::ntuple_basis_quad_gap(px, py), r.argmax_m);
  } else if (args.method == "ntuple-basis-p2") {
    const NTupleReport r = basis_max_bound(x, y, 2.0, NTupleOrder::P2Simple, tol);
    push(r.base, plain::ntuple_basis_p2_gap(px, py), r.argmax_m);
  } else if (args.method == "ntuple-mean-p") {
    push(mean_bound(x, y, args.p, NTupleOrder::PForm, tol).base,
         plain::ntuple_mean_p_gap(px, py, args.p));
  } else if (args.method == "ntuple-mean-quad") {
    push(mean_bound(x, y, 2.0, NTupleOrder::Quadratic, tol).base,
         plain::ntuple_mean_quad_gap(px, py));
  } else {
    throw ValidationError("unknown method " + args.method);
  }

  bool any_confirmed = false;
  for (const EvaluatedBound& eb : results) {
    const BoundReport& r = eb.report;
    std::printf("%-22s lhs=%s rhs=%s gap=%s %s%s\n", r.label.c_str(), fmt(r.lhs).c_str(),
                fmt(r.rhs).c_str(), fmt(r.gap).c_str(),
                r.satisfied ? (r.equality ? "satisfied (equality)" : "satisfied")
                            : (eb.confirmed ? "VIOLATED (confirmed)" : "violated (unconfirmed)"),
                eb.argmax_m ? (" argmax_m=" + std::to_string(*eb.argmax_m)).c_str() : "");
    any_confirmed = any_confirmed || eb.confirmed;
  }

  if (!args.json_out.empty()) {
    jsonfmt::Writer w;
    w.begin_object();
    w.key("method").value(args.method);
    w.key("input").value(args.input);
    w.key("x").value(static_cast<std::uint64_t>(args.x));
    w.key("y").value(static_cast<std::uint64_t>(args.y));
    w.key("p").value(args.p);
    w.key("mode").value(mode_name(mode));
    w.key("reports").begin_array();
    for (const EvaluatedBound& eb : results) {
      w.begin_object();
      w.key("report").raw(eb.report.to_json());
      w.key("plain_gap").value(eb.plain_gap);
      w.key("confirmed").value(eb.confirmed);
      if (eb.argmax_m) {
        w.key("argmax_m").value(static_cast<std::uint64_t>(*eb.argmax_m));
      }
      w.end_object();
    }
    w.end_array();
    w.end_object();
    write_text_file(args.json_out, w.str());
  }

  return any_confirmed ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------
// metrics

struct MetricsArgs {
  std::string input;
  bool pairs = false;
  bool triples = false;
  std::string kind;
  double p = 2.0;
  std::string json_out;
};

int run_metrics_pairs(const MetricsArgs& args, const VectorSet& set) {
  const Tolerance tol = Tolerance::standard();
  std::function<double(const CVector&, const CVector&)> eval;
  if (args.kind == "dp") {
    eval = [&](const CVector& a, const CVector& b) { return d_p(a, b, args.p, tol); };
  } else if (args.kind == "deltap") {
    eval = [&](const CVector& a, const CVector& b) { return delta_p(a, b, args.p, tol); };
  } else if (args.kind == "psi") {
    eval = [&](const CVector& a, const CVector& b) {
      return angle(a, b, AngleKind::Psi, tol).radians;
    };
  } else if (args.kind == "phi") {
    eval = [&](const CVector& a, const CVector& b) {
      return angle(a, b, AngleKind::Phi, tol).radians;
    };
  } else {
    throw ValidationError("pair kind must be dp, deltap, psi, or phi (got " + args.kind +
                          ")");
  }

  jsonfmt::Writer w;
  w.begin_object();
  w.key("kind").value(args.kind);
  w.key("p").value(args.p);
  w.key("pairs").begin_array();
  std::printf("%-6s %-6s %s\n", "i", "j", "value");
  for (std::size_t i = 0; i < set.vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < set.vectors.size(); ++j) {
      const double v = eval(set.vectors[i], set.vectors[j]);
      std::printf("%-6zu %-6zu %s\n", i, j, fmt(v).c_str());
      w.begin_object();
      w.key("i").value(static_cast<std::uint64_t>(i));
      w.key("j").value(static_cast<std::uint64_t>(j));
      w.key("value").value(v);
      w.end_object();
    }
  }
  w.end_array();
  w.end_object();
  if (!args.json_out.empty()) write_text_file(args.json_out, w.str());
  return kExitOk;
}

int run_metrics_triples(const MetricsArgs& args, const VectorSet& set) {
  const Tolerance tol = Tolerance::standard();
  TriangleKind kind;
  double (*plain_fn)(const plain::Vec&, const plain::Vec&, const plain::Vec&) = nullptr;
  double (*plain_fn_p)(const plain::Vec&, const plain::Vec&, const plain::Vec&, double) =
      nullptr;
  if (args.kind == "cos-lower") {
    kind = TriangleKind::CosLower;
    plain_fn = plain::cos_lower_gap;
  } else if (args.kind == "lin-psi") {
    kind = TriangleKind::LinPsi;
    plain_fn = plain::psi_triangle_gap;
  } else if (args.kind == "krein") {
    kind = TriangleKind::Krein;
    plain_fn = plain::phi_triangle_gap;
  } else if (args.kind == "sin-psi") {
    kind = TriangleKind::WangZhangSinPsi;
    plain_fn = plain::sin_psi_triangle_gap;
  } else if (args.kind == "sin-phi") {
    kind = TriangleKind::SinPhi;
    plain_fn = plain::sin_phi_triangle_gap;
  } else if (args.kind == "dp") {
    kind = TriangleKind::Dp;
    plain_fn_p = plain::dp_triangle_gap;
  } else if (args.kind == "deltap") {
    kind = TriangleKind::DeltaP;
    plain_fn_p = plain::deltap_triangle_gap;
  } else {
    throw ValidationError(
        "triple kind must be cos-lower, lin-psi, krein, sin-psi, sin-phi, dp, or deltap "
        "(got " +
        args.kind + ")");
  }

  const std::size_t m = set.vectors.size();
  const std::size_t total = m >= 3 ? m * (m - 1) * (m - 2) / 2 : 0;
  const bool print_rows = total <= 120;

  std::uint64_t violations = 0;
  std::uint64_t confirmed_count = 0;
  double min_gap = std::numeric_limits<double>::infinity();

  jsonfmt::Writer w;
  w.begin_object();
  w.key("kind").value(args.kind);
  w.key("p").value(args.p);
  w.key("triples").begin_array();
  if (print_rows && total > 0) {
    std::printf("%-4s %-4s %-4s %-22s %s\n", "x", "y", "mid", "lhs (two legs)",
                "rhs (direct)");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        const CVector& x = set.vectors[i];
        const CVector& y = set.vectors[j];
        const CVector& z = set.vectors[k];
        const BoundReport r = triangle_check(kind, x, y, z, args.p, tol);
        min_gap = std::min(min_gap, r.gap);
        bool confirmed = false;
        if (!r.satisfied) {
          ++violations;
          const double pg = plain_fn ? plain_fn(to_plain(x), to_plain(y), to_plain(z))
                                     : plain_fn_p(to_plain(x), to_plain(y), to_plain(z),
                                                  args.p);
          confirmed = pg < -tol.slack(r.lhs, r.rhs);
          if (confirmed) ++confirmed_count;
        }
        if (print_rows) {
          std::printf("%-4zu %-4zu %-4zu %-22s %s%s\n", i, j, k, fmt(r.lhs).c_str(),
                      fmt(r.rhs).c_str(),
                      r.satisfied ? "" : (confirmed ? "  VIOLATED (confirmed)" : "  violated"));
        } else if (!r.satisfied) {
          std::printf("violation at (%zu, %zu, mid %zu): lhs=%s rhs=%s%s\n", i, j, k,
                      fmt(r.lhs).c_str(), fmt(r.rhs).c_str(),
                      confirmed ? " (confirmed)" : " (unconfirmed)");
        }
        w.begin_object();
        w.key("x").value(static_cast<std::uint64_t>(i));
        w.key("y").value(static_cast<std::uint64_t>(j));
        w.key("mid").value(static_cast<std::uint64_t>(k));
        w.key("report").raw(r.to_json());
        w.key("confirmed").value(confirmed);
        w.end_object();
      }
    }
  }
  w.end_array();
  w.key("total").value(static_cast<std::uint64_t>(total));
  w.key("violations").value(violations);
  w.key("confirmed").value(confirmed_count);
  w.end_object();

  std::printf("triples checked: %zu, violations: %llu, confirmed: %llu, min gap: %s\n",
              total, static_cast<unsigned long long>(violations),
              static_cast<unsigned long long>(confirmed_count),
              total > 0 ? fmt(min_gap).c_str() : "n/a");
  if (!args.json_out.empty()) write_text_file(args.json_out, w.str());
  return confirmed_count > 0 ? kExitViolation : kExitOk;
}

int run_metrics(const MetricsArgs& args) {
  if (args.pairs == args.triples) {
    throw ValidationError("metrics needs exactly one of --pairs / --triples");
  }
  const VectorSet set = load_vectors(args.input);
  if (args.triples && set.vectors.size() < 3) {
    throw ValidationError("--triples needs at least 3 vectors, file has " +
                          std::to_string(set.vectors.size()));
  }
  return args.pairs ? run_metrics_pairs(args, set) : run_metrics_triples(args, set);
}

// ---------------------------------------------------------------------------
// index

int run_index_build(const std::string& input, double p, const std::string& out) {
  const VectorSet set = load_vectors(input);
  const VPIndex index = VPIndex::build(set.vectors, p);
  index.save(out);
  std::printf("indexed %zu points (dim %zu, p = %s) -> %s\n", index.size(), index.dim(),
              fmt(p).c_str(), out.c_str());
  return kExitOk;
}

void print_neighbors(std::size_t query, const std::vector<Neighbor>& hits,
                     const QueryStats& stats) {
  std::printf("query %zu (%zu distance evaluations):\n", query, stats.distance_evaluations);
  for (const Neighbor& n : hits) {
    std::printf("  id=%-6zu distance=%s\n", n.id, fmt(n.distance).c_str());
  }
}

std::string neighbors_json(std::size_t query, const std::vector<Neighbor>& hits,
                           const QueryStats& stats) {
  jsonfmt::Writer w;
  w.begin_object();
  w.key("query").value(static_cast<std::uint64_t>(query));
  w.key("neighbors").begin_array();
  for (const Neighbor& n : hits) {
    w.begin_object();
    w.key("id").value(static_cast<std::uint64_t>(n.id));
    w.key("distance").value(n.distance);
    w.end_object();
  }
  w.end_array();
  w.key("distance_evaluations").value(static_cast<std::uint64_t>(stats.distance_evaluations));
  w.end_object();
  return w.str();
}

int run_index_query(const std::string& index_path, const std::string& query_path,
                    std::optional<std::size_t> k, std::optional<double> r,
                    const std::string& json_out) {
  const VPIndex index = VPIndex::load(index_path);
  const VectorSet queries = load_vectors(query_path);
  if (queries.dim != index.dim()) {
    throw DimensionError("query dim " + std::to_string(queries.dim) +
                         " does not match index dim " + std::to_string(index.dim()));
  }

  jsonfmt::Writer w;
  w.begin_object();
  w.key("index").value(index_path);
  w.key("p").value(index.exponent());
  if (k) w.key("k").value(static_cast<std::uint64_t>(*k));
  if (r) w.key("r").value(*r);
  w.key("results").begin_array();
  for (std::size_t qi = 0; qi < queries.vectors.size(); ++qi) {
    QueryStats stats;
    const std::vector<Neighbor> hits =
        k ? index.query_nn(queries.vectors[qi], *k, &stats)
          : index.query_range(queries.vectors[qi], *r, &stats);
    print_neighbors(qi, hits, stats);
    w.raw(neighbors_json(qi, hits, stats));
  }
  w.end_array();
  w.end_object();
  if (!json_out.empty()) write_text_file(json_out, w.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  std::string dims = "2,3,4";
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::string p_list = "2";
  std::string field = "complex";
  double tol = 1e-9;
  double abs_tol = 1e-12;
  std::string json_out;
  bool serial = false;
  int threads = 0;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int run_check(const CheckArgs& args) {
  TrialConfig cfg;
  cfg.dims.clear();
  for (const std::string& s : split_list(args.dims)) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      throw ValidationError("--dims: \"" + s + "\" is not a dimension");
    }
    if (used != s.size() || v == 0) {
      throw ValidationError("--dims: \"" + s + "\" is not a dimension");
    }
    cfg.dims.push_back(v);
  }
  cfg.p_values.clear();
  for (const std::string& s : split_list(args.p_list)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ValidationError("--p: \"" + s + "\" is not a number");
    }
    if (used != s.size()) throw ValidationError("--p: \"" + s + "\" is not a number");
    cfg.p_values.push_back(v);
  }
  cfg.trials_per_dim = args.trials;
  cfg.seed = args.seed;
  if (args.field == "real") {
    cfg.field = ScalarField::Real;
  } else if (args.field == "complex") {
    cfg.field = ScalarField::Complex;
  } else {
    throw ValidationError("--field must be real or complex");
  }
  cfg.tol.rel_eps = args.tol;
  cfg.tol.abs_eps = args.abs_tol;
  cfg.validate();

  const SuiteReport report =
      args.serial ? run_suite(cfg) : run_suite_parallel(cfg, args.threads);

  std::printf("%-22s %10s %6s %6s %8s %22s %s\n", "family", "trials", "viol", "conf",
              "equal", "worst gap", "max tightness");
  for (std::size_t i = 0; i < kFamilyCount; ++i) {
    const FamilyStats& f = report.families[i];
    std::printf("%-22s %10llu %6llu %6llu %8llu %22s %s\n",
                family_name(static_cast<Family>(i)),
                static_cast<unsigned long long>(f.trials),
                static_cast<unsigned long long>(f.violations),
                static_cast<unsigned long long>(f.confirmed),
                static_cast<unsigned long long>(f.equality_hits),
                f.trials ? fmt(f.worst_gap).c_str() : "n/a", fmt(f.max_tightness).c_str());
  }
  std::printf(
      "total: %llu reports over %llu trials, %llu violations (%llu confirmed), %.3f s\n",
      static_cast<unsigned long long>(report.total_reports()),
      static_cast<unsigned long long>(report.config.total_trials()),
      static_cast<unsigned long long>(report.total_violations()),
      static_cast<unsigned long long>(report.total_confirmed()), report.elapsed_seconds);

  if (!args.json_out.empty()) write_text_file(args.json_out, report.to_json());
  return report.total_confirmed() > 0 ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "schwarzkit: refinement bounds, projective metrics, and vantage-point search for "
      "complex inner-product data"};
  app.require_subcommand(1);

  BoundArgs bound_args;
  CLI::App* bound = app.add_subcommand("bound", "Evaluate one bound on vectors from a file");
  bound->add_option("--input", bound_args.input, "vector file (.json or .csv)")
      ->required()
      ->check(CLI::ExistingFile);
  bound->add_option("--x", bound_args.x, "index of x (0-based)")->required();
  bound->add_option("--y", bound_args.y, "index of y (0-based)")->required();
  bound->add_option("--e", bound_args.e,
                    "index of the direction vector (repeatable for --method projection)");
  bound->add_option("--z", bound_args.z, "index of the third vector (quad)");
  bound
      ->add_option("--method", bound_args.method,
                   "schwarz | projection | quad | rs | detp | det2 | ntuple-general-p | "
                   "ntuple-general-quad | ntuple-basis-p | ntuple-basis-quad | "
                   "ntuple-basis-p2 | ntuple-mean-p | ntuple-mean-quad")
      ->required();
  bound->add_option("--p", bound_args.p, "exponent p >= 2 (default 2)");
  bound->add_option("--mode", bound_args.mode, "modulus | real (default modulus)")
      ->check(CLI::IsMember({"modulus", "real"}));
  bound->add_option("--json", bound_args.json_out, "write the reports as JSON to this file");

  MetricsArgs metrics_args;
  CLI::App* metrics =
      app.add_subcommand("metrics", "Distances, angles, and triangle checks over a file");
  metrics->add_option("--input", metrics_args.input, "vector file (.json or .csv)")
      ->required()
      ->check(CLI::ExistingFile);
  metrics->add_flag("--pairs", metrics_args.pairs,
                    "evaluate the kind on every unordered pair");
  metrics->add_flag("--triples", metrics_args.triples,
                    "check the triangle form on every triple (third index is the middle)");
  metrics
      ->add_option("--kind", metrics_args.kind,
                   "pairs: dp | deltap | psi | phi; triples: cos-lower | lin-psi | krein | "
                   "sin-psi | sin-phi | dp | deltap")
      ->required();
  metrics->add_option("--p", metrics_args.p, "exponent p >= 2 (default 2)");
  metrics->add_option("--json", metrics_args.json_out, "write results as JSON to this file");

  CLI::App* index = app.add_subcommand("index", "Vantage-point index over directions");
  index->require_subcommand(1);

  std::string ib_input, ib_out;
  double ib_p = 2.0;
  CLI::App* ib = index->add_subcommand("build", "Build an index from a vector file");
  ib->add_option("--input", ib_input, "vector file (.json or .csv)")
      ->required()
      ->check(CLI::ExistingFile);
  ib->add_option("--p", ib_p, "distance exponent p >= 2 (default 2)");
  ib->add_option("--out", ib_out, "output index file")->required();

  std::string nn_index, nn_query, nn_json;
  std::size_t nn_k = 1;
  CLI::App* nn = index->add_subcommand("nn", "k nearest neighbors for each query vector");
  nn->add_option("--index", nn_index, "index file")->required()->check(CLI::ExistingFile);
  nn->add_option("--query", nn_query, "query vector file")
      ->required()
      ->check(CLI::ExistingFile);
  nn->add_option("--k", nn_k, "neighbor count (default 1)");
  nn->add_option("--json", nn_json, "write results as JSON to this file");

  std::string rg_index, rg_query, rg_json;
  double rg_r = 0.5;
  CLI::App* rg = index->add_subcommand("range", "all points within distance r of each query");
  rg->add_option("--index", rg_index, "index file")->required()->check(CLI::ExistingFile);
  rg->add_option("--query", rg_query, "query vector file")
      ->required()
      ->check(CLI::ExistingFile);
  rg->add_option("--r", rg_r, "radius in [0, 1]")->required();
  rg->add_option("--json", rg_json, "write results as JSON to this file");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "Randomized verification suite");
  check->add_option("--dims", check_args.dims, "comma list of dimensions (default 2,3,4)");
  check->add_option("--trials", check_args.trials, "trials per dimension (default 1000)");
  check->add_option("--seed", check_args.seed, "base seed (default 1)");
  check->add_option("--p", check_args.p_list, "comma list of exponents (default 2)");
  check->add_option("--field", check_args.field, "real | complex (default complex)")
      ->check(CLI::IsMember({"real", "complex"}));
  check->add_option("--tol", check_args.tol, "relative tolerance (default 1e-9)");
  check->add_option("--abs-tol", check_args.abs_tol, "absolute tolerance (default 1e-12)");
  check->add_option("--json", check_args.json_out, "write the suite report to this file");
  check->add_flag("--serial", check_args.serial, "force the serial reference path");
  check->add_option("--threads", check_args.threads,
                    "thread count for the parallel path (0 = auto; "
                    "SCHWARZKIT_THREADS caps it)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (bound->parsed()) return run_bound(bound_args);
    if (metrics->parsed()) return run_metrics(metrics_args);
    if (ib->parsed()) return run_index_build(ib_input, ib_p, ib_out);
    if (nn->parsed()) return run_index_query(nn_index, nn_query, nn_k, std::nullopt, nn_json);
    if (rg->parsed()) return run_index_query(rg_index, rg_query, std::nullopt, rg_r, rg_json);
    if (check->parsed()) return run_check(check_args);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
