#include "schwarzkit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "schwarzkit/jsonfmt.hpp"
#include "schwarzkit/ntuple_apps.hpp"
#include "schwarzkit/plain_eval.hpp"
#include "schwarzkit/projections.hpp"
#include "schwarzkit/projective_metrics.hpp"

namespace schwarzkit {

std::string field_name(ScalarField f) { return f == ScalarField::Real ? "real" : "complex"; }

void TrialConfig::validate() const {
  if (dims.empty()) throw ParameterError("TrialConfig: dims must be nonempty");
  for (std::size_t d : dims) {
    if (d == 0) throw ParameterError("TrialConfig: dims must all be >= 1");
  }
  if (trials_per_dim == 0) throw ParameterError("TrialConfig: trials_per_dim must be >= 1");
  if (p_values.empty()) throw ParameterError("TrialConfig: p_values must be nonempty");
  for (double p : p_values) {
    if (!(std::isfinite(p) && p >= 2.0)) {
      throw ParameterError("TrialConfig: every p must be finite and >= 2, got " +
                           std::to_string(p));
    }
  }
  tol.validate();
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Schwarz: return "schwarz";
    case Family::Projection: return "projection";
    case Family::ProjectionChain: return "projection_chain";
    case Family::Quad: return "quad";
    case Family::ChainUpper: return "chain_upper";
    case Family::ChainLower: return "chain_lower";
    case Family::CosLower: return "cos_lower";
    case Family::AnglePsi: return "angle_psi";
    case Family::AnglePhi: return "angle_phi";
    case Family::SinPsi: return "sin_psi";
    case Family::SinPhi: return "sin_phi";
    case Family::DistP: return "dist_p";
    case Family::DistDeltaP: return "dist_delta_p";
    case Family::DetPModulus: return "detp_modulus";
    case Family::DetPReal: return "detp_real";
    case Family::Det2Modulus: return "det2_modulus";
    case Family::Det2Real: return "det2_real";
    case Family::NtGeneralP: return "ntuple_general_p";
    case Family::NtGeneralQuad: return "ntuple_general_quad";
    case Family::NtBasisP: return "ntuple_basis_p";
    case Family::NtBasisQuad: return "ntuple_basis_quad";
    case Family::NtBasisP2: return "ntuple_basis_p2";
    case Family::NtMeanP: return "ntuple_mean_p";
    case Family::NtMeanQuad: return "ntuple_mean_quad";
  }
  return "unknown";
}

double tightness_floor(const Tolerance& tol) { return std::sqrt(tol.abs_eps); }

void FamilyStats::merge(const FamilyStats& other) {
  trials += other.trials;
  violations += other.violations;
  confirmed += other.confirmed;
  disagreements += other.disagreements;
  equality_hits += other.equality_hits;
  degenerate_trials += other.degenerate_trials;
  errors += other.errors;
  if (other.worst_gap < worst_gap ||
      (other.worst_gap == worst_gap && other.worst_witness < worst_witness)) {
    worst_gap = other.worst_gap;
    worst_witness = other.worst_witness;
  }
  if (other.max_tightness > max_tightness ||
      (other.max_tightness == max_tightness && !other.tightness_witness.empty() &&
       (tightness_witness.empty() || other.tightness_witness < tightness_witness))) {
    max_tightness = other.max_tightness;
    tightness_witness = other.tightness_witness;
  }
}

std::uint64_t SuiteReport::total_reports() const {
  std::uint64_t n = 0;
  for (const FamilyStats& f : families) n += f.trials;
  return n;
}

std::uint64_t SuiteReport::total_violations() const {
  std::uint64_t n = 0;
  for (const FamilyStats& f : families) n += f.violations;
  return n;
}

std::uint64_t SuiteReport::total_confirmed() const {
  std::uint64_t n = 0;
  for (const FamilyStats& f : families) n += f.confirmed;
  return n;
}

std::uint64_t SuiteReport::total_equality_hits() const {
  std::uint64_t n = 0;
  for (const FamilyStats& f : families) n += f.equality_hits;
  return n;
}

std::string SuiteReport::to_json(bool include_elapsed) const {
  jsonfmt::Writer w;
  w.begin_object();
  w.key("config").begin_object();
  w.key("dims").begin_array();
  for (std::size_t d : config.dims) w.value(static_cast<std::uint64_t>(d));
  w.end_array();
  w.key("trials_per_dim").value(static_cast<std::uint64_t>(config.trials_per_dim));
  w.key("seed").value(static_cast<std::uint64_t>(config.seed));
  w.key("p_values").begin_array();
  for (double p : config.p_values) w.value(p);
  w.end_array();
  w.key("field").value(field_name(config.field));
  w.key("tol").begin_object();
  w.key("rel_eps").value(config.tol.rel_eps);
  w.key("abs_eps").value(config.tol.abs_eps);
  w.end_object();
  w.key("tightness_floor").value(tightness_floor(config.tol));
  w.end_object();

  w.key("families").begin_array();
  for (std::size_t i = 0; i < kFamilyCount; ++i) {
    const FamilyStats& f = families[i];
    w.begin_object();
    w.key("family").value(std::string(family_name(static_cast<Family>(i))));
    w.key("trials").value(f.trials);
    w.key("violations").value(f.violations);
    w.key("confirmed").value(f.confirmed);
    w.key("disagreements").value(f.disagreements);
    w.key("equality_hits").value(f.equality_hits);
    w.key("degenerate_trials").value(f.degenerate_trials);
    w.key("errors").value(f.errors);
    w.key("worst_gap");
    if (f.trials > 0) {
      w.value(f.worst_gap);
    } else {
      w.value_null();
    }
    w.key("max_tightness").value(f.max_tightness);
    w.key("witness");
    const std::string& witness =
        f.violations > 0 ? f.worst_witness
                         : (!f.tightness_witness.empty() ? f.tightness_witness : f.worst_witness);
    if (witness.empty()) {
      w.value_null();
    } else {
      w.raw(witness);
    }
    w.end_object();
  }
  w.end_array();

  w.key("total_trials").value(config.total_trials());
  w.key("total_reports").value(total_reports());
  w.key("total_violations").value(total_violations());
  w.key("total_confirmed").value(total_confirmed());
  w.key("total_equality_hits").value(total_equality_hits());
  if (include_elapsed) {
    w.key("elapsed_seconds").value(elapsed_seconds);
  }
  w.end_object();
  return w.str();
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t dim, std::uint64_t trial) {
  const auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ dim) ^ trial);
}

VectorGen::VectorGen(std::uint64_t seed, ScalarField field) : engine_(seed), field_(field) {}

std::uint64_t VectorGen::next_u64() { return engine_(); }

double VectorGen::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double VectorGen::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

std::size_t VectorGen::uniform_index(std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n);
}

Complex VectorGen::random_scale() {
  // log-uniform magnitude in [1/4, 4]: keeps scaled copies well away from zero.
  const double mag = std::exp(std::log(0.25) + uniform() * std::log(16.0));
  if (field_ == ScalarField::Real) {
    return Complex{uniform() < 0.5 ? -mag : mag, 0.0};
  }
  const double phase = 2.0 * std::numbers::pi * uniform();
  return Complex{mag * std::cos(phase), mag * std::sin(phase)};
}

CVector VectorGen::draw_gaussian(std::size_t dim) {
  std::vector<Complex> entries(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double re = normal();
    const double im = field_ == ScalarField::Complex ? normal() : 0.0;
    entries[k] = Complex{re, im};
  }
  return CVector(std::move(entries));
}

CVector VectorGen::draw(std::size_t dim) {
  last_degenerate_ = false;
  std::vector<Complex> entries;

  // Previous draws of the same dimension are candidates for copying.
  std::vector<const std::vector<Complex>*> bases;
  for (const auto& h : history_) {
    if (h.size() == dim) bases.push_back(&h);
  }

  if (uniform() < 0.1) {
    last_degenerate_ = true;
    const int variant = bases.empty() ? 1 : static_cast<int>(uniform_index(3));
    if (variant == 1) {
      const std::size_t j = uniform_index(dim);
      entries.assign(dim, Complex{0.0, 0.0});
      entries[j] = Complex{1.0, 0.0};
    } else {
      const std::vector<Complex>& base = *bases[uniform_index(bases.size())];
      const Complex lambda = random_scale();
      entries.resize(dim);
      for (std::size_t k = 0; k < dim; ++k) entries[k] = lambda * base[k];
      if (variant == 2) {
        // Perturb at relative size 1e-10: near-parallel, never exactly parallel.
        const CVector g = draw_gaussian(dim);
        const double gn = norm(g);
        double bn = 0.0;
        for (const Complex& c : entries) bn += std::norm(c);
        bn = std::sqrt(bn);
        if (gn > 0.0 && bn > 0.0) {
          const double scale = 1e-10 * bn / gn;
          for (std::size_t k = 0; k < dim; ++k) entries[k] += scale * g[k];
        }
      }
    }
  } else {
    const CVector g = draw_gaussian(dim);
    entries.assign(g.entries().begin(), g.entries().end());
  }

  if (history_.size() < kHistoryCap) {
    history_.push_back(entries);
  } else {
    history_[history_next_] = entries;
    history_next_ = (history_next_ + 1) % kHistoryCap;
  }
  return CVector(std::move(entries));
}

int thread_cap_from_env() {
  const char* raw = std::getenv("SCHWARZKIT_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || v <= 0) return 0;
  return static_cast<int>(std::min<long>(v, 1024));
}

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace {

// Everything a trial produced, for witness serialization and re-evaluation.
struct TrialInputs {
  std::size_t dim = 0;
  std::uint64_t trial = 0;
  std::uint64_t sub_seed = 0;
  bool degenerate = false;
  CVector x = CVector::zeros(1);
  CVector y = CVector::zeros(1);
  CVector z = CVector::zeros(1);
  CVector e = CVector::zeros(1);
  std::vector<CVector> projector;
};

enum class WitnessShape { Pair, Triple, WithE, WithProjector, Tuple };

std::string witness_json(Family fam, const TrialInputs& in, const BoundReport& r,
                         std::optional<double> p, std::optional<Mode> mode,
                         WitnessShape shape) {
  jsonfmt::Writer w;
  w.begin_object();
  w.key("family").value(std::string(family_name(fam)));
  w.key("dim").value(static_cast<std::uint64_t>(in.dim));
  w.key("trial").value(in.trial);
  w.key("sub_seed").value(in.sub_seed);
  w.key("degenerate").value(in.degenerate);
  if (p) {
    w.key("p").value(*p);
  }
  if (mode) {
    w.key("mode").value(mode_name(*mode));
  }
  w.key("lhs").value(r.lhs);
  w.key("rhs").value(r.rhs);
  w.key("gap").value(r.gap);
  const auto put_vec = [&w](const char* name, const CVector& v) {
    std::vector<Complex> entries(v.entries().begin(), v.entries().end());
    w.key(name).raw(jsonfmt::complex_array(entries));
  };
  put_vec("x", in.x);
  put_vec("y", in.y);
  if (shape == WitnessShape::Triple) put_vec("z", in.z);
  if (shape == WitnessShape::WithE || shape == WitnessShape::Tuple) put_vec("e", in.e);
  if (shape == WitnessShape::WithProjector) {
    w.key("projector").begin_array();
    for (const CVector& u : in.projector) {
      std::vector<Complex> entries(u.entries().begin(), u.entries().end());
      w.raw(jsonfmt::complex_array(entries));
    }
    w.end_array();
  }
  w.end_object();
  return w.str();
}

plain::Vec to_plain(const CVector& v) {
  return plain::Vec(v.entries().begin(), v.entries().end());
}

double plain_gap(Family fam, const TrialInputs& in, double p) {
  const plain::Vec x = to_plain(in.x);
  const plain::Vec y = to_plain(in.y);
  switch (fam) {
    case Family::Schwarz: return plain::schwarz_gap(x, y);
    case Family::Projection:
    case Family::ProjectionChain: {
      std::vector<plain::Vec> fam_vecs;
      fam_vecs.reserve(in.projector.size());
      for (const CVector& u : in.projector) fam_vecs.push_back(to_plain(u));
      return fam == Family::Projection ? plain::projection_gap(x, y, fam_vecs)
                                       : plain::projection_chain_gap(x, y, fam_vecs);
    }
    case Family::Quad: return plain::quad_gap(x, y, to_plain(in.z));
    case Family::ChainUpper: return plain::chain_upper_gap(x, y, to_plain(in.e));
    case Family::ChainLower: return plain::chain_lower_gap(x, y, to_plain(in.e));
    case Family::CosLower: return plain::cos_lower_gap(x, y, to_plain(in.z));
    case Family::AnglePsi: return plain::psi_triangle_gap(x, y, to_plain(in.z));
    case Family::AnglePhi: return plain::phi_triangle_gap(x, y, to_plain(in.z));
    case Family::SinPsi: return plain::sin_psi_triangle_gap(x, y, to_plain(in.z));
    case Family::SinPhi: return plain::sin_phi_triangle_gap(x, y, to_plain(in.z));
    case Family::DistP: return plain::dp_triangle_gap(x, y, to_plain(in.z), p);
    case Family::DistDeltaP: return plain::deltap_triangle_gap(x, y, to_plain(in.z), p);
    case Family::DetPModulus: return plain::detp_gap(x, y, to_plain(in.e), p, false);
    case Family::DetPReal: return plain::detp_gap(x, y, to_plain(in.e), p, true);
    case Family::Det2Modulus: return plain::det2_gap(x, y, to_plain(in.e), false);
    case Family::Det2Real: return plain::det2_gap(x, y, to_plain(in.e), true);
    case Family::NtGeneralP: return plain::ntuple_general_p_gap(x, y, to_plain(in.e), p);
    case Family::NtGeneralQuad: return plain::ntuple_general_quad_gap(x, y, to_plain(in.e));
    case Family::NtBasisP: return plain::ntuple_basis_p_gap(x, y, p);
    case Family::NtBasisQuad: return plain::ntuple_basis_quad_gap(x, y);
    case Family::NtBasisP2: return plain::ntuple_basis_p2_gap(x, y);
    case Family::NtMeanP: return plain::ntuple_mean_p_gap(x, y, p);
    case Family::NtMeanQuad: return plain::ntuple_mean_quad_gap(x, y);
  }
  return 0.0;
}

class Recorder {
 public:
  Recorder(std::array<FamilyStats, kFamilyCount>& acc, const TrialConfig& cfg,
           const TrialInputs& in)
      : acc_(acc), cfg_(cfg), in_(in), floor_(tightness_floor(cfg.tol)) {}

  void record(Family fam, const BoundReport& r, std::optional<double> p,
              std::optional<Mode> mode, WitnessShape shape) {
    FamilyStats& st = acc_[static_cast<std::size_t>(fam)];
    ++st.trials;
    if (in_.degenerate) ++st.degenerate_trials;
    if (r.equality) ++st.equality_hits;

    std::string witness;  // built lazily; empty means not built yet
    const auto ensure_witness = [&]() {
      if (witness.empty()) witness = witness_json(fam, in_, r, p, mode, shape);
    };

    if (!r.satisfied) {
      ++st.violations;
      const double pg = plain_gap(fam, in_, p.value_or(2.0));
      if (pg < -cfg_.tol.slack(r.lhs, r.rhs)) {
        ++st.confirmed;
      } else {
        ++st.disagreements;
      }
    }

    if (r.gap < st.worst_gap) {
      ensure_witness();
      st.worst_gap = r.gap;
      st.worst_witness = witness;
    } else if (r.gap == st.worst_gap) {
      ensure_witness();
      if (witness < st.worst_witness) st.worst_witness = witness;
    }

    // d_p values below ~10x their evaluation noise floor are rounding
    // artifacts; ratios built from them would exceed 1 and mean nothing.
    double floor = floor_;
    if (fam == Family::DistP || fam == Family::DistDeltaP) {
      floor = std::max(floor, 10.0 * dp_noise_floor(p.value_or(2.0), cfg_.tol));
    }
    if (r.lhs > floor) {
      const double ratio = r.rhs / r.lhs;
      if (ratio > st.max_tightness) {
        ensure_witness();
        st.max_tightness = ratio;
        st.tightness_witness = witness;
      } else if (ratio == st.max_tightness && st.max_tightness > 0.0) {
        ensure_witness();
        if (st.tightness_witness.empty() || witness < st.tightness_witness) {
          st.tightness_witness = witness;
        }
      }
    }
  }

  void record_error(Family fam) { ++acc_[static_cast<std::size_t>(fam)].errors; }

 private:
  std::array<FamilyStats, kFamilyCount>& acc_;
  const TrialConfig& cfg_;
  const TrialInputs& in_;
  double floor_;
};

std::vector<CVector> random_projector_family(VectorGen& gen, std::size_t dim,
                                             std::size_t rank) {
  std::vector<CVector> family;
  family.reserve(rank);
  for (std::size_t j = 0; j < rank; ++j) {
    bool accepted = false;
    for (int attempt = 0; attempt < 16 && !accepted; ++attempt) {
      CVector g = gen.draw_gaussian(dim);
      std::vector<Complex> v(g.entries().begin(), g.entries().end());
      // Two modified Gram-Schmidt passes: orthogonality lands at rounding level,
      // far inside the projector's orthonormality tolerance.
      for (int pass = 0; pass < 2; ++pass) {
        for (const CVector& u : family) {
          const Complex c = inner(CVector(v), u);
          for (std::size_t k = 0; k < dim; ++k) v[k] -= c * u[k];
        }
      }
      const CVector candidate(v);
      if (norm(candidate) > 1e-6) {
        family.push_back(normalize(candidate));
        accepted = true;
      }
    }
    if (!accepted) break;  // dimension exhausted; keep the smaller rank
  }
  return family;
}

void run_trial(const TrialConfig& cfg, std::size_t dim, std::uint64_t trial,
               std::array<FamilyStats, kFamilyCount>& acc) {
  TrialInputs in;
  in.dim = dim;
  in.trial = trial;
  in.sub_seed = mix_seed(cfg.seed, dim, trial);

  VectorGen gen(in.sub_seed, cfg.field);
  in.x = gen.draw(dim);
  const bool dx = gen.last_draw_degenerate();
  in.y = gen.draw(dim);
  const bool dy = gen.last_draw_degenerate();
  in.z = gen.draw(dim);
  const bool dz = gen.last_draw_degenerate();
  CVector e_raw = gen.draw(dim);
  const bool de = gen.last_draw_degenerate();
  in.degenerate = dx || dy || dz || de;

  const std::size_t rank = gen.uniform_index(dim + 1);
  in.projector = random_projector_family(gen, dim, rank);

  Recorder rec(acc, cfg, in);
  const Tolerance& tol = cfg.tol;

  bool has_e = true;
  try {
    in.e = normalize(e_raw);
  } catch (const Error&) {
    has_e = false;  // zero e disables the e-based families only
  }

  // Runs body, charging a thrown evaluation error to every listed family.
  const auto guarded = [&rec](std::initializer_list<Family> fams, auto&& body) {
    try {
      body();
    } catch (const Error&) {
      for (Family f : fams) rec.record_error(f);
    }
  };
  const auto for_e = [&](std::initializer_list<Family> fams, auto&& body) {
    if (has_e) {
      guarded(fams, body);
    } else {
      for (Family f : fams) rec.record_error(f);
    }
  };

  guarded({Family::Schwarz}, [&] {
    rec.record(Family::Schwarz, schwarz_bound(in.x, in.y, tol), std::nullopt, std::nullopt,
               WitnessShape::Pair);
  });

  guarded({Family::Projection, Family::ProjectionChain}, [&] {
    const Projector P = in.projector.empty() ? Projector::zero(dim)
                                             : make_projector(in.projector);
    const ProjectionBounds pb = projection_bound(P, in.x, in.y, tol);
    rec.record(Family::Projection, pb.refinement, std::nullopt, std::nullopt,
               WitnessShape::WithProjector);
    rec.record(Family::ProjectionChain, pb.chain, std::nullopt, std::nullopt,
               WitnessShape::WithProjector);
  });

  guarded({Family::Quad}, [&] {
    rec.record(Family::Quad, quad_refinement(in.x, in.y, in.z, tol), std::nullopt,
               std::nullopt, WitnessShape::Triple);
  });

  for_e({Family::ChainUpper, Family::ChainLower}, [&] {
    const ChainResult c = rs_chain(in.x, in.y, in.e, tol);
    rec.record(Family::ChainUpper, c.upper, std::nullopt, std::nullopt, WitnessShape::WithE);
    rec.record(Family::ChainLower, c.lower, std::nullopt, std::nullopt, WitnessShape::WithE);
  });

  const struct {
    Family family;
    TriangleKind kind;
  } plain_triangles[] = {
      {Family::CosLower, TriangleKind::CosLower},
      {Family::AnglePsi, TriangleKind::LinPsi},
      {Family::AnglePhi, TriangleKind::Krein},
      {Family::SinPsi, TriangleKind::WangZhangSinPsi},
      {Family::SinPhi, TriangleKind::SinPhi},
  };
  for (const auto& t : plain_triangles) {
    guarded({t.family}, [&] {
      rec.record(t.family, triangle_check(t.kind, in.x, in.y, in.z, 2.0, tol), std::nullopt,
                 std::nullopt, WitnessShape::Triple);
    });
  }

  for (double p : cfg.p_values) {
    guarded({Family::DistP}, [&] {
      rec.record(Family::DistP, triangle_check(TriangleKind::Dp, in.x, in.y, in.z, p, tol), p,
                 std::nullopt, WitnessShape::Triple);
    });
    guarded({Family::DistDeltaP}, [&] {
      rec.record(Family::DistDeltaP,
                 triangle_check(TriangleKind::DeltaP, in.x, in.y, in.z, p, tol), p,
                 std::nullopt, WitnessShape::Triple);
    });
    for_e({Family::DetPModulus}, [&] {
      rec.record(Family::DetPModulus,
                 detp_bound(in.x, in.y, in.e, MetricParams{p, Mode::Modulus}, tol), p,
                 Mode::Modulus, WitnessShape::WithE);
    });
    for_e({Family::DetPReal}, [&] {
      rec.record(Family::DetPReal,
                 detp_bound(in.x, in.y, in.e, MetricParams{p, Mode::RealPart}, tol), p,
                 Mode::RealPart, WitnessShape::WithE);
    });
    for_e({Family::NtGeneralP}, [&] {
      rec.record(Family::NtGeneralP,
                 general_e_bound(in.x, in.y, in.e, p, NTupleOrder::PForm, tol).base, p,
                 std::nullopt, WitnessShape::Tuple);
    });
    guarded({Family::NtBasisP}, [&] {
      rec.record(Family::NtBasisP,
                 basis_max_bound(in.x, in.y, p, NTupleOrder::PForm, tol).base, p,
                 std::nullopt, WitnessShape::Pair);
    });
    guarded({Family::NtMeanP}, [&] {
      rec.record(Family::NtMeanP, mean_bound(in.x, in.y, p, NTupleOrder::PForm, tol).base, p,
                 std::nullopt, WitnessShape::Pair);
    });
  }

  for_e({Family::Det2Modulus}, [&] {
    rec.record(Family::Det2Modulus, det2_bound(in.x, in.y, in.e, Mode::Modulus, tol),
               std::nullopt, Mode::Modulus, WitnessShape::WithE);
  });
  for_e({Family::Det2Real}, [&] {
    rec.record(Family::Det2Real, det2_bound(in.x, in.y, in.e, Mode::RealPart, tol),
               std::nullopt, Mode::RealPart, WitnessShape::WithE);
  });

  for_e({Family::NtGeneralQuad}, [&] {
    rec.record(Family::NtGeneralQuad,
               general_e_bound(in.x, in.y, in.e, 2.0, NTupleOrder::Quadratic, tol).base,
               std::nullopt, std::nullopt, WitnessShape::Tuple);
  });
  guarded({Family::NtBasisQuad}, [&] {
    rec.record(Family::NtBasisQuad,
               basis_max_bound(in.x, in.y, 2.0, NTupleOrder::Quadratic, tol).base,
               std::nullopt, std::nullopt, WitnessShape::Pair);
  });
  guarded({Family::NtBasisP2}, [&] {
    rec.record(Family::NtBasisP2,
               basis_max_bound(in.x, in.y, 2.0, NTupleOrder::P2Simple, tol).base,
               std::nullopt, std::nullopt, WitnessShape::Pair);
  });
  guarded({Family::NtMeanQuad}, [&] {
    rec.record(Family::NtMeanQuad,
               mean_bound(in.x, in.y, 2.0, NTupleOrder::Quadratic, tol).base, std::nullopt,
               std::nullopt, WitnessShape::Pair);
  });
}

}  // namespace

SuiteReport run_suite(const TrialConfig& config) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();

  SuiteReport report;
  report.config = config;
  for (std::size_t di = 0; di < config.dims.size(); ++di) {
    for (std::uint64_t trial = 0; trial < config.trials_per_dim; ++trial) {
      run_trial(config, config.dims[di], trial, report.families);
    }
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

SuiteReport run_suite_parallel(const TrialConfig& config, int max_threads) {
  config.validate();
#ifndef _OPENMP
  (void)max_threads;
  return run_suite(config);
#else
  const auto t0 = std::chrono::steady_clock::now();

  int threads = max_threads > 0 ? max_threads : omp_get_max_threads();
  const int cap = thread_cap_from_env();
  if (cap > 0) threads = std::min(threads, cap);
  threads = std::max(threads, 1);

  const std::uint64_t tpd = config.trials_per_dim;
  const std::int64_t total = static_cast<std::int64_t>(config.dims.size() * tpd);
  std::vector<std::array<FamilyStats, kFamilyCount>> partials(
      static_cast<std::size_t>(threads));

#pragma omp parallel num_threads(threads)
  {
    const int tid = omp_get_thread_num();
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      const std::size_t dim = config.dims[static_cast<std::size_t>(i / tpd)];
      const std::uint64_t trial = static_cast<std::uint64_t>(i) % tpd;
      run_trial(config, dim, trial, partials[static_cast<std::size_t>(tid)]);
    }
  }

  SuiteReport report;
  report.config = config;
  for (const auto& part : partials) {
    for (std::size_t f = 0; f < kFamilyCount; ++f) report.families[f].merge(part[f]);
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
#endif
}

}  // namespace schwarzkit
