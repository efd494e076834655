#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "schwarzkit/core_linalg.hpp"
#include "schwarzkit/refinements.hpp"

namespace schwarzkit {

enum class ScalarField { Real, Complex };

std::string field_name(ScalarField f);

// One randomized verification campaign: every dim in dims gets trials_per_dim
// independent trials, each deterministically derived from (seed, dim, trial).
struct TrialConfig {
  std::vector<std::size_t> dims;
  std::size_t trials_per_dim = 1;
  std::uint64_t seed = 0;
  std::vector<double> p_values = {2.0};
  ScalarField field = ScalarField::Complex;
  Tolerance tol;

  void validate() const;
  std::uint64_t total_trials() const { return dims.size() * trials_per_dim; }
};

// Every inequality family the suite tracks, in report order.
enum class Family : int {
  Schwarz = 0,
  Projection,
  ProjectionChain,
  Quad,
  ChainUpper,
  ChainLower,
  CosLower,
  AnglePsi,
  AnglePhi,
  SinPsi,
  SinPhi,
  DistP,
  DistDeltaP,
  DetPModulus,
  DetPReal,
  Det2Modulus,
  Det2Real,
  NtGeneralP,
  NtGeneralQuad,
  NtBasisP,
  NtBasisQuad,
  NtBasisP2,
  NtMeanP,
  NtMeanQuad,
};
inline constexpr std::size_t kFamilyCount = 24;

const char* family_name(Family f);

struct FamilyStats {
  std::uint64_t trials = 0;        // evaluated report instances
  std::uint64_t violations = 0;    // gap below -slack
  std::uint64_t confirmed = 0;     // violation reproduced by the plain evaluator
  std::uint64_t disagreements = 0; // violation the plain evaluator does not see
  std::uint64_t equality_hits = 0;
  std::uint64_t degenerate_trials = 0;  // instances whose inputs had an injected draw
  std::uint64_t errors = 0;             // documented error paths taken
  double worst_gap = std::numeric_limits<double>::infinity();
  double max_tightness = 0.0;  // max rhs/lhs over instances with lhs > tightness floor
  std::string worst_witness;
  std::string tightness_witness;

  void merge(const FamilyStats& other);
};

// rhs/lhs ratios are recorded only above this lhs floor; below it the ratio of
// two rounding-level values carries no information.
double tightness_floor(const Tolerance& tol);

struct SuiteReport {
  TrialConfig config;
  std::array<FamilyStats, kFamilyCount> families{};
  double elapsed_seconds = 0.0;

  std::uint64_t total_reports() const;
  std::uint64_t total_violations() const;
  std::uint64_t total_confirmed() const;
  std::uint64_t total_equality_hits() const;
  std::string to_json(bool include_elapsed = true) const;
};

// splitmix64-style finalizer chain: decorrelates (seed, dim, trial) into the
// per-trial stream seed. Published mixing constants.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t dim, std::uint64_t trial);

// Deterministic vector stream with 10% degenerate injection (scaled copy of a
// previous draw, standard basis vector, or near-parallel copy perturbed at
// relative 1e-10). Degenerate draws exercise the equality branches. Copy
// candidates come from the most recent draws only (a fixed-size ring), so a
// long-lived generator stays O(1) per draw in both time and memory.
class VectorGen {
 public:
  VectorGen(std::uint64_t seed, ScalarField field);

  CVector draw(std::size_t dim);           // with injection
  CVector draw_gaussian(std::size_t dim);  // never degenerate
  bool last_draw_degenerate() const { return last_degenerate_; }

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double normal();
  std::size_t uniform_index(std::size_t n);  // [0, n)

 private:
  Complex random_scale();

  std::mt19937_64 engine_;
  ScalarField field_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
  // Ring of recent draws used as bases for degenerate copies. 64 entries is
  // far above the handful any suite trial produces, so capping changes nothing
  // for per-trial generators while bounding the cost of long-lived ones.
  static constexpr std::size_t kHistoryCap = 64;
  std::vector<std::vector<Complex>> history_;
  std::size_t history_next_ = 0;
  bool last_degenerate_ = false;
};

// Serial reference implementation.
SuiteReport run_suite(const TrialConfig& config);

// OpenMP path: trials partitioned statically, per-thread stats merged with
// order-independent rules, so the report matches run_suite byte for byte
// (elapsed aside). max_threads = 0 means library default; the
// SCHWARZKIT_THREADS environment variable caps either choice.
SuiteReport run_suite_parallel(const TrialConfig& config, int max_threads = 0);

bool parallel_available();
int thread_cap_from_env();

}  // namespace schwarzkit
