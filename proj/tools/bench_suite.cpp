// Times the serial suite against the OpenMP suite on the same configuration
// and verifies their reports match byte for byte (timing field aside).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "schwarzkit/harness.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace schwarzkit;

  TrialConfig cfg;
  cfg.dims = {2, 3, 4, 8, 16};
  cfg.trials_per_dim = 2000;
  cfg.seed = 20260815;
  cfg.p_values = {2.0, 3.0};
  cfg.field = ScalarField::Complex;

  int threads = 4;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--trials" && i + 1 < argc) {
      cfg.trials_per_dim = static_cast<std::size_t>(std::strtoull(argv[++i], nullptr, 10));
    } else if (arg == "--threads" && i + 1 < argc) {
      threads = static_cast<int>(std::strtol(argv[++i], nullptr, 10));
    } else if (arg == "--seed" && i + 1 < argc) {
      cfg.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: %s [--trials N] [--threads N] [--seed N]\n", argv[0]);
      return 2;
    }
  }

  std::printf("suite: %zu dims x %zu trials, %zu p values, field=%s\n", cfg.dims.size(),
              cfg.trials_per_dim, cfg.p_values.size(), field_name(cfg.field).c_str());
  std::printf("parallel runtime available: %s\n", parallel_available() ? "yes" : "no");

  auto t0 = std::chrono::steady_clock::now();
  const SuiteReport serial = run_suite(cfg);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const SuiteReport parallel = run_suite_parallel(cfg, threads);
  const double t_parallel = seconds_since(t0);

  std::printf("serial:   %8.3f s  (%llu reports, %llu violations, %llu confirmed)\n",
              t_serial, static_cast<unsigned long long>(serial.total_reports()),
              static_cast<unsigned long long>(serial.total_violations()),
              static_cast<unsigned long long>(serial.total_confirmed()));
  std::printf("parallel: %8.3f s  (%d threads requested)\n", t_parallel, threads);
  if (t_parallel > 0.0) {
    std::printf("speedup:  %8.3fx\n", t_serial / t_parallel);
  }

  const std::string a = serial.to_json(false);
  const std::string b = parallel.to_json(false);
  if (a != b) {
    std::fprintf(stderr, "FAIL: serial and parallel reports differ\n");
    return 1;
  }
  std::printf("reports identical: yes (%zu bytes)\n", a.size());
  return 0;
}
