#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hypercross {

/// Outcome of checking one identity. passed == (max_residual <= tolerance).
struct VerifyReport {
  std::string identity_name;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

VerifyReport make_report(std::string name, std::size_t samples, double max_residual,
                         double tolerance);

struct VerifyOptions {
  std::size_t samples = 1000;
  std::optional<double> tolerance;  ///< overrides every non-exact tolerance
  std::uint64_t seed = 42;
};

/// Seedable sampler: std::mt19937_64, with doubles formed from the top 53
/// bits of each draw and mapped to [-1, 1). The mapping is spelled out here
/// rather than left to std::uniform_real_distribution so the stream is the
/// same for every standard library.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  double uniform(double lo, double hi);
  Eigen::VectorXd vector(long n);
  /// Uniform vector rescaled to unit length (redrawn if degenerate).
  Eigen::VectorXd unit_vector(long n);

 private:
  std::mt19937_64 engine_;
};

/// Names accepted by --suite, in sorted order.
const std::vector<std::string>& suite_names();

/// Runs one suite; the suite's sampler is seeded from options.seed and the
/// suite name, so results do not depend on which other suites run.
/// Throws std::invalid_argument for an unknown name.
std::vector<VerifyReport> run_suite(const std::string& name, const VerifyOptions& options);

/// Runs the named suites (all of them when `names` is empty); reports come
/// back sorted by identity_name.
std::vector<VerifyReport> run_suites(const std::vector<std::string>& names,
                                     const VerifyOptions& options);

}  // namespace hypercross
