#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ajoin/alpha_spectra.hpp"
#include "ajoin/io.hpp"

namespace ajoin {

struct CheckResult {
  explicit CheckResult(std::string check_name = {}, double tol = 0.0)
      : name(std::move(check_name)), tolerance(tol) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double worst_deviation = 0.0;
  double tolerance = 0.0;  ///< 0 means exact equality is required
  std::string first_failure;

  bool passed() const { return cases > 0 && failures == 0; }
  /// Records one case; deviation > tolerance counts as a failure.
  void record(double deviation, const std::string& label);
  void record_failure(const std::string& label);
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
  const CheckResult& check(std::string_view name) const;
};

enum class G2Mode { Mixed, Regular, CompleteBipartite, Arbitrary };
G2Mode parse_g2_mode(std::string_view name);

struct VerifyOptions {
  std::size_t trials = 100;
  G2Mode g2 = G2Mode::Mixed;
  std::uint64_t seed = 7;
  double tol = 1e-7;
};

struct GridGraph {
  std::string name;
  Graph graph;
  G2Class g2_class;  ///< forced class; K_{a,a} is tagged bipartite on purpose
};

/// C3..C8, K3..K6, P2, Petersen.
std::vector<GridGraph> corollary_grid_g1();
/// C3..C6, K2..K4, empty(1..3), K_{a,b} for 1 <= a <= b <= 4.
std::vector<GridGraph> corollary_grid_g2();
/// {0, 0.25, 0.5, 0.75, 1}.
std::vector<double> corollary_grid_alphas();

SuiteReport verify_lemmas(const VerifyOptions& opts);
SuiteReport verify_theorems(const VerifyOptions& opts);
SuiteReport verify_corollaries(const VerifyOptions& opts);
SuiteReport verify_examples(const VerifyOptions& opts);

std::vector<std::string> suite_names();
/// Throws InvalidParameter for an unknown suite.
SuiteReport run_suite(std::string_view name, const VerifyOptions& opts);

Json to_json(const SuiteReport& r);
std::string to_plain(const SuiteReport& r);

}  // namespace ajoin
