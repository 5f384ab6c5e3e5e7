// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ajoin/alpha_spectra.hpp"
#include "ajoin/cospectral.hpp"
#include "ajoin/exact.hpp"
#include "ajoin/io.hpp"
#include "ajoin/verify.hpp"

using namespace ajoin;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string worst(const CheckResult& c) {
  return c.name + " " + std::to_string(c.cases) + " cases, worst " + format_number(c.worst_deviation) +
         (c.first_failure.empty() ? "" : ", first failure: " + c.first_failure);
}

void example_criterion(int id, const std::string& name, const SuiteReport& examples, double secs) {
  const auto& direct = examples.check(name + "-oracle-vs-printed");
  const auto& closed = examples.check(name + "-closed-form-vs-printed");
  const auto& paths = examples.check(name + "-paths-agree");
  const bool ok = direct.passed() && closed.passed() && paths.passed() && secs < 1.0;
  report(id, name + " reproduction", ok,
         "oracle " + format_number(direct.worst_deviation) + ", closed form " + format_number(closed.worst_deviation) +
             ", paths " + format_number(paths.worst_deviation) + ", " + format_number(secs) + " s");
}

}  // namespace

int main() {
  try {
    VerifyOptions opts;

    auto t0 = Clock::now();
    const SuiteReport examples = verify_examples(opts);
    const double example_secs = seconds_since(t0);
    example_criterion(1, "example1", examples, example_secs);
    example_criterion(2, "example2", examples, example_secs);

    t0 = Clock::now();
    const SuiteReport cor = verify_corollaries(opts);
    const double grid_secs = seconds_since(t0);
    const auto& agree = cor.check("closed-form-vs-oracle");
    report(3, "closed forms agree with the oracle over the grid",
           agree.passed() && agree.cases >= 2000 && agree.worst_deviation <= 1e-7 &&
               cor.check("multiplicity-ledger").passed() && grid_secs < 300.0,
           worst(agree) + ", " + format_number(grid_secs) + " s");

    VerifyOptions general = opts;
    general.trials = 30;
    general.g2 = G2Mode::Arbitrary;
    const SuiteReport thm = verify_theorems(general);
    const auto& points = thm.check("theorem-charpoly-point-agreement");
    report(4, "characteristic polynomial theorem for arbitrary G2", points.passed() && points.cases >= 600,
           worst(points));

    VerifyOptions lemma_opts = opts;
    lemma_opts.trials = 100;
    const SuiteReport lem = verify_lemmas(lemma_opts);
    bool lemmas_ok = lem.passed();
    std::size_t fewest = static_cast<std::size_t>(-1);
    double largest = 0.0;
    for (const auto& c : lem.checks) {
      fewest = std::min(fewest, c.cases);
      largest = std::max(largest, c.worst_deviation);
      if (c.tolerance > 1e-8) lemmas_ok = false;
    }
    const bool integer_exact = lem.check("eq3-incidence-line-graph").tolerance == 0.0 &&
                               lem.check("eq4-incidence-regular").tolerance == 0.0 &&
                               lem.check("lemma7-line-graph-charpoly").tolerance == 0.0;
    lemmas_ok = lemmas_ok && integer_exact && fewest >= 100 && largest <= 1e-8;
    report(5, "lemma suite", lemmas_ok,
           std::to_string(lem.checks.size()) + " checks, >= " + std::to_string(fewest) + " cases each, worst " +
               format_number(largest));

    {
      const Rational third(1, 3);
      const JoinSpec spec(JoinKind::QVertex, complete_graph(3), cycle_graph(3));
      const RationalPolynomial direct =
          charpoly_exact(alpha_matrix_exact(join(JoinKind::QVertex, complete_graph(3), cycle_graph(3)), third));
      const RationalPolynomial product = theorem_charpoly_exact(spec, third);
      report(6, "exact product form for QVertex K3 C3 alpha=1/3", direct == product,
             "degree " + std::to_string(direct.degree()));
    }

    {
      const SeedPair seed = seed_pair("shrikhande-rook");
      const std::vector<JoinKind> kinds(std::begin(kAllJoinKinds), std::end(kAllJoinKinds));
      const auto family = generate_family(seed, path_graph(2), kinds, default_alpha_grid());
      bool ok = family.size() == 4;
      double dev = 0.0;
      std::string evidence;
      for (const auto& m : family) {
        ok = ok && m.certificate.cospectral && m.certificate.max_deviation <= 1e-7 &&
             m.certificate.evidence != NonIsomorphismEvidence::Unverified;
        dev = std::max(dev, m.certificate.max_deviation);
        evidence = std::string(to_string(m.certificate.evidence));
      }
      report(7, "Shrikhande/rook family with P2", ok,
             std::to_string(family.size()) + " pairs, worst " + format_number(dev) + ", evidence " + evidence);
    }

    const auto& a0 = cor.check("alpha0-adjacency-spectrum");
    const auto& a1 = cor.check("alpha1-degree-multiset");
    const auto& half = cor.check("half-signless-laplacian");
    report(8, "endpoint identities", a0.passed() && a1.passed() && half.passed() && half.worst_deviation == 0.0,
           worst(a0) + "; " + worst(a1) + "; " + worst(half));
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
