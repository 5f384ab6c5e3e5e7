#include "ajoin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ajoin/errors.hpp"
#include "ajoin/exact.hpp"
#include "ajoin/random.hpp"

namespace ajoin {

void CheckResult::record(double deviation, const std::string& label) {
  ++cases;
  worst_deviation = std::max(worst_deviation, deviation);
  if (!(deviation <= tolerance)) {
    ++failures;
    if (first_failure.empty()) first_failure = label + " (deviation " + format_number(deviation) + ")";
  }
}

void CheckResult::record_failure(const std::string& label) {
  ++cases;
  ++failures;
  worst_deviation = std::numeric_limits<double>::infinity();
  if (first_failure.empty()) first_failure = label;
}

bool SuiteReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

const CheckResult& SuiteReport::check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw InvalidParameter("suite " + suite + " has no check '" + std::string(name) + "'");
}

G2Mode parse_g2_mode(std::string_view name) {
  if (name == "mixed") return G2Mode::Mixed;
  if (name == "regular") return G2Mode::Regular;
  if (name == "bipartite" || name == "complete_bipartite") return G2Mode::CompleteBipartite;
  if (name == "arbitrary") return G2Mode::Arbitrary;
  throw InvalidParameter("unknown G2 class '" + std::string(name) + "' (mixed, regular, bipartite, arbitrary)");
}

std::vector<GridGraph> corollary_grid_g1() {
  std::vector<GridGraph> out;
  for (std::size_t n = 3; n <= 8; ++n) out.push_back({"cycle:" + std::to_string(n), cycle_graph(n), RegularClass{2}});
  for (std::size_t n = 3; n <= 6; ++n)
    out.push_back({"complete:" + std::to_string(n), complete_graph(n), RegularClass{n - 1}});
  out.push_back({"path:2", path_graph(2), RegularClass{1}});
  out.push_back({"petersen", petersen_graph(), RegularClass{3}});
  return out;
}

std::vector<GridGraph> corollary_grid_g2() {
  std::vector<GridGraph> out;
  for (std::size_t n = 3; n <= 6; ++n) out.push_back({"cycle:" + std::to_string(n), cycle_graph(n), RegularClass{2}});
  for (std::size_t n = 2; n <= 4; ++n)
    out.push_back({"complete:" + std::to_string(n), complete_graph(n), RegularClass{n - 1}});
  for (std::size_t n = 1; n <= 3; ++n) out.push_back({"empty:" + std::to_string(n), empty_graph(n), RegularClass{0}});
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = a; b <= 4; ++b)
      out.push_back({"cbipartite:" + std::to_string(a) + "," + std::to_string(b), complete_bipartite_graph(a, b),
                     CompleteBipartiteClass{a, b}});
  return out;
}

std::vector<double> corollary_grid_alphas() { return {0.0, 0.25, 0.5, 0.75, 1.0}; }

namespace {

double relative(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

RealMatrix random_matrix(Rng& rng, std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(-2.0, 2.0);
  return m;
}

Graph random_regular(Rng& rng, std::size_t n_lo, std::size_t n_hi) {
  const std::size_t n = rng.between(n_lo, n_hi);
  std::vector<std::size_t> jumps;
  for (std::size_t j = 1; j <= n / 2; ++j)
    if (rng.below(2) == 0) jumps.push_back(j);
  if (jumps.empty()) jumps.push_back(1 + rng.below(n / 2));
  return circulant_graph(n, jumps);
}

Graph random_graph(Rng& rng, std::size_t n_lo, std::size_t n_hi, double p) {
  const std::size_t n = rng.between(n_lo, n_hi);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

std::string describe_graph(const Graph& g) {
  return "n=" + std::to_string(g.order()) + ",m=" + std::to_string(g.size());
}

long max_abs_entry(const IntMatrix& m) {
  long d = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d = std::max(d, std::abs(m(i, j)));
  return d;
}

void lemma_rank_one(SuiteReport& r, const VerifyOptions& opts) {
  Rng rng(opts.seed);
  CheckResult l2{"lemma2-determinant-update"}, l3{"lemma3-coronal-determinant"}, l5{"lemma5-inverse-bI-cJ"};
  l2.tolerance = l3.tolerance = l5.tolerance = 1e-8;
  for (std::size_t k = 0; k < opts.trials; ++k) {
    const std::size_t n = rng.between(2, 6);
    const RealMatrix m = random_matrix(rng, n);
    const double b = rng.uniform(-2.0, 2.0);
    const double c = rng.uniform(-2.0, 2.0);
    const double nu = rng.uniform(-6.0, 6.0);
    const std::string label = "trial " + std::to_string(k);
    try {
      const auto res = rank_one_identities_check(m, b, c, nu);
      l2.record(res.determinant_update.deviation, label);
      l3.record(res.coronal_determinant.deviation, label);
      l5.record(res.inverse_formula.deviation, label);
    } catch (const PreconditionError&) {
      --k;  // singular draw, resample
    }
  }
  r.checks.push_back(l2);
  r.checks.push_back(l3);
  r.checks.push_back(l5);
}

void lemma_constant_row_sum(SuiteReport& r, const VerifyOptions& opts) {
  Rng rng(opts.seed + 1);
  CheckResult chk{"lemma99.9-constant-row-sum-coronal"};
  chk.tolerance = 1e-9;
  for (std::size_t k = 0; k < opts.trials; ++k) {
    const std::string label = "trial " + std::to_string(k);
    if (k % 2 == 0) {
      const Graph g = random_regular(rng, 4, 12);
      const double alpha = rng.uniform();
      const auto m = alpha_matrix(g, AlphaParam(alpha));
      const double t = static_cast<double>(*regularity(g));
      const double nu = (rng.below(2) ? 1.0 : -1.0) * (t + 0.5 + 5.0 * rng.uniform());
      chk.record(relative(coronal_numeric(m, nu), static_cast<double>(g.order()) / (nu - t)), label);
    } else {
      // General (non-symmetric) matrix with every row summing to t.
      const std::size_t n = rng.between(2, 7);
      RealMatrix m = random_matrix(rng, n);
      const double t = rng.uniform(-3.0, 3.0);
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j + 1 < n; ++j) s += m(i, j);
        m(i, n - 1) = t - s;
      }
      const double nu = t + (rng.below(2) ? 1.0 : -1.0) * (0.5 + 3.0 * rng.uniform());
      try {
        chk.record(relative(coronal_general(m, nu), static_cast<double>(n) / (nu - t)), label);
      } catch (const PoleError&) {
        --k;
      }
    }
  }
  r.checks.push_back(chk);
}

void lemma_kab(SuiteReport& r, const VerifyOptions& opts) {
  Rng rng(opts.seed + 2);
  CheckResult spec{"lemma4-kab-spectrum"}, cor{"lemma6-kab-coronal"};
  spec.tolerance = 1e-9;
  cor.tolerance = 1e-9;
  for (std::size_t k = 0; k < opts.trials; ++k) {
    const std::size_t a = rng.between(1, 7);
    const std::size_t b = rng.between(1, 7);
    const double alpha = rng.uniform();
    const auto m = alpha_matrix(complete_bipartite_graph(a, b), AlphaParam(alpha));
    const double s = static_cast<double>(a + b);
    const double root = std::sqrt(alpha * alpha * s * s + 4.0 * a * b * (1.0 - 2.0 * alpha));
    std::vector<double> expected{(alpha * s + root) / 2.0, (alpha * s - root) / 2.0};
    expected.insert(expected.end(), b - 1, alpha * a);
    expected.insert(expected.end(), a - 1, alpha * b);
    std::sort(expected.begin(), expected.end(), std::greater<>());
    const std::string label = "K_{" + std::to_string(a) + "," + std::to_string(b) + "} alpha=" + format_number(alpha);
    spec.record(max_abs_diff(sym_eigenvalues(m).flatten(), expected) / std::max(1.0, m.norm_inf()), label);

    const double nu = (rng.below(2) ? 1.0 : -1.0) * (m.norm_inf() + 0.5 + 5.0 * rng.uniform());
    cor.record(relative(coronal_kab(a, b, alpha, nu), coronal_numeric(m, nu)), label);
  }
  r.checks.push_back(spec);
  r.checks.push_back(cor);
}

void incidence_identities(SuiteReport& r, const VerifyOptions& opts) {
  Rng rng(opts.seed + 3);
  CheckResult eq3{"eq3-incidence-line-graph"}, eq4{"eq4-incidence-regular"};
  for (std::size_t k = 0; k < opts.trials; ++k) {
    const Graph g = random_graph(rng, 2, 10, 0.5);
    const IntMatrix rm = incidence_matrix(g);
    const IntMatrix lhs = rm.transpose() * rm - adjacency_matrix(line_graph(g));
    eq3.record(static_cast<double>(max_abs_entry(lhs - IntMatrix::identity(g.size()) * 2L)), describe_graph(g));

    const Graph h = random_regular(rng, 3, 12);
    const IntMatrix rh = incidence_matrix(h);
    const long t = static_cast<long>(*regularity(h));
    const IntMatrix lhs4 = rh * rh.transpose() - adjacency_matrix(h);
    eq4.record(static_cast<double>(max_abs_entry(lhs4 - IntMatrix::identity(h.order()) * t)), describe_graph(h));
  }
  r.checks.push_back(eq3);
  r.checks.push_back(eq4);
}

void lemma_line_graph(SuiteReport& r, const VerifyOptions& opts) {
  Rng rng(opts.seed + 4);
  CheckResult chk{"lemma7-line-graph-charpoly"};
  for (std::size_t k = 0; k < opts.trials; ++k) {
    Graph g = random_regular(rng, 3, 8);
    const long t = static_cast<long>(*regularity(g));
    if (t < 2) {  // need m >= n for a polynomial identity
      --k;
      continue;
    }
    const RationalPolynomial lhs = charpoly_exact(to_rational(adjacency_matrix(line_graph(g))));
    const RationalPolynomial base = charpoly_exact(to_rational(adjacency_matrix(g))).shifted(Rational(t - 2));
    const RationalPolynomial factor =
        RationalPolynomial::linear_root(Rational(-2)).pow(static_cast<int>(g.size() - g.order()));
    chk.record(lhs == factor * base ? 0.0 : std::numeric_limits<double>::infinity(), describe_graph(g));
  }
  r.checks.push_back(chk);
}

Graph random_g1(Rng& rng) {
  switch (rng.below(6)) {
    case 0: return complete_graph(rng.between(3, 5));
    case 1: return cycle_graph(rng.between(3, 7));
    case 2: return path_graph(2);
    case 3: return disjoint_union(path_graph(2), path_graph(2));
    case 4: return petersen_graph();
    default: return random_regular(rng, 4, 8);
  }
}

Graph random_g2(Rng& rng, G2Mode mode) {
  if (mode == G2Mode::Mixed) mode = static_cast<G2Mode>(1 + rng.below(3));
  switch (mode) {
    case G2Mode::Regular:
      return rng.below(3) == 0 ? empty_graph(rng.between(1, 3)) : random_regular(rng, 3, 6);
    case G2Mode::CompleteBipartite: return complete_bipartite_graph(rng.between(1, 4), rng.between(1, 4));
    default: return random_graph(rng, 1, 6, 0.45);
  }
}

void theorem_points(SuiteReport& r, const VerifyOptions& opts) {
  Rng rng(opts.seed + 5);
  CheckResult chk{"theorem-charpoly-point-agreement"};
  chk.tolerance = 1e-6;
  constexpr std::size_t kPoints = 20;
  for (std::size_t k = 0; k < opts.trials; ++k) {
    const JoinKind kind = kAllJoinKinds[rng.below(4)];
    const Graph g1 = random_g1(rng);
    const Graph g2 = random_g2(rng, opts.g2);
    const double alpha = rng.below(5) == 0 ? static_cast<double>(rng.below(2)) : rng.uniform();
    const JoinSpec spec(kind, g1, g2, ArbitraryClass{});
    const AlphaParam al(alpha);
    const Graph j = join(kind, g1, g2);
    const DenseSymMatrix m = alpha_matrix(j, al);

    // Keep nu away from the join spectrum and from the poles of the right-hand side.
    std::vector<double> avoid = sym_eigenvalue_list(m);
    const auto f = theorem_factors<double>(kind, static_cast<long>(spec.n1()), static_cast<long>(spec.m1()),
                                           static_cast<long>(spec.t1()), static_cast<long>(spec.n2()), alpha);
    avoid.push_back(f.excess_root());
    for (double mu : sym_eigenvalue_list(alpha_matrix(g2, al))) avoid.push_back(mu + f.shift);
    const double radius = m.norm_inf() + 1.0;

    const std::string label = std::string(to_string(kind)) + " g1(" + describe_graph(g1) + ") g2(" +
                              describe_graph(g2) + ") alpha=" + format_number(alpha);
    for (std::size_t p = 0; p < kPoints; ++p) {
      double nu = 0.0;
      bool ok = false;
      while (!ok) {
        nu = rng.uniform(-radius, radius);
        ok = std::all_of(avoid.begin(), avoid.end(), [&](double x) { return std::abs(nu - x) > 1e-3; });
      }
      try {
        const double lhs = determinant(RealMatrix::identity(m.dim()) * nu - m.matrix());
        chk.record(relative(theorem_charpoly_eval(spec, al, nu), lhs), label + " nu=" + format_number(nu));
      } catch (const PoleError& e) {
        chk.record_failure(label + ": unexpected pole: " + e.what());
      }
    }
  }
  r.checks.push_back(chk);
}

void theorem_exact(SuiteReport& r, const VerifyOptions& opts) {
  Rng rng(opts.seed + 6);
  CheckResult chk{"theorem-exact-product-form"};
  const auto run = [&](JoinKind kind, const Graph& g1, const Graph& g2, const Rational& alpha) {
    const JoinSpec spec(kind, g1, g2, ArbitraryClass{});
    const RationalPolynomial direct = charpoly_exact(alpha_matrix_exact(join(kind, g1, g2), alpha));
    const bool same = theorem_charpoly_exact(spec, alpha) == direct;
    chk.record(same ? 0.0 : std::numeric_limits<double>::infinity(),
               std::string(to_string(kind)) + " g1(" + describe_graph(g1) + ") g2(" + describe_graph(g2) +
                   ") alpha=" + to_string(alpha));
  };
  run(JoinKind::QVertex, complete_graph(3), cycle_graph(3), Rational(1, 3));
  const std::size_t extra = std::min<std::size_t>(opts.trials, 12);
  const Graph g1_choices[] = {complete_graph(3), cycle_graph(4), complete_graph(4), cycle_graph(5)};
  for (std::size_t k = 0; k < extra; ++k) {
    const Graph g2 = random_graph(rng, 1, 4, 0.5);
    const long den = static_cast<long>(rng.between(1, 6));
    const long num = static_cast<long>(rng.below(static_cast<std::size_t>(den) + 1));
    Rational alpha(num, den);
    alpha.canonicalize();
    run(kAllJoinKinds[k % 4], g1_choices[rng.below(4)], g2, alpha);
  }
  r.checks.push_back(chk);
}

std::vector<double> degree_multiset(const Graph& g) {
  std::vector<double> d;
  for (auto x : degrees(g)) d.push_back(static_cast<double>(x));
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::vector<double> adjacency_spectrum(const Graph& g) {
  std::vector<double> v = sym_eigenvalue_list(DenseSymMatrix(adjacency_matrix(g).cast<double>()));
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

SuiteReport verify_lemmas(const VerifyOptions& opts) {
  SuiteReport r{"lemmas", {}};
  lemma_rank_one(r, opts);
  lemma_constant_row_sum(r, opts);
  lemma_kab(r, opts);
  incidence_identities(r, opts);
  lemma_line_graph(r, opts);
  return r;
}

SuiteReport verify_theorems(const VerifyOptions& opts) {
  SuiteReport r{"theorems", {}};
  theorem_points(r, opts);
  theorem_exact(r, opts);
  return r;
}

SuiteReport verify_corollaries(const VerifyOptions& opts) {
  SuiteReport r{"corollaries", {}};
  CheckResult agree{"closed-form-vs-oracle"}, ledger{"multiplicity-ledger"}, alpha0{"alpha0-adjacency-spectrum"},
      alpha1{"alpha1-degree-multiset"}, half{"half-signless-laplacian"}, affine{"affine-relation-regular"};
  agree.tolerance = opts.tol;
  alpha0.tolerance = opts.tol;
  alpha1.tolerance = opts.tol;
  affine.tolerance = 1e-10;

  const auto g1s = corollary_grid_g1();
  const auto g2s = corollary_grid_g2();
  const auto alphas = corollary_grid_alphas();
  for (const auto& g1 : g1s)
    for (const auto& g2 : g2s)
      for (JoinKind kind : kAllJoinKinds) {
        const JoinSpec spec(kind, g1.graph, g2.graph, g2.g2_class);
        const Graph j = join(kind, g1.graph, g2.graph);
        const std::string base = std::string(to_string(kind)) + " " + g1.name + " " + g2.name;

        const IntMatrix twice_half = (alpha_matrix(j, AlphaParam(0.5)).matrix() * 2.0).cast<long>();
        half.record(static_cast<double>(max_abs_entry(twice_half - degree_matrix(j) - adjacency_matrix(j))), base);

        for (double alpha : alphas) {
          const std::string label = base + " alpha=" + format_number(alpha);
          try {
            const AlphaParam al(alpha);
            const ClosedFormSpectrum cf = closed_form_spectrum(spec, al);
            ledger.record(cf.total_multiplicity() == spec.join_order() ? 0.0 : 1.0, label);
            const auto flat = cf.flatten();
            agree.record(spectra_equal(flat, direct_join_spectrum(spec, al), opts.tol).max_deviation, label);
            if (alpha == 0.0) alpha0.record(max_abs_diff(flat.flatten(), adjacency_spectrum(j)), label);
            if (alpha == 1.0) alpha1.record(max_abs_diff(flat.flatten(), degree_multiset(j)), label);
          } catch (const Error& e) {
            agree.record_failure(label + ": " + e.what());
          }
        }
      }

  std::vector<Graph> regular;
  for (const auto& g : g1s) regular.push_back(g.graph);
  for (const auto& g : g2s)
    if (regularity(g.graph)) regular.push_back(g.graph);
  for (const auto& g : regular) {
    const double t = static_cast<double>(*regularity(g));
    const auto adj = adjacency_spectrum(g);
    for (double alpha : alphas) {
      std::vector<double> expected;
      for (double x : adj) expected.push_back(alpha * t + (1.0 - alpha) * x);
      affine.record(max_abs_diff(sym_eigenvalues(alpha_matrix(g, AlphaParam(alpha))).flatten(), expected),
                    describe_graph(g) + " alpha=" + format_number(alpha));
    }
  }
  r.checks = {agree, ledger, alpha0, alpha1, half, affine};
  return r;
}

SuiteReport verify_examples(const VerifyOptions&) {
  SuiteReport r{"examples", {}};
  struct Case {
    std::string name;
    Graph g2;
    G2Class cls;
    std::vector<double> printed;
  };
  const std::vector<Case> cases{
      {"example1", path_graph(2), RegularClass{1},
       {5.632, 3.790, 3.5, 3.5, 3.5, 2, 2, 2, 2, 2, 2, 1.077}},
      {"example2", complete_bipartite_graph(2, 2), CompleteBipartiteClass{2, 2},
       {6.336, 4.681, 4, 4, 4, 3, 3, 2.5, 2.5, 2.5, 2, 2, 2, 1.484}},
  };
  for (const auto& c : cases) {
    CheckResult direct{c.name + "-oracle-vs-printed"}, closed{c.name + "-closed-form-vs-printed"},
        paths{c.name + "-paths-agree"};
    direct.tolerance = closed.tolerance = 1e-3;
    paths.tolerance = 1e-8;
    const JoinSpec spec(JoinKind::QVertex, complete_graph(4), c.g2, c.cls);
    const AlphaParam half(0.5);
    const Spectrum d = direct_join_spectrum(spec, half);
    const Spectrum cf = closed_form_spectrum(spec, half).flatten();
    direct.record(max_abs_diff(d.flatten(), c.printed), "direct");
    closed.record(max_abs_diff(cf.flatten(), c.printed), "closed form");
    paths.record(spectra_equal(d, cf, 1e-8).max_deviation, "direct vs closed form");
    r.checks.push_back(direct);
    r.checks.push_back(closed);
    r.checks.push_back(paths);
  }

  CheckResult p2{"tedge-p2-simple-eigenvalue"};
  p2.tolerance = 1e-8;
  const JoinSpec spec(JoinKind::TEdge, path_graph(2), empty_graph(1));
  const auto cf = closed_form_spectrum(spec, AlphaParam(0.5));
  const auto& first = cf.explicit_values.front();
  p2.record(std::abs(first.value - 0.5), "simple eigenvalue 3a-1");
  p2.record(spectra_equal(cf.flatten(), direct_join_spectrum(spec, AlphaParam(0.5)), 1e-8).max_deviation,
            "closed form vs oracle");
  r.checks.push_back(p2);
  return r;
}

std::vector<std::string> suite_names() { return {"lemmas", "theorems", "corollaries", "examples"}; }

SuiteReport run_suite(std::string_view name, const VerifyOptions& opts) {
  if (name == "lemmas") return verify_lemmas(opts);
  if (name == "theorems") return verify_theorems(opts);
  if (name == "corollaries") return verify_corollaries(opts);
  if (name == "examples") return verify_examples(opts);
  throw InvalidParameter("unknown suite '" + std::string(name) + "' (lemmas, theorems, corollaries, examples)");
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"name", c.name},
              {"passed", c.passed()},
              {"cases", c.cases},
              {"failures", c.failures},
              {"worst_deviation", json_number(c.worst_deviation)},
              {"tolerance", json_number(c.tolerance)}};
    if (!c.first_failure.empty()) j["first_failure"] = c.first_failure;
    checks.push_back(j);
  }
  return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

std::string to_plain(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : r.checks) {
    os << "  " << (c.passed() ? "PASS" : "FAIL") << "  " << c.name << "  cases=" << c.cases
       << " failures=" << c.failures << " worst=" << format_number(c.worst_deviation)
       << " tol=" << format_number(c.tolerance) << '\n';
    if (!c.first_failure.empty()) os << "        first failure: " << c.first_failure << '\n';
  }
  return os.str();
}

}  // namespace ajoin
