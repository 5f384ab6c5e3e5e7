#include "ajoin/alpha_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ajoin/errors.hpp"

namespace ajoin {

AlphaParam::AlphaParam(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw ContractViolation("alpha must lie in [0,1], got " + std::to_string(value));
}

DenseSymMatrix alpha_matrix(const Graph& g, AlphaParam alpha) {
  const double a = alpha.value();
  const auto d = degrees(g);
  RealMatrix m(g.order(), g.order());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = a * static_cast<double>(d[i]);
  for (auto [u, v] : g.edges()) m(u, v) = m(v, u) = 1.0 - a;
  return DenseSymMatrix(std::move(m));
}

G2Class detect_g2_class(const Graph& g) {
  if (auto t = regularity(g)) return RegularClass{*t};
  if (auto parts = complete_bipartite_parts(g)) return CompleteBipartiteClass{parts->first, parts->second};
  return ArbitraryClass{};
}

std::string describe(const G2Class& c) {
  if (auto* r = std::get_if<RegularClass>(&c)) return "regular(t2=" + std::to_string(r->t2) + ")";
  if (auto* k = std::get_if<CompleteBipartiteClass>(&c))
    return "complete_bipartite(" + std::to_string(k->a) + "," + std::to_string(k->b) + ")";
  return "arbitrary";
}

JoinSpec::JoinSpec(JoinKind kind, Graph g1, Graph g2, G2Class g2_class)
    : kind_(kind), g1_(std::move(g1)), g2_(std::move(g2)), class_(g2_class) {
  if (g1_.size() == 0) throw InvalidInput("G1 must have at least one edge");
  const auto t = regularity(g1_);
  if (!t) throw UnsupportedClass("G1 is not regular; the closed forms need a regular G1");
  t1_ = *t;

  if (auto* r = std::get_if<RegularClass>(&class_)) {
    const auto t2 = regularity(g2_);
    if (g2_.order() > 0 && (!t2 || *t2 != r->t2))
      throw PreconditionError("G2 is not " + std::to_string(r->t2) + "-regular");
  } else if (auto* k = std::get_if<CompleteBipartiteClass>(&class_)) {
    const auto parts = complete_bipartite_parts(g2_);
    const auto want = std::pair{std::min(k->a, k->b), std::max(k->a, k->b)};
    if (!parts || *parts != want)
      throw PreconditionError("G2 is not K_{" + std::to_string(k->a) + "," + std::to_string(k->b) + "}");
  }
}

JoinSpec::JoinSpec(JoinKind kind, Graph g1, Graph g2)
    : JoinSpec(kind, g1, g2, detect_g2_class(g2)) {}

std::size_t JoinSpec::join_max_degree() const {
  const auto deg2 = degrees(g2_);
  const std::size_t d2 = deg2.empty() ? 0 : *std::max_element(deg2.begin(), deg2.end());
  const bool vertex = is_vertex_join(kind_);
  const bool total = is_total_join(kind_);
  const std::size_t g1_block = (total ? 2 * t1_ : t1_) + (vertex ? n2() : 0);
  const std::size_t inserted = 2 * t1_ + (vertex ? 0 : n2());
  const std::size_t g2_block = g2_.order() == 0 ? 0 : d2 + (vertex ? n1() : m1());
  return std::max({g1_block, inserted, g2_block});
}

std::size_t ClosedFormSpectrum::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& e : explicit_values) total += e.multiplicity;
  for (const auto& f : factors) total += static_cast<std::size_t>(f.polynomial.degree()) * f.multiplicity;
  return total;
}

std::vector<TaggedEigenvalue> ClosedFormSpectrum::solved() const {
  std::vector<TaggedEigenvalue> out;
  for (const auto& e : explicit_values)
    if (e.multiplicity > 0) out.push_back(e);
  for (const auto& f : factors)
    for (double r : real_roots(f.polynomial)) out.push_back({r, f.multiplicity, f.clause});

  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.value != b.value ? a.value > b.value : a.clause < b.clause;
  });
  // Merge equal values (within cluster_tol) that share a clause.
  std::vector<TaggedEigenvalue> merged;
  for (const auto& e : out) {
    bool absorbed = false;
    for (auto it = merged.rbegin(); it != merged.rend() && it->value - e.value <= cluster_tol; ++it)
      if (it->clause == e.clause) {
        it->multiplicity += e.multiplicity;
        absorbed = true;
        break;
      }
    if (!absorbed) merged.push_back(e);
  }
  return merged;
}

Spectrum ClosedFormSpectrum::flatten() const {
  std::vector<double> values;
  for (const auto& e : solved()) values.insert(values.end(), e.multiplicity, e.value);
  return Spectrum::from_values(std::move(values), cluster_tol);
}

namespace {

constexpr double kPerronTol = 1e-6;

// Removes one copy of the eigenvalue closest to `target` from a clustered
// spectrum; the match must lie within kPerronTol.
std::vector<Eigenvalue> remove_one(const Spectrum& s, double target, const char* what) {
  std::vector<Eigenvalue> entries = s.entries();
  auto best = entries.end();
  double gap = std::numeric_limits<double>::infinity();
  for (auto it = entries.begin(); it != entries.end(); ++it)
    if (std::abs(it->value - target) < gap) {
      gap = std::abs(it->value - target);
      best = it;
    }
  if (best == entries.end() || gap > kPerronTol)
    throw PreconditionError(std::string(what) + ": no eigenvalue near the row sum " + std::to_string(target));
  if (--best->multiplicity == 0) entries.erase(best);
  return entries;
}

std::vector<double> remove_one_flat(std::vector<double> values, double target, const char* what) {
  auto best = values.end();
  double gap = std::numeric_limits<double>::infinity();
  for (auto it = values.begin(); it != values.end(); ++it)
    if (std::abs(*it - target) < gap) {
      gap = std::abs(*it - target);
      best = it;
    }
  if (best == values.end() || gap > kPerronTol)
    throw PreconditionError(std::string(what) + ": no eigenvalue near the row sum " + std::to_string(target));
  values.erase(best);
  return values;
}

std::string corollary_number(JoinKind kind) {
  switch (kind) {
    case JoinKind::QVertex: return "1";
    case JoinKind::QEdge: return "2";
    case JoinKind::TVertex: return "10";
    case JoinKind::TEdge: return "11";
  }
  return "?";
}

const char* roman(int k) {
  static const char* const numerals[] = {"i", "ii", "iii", "iv", "v", "vi"};
  return numerals[k - 1];
}

// Simple eigenvalue left over when t1 = 1: the i = 2 quadratic of P2
// (lambda = 2 alpha - 1) has the excess root as one zero and this as the other.
double p2_simple_eigenvalue(JoinKind kind, double a, double n2) {
  switch (kind) {
    case JoinKind::QVertex: return a * (1.0 + n2);
    case JoinKind::QEdge: return a;
    case JoinKind::TVertex: return a * (3.0 + n2) - 1.0;
    case JoinKind::TEdge: return 3.0 * a - 1.0;
  }
  return 0.0;
}

}  // namespace

ClosedFormSpectrum closed_form_spectrum(const JoinSpec& spec, AlphaParam alpha) {
  if (std::holds_alternative<ArbitraryClass>(spec.g2_class()))
    throw UnsupportedClass(
        "closed-form spectra need a regular or complete bipartite G2; use theorem_charpoly_eval");
  const bool p2 = spec.t1() == 1;
  if (p2 && (spec.n1() != 2 || spec.m1() != 1))
    throw PreconditionError("t1 = 1 closed forms require G1 = P2 exactly");

  const double a = alpha.value();
  const long n1 = static_cast<long>(spec.n1());
  const long m1 = static_cast<long>(spec.m1());
  const long t1 = static_cast<long>(spec.t1());
  const long n2 = static_cast<long>(spec.n2());
  const auto f = theorem_factors<double>(spec.kind(), n1, m1, t1, n2, a);
  const bool regular_g2 = std::holds_alternative<RegularClass>(spec.g2_class());

  ClosedFormSpectrum out;
  out.expected_dimension = spec.join_order();
  out.cluster_tol = 1e-8 * std::max(1.0, static_cast<double>(spec.join_max_degree()));

  const std::string prefix = "Cor" + corollary_number(spec.kind()) + (regular_g2 ? ".1" : ".2") + (p2 ? "(a)" : "(b)");
  int clause = 0;
  auto next_tag = [&] { return prefix + "(" + roman(++clause) + ")"; };

  const Spectrum g1_spec = sym_eigenvalues(alpha_matrix(spec.g1(), alpha));
  const auto g1_rest = remove_one(g1_spec, static_cast<double>(t1), "A_alpha(G1)");

  if (p2) {
    const double simple = p2_simple_eigenvalue(spec.kind(), a, static_cast<double>(n2));
    const RealPolynomial q = f.quadratic(2.0 * a - 1.0);
    if (std::abs(q(simple)) > 1e-9 * std::max(1.0, coefficient_norm(q) * std::max(1.0, simple * simple)))
      throw NumericInconsistency("P2 simple eigenvalue is not a root of its quadratic factor");
    out.explicit_values.push_back({simple, 1, next_tag()});
  } else {
    out.explicit_values.push_back({f.excess_root(), static_cast<std::size_t>(m1 - n1), next_tag()});
  }

  RealPolynomial numerator;
  RealPolynomial denominator;
  const RealPolynomial x = RealPolynomial::x() - RealPolynomial::constant(f.shift);
  if (regular_g2) {
    const double t2 = static_cast<double>(std::get<RegularClass>(spec.g2_class()).t2);
    const std::string tag = next_tag();
    if (n2 > 0) {
      const auto g2_rest = remove_one(sym_eigenvalues(alpha_matrix(spec.g2(), alpha)), t2, "A_alpha(G2)");
      for (const auto& e : g2_rest) out.explicit_values.push_back({f.shift + e.value, e.multiplicity, tag});
    }
    numerator = RealPolynomial::constant(static_cast<double>(n2));
    denominator = x - RealPolynomial::constant(t2);
  } else {
    const auto [ka, kb] = std::get<CompleteBipartiteClass>(spec.g2_class());
    const double da = static_cast<double>(ka);
    const double db = static_cast<double>(kb);
    const double nn = static_cast<double>(n2);
    out.explicit_values.push_back({f.shift + a * da, kb - 1, next_tag()});
    out.explicit_values.push_back({f.shift + a * db, ka - 1, next_tag()});
    numerator = x * nn + RealPolynomial::constant(-a * nn * nn + 2.0 * da * db);
    denominator = x * x - x * (a * nn) + RealPolynomial::constant((2.0 * a - 1.0) * da * db);
  }

  if (!p2) {
    const std::string tag = next_tag();
    for (const auto& e : g1_rest) out.factors.push_back({f.quadratic(e.value), e.multiplicity, tag});
  }
  // With n2 = 0 the G2 block is absent: the final factor is final_p itself.
  const RealPolynomial final_factor =
      n2 == 0 ? f.final_p : f.final_p * denominator - f.final_c * numerator;
  out.factors.push_back({final_factor, 1, next_tag()});

  if (out.total_multiplicity() != out.expected_dimension)
    throw NumericInconsistency("closed-form multiplicities sum to " + std::to_string(out.total_multiplicity()) +
                               ", expected " + std::to_string(out.expected_dimension));
  return out;
}

Spectrum direct_join_spectrum(const JoinSpec& spec, AlphaParam alpha, double cluster_tol) {
  const Graph j = join(spec.kind(), spec.g1(), spec.g2());
  return sym_eigenvalues(alpha_matrix(j, alpha), cluster_tol);
}

double theorem_charpoly_eval(const JoinSpec& spec, AlphaParam alpha, double nu) {
  const long n1 = static_cast<long>(spec.n1());
  const long m1 = static_cast<long>(spec.m1());
  const long t1 = static_cast<long>(spec.t1());
  const long n2 = static_cast<long>(spec.n2());
  const auto f = theorem_factors<double>(spec.kind(), n1, m1, t1, n2, alpha.value());

  const double ex = f.excess(nu);
  const long power = m1 - n1;
  if (power < 0 && ex == 0.0) throw PoleError(nu, f.excess_root());
  double value = std::pow(ex, static_cast<double>(power));

  const auto g1_rest = remove_one_flat(sym_eigenvalue_list(alpha_matrix(spec.g1(), alpha)),
                                       static_cast<double>(t1), "A_alpha(G1)");
  for (double lam : g1_rest) value *= f.quadratic(lam)(nu);

  double coronal = 0.0;
  if (n2 > 0) {
    const DenseSymMatrix a2 = alpha_matrix(spec.g2(), alpha);
    for (double mu : sym_eigenvalue_list(a2)) value *= nu - f.shift - mu;
    coronal = coronal_numeric(a2, nu - f.shift);
  }
  return value * (f.final_p(nu) - f.final_c(nu) * coronal);
}

namespace {

RationalMatrix eval_matrix_polynomial(const RationalPolynomial& p, const RationalMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix acc(n, n);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

}  // namespace

RationalPolynomial theorem_charpoly_exact(const JoinSpec& spec, const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw ContractViolation("alpha must lie in [0,1]");
  const long n1 = static_cast<long>(spec.n1());
  const long m1 = static_cast<long>(spec.m1());
  const long t1 = static_cast<long>(spec.t1());
  const long n2 = static_cast<long>(spec.n2());
  if (m1 < n1) throw PreconditionError("exact product form needs m1 >= n1");
  const auto f = theorem_factors<Rational>(spec.kind(), n1, m1, t1, n2, alpha);

  // prod over all eigenvalues of q(lambda, nu) equals det(nu^2 I + nu B + C)
  // with B = b1(M), C = b0(M), which is the characteristic polynomial of the
  // block companion [[0, I], [-C, -B]].
  const RationalMatrix m = alpha_matrix_exact(spec.g1(), alpha);
  const RationalMatrix bm = eval_matrix_polynomial(f.b1, m);
  const RationalMatrix cm = eval_matrix_polynomial(f.b0, m);
  const std::size_t n = m.rows();
  RationalMatrix companion(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    companion(i, n + i) = 1;
    for (std::size_t j = 0; j < n; ++j) {
      companion(n + i, j) = -cm(i, j);
      companion(n + i, n + j) = -bm(i, j);
    }
  }
  const auto [quadratics, rem] = charpoly_exact(companion).divmod(f.quadratic(Rational(t1)));
  if (!rem.is_zero()) throw NumericInconsistency("Perron quadratic does not divide the product");

  RationalPolynomial g2_part = f.final_p;
  if (n2 > 0) {
    const RationalMatrix a2 = alpha_matrix_exact(spec.g2(), alpha);
    RationalMatrix a2j = a2;
    for (std::size_t i = 0; i < a2j.rows(); ++i)
      for (std::size_t j = 0; j < a2j.cols(); ++j) a2j(i, j) += 1;
    // coronal * phi = phi(M) - phi(M + J), a polynomial.
    const RationalPolynomial phi = charpoly_exact(a2).shifted(f.shift);
    const RationalPolynomial phi_j = charpoly_exact(a2j).shifted(f.shift);
    g2_part = f.final_p * phi - f.final_c * (phi - phi_j);
  }
  return f.excess.pow(static_cast<int>(m1 - n1)) * quadratics * g2_part;
}

SpectraComparison spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
  if (!(tol > 0.0)) throw ContractViolation("spectra_equal: tol must be positive");
  SpectraComparison out;
  const auto fa = a.flatten();
  const auto fb = b.flatten();
  if (fa.size() != fb.size()) {
    out.reason = "dimension mismatch: " + std::to_string(fa.size()) + " vs " + std::to_string(fb.size());
    out.max_deviation = std::numeric_limits<double>::infinity();
    return out;
  }
  for (std::size_t i = 0; i < fa.size(); ++i) {
    const double d = std::abs(fa[i] - fb[i]);
    out.max_deviation = std::max(out.max_deviation, d);
    if (d > tol && !out.first_mismatch) out.first_mismatch = i;
  }
  out.equal = !out.first_mismatch.has_value();
  if (!out.equal)
    out.reason = "eigenvalue " + std::to_string(*out.first_mismatch) + " differs: " +
                 std::to_string(fa[*out.first_mismatch]) + " vs " + std::to_string(fb[*out.first_mismatch]);
  return out;
}

}  // namespace ajoin
