#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ajoin/exact.hpp"
#include "ajoin/graph.hpp"
#include "ajoin/linalg.hpp"
#include "ajoin/polynomial.hpp"

namespace ajoin {

/// alpha in [0, 1].
class AlphaParam {
 public:
  /// Throws ContractViolation outside [0, 1] or for NaN.
  explicit AlphaParam(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// alpha D(g) + (1 - alpha) A(g).
DenseSymMatrix alpha_matrix(const Graph& g, AlphaParam alpha);

struct RegularClass {
  std::size_t t2 = 0;
};
struct CompleteBipartiteClass {
  std::size_t a = 0;
  std::size_t b = 0;
};
struct ArbitraryClass {};

/// What is known about G2; selects the corollary used for closed forms.
using G2Class = std::variant<RegularClass, CompleteBipartiteClass, ArbitraryClass>;

/// Regular if g is regular, else complete bipartite if g is K_{a,b}, else arbitrary.
G2Class detect_g2_class(const Graph& g);
std::string describe(const G2Class& c);

/// A join together with the hypotheses the theorems need: G1 regular with
/// t1 >= 1 and m1 >= 1, and a G2 class that matches G2.
class JoinSpec {
 public:
  /// Throws InvalidInput (G1 edgeless), UnsupportedClass (G1 irregular) or
  /// PreconditionError (class inconsistent with g2).
  JoinSpec(JoinKind kind, Graph g1, Graph g2, G2Class g2_class);
  /// Class detected with detect_g2_class.
  JoinSpec(JoinKind kind, Graph g1, Graph g2);

  JoinKind kind() const noexcept { return kind_; }
  const Graph& g1() const noexcept { return g1_; }
  const Graph& g2() const noexcept { return g2_; }
  const G2Class& g2_class() const noexcept { return class_; }

  std::size_t n1() const noexcept { return g1_.order(); }
  std::size_t m1() const noexcept { return g1_.size(); }
  std::size_t t1() const noexcept { return t1_; }
  std::size_t n2() const noexcept { return g2_.order(); }
  std::size_t join_order() const noexcept { return n1() + m1() + n2(); }
  /// Largest vertex degree of the join, computed from the degree blocks.
  std::size_t join_max_degree() const;

 private:
  JoinKind kind_;
  Graph g1_;
  Graph g2_;
  G2Class class_;
  std::size_t t1_ = 0;
};

/// The factors of the characteristic polynomial of A_alpha(join) for a
/// t1-regular G1:
///   excess(nu)^(m1-n1) * phi_{A_alpha(G2)}(nu - shift)
///   * prod_{i>=2} (nu^2 + b1(lambda_i) nu + b0(lambda_i))
///   * (final_p(nu) - final_c(nu) * coronal_{A_alpha(G2)}(nu - shift))
/// where lambda_i runs over the A_alpha(G1) eigenvalues other than t1.
template <class S>
struct TheoremFactors {
  Polynomial<S> excess;     ///< linear in nu
  S shift{};                ///< alpha*n1 (vertex joins) or alpha*m1 (edge joins)
  Polynomial<S> b1;         ///< in lambda
  Polynomial<S> b0;         ///< in lambda
  Polynomial<S> final_p;    ///< quadratic in nu
  Polynomial<S> final_c;    ///< linear in nu

  Polynomial<S> quadratic(const S& lambda) const {
    return Polynomial<S>({b0(lambda), b1(lambda), S(1)});
  }
  S excess_root() const { return S(0) - excess.coefficient(0); }
};

template <class S>
TheoremFactors<S> theorem_factors(JoinKind kind, long n1, long m1, long t1, long n2, const S& alpha) {
  using P = Polynomial<S>;
  const auto c = [](const S& v) { return P::constant(v); };
  const P nu = P::x();
  const P lam = P::x();
  const S a = alpha;
  const S one(1);
  const S two(2);
  const S T1(t1), N1(n1), M1(m1), N2(n2);
  const S beta = one - a;
  const S beta2 = beta * beta;

  TheoremFactors<S> f;
  switch (kind) {
    case JoinKind::QVertex:
      f.excess = nu + c(two - two * a - two * a * T1);
      f.shift = a * N1;
      f.b1 = c(S(0) - (T1 - two + a * (two + T1 + N2))) - lam;
      f.b0 = c(S(0) - two * a * N2 * beta) - (c(T1) + lam) * S(one - a * (one + T1 + N2));
      f.final_p = (nu - c(a * T1 + a * N2)) * (nu + c(two - two * a - two * T1)) - c(two * T1 * beta2);
      f.final_c = (nu + c(two - two * a - two * T1)) * S(N1 * beta2);
      break;
    case JoinKind::QEdge:
      f.excess = nu + c(two - a * (two * T1 + N2 + two));
      f.shift = a * M1;
      f.b1 = c(S(0) - (a * (T1 + N2 + two) + T1 - two)) - lam;
      f.b0 = c(a * a * T1 * N2) + (c(T1) + lam) * S(a * (T1 + one) - one);
      f.final_p = (nu - c(a * T1)) * (nu - c(two * a * T1 + a * N2)) -
                  (nu + c(one - a - a * T1)) * S(beta * (two * T1 - two)) - c(two * beta2);
      f.final_c = (nu - c(a * T1)) * S(M1 * beta2);
      break;
    case JoinKind::TVertex:
      f.excess = nu + c(two - two * a - two * a * T1);
      f.shift = a * N1;
      f.b1 = c(two - T1 - two * a - a * T1 - a * N2) - lam * two;
      f.b0 = (c(T1 - two * a * T1) + lam) * S(S(0) - beta) +
             (c(a * T1 + a * N2) + lam) * (c(T1 - two + two * a) + lam);
      f.final_p = (nu - c(T1 + a * T1 + a * N2)) * (nu + c(two - two * a - two * T1)) - c(two * T1 * beta2);
      f.final_c = (nu + c(two - two * a - two * T1)) * S(N1 * beta2);
      break;
    case JoinKind::TEdge:
      f.excess = nu + c(two - two * a - two * a * T1 - a * N2);
      f.shift = a * M1;
      f.b1 = c(two - T1 - two * a - a * T1 - a * N2) - lam * two;
      f.b0 = c(S(0) - T1 * beta * (one - S(3) * a)) +
             (c(a * T1) + lam) * (c(T1 - S(3) + S(3) * a + a * N2) + lam);
      f.final_p = (nu - c(T1 + a * T1)) * (nu + c(two - two * a - two * T1 - a * N2)) - c(two * T1 * beta2);
      // t1*n1/2 = m1 for a t1-regular G1.
      f.final_c = (nu - c(T1 + a * T1)) * S(M1 * beta2);
      break;
  }
  return f;
}

struct TaggedEigenvalue {
  double value = 0.0;
  std::size_t multiplicity = 0;
  std::string clause;
};

struct TaggedFactor {
  RealPolynomial polynomial;
  std::size_t multiplicity = 0;
  std::string clause;
};

/// Structured spectrum assembled from the corollary clauses. Clause tags
/// such as "Cor1.1(b)(iii)" name the corollary item each value comes from.
struct ClosedFormSpectrum {
  std::vector<TaggedEigenvalue> explicit_values;  ///< may carry multiplicity 0
  std::vector<TaggedFactor> factors;
  std::size_t expected_dimension = 0;
  double cluster_tol = 1e-8;

  /// Sum of explicit multiplicities plus degree * multiplicity of factors.
  std::size_t total_multiplicity() const;
  /// Factors solved; entries grouped per (value, clause), zero multiplicities
  /// dropped, sorted by value non-increasing.
  std::vector<TaggedEigenvalue> solved() const;
  Spectrum flatten() const;
};

/// Spectrum of A_alpha(join) from the corollaries. Throws UnsupportedClass for
/// an arbitrary G2 and PreconditionError when t1 = 1 but G1 is not P2.
ClosedFormSpectrum closed_form_spectrum(const JoinSpec& spec, AlphaParam alpha);

/// Oracle path: build the join, assemble A_alpha, eigensolve.
Spectrum direct_join_spectrum(const JoinSpec& spec, AlphaParam alpha, double cluster_tol = 0.0);

/// Right-hand side of the characteristic-polynomial theorem at nu, valid for
/// any G2. Throws PoleError when nu - shift is a pole of the G2 coronal or
/// nu is the root of a negative-power excess factor.
double theorem_charpoly_eval(const JoinSpec& spec, AlphaParam alpha, double nu);

/// The theorem's product form expanded over the rationals. Requires m1 >= n1
/// so that every factor is a polynomial.
RationalPolynomial theorem_charpoly_exact(const JoinSpec& spec, const Rational& alpha);

struct SpectraComparison {
  bool equal = false;
  double max_deviation = 0.0;
  std::optional<std::size_t> first_mismatch;
  std::string reason;
};

/// Flattens both spectra and compares them index by index.
SpectraComparison spectra_equal(const Spectrum& a, const Spectrum& b, double tol);

}  // namespace ajoin
