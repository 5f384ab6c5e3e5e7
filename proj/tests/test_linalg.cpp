#include "doctest.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "ajoin/alpha_spectra.hpp"
#include "ajoin/errors.hpp"
#include "ajoin/exact.hpp"
#include "ajoin/linalg.hpp"
#include "ajoin/random.hpp"

using namespace ajoin;
using doctest::Approx;

namespace {

DenseSymMatrix adjacency(const Graph& g) { return DenseSymMatrix(adjacency_matrix(g).cast<double>()); }

DenseSymMatrix random_symmetric(Rng& rng, std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rng.uniform(-3.0, 3.0);
  return DenseSymMatrix(m);
}

}  // namespace

TEST_CASE("sym_eigenvalues examples") {
  const Spectrum k4 = sym_eigenvalues(alpha_matrix(complete_graph(4), AlphaParam(0.5)));
  REQUIRE(k4.entries().size() == 2);
  CHECK(k4.entries()[0].value == Approx(3.0));
  CHECK(k4.entries()[0].multiplicity == 1);
  CHECK(k4.entries()[1].value == Approx(1.0));
  CHECK(k4.entries()[1].multiplicity == 3);

  const Spectrum zero = sym_eigenvalues(DenseSymMatrix(RealMatrix(3, 3)));
  REQUIRE(zero.entries().size() == 1);
  CHECK(zero.entries()[0].multiplicity == 3);

  const auto c4 = sym_eigenvalues(adjacency(cycle_graph(4))).flatten();
  REQUIRE(c4.size() == 4);
  CHECK(c4[0] == Approx(2.0));
  CHECK(std::abs(c4[1]) < 1e-12);
  CHECK(std::abs(c4[2]) < 1e-12);
  CHECK(c4[3] == Approx(-2.0));
}

TEST_CASE("non-symmetric input is a contract violation") {
  CHECK_THROWS_AS(DenseSymMatrix(RealMatrix{{0.0, 1.0}, {0.0, 0.0}}), ContractViolation);
}

TEST_CASE("Jacobi agrees with Eigen's self-adjoint solver") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = rng.between(1, 40);
    const DenseSymMatrix m = random_symmetric(rng, n);
    Eigen::MatrixXd e(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e(i, j) = m(i, j);
    Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(e, Eigen::EigenvaluesOnly).eigenvalues();
    std::vector<double> ours = sym_eigenvalue_list(m);
    std::sort(ours.begin(), ours.end());
    const double scale = std::max(1.0, m.norm_inf());
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ours[i] - ref(static_cast<Eigen::Index>(i))) <= 1e-10 * scale);
  }
}

TEST_CASE("trace and Frobenius invariants") {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = rng.between(2, 30);
    const DenseSymMatrix m = random_symmetric(rng, n);
    const auto values = sym_eigenvalue_list(m);
    double sum = 0.0, squares = 0.0;
    for (double v : values) {
      sum += v;
      squares += v * v;
    }
    const double tol = 1e-9 * static_cast<double>(n) * m.norm_inf();
    CHECK(std::abs(sum - m.matrix().trace()) <= tol);
    CHECK(std::abs(squares - m.norm_frobenius() * m.norm_frobenius()) <= tol * m.norm_inf());
  }
}

TEST_CASE("exact characteristic polynomial vanishes at computed eigenvalues") {
  for (const Graph& g : {petersen_graph(), cycle_graph(7), complete_bipartite_graph(2, 4)}) {
    const Rational a(1, 3);
    const RealPolynomial p = to_real(charpoly_exact(alpha_matrix_exact(g, a)));
    double norm = 0.0;
    for (double c : p.coefficients()) norm = std::max(norm, std::abs(c));
    for (double lambda : sym_eigenvalue_list(alpha_matrix(g, AlphaParam(1.0 / 3.0))))
      CHECK(std::abs(p(lambda)) <= 1e-6 * norm);
  }
}

TEST_CASE("clustering merges equal eigenvalues only") {
  const Spectrum s = Spectrum::from_values({1.0, 1.0 + 2e-9, 3.0, 1.0 - 1e-9}, 1e-8);
  REQUIRE(s.entries().size() == 2);
  CHECK(s.entries()[0].value == Approx(3.0));
  CHECK(s.entries()[1].multiplicity == 3);
  CHECK(Spectrum::from_values({1.0, 1.1}, 1e-8).entries().size() == 2);
}

TEST_CASE("coronal examples") {
  CHECK(coronal_numeric(adjacency(cycle_graph(4)), 3.0) == Approx(4.0));
  CHECK(coronal_numeric(DenseSymMatrix(RealMatrix(1, 1)), 2.0) == Approx(0.5));
  CHECK(coronal_numeric(alpha_matrix(complete_bipartite_graph(2, 3), AlphaParam(0.0)), 3.0) == Approx(9.0));
  CHECK(coronal_kab(2, 2, 0.5, 3.0) == Approx(4.0));
  CHECK(coronal_kab(1, 1, 0.0, 2.0) == Approx(2.0));
  CHECK(coronal_kab(2, 2, 0.5, 3.0) == Approx(coronal_numeric(alpha_matrix(complete_bipartite_graph(2, 2), AlphaParam(0.5)), 3.0)));
}

TEST_CASE("coronal of K_{a,b} matches the numeric coronal") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t a = rng.between(1, 6), b = rng.between(1, 6);
    const double alpha = rng.uniform();
    const auto m = alpha_matrix(complete_bipartite_graph(a, b), AlphaParam(alpha));
    const double nu = m.norm_inf() + 0.25 + 4.0 * rng.uniform();
    const double expected = coronal_numeric(m, nu);
    CHECK(std::abs(coronal_kab(a, b, alpha, nu) - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("coronal at an eigenvalue raises a pole error") {
  bool caught = false;
  try {
    coronal_numeric(adjacency(cycle_graph(4)), 2.0);
  } catch (const PoleError& e) {
    caught = true;
    CHECK(e.eigenvalue() == Approx(2.0));
  }
  CHECK(caught);
  CHECK_THROWS_AS(coronal_kab(1, 1, 0.0, 1.0), PoleError);
}

TEST_CASE("real_roots examples") {
  auto r = real_roots(RealPolynomial{7.0, -5.5, 1.0});
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Approx(3.5));
  CHECK(r[1] == Approx(2.0));

  r = real_roots(RealPolynomial{-23.0, 31.5, -10.5, 1.0});
  REQUIRE(r.size() == 3);
  CHECK(r[0] == Approx(5.632).epsilon(1e-3));
  CHECK(r[1] == Approx(3.790).epsilon(1e-3));
  CHECK(r[2] == Approx(1.077).epsilon(1e-3));

  r = real_roots(RealPolynomial{-1.0, 0.0, 1.0});
  CHECK(r == std::vector<double>{1.0, -1.0});
}

TEST_CASE("real_roots inverts from_roots, including repeated roots") {
  Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t deg = rng.between(1, 4);
    std::vector<double> roots;
    for (std::size_t k = 0; k < deg; ++k) {
      if (k > 0 && rng.below(3) == 0)
        roots.push_back(roots.back());
      else
        roots.push_back(rng.uniform(-10.0, 10.0));
    }
    const auto p = RealPolynomial::from_roots(roots) * rng.uniform(0.5, 3.0);
    auto found = real_roots(p);
    std::sort(roots.begin(), roots.end(), std::greater<>());
    REQUIRE(found.size() == roots.size());
    for (std::size_t k = 0; k < deg; ++k) CHECK(std::abs(found[k] - roots[k]) <= 1e-6 * std::max(1.0, std::abs(roots[k])));
  }
}

TEST_CASE("real_roots handles a triple root") {
  const double roots[] = {2.0, 2.0, 2.0, -1.0};
  const auto found = real_roots(RealPolynomial::from_roots(roots));
  REQUIRE(found.size() == 4);
  for (int k = 0; k < 3; ++k) CHECK(found[k] == Approx(2.0));
  CHECK(found[3] == Approx(-1.0));
}

TEST_CASE("real_roots rejects genuinely complex roots") {
  CHECK_THROWS_AS(real_roots(RealPolynomial{1.0, 0.0, 1.0}), NumericInconsistency);
  CHECK_THROWS_AS(real_roots(RealPolynomial{1.0, 0.0, 0.0, 1.0}), NumericInconsistency);
}

TEST_CASE("rank-one identities") {
  const auto id = rank_one_identities_check(RealMatrix::identity(2), 1.0, 0.25, 3.0);
  CHECK(id.determinant_update.holds);
  CHECK(determinant(RealMatrix::identity(2) + RealMatrix::ones(2, 2)) == Approx(3.0));

  const auto c4 = rank_one_identities_check(adjacency_matrix(cycle_graph(4)).cast<double>(), 0.3, 0.1, 5.0);
  CHECK(c4.determinant_update.holds);
  CHECK(c4.coronal_determinant.holds);
  CHECK(c4.inverse_formula.holds);

  // (2I - 0.5J)^{-1} = 0.5 I + 0.5 J for n = 3.
  const RealMatrix inv = inverse(RealMatrix::identity(3) * 2.0 - RealMatrix::ones(3, 3) * 0.5);
  CHECK(inv(0, 0) == Approx(1.0));
  CHECK(inv(0, 1) == Approx(0.5));
}

TEST_CASE("determinant and solve") {
  const RealMatrix m{{2.0, 1.0}, {1.0, 3.0}};
  CHECK(determinant(m) == Approx(5.0));
  const double rhs[] = {3.0, 5.0};
  const auto x = solve(m, rhs);
  CHECK(x[0] == Approx(0.8));
  CHECK(x[1] == Approx(1.4));
  CHECK(determinant(adjugate(m)) == Approx(5.0));
}
