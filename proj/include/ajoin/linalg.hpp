#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ajoin/matrix.hpp"
#include "ajoin/polynomial.hpp"

namespace ajoin {

/// Square real matrix checked symmetric (|a_ij - a_ji| <= 1e-12) on construction.
class DenseSymMatrix {
 public:
  static constexpr double kSymmetryTol = 1e-12;

  DenseSymMatrix() = default;
  /// Throws ContractViolation if m is not square or not symmetric.
  explicit DenseSymMatrix(RealMatrix m);

  std::size_t dim() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const RealMatrix& matrix() const noexcept { return m_; }

  double norm_inf() const;
  double norm_frobenius() const;

 private:
  RealMatrix m_;
};

struct Eigenvalue {
  double value = 0.0;
  std::size_t multiplicity = 0;
  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Distinct eigenvalues with multiplicities, sorted by value non-increasing.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<Eigenvalue> entries);

  /// Single-linkage clustering of the values: sorted neighbours closer than
  /// cluster_tol share a group; each group reports its mean.
  static Spectrum from_values(std::vector<double> values, double cluster_tol);

  const std::vector<Eigenvalue>& entries() const noexcept { return entries_; }
  std::size_t dimension() const;
  /// Every eigenvalue repeated by multiplicity, non-increasing.
  std::vector<double> flatten() const;

 private:
  std::vector<Eigenvalue> entries_;
};

/// Default clustering tolerance for a matrix: 1e-8 * max(1, ||m||_inf).
double default_cluster_tol(const DenseSymMatrix& m);

/// All eigenvalues (cyclic Jacobi), non-increasing, no clustering.
std::vector<double> sym_eigenvalue_list(const DenseSymMatrix& m);

/// Eigenvalues clustered into a Spectrum. cluster_tol <= 0 selects the default.
Spectrum sym_eigenvalues(const DenseSymMatrix& m, double cluster_tol = 0.0);

/// LU with partial pivoting.
double determinant(const RealMatrix& m);
/// Solves m x = rhs; throws PreconditionError if m is singular to working precision.
std::vector<double> solve(const RealMatrix& m, std::span<const double> rhs);
RealMatrix inverse(const RealMatrix& m);
/// ||m||_1 * ||m^-1||_1, +inf when singular.
double condition_number_1(const RealMatrix& m);
/// Transposed cofactor matrix; valid for singular m.
RealMatrix adjugate(const RealMatrix& m);

/// Upper limit on cond_1(nu I - m) before coronal evaluation reports a pole.
inline constexpr double kPoleConditionLimit = 1e12;

/// 1^T (nu I - m)^{-1} 1. Throws PoleError carrying the eigenvalue of m
/// nearest nu when the system is numerically singular.
double coronal_numeric(const DenseSymMatrix& m, double nu);
/// Same quantity for a general square matrix (PoleError reports nu itself).
double coronal_general(const RealMatrix& m, double nu);

/// Closed-form A_alpha coronal of K_{a,b}; throws PoleError when the
/// denominator nu^2 - alpha(a+b)nu + (2alpha-1)ab vanishes.
double coronal_kab(std::size_t a, std::size_t b, double alpha, double nu);

/// Largest absolute coefficient.
double coefficient_norm(const RealPolynomial& p);

/// Real roots (with multiplicity, non-increasing) of a polynomial of degree
/// 1..4 that is real-rooted by construction. Degree 2 uses the quadratic
/// formula; degrees 3 and 4 use balanced companion-matrix eigenvalues with a
/// Newton polish. Roots whose imaginary part is not negligible and that do not
/// resolve to a multiple real root raise NumericInconsistency.
std::vector<double> real_roots(const RealPolynomial& p);

struct LemmaCheck {
  bool holds = false;
  double deviation = 0.0;  // relative
};

struct RankOneIdentities {
  LemmaCheck determinant_update;  // det(M + bJ) = det M + b 1^T adj(M) 1
  LemmaCheck coronal_determinant; // det(nu I - M - bJ) = (1 - b coronal_M(nu)) det(nu I - M)
  LemmaCheck inverse_formula;     // (bI - cJ)^{-1} = I/b + c/(b(b - nc)) J
};

/// Evaluates both sides of the three rank-one identities with agreement
/// threshold 1e-8 (relative). Throws PreconditionError when nu I - M or
/// bI - cJ is singular.
RankOneIdentities rank_one_identities_check(const RealMatrix& m, double b, double c, double nu);

}  // namespace ajoin
