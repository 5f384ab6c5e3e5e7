#include "ajoin/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "ajoin/errors.hpp"

namespace ajoin {

DenseSymMatrix::DenseSymMatrix(RealMatrix m) : m_(std::move(m)) {
  if (!m_.square()) throw ContractViolation("DenseSymMatrix: matrix is not square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (std::abs(m_(i, j) - m_(j, i)) > kSymmetryTol)
        throw ContractViolation("DenseSymMatrix: entries (" + std::to_string(i) + "," +
                                std::to_string(j) + ") break symmetry");
}

double DenseSymMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    double s = 0.0;
    for (double x : m_.row(i)) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

double DenseSymMatrix::norm_frobenius() const {
  double s = 0.0;
  for (double x : m_.data()) s += x * x;
  return std::sqrt(s);
}

Spectrum::Spectrum(std::vector<Eigenvalue> entries) : entries_(std::move(entries)) {
  std::erase_if(entries_, [](const Eigenvalue& e) { return e.multiplicity == 0; });
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const Eigenvalue& a, const Eigenvalue& b) { return a.value > b.value; });
}

Spectrum Spectrum::from_values(std::vector<double> values, double cluster_tol) {
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<Eigenvalue> out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j - 1] - values[j] <= cluster_tol) sum += values[j++];
    out.push_back({sum / static_cast<double>(j - i), j - i});
    i = j;
  }
  return Spectrum(std::move(out));
}

std::size_t Spectrum::dimension() const {
  std::size_t d = 0;
  for (const auto& e : entries_) d += e.multiplicity;
  return d;
}

std::vector<double> Spectrum::flatten() const {
  std::vector<double> v;
  v.reserve(dimension());
  for (const auto& e : entries_) v.insert(v.end(), e.multiplicity, e.value);
  return v;
}

double default_cluster_tol(const DenseSymMatrix& m) { return 1e-8 * std::max(1.0, m.norm_inf()); }

std::vector<double> sym_eigenvalue_list(const DenseSymMatrix& sym) {
  // Cyclic Jacobi with the threshold strategy; deterministic sweep order.
  const std::size_t n = sym.dim();
  RealMatrix a = sym.matrix();
  std::vector<double> d(n), b(n), z(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = b[i] = a(i, i);

  for (int sweep = 1; sweep <= 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::abs(a(p, q));
    if (off == 0.0) break;

    const double thresh = sweep < 4 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = 100.0 * std::abs(a(p, q));
        if (sweep > 4 && std::abs(d[p]) + g == std::abs(d[p]) &&
            std::abs(d[q]) + g == std::abs(d[q])) {
          a(p, q) = 0.0;
          continue;
        }
        if (std::abs(a(p, q)) <= thresh) continue;

        double h = d[q] - d[p];
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = a(p, q) / h;
        } else {
          const double theta = 0.5 * h / a(p, q);
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        h = t * a(p, q);
        z[p] -= h;
        z[q] += h;
        d[p] -= h;
        d[q] += h;
        a(p, q) = 0.0;
        auto rotate = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
          const double gg = a(i, j);
          const double hh = a(k, l);
          a(i, j) = gg - s * (hh + gg * tau);
          a(k, l) = hh + s * (gg - hh * tau);
        };
        for (std::size_t j = 0; j < p; ++j) rotate(j, p, j, q);
        for (std::size_t j = p + 1; j < q; ++j) rotate(p, j, j, q);
        for (std::size_t j = q + 1; j < n; ++j) rotate(p, j, q, j);
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      b[p] += z[p];
      d[p] = b[p];
      z[p] = 0.0;
    }
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Spectrum sym_eigenvalues(const DenseSymMatrix& m, double cluster_tol) {
  if (cluster_tol <= 0.0) cluster_tol = default_cluster_tol(m);
  return Spectrum::from_values(sym_eigenvalue_list(m), cluster_tol);
}

namespace {

struct LU {
  RealMatrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;
};

LU lu_decompose(const RealMatrix& m) {
  if (!m.square()) throw ContractViolation("LU: matrix is not square");
  const std::size_t n = m.rows();
  LU f{m, std::vector<std::size_t>(n), 1, false};
  std::iota(f.perm.begin(), f.perm.end(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(f.lu(i, k)) > std::abs(f.lu(piv, k))) piv = i;
    if (f.lu(piv, k) == 0.0) {
      f.singular = true;
      continue;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = f.lu(i, k) / f.lu(k, k);
      f.lu(i, k) = l;
      if (l == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= l * f.lu(k, j);
    }
  }
  return f;
}

std::vector<double> lu_solve(const LU& f, std::span<const double> rhs) {
  const std::size_t n = f.lu.rows();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = rhs[f.perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= f.lu(i, j) * x[j];
    x[i] = s / f.lu(i, i);
  }
  return x;
}

double norm_1(const RealMatrix& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

RealMatrix shifted_negated(const RealMatrix& m, double nu) {
  RealMatrix r = m * -1.0;
  for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) += nu;
  return r;
}

}  // namespace

double determinant(const RealMatrix& m) {
  if (m.rows() == 0) return 1.0;
  const LU f = lu_decompose(m);
  if (f.singular) return 0.0;
  double det = f.sign;
  for (std::size_t i = 0; i < m.rows(); ++i) det *= f.lu(i, i);
  return det;
}

std::vector<double> solve(const RealMatrix& m, std::span<const double> rhs) {
  if (rhs.size() != m.rows()) throw ContractViolation("solve: rhs size mismatch");
  const LU f = lu_decompose(m);
  if (f.singular) throw PreconditionError("solve: matrix is singular");
  return lu_solve(f, rhs);
}

RealMatrix inverse(const RealMatrix& m) {
  const LU f = lu_decompose(m);
  if (f.singular) throw PreconditionError("inverse: matrix is singular");
  const std::size_t n = m.rows();
  RealMatrix inv(n, n);
  std::vector<double> e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), 0.0);
    e[j] = 1.0;
    const auto col = lu_solve(f, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

double condition_number_1(const RealMatrix& m) {
  const LU f = lu_decompose(m);
  if (f.singular) return std::numeric_limits<double>::infinity();
  return norm_1(m) * norm_1(inverse(m));
}

RealMatrix adjugate(const RealMatrix& m) {
  if (!m.square()) throw ContractViolation("adjugate: matrix is not square");
  const std::size_t n = m.rows();
  RealMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1.0;
    return adj;
  }
  RealMatrix minor(n - 1, n - 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = m(i, j);
        }
        ++mi;
      }
      const double cof = determinant(minor) * (((r + c) % 2 == 0) ? 1.0 : -1.0);
      adj(c, r) = cof;
    }
  return adj;
}

namespace {

double ones_quadratic_form_solve(const RealMatrix& shifted) {
  const std::vector<double> ones(shifted.rows(), 1.0);
  const auto x = solve(shifted, ones);
  return std::accumulate(x.begin(), x.end(), 0.0);
}

}  // namespace

double coronal_numeric(const DenseSymMatrix& m, double nu) {
  const RealMatrix shifted = shifted_negated(m.matrix(), nu);
  if (condition_number_1(shifted) > kPoleConditionLimit) {
    const auto eig = sym_eigenvalue_list(m);
    double nearest = nu;
    double best = std::numeric_limits<double>::infinity();
    for (double l : eig)
      if (std::abs(l - nu) < best) {
        best = std::abs(l - nu);
        nearest = l;
      }
    throw PoleError(nu, nearest);
  }
  return ones_quadratic_form_solve(shifted);
}

double coronal_general(const RealMatrix& m, double nu) {
  const RealMatrix shifted = shifted_negated(m, nu);
  if (condition_number_1(shifted) > kPoleConditionLimit) throw PoleError(nu, nu);
  return ones_quadratic_form_solve(shifted);
}

double coronal_kab(std::size_t a, std::size_t b, double alpha, double nu) {
  if (a == 0 || b == 0) throw InvalidParameter("coronal_kab: a, b must be >= 1");
  const double n = static_cast<double>(a + b);
  const double ab = static_cast<double>(a * b);
  const double den = nu * nu - alpha * n * nu + (2.0 * alpha - 1.0) * ab;
  const double scale = nu * nu + std::abs(alpha * n * nu) + ab;
  if (std::abs(den) <= 1e-14 * scale) {
    // Report the closer root of the denominator as the offending eigenvalue.
    const double disc = std::sqrt(std::max(0.0, alpha * alpha * n * n - 4.0 * (2.0 * alpha - 1.0) * ab));
    const double r1 = 0.5 * (alpha * n + disc);
    const double r2 = 0.5 * (alpha * n - disc);
    throw PoleError(nu, std::abs(r1 - nu) < std::abs(r2 - nu) ? r1 : r2);
  }
  return (n * nu - alpha * n * n + 2.0 * ab) / den;
}

double coefficient_norm(const RealPolynomial& p) {
  double best = 0.0;
  for (double c : p.coefficients()) best = std::max(best, std::abs(c));
  return best;
}

namespace {

// Sum |c_k| max(1, |x|)^k: the magnitude scale of rounding in p(x).
double evaluation_scale(const RealPolynomial& p, double x) {
  double s = 0.0;
  double xp = 1.0;
  for (double c : p.coefficients()) {
    s += std::abs(c) * xp;
    xp *= std::max(1.0, std::abs(x));
  }
  return s;
}

double newton_polish(const RealPolynomial& p, double x, int iterations) {
  const RealPolynomial dp = p.derivative();
  double best = x;
  double best_res = std::abs(p(x));
  for (int k = 0; k < iterations && best_res > 0.0; ++k) {
    const double d = dp(best);
    if (d == 0.0) break;
    const double cand = best - p(best) / d;
    const double res = std::abs(p(cand));
    if (!(res < best_res)) break;
    best = cand;
    best_res = res;
  }
  return best;
}

std::vector<double> quadratic_roots(const RealPolynomial& p) {
  const double a = p.coefficient(2);
  const double b = p.coefficient(1);
  const double c = p.coefficient(0);
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    // Coefficients built from computed eigenvalues carry their error, so a
    // double root can show up as a slightly negative discriminant.
    const double rounding = 1e-12 * std::max(b * b + 4.0 * std::abs(a * c), a * a);
    const double re = -b / (2.0 * a);
    const double im = std::sqrt(-disc) / (2.0 * std::abs(a));
    if (-disc > rounding && im > 1e-8 * std::max(1.0, std::abs(re)))
      throw NumericInconsistency("quadratic factor has complex roots (imaginary part " +
                                 std::to_string(im) + ")");
    return {re, re};
  }
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
  if (q == 0.0) return {0.0, 0.0};
  return {q / a, c / q};
}

// Parlett-Reinsch diagonal balancing (radix 2).
void balance(Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j)
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

std::vector<std::complex<double>> companion_roots(const RealPolynomial& monic) {
  const int n = monic.degree();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -monic.coefficient(static_cast<std::size_t>(i));
  balance(comp);
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  if (es.info() != Eigen::Success) throw NumericInconsistency("companion eigensolver did not converge");
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

std::vector<double> higher_degree_roots(const RealPolynomial& p) {
  const RealPolynomial monic = p.monic();
  auto z = companion_roots(monic);
  std::sort(z.begin(), z.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  // Single-linkage groups of nearby roots: candidates for a multiple root,
  // which the companion matrix splits into a small ring.
  std::vector<std::vector<std::complex<double>>> groups;
  for (const auto& r : z) {
    bool placed = false;
    for (auto& g : groups) {
      for (const auto& s : g)
        if (std::abs(r - s) <= 1e-3 * std::max(1.0, std::abs(s))) {
          g.push_back(r);
          placed = true;
          break;
        }
      if (placed) break;
    }
    if (!placed) groups.push_back({r});
  }

  std::vector<double> roots;
  for (const auto& g : groups) {
    const std::size_t k = g.size();
    std::complex<double> mean{0.0, 0.0};
    for (const auto& r : g) mean += r;
    mean /= static_cast<double>(k);

    if (k > 1) {
      // Newton on the (k-1)-th derivative pins a k-fold root to full precision.
      RealPolynomial dk = monic;
      for (std::size_t d = 1; d < k; ++d) dk = dk.derivative();
      const double x = newton_polish(dk, mean.real(), 8);
      if (std::abs(monic(x)) <= 1e-12 * evaluation_scale(monic, x) &&
          std::abs(mean.imag()) <= 1e-8 * std::max(1.0, std::abs(x))) {
        roots.insert(roots.end(), k, x);
        continue;
      }
    }
    for (const auto& r : g) {
      if (std::abs(r.imag()) > 1e-8 * std::max(1.0, std::abs(r.real())))
        throw NumericInconsistency("polynomial root " + std::to_string(r.real()) + (r.imag() < 0 ? "" : "+") +
                                   std::to_string(r.imag()) + "i is not real");
      roots.push_back(newton_polish(monic, r.real(), 3));
    }
  }
  return roots;
}

}  // namespace

std::vector<double> real_roots(const RealPolynomial& p) {
  const int deg = p.degree();
  if (deg < 1 || deg > 4)
    throw ContractViolation("real_roots: degree must be 1..4, got " + std::to_string(deg));
  std::vector<double> roots;
  if (deg == 1)
    roots = {-p.coefficient(0) / p.coefficient(1)};
  else if (deg == 2)
    roots = quadratic_roots(p);
  else
    roots = higher_degree_roots(p);

  for (double r : roots)
    if (std::abs(p(r)) > 1e-7 * evaluation_scale(p, r))
      throw NumericInconsistency("root " + std::to_string(r) + " fails the residual check");
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

namespace {

double relative_gap(double lhs, double rhs, double floor_scale) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), floor_scale});
  return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

// Product of row 2-norms; |det| never exceeds it.
double hadamard_bound(const RealMatrix& m) {
  double h = 1.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (double x : m.row(i)) s += x * x;
    h *= std::sqrt(s);
  }
  return h;
}

}  // namespace

RankOneIdentities rank_one_identities_check(const RealMatrix& m, double b, double c, double nu) {
  if (!m.square() || m.rows() == 0) throw ContractViolation("rank-one identities need a nonempty square matrix");
  constexpr double tol = 1e-8;
  const std::size_t n = m.rows();
  const RealMatrix jn = RealMatrix::ones(n, n);
  RankOneIdentities out;

  {
    const RealMatrix updated = m + jn * b;
    const double lhs = determinant(updated);
    const RealMatrix adj = adjugate(m);
    double ones_adj = 0.0;
    for (double x : adj.data()) ones_adj += x;
    const double rhs = determinant(m) + b * ones_adj;
    const double floor = 1e-10 * std::max(hadamard_bound(updated), hadamard_bound(m));
    out.determinant_update.deviation = relative_gap(lhs, rhs, floor);
    out.determinant_update.holds = out.determinant_update.deviation <= tol;
  }
  {
    const RealMatrix shifted = shifted_negated(m, nu);
    double cor = 0.0;
    try {
      cor = coronal_general(m, nu);
    } catch (const PoleError&) {
      throw PreconditionError("coronal identity: nu I - M is singular");
    }
    const double lhs = determinant(shifted - jn * b);
    const double rhs = (1.0 - b * cor) * determinant(shifted);
    const double floor = 1e-10 * hadamard_bound(shifted);
    out.coronal_determinant.deviation = relative_gap(lhs, rhs, floor);
    out.coronal_determinant.holds = out.coronal_determinant.deviation <= tol;
  }
  {
    const double nd = static_cast<double>(n);
    if (b == 0.0 || b - nd * c == 0.0) throw PreconditionError("inverse formula: bI - cJ is singular");
    RealMatrix target = RealMatrix::identity(n) * b - jn * c;
    const RealMatrix inv = inverse(target);
    const RealMatrix formula = RealMatrix::identity(n) * (1.0 / b) + jn * (c / (b * (b - nd * c)));
    double dev = 0.0;
    double scale = 0.0;
    for (std::size_t k = 0; k < inv.data().size(); ++k) {
      dev = std::max(dev, std::abs(inv.data()[k] - formula.data()[k]));
      scale = std::max(scale, std::abs(formula.data()[k]));
    }
    out.inverse_formula.deviation = dev / std::max(scale, 1e-300);
    out.inverse_formula.holds = out.inverse_formula.deviation <= tol;
  }
  return out;
}

}  // namespace ajoin
