#include "ajoin/exact.hpp"

#include <cctype>
#include <vector>

#include "ajoin/errors.hpp"

namespace ajoin {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidParameter("empty rational");
  const auto dot = s.find('.');
  Rational q;
  try {
    if (dot == std::string::npos) {
      q = Rational(s, 10);
    } else {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const std::size_t frac = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument(s);
      for (std::size_t i = (digits[0] == '-' || digits[0] == '+') ? 1 : 0; i < digits.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw std::invalid_argument(s);
      if (digits[0] == '+') digits.erase(0, 1);
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      q = Rational(num, den);
    }
  } catch (const std::invalid_argument&) {
    throw InvalidParameter("cannot parse rational '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RationalMatrix alpha_matrix_exact(const Graph& g, const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw ContractViolation("alpha must lie in [0,1]");
  const auto d = degrees(g);
  const Rational beta = 1 - alpha;
  RationalMatrix m(g.order(), g.order());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = alpha * static_cast<long>(d[i]);
  for (auto [u, v] : g.edges()) m(u, v) = m(v, u) = beta;
  return m;
}

RationalPolynomial charpoly_exact(const RationalMatrix& a) {
  if (!a.square()) throw ContractViolation("charpoly_exact: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const RationalMatrix amk = a * mk;
    c[n - k] = -amk.trace() / static_cast<long>(k);
  }
  return RationalPolynomial(std::move(c));
}

RealPolynomial to_real(const RationalPolynomial& p) {
  std::vector<double> c;
  c.reserve(p.coefficients().size());
  for (const auto& q : p.coefficients()) c.push_back(q.get_d());
  return RealPolynomial(std::move(c));
}

}  // namespace ajoin
