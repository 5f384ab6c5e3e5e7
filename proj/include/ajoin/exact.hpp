#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ajoin/graph.hpp"
#include "ajoin/matrix.hpp"
#include "ajoin/polynomial.hpp"

namespace ajoin {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;
using RationalMatrix = Matrix<Rational>;
using RationalPolynomial = Polynomial<Rational>;

/// Parses "1/3", "-2", "0.25" (finite decimals become exact fractions).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

RationalMatrix to_rational(const IntMatrix& m);

/// alpha D(g) + (1 - alpha) A(g) over the rationals. alpha must lie in [0, 1].
RationalMatrix alpha_matrix_exact(const Graph& g, const Rational& alpha);

/// Monic det(nu I - m) by the Faddeev-LeVerrier recurrence.
RationalPolynomial charpoly_exact(const RationalMatrix& m);

RealPolynomial to_real(const RationalPolynomial& p);

}  // namespace ajoin
