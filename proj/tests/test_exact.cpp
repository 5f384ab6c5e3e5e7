#include "doctest.h"

#include "ajoin/errors.hpp"
#include "ajoin/exact.hpp"

using namespace ajoin;

TEST_CASE("charpoly examples") {
  CHECK(charpoly_exact(to_rational(adjacency_matrix(complete_graph(3)))) == RationalPolynomial{-2, -3, 0, 1});
  CHECK(charpoly_exact(RationalMatrix::identity(2)) == RationalPolynomial{1, -2, 1});
  CHECK(charpoly_exact(alpha_matrix_exact(path_graph(2), Rational(1, 2))) == RationalPolynomial{0, -1, 1});
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("1.") == Rational(1));
  CHECK_THROWS_AS(parse_rational(""), InvalidParameter);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidParameter);
  CHECK_THROWS_AS(parse_rational("0.2.5"), InvalidParameter);
}

TEST_CASE("alpha_matrix_exact endpoints") {
  const Graph g = petersen_graph();
  CHECK(alpha_matrix_exact(g, Rational(0)) == to_rational(adjacency_matrix(g)));
  CHECK(alpha_matrix_exact(g, Rational(1)) == to_rational(degree_matrix(g)));
  CHECK_THROWS_AS(alpha_matrix_exact(g, Rational(3, 2)), ContractViolation);
}

TEST_CASE("Lemma 7 holds exactly for regular graphs") {
  for (const Graph& g : {cycle_graph(5), complete_graph(4), petersen_graph()}) {
    const long t = static_cast<long>(*regularity(g));
    const auto lhs = charpoly_exact(to_rational(adjacency_matrix(line_graph(g))));
    const auto rhs = RationalPolynomial::linear_root(Rational(-2)).pow(static_cast<int>(g.size() - g.order())) *
                     charpoly_exact(to_rational(adjacency_matrix(g))).shifted(Rational(t - 2));
    CHECK(lhs == rhs);
  }
}
