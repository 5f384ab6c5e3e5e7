#include "doctest.h"

#include <cmath>

#include "ajoin/alpha_spectra.hpp"
#include "ajoin/cospectral.hpp"
#include "ajoin/errors.hpp"

using namespace ajoin;

TEST_CASE("Shrikhande and rook graphs") {
  const Graph s = shrikhande_graph();
  const Graph r = rook_graph(4);
  CHECK(s.order() == 16);
  CHECK(r.order() == 16);
  CHECK(*regularity(s) == 6);
  CHECK(*regularity(r) == 6);
  CHECK(s.size() == 48);
  CHECK(r.size() == 48);
  CHECK(s != r);
}

TEST_CASE("seed catalog") {
  REQUIRE(seed_names().size() >= 1);
  const SeedPair p = seed_pair("shrikhande-rook");
  CHECK(p.claimed_regularity == 6);
  CHECK_THROWS_AS(seed_pair("nope"), InvalidParameter);
}

TEST_CASE("default alpha grid is fixed") {
  const auto g = default_alpha_grid();
  REQUIRE(g.size() == 8);
  CHECK(g[0] == 0.0);
  CHECK(g[4] == 1.0);
  for (double a : g) CHECK((a >= 0.0 && a <= 1.0));
  CHECK(g == default_alpha_grid());
}

TEST_CASE("a graph is cospectral with itself but not proven distinct") {
  const auto c = verify_cospectral(complete_graph(4), complete_graph(4), default_alpha_grid());
  CHECK(c.cospectral);
  CHECK(c.max_deviation == 0.0);
  CHECK(c.evidence == NonIsomorphismEvidence::Unverified);
}

TEST_CASE("P3 and K3 are not cospectral") {
  const auto c = verify_cospectral(path_graph(3), complete_graph(3), {0.0});
  CHECK_FALSE(c.cospectral);
  CHECK(c.max_deviation == doctest::Approx(1.0));
  CHECK_FALSE(c.reason.empty());
}

TEST_CASE("different orders fail immediately") {
  const auto c = verify_cospectral(path_graph(3), path_graph(4), {0.5});
  CHECK_FALSE(c.cospectral);
  CHECK(std::isinf(c.max_deviation));
}

TEST_CASE("evidence screens") {
  CHECK(nonisomorphism_evidence(path_graph(4), complete_bipartite_graph(1, 3)) ==
        NonIsomorphismEvidence::DegreeSequenceDiffers);
  std::string detail;
  CHECK(nonisomorphism_evidence(shrikhande_graph(), rook_graph(4), &detail) ==
        NonIsomorphismEvidence::LocalStructureDiffers);
  CHECK_FALSE(detail.empty());
  CHECK(nonisomorphism_evidence(petersen_graph(), petersen_graph()) == NonIsomorphismEvidence::Unverified);
}

TEST_CASE("Shrikhande and rook are A_alpha-cospectral") {
  const SeedPair p = seed_pair("shrikhande-rook");
  const auto c = verify_cospectral(p.g_a, p.g_b, default_alpha_grid());
  CHECK(c.cospectral);
  CHECK(c.max_deviation <= 1e-9);
  CHECK(c.evidence == NonIsomorphismEvidence::LocalStructureDiffers);
}

TEST_CASE("family from the Shrikhande/rook seed") {
  const SeedPair p = seed_pair("shrikhande-rook");
  const std::vector<JoinKind> kinds(std::begin(kAllJoinKinds), std::end(kAllJoinKinds));
  const auto family = generate_family(p, path_graph(2), kinds, {0.0, 0.5, 1.0});
  REQUIRE(family.size() == 4);
  for (const auto& m : family) {
    CHECK(m.certificate.g_a.order() == 66);
    CHECK(m.certificate.cospectral);
    CHECK(m.certificate.max_deviation <= 1e-7);
    CHECK(m.certificate.evidence != NonIsomorphismEvidence::Unverified);
  }
  const auto with_empty = generate_family(p, empty_graph(3), {JoinKind::QEdge}, {0.3});
  CHECK(with_empty.front().certificate.cospectral);
}

TEST_CASE("family construction refuses bad seeds") {
  const SeedPair bad{"bad", path_graph(3), complete_graph(3), 2};
  CHECK_THROWS_AS(generate_family(bad, path_graph(2), {JoinKind::QVertex}, {0.5}), PreconditionError);
  const SeedPair not_cospectral{"c", cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3)), 2};
  // C6 and 2K3 share degrees but not spectra.
  CHECK_THROWS_AS(generate_family(not_cospectral, path_graph(2), {JoinKind::QVertex}, {0.0}), PreconditionError);
}

TEST_CASE("coronal agreement") {
  const SeedPair p = seed_pair("shrikhande-rook");
  const auto ok = check_coronal_agreement(p.g_a, p.g_b, {0.0, 0.5}, 10, true);
  CHECK(ok.cospectral);
  CHECK(ok.coronal_equal);
  REQUIRE(ok.exact_equal.has_value());
  CHECK(*ok.exact_equal);

  // K_{1,4} and C4 + K1 are adjacency-cospectral, but their coronals differ.
  const Graph star = complete_bipartite_graph(1, 4);
  const Graph c4k1 = disjoint_union(cycle_graph(4), empty_graph(1));
  const auto bad = check_coronal_agreement(star, c4k1, {0.0}, 10);
  CHECK(bad.cospectral);
  CHECK_FALSE(bad.coronal_equal);
  CHECK_THROWS_AS(generate_coronal_family(cycle_graph(4), star, c4k1, {JoinKind::QVertex}, {0.0}),
                  PreconditionError);

  const auto fam = generate_coronal_family(cycle_graph(4), p.g_a, p.g_b, {JoinKind::TEdge}, {0.25, 0.75});
  REQUIRE(fam.size() == 1);
  CHECK(fam.front().certificate.cospectral);
}
