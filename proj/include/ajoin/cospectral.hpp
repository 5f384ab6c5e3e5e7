#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ajoin/graph.hpp"

namespace ajoin {

Graph shrikhande_graph();
/// K_k box K_k, i.e. the line graph of K_{k,k}.
Graph rook_graph(std::size_t k = 4);

struct SeedPair {
  std::string name;
  Graph g_a;
  Graph g_b;
  std::size_t claimed_regularity = 0;
};

std::vector<std::string> seed_names();
/// Throws InvalidParameter for unknown names.
SeedPair seed_pair(std::string_view name);

enum class NonIsomorphismEvidence { DegreeSequenceDiffers, LocalStructureDiffers, Unverified };
std::string_view to_string(NonIsomorphismEvidence e);

/// Cheap structural screen: degree sequences first, then the multiset of
/// per-vertex spectra of the induced neighbourhood and distance-2 shell.
/// Unverified means no difference was found (the graphs may be isomorphic).
NonIsomorphismEvidence nonisomorphism_evidence(const Graph& a, const Graph& b, std::string* detail = nullptr);

/// {0, 0.25, 0.5, 0.75, 1} plus `random_draws` uniform values from a fixed
/// mt19937_64 stream, so the grid is the same on every platform.
std::vector<double> default_alpha_grid(std::size_t random_draws = 3, std::uint64_t seed = 20240531);

struct CospectralCertificate {
  Graph g_a;
  Graph g_b;
  std::vector<double> alphas;
  std::vector<double> deviations;  ///< one per alpha; +inf when dimensions differ
  double max_deviation = 0.0;
  double tol = 1e-7;
  bool cospectral = false;
  NonIsomorphismEvidence evidence = NonIsomorphismEvidence::Unverified;
  std::string evidence_detail;
  std::string reason;  ///< set when cospectral is false
};

/// Compares oracle A_alpha spectra for every alpha. Graphs of different
/// order give a false certificate immediately.
CospectralCertificate verify_cospectral(const Graph& a, const Graph& b, const std::vector<double>& alphas,
                                        double tol = 1e-7);

struct FamilyMember {
  JoinKind kind;
  CospectralCertificate certificate;
};

/// join(kind, g_a, h) vs join(kind, g_b, h) for each kind. Refuses with
/// PreconditionError if the seed is not regular of equal order, size and
/// regularity, or is not cospectral over `alphas`.
std::vector<FamilyMember> generate_family(const SeedPair& seed, const Graph& h, const std::vector<JoinKind>& kinds,
                                          const std::vector<double>& alphas, double tol = 1e-7);

struct CoronalAgreement {
  bool cospectral = false;
  bool coronal_equal = false;
  double max_spectral_deviation = 0.0;
  double max_coronal_deviation = 0.0;  ///< relative
  std::optional<bool> exact_equal;     ///< set only when the exact check was requested
  std::string reason;
};

/// Precondition of the second family construction: h1 and h2 A_alpha-cospectral
/// with equal coronals, checked at `samples` random nu per alpha. With
/// `exact`, also compares charpoly(A_alpha) and charpoly(A_alpha + J) over
/// the rationals at the exact binary value of each alpha.
CoronalAgreement check_coronal_agreement(const Graph& h1, const Graph& h2, const std::vector<double>& alphas,
                                         std::size_t samples = 20, bool exact = false, double tol = 1e-7);

/// join(kind, g, h1) vs join(kind, g, h2) for a regular g. Refuses with
/// PreconditionError when check_coronal_agreement fails.
std::vector<FamilyMember> generate_coronal_family(const Graph& g, const Graph& h1, const Graph& h2,
                                                  const std::vector<JoinKind>& kinds,
                                                  const std::vector<double>& alphas, double tol = 1e-7);

}  // namespace ajoin
