#include "ajoin/cospectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ajoin/alpha_spectra.hpp"
#include "ajoin/errors.hpp"
#include "ajoin/exact.hpp"
#include "ajoin/random.hpp"

namespace ajoin {

Graph shrikhande_graph() {
  // Cayley graph of Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
  std::vector<Edge> edges;
  auto id = [](std::size_t x, std::size_t y) { return static_cast<Vertex>(4 * (x % 4) + y % 4); };
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      edges.emplace_back(id(x, y), id(x + 1, y));
      edges.emplace_back(id(x, y), id(x, y + 1));
      edges.emplace_back(id(x, y), id(x + 1, y + 1));
    }
  return Graph(16, std::move(edges));
}

Graph rook_graph(std::size_t k) {
  if (k < 1) throw InvalidParameter("rook graph needs k >= 1");
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t s = 0; s < k; ++s) {
        if (s > c) edges.emplace_back(static_cast<Vertex>(r * k + c), static_cast<Vertex>(r * k + s));
        if (s > r) edges.emplace_back(static_cast<Vertex>(r * k + c), static_cast<Vertex>(s * k + c));
      }
  return Graph(k * k, std::move(edges));
}

std::vector<std::string> seed_names() { return {"shrikhande-rook"}; }

SeedPair seed_pair(std::string_view name) {
  if (name == "shrikhande-rook") return {"shrikhande-rook", shrikhande_graph(), rook_graph(4), 6};
  throw InvalidParameter("unknown seed pair '" + std::string(name) + "'");
}

std::string_view to_string(NonIsomorphismEvidence e) {
  switch (e) {
    case NonIsomorphismEvidence::DegreeSequenceDiffers: return "degree-sequence-differs";
    case NonIsomorphismEvidence::LocalStructureDiffers: return "local-structure-differs";
    case NonIsomorphismEvidence::Unverified: return "unverified";
  }
  return "unverified";
}

namespace {

std::vector<std::vector<std::size_t>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<std::size_t>> adj(g.order());
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<double> induced_spectrum(const Graph& g, const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) return {};
  std::vector<long> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<long>(i);
  RealMatrix m(vertices.size(), vertices.size());
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) m(index[u], index[v]) = m(index[v], index[u]) = 1.0;
  auto values = sym_eigenvalue_list(DenseSymMatrix(std::move(m)));
  std::sort(values.begin(), values.end());
  return values;
}

using VertexSignature = std::vector<double>;

// Per vertex: |N(v)|, spectrum of G[N(v)], |S2(v)|, spectrum of G[S2(v)]
// where S2 is the set of vertices at distance exactly 2.
std::vector<VertexSignature> local_signatures(const Graph& g) {
  const auto adj = adjacency_lists(g);
  std::vector<VertexSignature> out;
  out.reserve(g.order());
  std::vector<int> dist(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[v] = 0;
    std::vector<std::size_t> shell1 = adj[v];
    std::vector<std::size_t> shell2;
    for (auto u : shell1) dist[u] = 1;
    for (auto u : shell1)
      for (auto w : adj[u])
        if (dist[w] < 0) {
          dist[w] = 2;
          shell2.push_back(w);
        }
    VertexSignature s;
    s.push_back(static_cast<double>(shell1.size()));
    for (double x : induced_spectrum(g, shell1)) s.push_back(x);
    s.push_back(static_cast<double>(shell2.size()));
    for (double x : induced_spectrum(g, shell2)) s.push_back(x);
    out.push_back(std::move(s));
  }
  return out;
}

// Eigenvalues of small 0/1 matrices are accurate far below this; anything
// closer is treated as equal so rounding noise never counts as evidence.
constexpr double kSignatureTol = 1e-6;

bool signature_less(const VertexSignature& a, const VertexSignature& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kSignatureTol) return a[i] < b[i];
  return false;
}

bool signature_equal(const VertexSignature& a, const VertexSignature& b) {
  return !signature_less(a, b) && !signature_less(b, a);
}

}  // namespace

NonIsomorphismEvidence nonisomorphism_evidence(const Graph& a, const Graph& b, std::string* detail) {
  auto da = degrees(a);
  auto db = degrees(b);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (a.order() != b.order() || a.size() != b.size() || da != db) {
    if (detail) *detail = "sorted degree sequences differ";
    return NonIsomorphismEvidence::DegreeSequenceDiffers;
  }
  auto sa = local_signatures(a);
  auto sb = local_signatures(b);
  std::sort(sa.begin(), sa.end(), signature_less);
  std::sort(sb.begin(), sb.end(), signature_less);
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (!signature_equal(sa[i], sb[i])) {
      if (detail)
        *detail = "multisets of per-vertex neighbourhood / distance-2 shell spectra differ";
      return NonIsomorphismEvidence::LocalStructureDiffers;
    }
  if (detail) *detail = "no structural difference found; graphs may be isomorphic";
  return NonIsomorphismEvidence::Unverified;
}

std::vector<double> default_alpha_grid(std::size_t random_draws, std::uint64_t seed) {
  std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  Rng rng(seed);
  for (std::size_t i = 0; i < random_draws; ++i) grid.push_back(rng.uniform());
  return grid;
}

CospectralCertificate verify_cospectral(const Graph& a, const Graph& b, const std::vector<double>& alphas,
                                        double tol) {
  if (!(tol > 0.0)) throw ContractViolation("verify_cospectral: tol must be positive");
  CospectralCertificate cert;
  cert.g_a = a;
  cert.g_b = b;
  cert.alphas = alphas;
  cert.tol = tol;
  cert.evidence = nonisomorphism_evidence(a, b, &cert.evidence_detail);
  if (a.order() != b.order()) {
    cert.deviations.assign(alphas.size(), std::numeric_limits<double>::infinity());
    cert.max_deviation = std::numeric_limits<double>::infinity();
    cert.reason = "orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order());
    return cert;
  }
  cert.cospectral = true;
  for (double alpha : alphas) {
    const AlphaParam al(alpha);
    const Spectrum sa = sym_eigenvalues(alpha_matrix(a, al));
    const Spectrum sb = sym_eigenvalues(alpha_matrix(b, al));
    const auto cmp = spectra_equal(sa, sb, tol);
    cert.deviations.push_back(cmp.max_deviation);
    cert.max_deviation = std::max(cert.max_deviation, cmp.max_deviation);
    if (!cmp.equal && cert.cospectral) {
      cert.cospectral = false;
      cert.reason = "alpha = " + std::to_string(alpha) + ": " + cmp.reason;
    }
  }
  return cert;
}

namespace {

std::string seed_problem(const SeedPair& seed) {
  const auto ta = regularity(seed.g_a);
  const auto tb = regularity(seed.g_b);
  if (!ta || !tb) return "seed graphs must both be regular";
  if (*ta != *tb || seed.g_a.order() != seed.g_b.order() || seed.g_a.size() != seed.g_b.size())
    return "seed graphs must share order, size and regularity";
  if (*ta != seed.claimed_regularity)
    return "seed regularity " + std::to_string(*ta) + " differs from the claimed " +
           std::to_string(seed.claimed_regularity);
  return {};
}

std::vector<FamilyMember> certify_joins(const Graph& left_a, const Graph& left_b, const Graph& right_a,
                                        const Graph& right_b, const std::vector<JoinKind>& kinds,
                                        const std::vector<double>& alphas, double tol) {
  std::vector<FamilyMember> out;
  for (JoinKind kind : kinds)
    out.push_back({kind, verify_cospectral(join(kind, left_a, right_a), join(kind, left_b, right_b), alphas, tol)});
  return out;
}

}  // namespace

std::vector<FamilyMember> generate_family(const SeedPair& seed, const Graph& h, const std::vector<JoinKind>& kinds,
                                          const std::vector<double>& alphas, double tol) {
  if (auto problem = seed_problem(seed); !problem.empty())
    throw PreconditionError("seed '" + seed.name + "' refused: " + problem);
  const auto seed_cert = verify_cospectral(seed.g_a, seed.g_b, alphas, tol);
  if (!seed_cert.cospectral)
    throw PreconditionError("seed '" + seed.name + "' is not A_alpha-cospectral: " + seed_cert.reason);
  return certify_joins(seed.g_a, seed.g_b, h, h, kinds, alphas, tol);
}

CoronalAgreement check_coronal_agreement(const Graph& h1, const Graph& h2, const std::vector<double>& alphas,
                                         std::size_t samples, bool exact, double tol) {
  CoronalAgreement out;
  const auto cert = verify_cospectral(h1, h2, alphas, tol);
  out.cospectral = cert.cospectral;
  out.max_spectral_deviation = cert.max_deviation;
  if (!cert.cospectral) {
    out.reason = cert.reason;
    return out;
  }
  Rng rng(0x5eed);
  out.coronal_equal = true;
  for (double alpha : alphas) {
    const AlphaParam al(alpha);
    const DenseSymMatrix m1 = alpha_matrix(h1, al);
    const DenseSymMatrix m2 = alpha_matrix(h2, al);
    // Sample outside [-R, R] with R bounding both spectra so nu is never a pole.
    const double radius = std::max(m1.norm_inf(), m2.norm_inf()) + 1.0;
    for (std::size_t k = 0; k < samples; ++k) {
      const double nu = (k % 2 == 0 ? 1.0 : -1.0) * (radius + 10.0 * rng.uniform());
      const double c1 = coronal_numeric(m1, nu);
      const double c2 = coronal_numeric(m2, nu);
      const double dev = std::abs(c1 - c2) / std::max(1.0, std::abs(c1));
      out.max_coronal_deviation = std::max(out.max_coronal_deviation, dev);
      if (dev > tol && out.coronal_equal) {
        out.coronal_equal = false;
        out.reason = "coronals differ at alpha = " + std::to_string(alpha) + ", nu = " + std::to_string(nu);
      }
    }
  }
  if (exact) {
    bool same = true;
    for (double alpha : alphas) {
      const Rational a(alpha);  // exact binary value of the double
      RationalMatrix x1 = alpha_matrix_exact(h1, a);
      RationalMatrix x2 = alpha_matrix_exact(h2, a);
      if (charpoly_exact(x1) != charpoly_exact(x2)) same = false;
      const RationalMatrix ones1 = RationalMatrix::ones(x1.rows(), x1.cols());
      const RationalMatrix ones2 = RationalMatrix::ones(x2.rows(), x2.cols());
      if (charpoly_exact(x1 + ones1) != charpoly_exact(x2 + ones2)) same = false;
    }
    out.exact_equal = same;
    if (!same && out.reason.empty()) out.reason = "exact characteristic polynomials differ";
  }
  return out;
}

std::vector<FamilyMember> generate_coronal_family(const Graph& g, const Graph& h1, const Graph& h2,
                                                  const std::vector<JoinKind>& kinds,
                                                  const std::vector<double>& alphas, double tol) {
  if (!regularity(g)) throw PreconditionError("G must be regular");
  const auto agreement = check_coronal_agreement(h1, h2, alphas, 20, false, tol);
  if (!agreement.cospectral || !agreement.coronal_equal)
    throw PreconditionError("H pair refused: " + agreement.reason);
  return certify_joins(g, g, h1, h2, kinds, alphas, tol);
}

}  // namespace ajoin
