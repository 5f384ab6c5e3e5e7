#include "ajoin/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ajoin/errors.hpp"

namespace ajoin {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (u >= n_ || v >= n_)
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for n=" + std::to_string(n_));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::string_view to_string(JoinKind kind) {
  switch (kind) {
    case JoinKind::QVertex: return "qvertex";
    case JoinKind::QEdge: return "qedge";
    case JoinKind::TVertex: return "tvertex";
    case JoinKind::TEdge: return "tedge";
  }
  return "?";
}

JoinKind parse_join_kind(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  std::erase(s, '-');
  std::erase(s, '_');
  for (JoinKind k : kAllJoinKinds)
    if (s == to_string(k)) return k;
  throw InvalidParameter("unknown join kind '" + std::string(name) + "'");
}

Graph path_graph(std::size_t n) {
  if (n == 0) throw InvalidParameter("path needs n >= 1");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidParameter("cycle needs n >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw InvalidParameter("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw InvalidParameter("complete bipartite needs a, b >= 1");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

Graph empty_graph(std::size_t n) {
  if (n == 0) throw InvalidParameter("empty graph needs n >= 1");
  return Graph(n, {});
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    e.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, std::move(e));
}

Graph circulant_graph(std::size_t n, const std::vector<std::size_t>& jumps) {
  if (n == 0) throw InvalidParameter("circulant needs n >= 1");
  std::vector<Edge> e;
  for (std::size_t j : jumps) {
    const std::size_t s = j % n;
    if (s == 0) throw InvalidParameter("circulant jump must be nonzero mod n");
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + s) % n);
  }
  return Graph(n, std::move(e));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), std::move(e));
}

namespace {

std::size_t positive_param(const std::vector<long>& p, std::size_t idx, std::string_view family) {
  if (idx >= p.size())
    throw InvalidParameter(std::string(family) + ": missing parameter " + std::to_string(idx + 1));
  if (p[idx] <= 0)
    throw InvalidParameter(std::string(family) + ": parameters must be positive");
  return static_cast<std::size_t>(p[idx]);
}

void expect_count(const std::vector<long>& p, std::size_t count, std::string_view family) {
  if (p.size() != count)
    throw InvalidParameter(std::string(family) + " takes " + std::to_string(count) +
                           " parameter(s), got " + std::to_string(p.size()));
}

}  // namespace

Graph build_family(std::string_view family, const std::vector<long>& params) {
  if (family == "path") {
    expect_count(params, 1, family);
    return path_graph(positive_param(params, 0, family));
  }
  if (family == "cycle") {
    expect_count(params, 1, family);
    return cycle_graph(positive_param(params, 0, family));
  }
  if (family == "complete") {
    expect_count(params, 1, family);
    return complete_graph(positive_param(params, 0, family));
  }
  if (family == "complete_bipartite" || family == "cbipartite") {
    expect_count(params, 2, family);
    return complete_bipartite_graph(positive_param(params, 0, family),
                                    positive_param(params, 1, family));
  }
  if (family == "empty") {
    expect_count(params, 1, family);
    return empty_graph(positive_param(params, 0, family));
  }
  if (family == "petersen") {
    expect_count(params, 0, family);
    return petersen_graph();
  }
  throw InvalidParameter("unknown graph family '" + std::string(family) + "'");
}

Graph parse_family_descriptor(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  const std::string_view name = descriptor.substr(0, colon);
  std::vector<long> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = descriptor.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      long v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InvalidParameter("bad parameter '" + std::string(tok) + "' in '" +
                               std::string(descriptor) + "'");
      params.push_back(v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return build_family(name, params);
}

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> d(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    ++d[u];
    ++d[v];
  }
  return d;
}

Regularity regularity(const Graph& g) {
  const auto d = degrees(g);
  if (d.empty()) return std::nullopt;
  if (std::all_of(d.begin(), d.end(), [&](std::size_t x) { return x == d.front(); }))
    return d.front();
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.size() == 0) return std::nullopt;
  // Every vertex of K_{a,b} is adjacent to exactly the other side, so the
  // side of vertex 0 is its non-neighbourhood.
  std::vector<bool> side(n, false);
  std::size_t a = 0;
  for (Vertex v = 0; v < n; ++v) {
    side[v] = v == 0 || !g.has_edge(0, v);
    if (side[v]) ++a;
  }
  const std::size_t b = n - a;
  if (b == 0 || g.size() != a * b) return std::nullopt;
  for (auto [u, v] : g.edges())
    if (side[u] == side[v]) return std::nullopt;
  return std::pair{std::min(a, b), std::max(a, b)};
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order(), g.order());
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

IntMatrix degree_matrix(const Graph& g) {
  const auto d = degrees(g);
  IntMatrix m(g.order(), g.order());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = static_cast<long>(d[i]);
  return m;
}

IntMatrix incidence_matrix(const Graph& g) {
  IntMatrix r(g.order(), g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    r(g.edges()[j].first, j) = 1;
    r(g.edges()[j].second, j) = 1;
  }
  return r;
}

namespace {

// Pairs (p, q), p < q, of edge indices whose edges share an endpoint.
std::vector<Edge> incident_pairs(const Graph& g) {
  std::vector<std::vector<std::size_t>> at(g.order());
  for (std::size_t k = 0; k < g.size(); ++k) {
    at[g.edges()[k].first].push_back(k);
    at[g.edges()[k].second].push_back(k);
  }
  std::vector<Edge> out;
  for (const auto& list : at)
    for (std::size_t x = 0; x < list.size(); ++x)
      for (std::size_t y = x + 1; y < list.size(); ++y) out.emplace_back(list[x], list[y]);
  // Two distinct simple edges share at most one endpoint, so no duplicates.
  std::sort(out.begin(), out.end());
  return out;
}

Graph subdivided(const Graph& g, bool keep_original) {
  const std::size_t n = g.order();
  std::vector<Edge> e;
  if (keep_original) e = g.edges();
  for (std::size_t k = 0; k < g.size(); ++k) {
    e.emplace_back(g.edges()[k].first, n + k);
    e.emplace_back(g.edges()[k].second, n + k);
  }
  for (auto [p, q] : incident_pairs(g)) e.emplace_back(n + p, n + q);
  return Graph(n + g.size(), std::move(e));
}

}  // namespace

std::size_t incident_edge_pairs(const Graph& g) { return incident_pairs(g).size(); }

Graph line_graph(const Graph& g) { return Graph(g.size(), incident_pairs(g)); }

Graph q_graph(const Graph& g) { return subdivided(g, false); }

Graph total_graph(const Graph& g) { return subdivided(g, true); }

Graph join(JoinKind kind, const Graph& g1, const Graph& g2) {
  if (g1.size() == 0) throw InvalidInput("join: G1 must have at least one edge");
  const Graph base = is_total_join(kind) ? total_graph(g1) : q_graph(g1);
  const std::size_t n1 = g1.order();
  const std::size_t m1 = g1.size();
  const std::size_t off = n1 + m1;

  std::vector<Edge> e = base.edges();
  for (auto [u, v] : g2.edges()) e.emplace_back(off + u, off + v);
  const std::size_t first = is_vertex_join(kind) ? 0 : n1;
  const std::size_t count = is_vertex_join(kind) ? n1 : m1;
  for (std::size_t s = first; s < first + count; ++s)
    for (std::size_t w = 0; w < g2.order(); ++w) e.emplace_back(s, off + w);
  return Graph(off + g2.order(), std::move(e));
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

Graph read_edge_list(std::istream& is) {
  long n = -1;
  long m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) throw InvalidInput("edge list: bad header, expected 'n m'");
  std::vector<Edge> e;
  e.reserve(static_cast<std::size_t>(m));
  for (long k = 0; k < m; ++k) {
    long i = -1;
    long j = -1;
    if (!(is >> i >> j)) throw InvalidInput("edge list: expected " + std::to_string(m) + " edges");
    if (i < 0 || j < 0) throw InvalidInput("edge list: negative vertex index");
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  std::string trailing;
  if (is >> trailing) throw InvalidInput("edge list: trailing content '" + trailing + "'");
  Graph g(static_cast<std::size_t>(n), std::move(e));
  if (g.size() != static_cast<std::size_t>(m)) throw InvalidInput("edge list: duplicate edges");
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_edge_list(is);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

}  // namespace ajoin
