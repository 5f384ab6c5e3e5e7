#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ajoin/matrix.hpp"

namespace ajoin {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph. Edges are stored as (i, j) with i < j, sorted and
/// unique, so equal graphs have identical edge vectors and serializations.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidInput on self-loops or out-of-range endpoints. Edge
  /// orientation and duplicates are normalized away.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Common degree when every vertex has the same degree, otherwise empty.
using Regularity = std::optional<std::size_t>;

enum class JoinKind { QVertex, QEdge, TVertex, TEdge };

inline constexpr JoinKind kAllJoinKinds[] = {JoinKind::QVertex, JoinKind::QEdge, JoinKind::TVertex,
                                            JoinKind::TEdge};

std::string_view to_string(JoinKind kind);
/// Accepts "qvertex", "qedge", "tvertex", "tedge" (case-insensitive).
JoinKind parse_join_kind(std::string_view name);

inline bool is_vertex_join(JoinKind k) { return k == JoinKind::QVertex || k == JoinKind::TVertex; }
inline bool is_total_join(JoinKind k) { return k == JoinKind::TVertex || k == JoinKind::TEdge; }

// ---- standard families ----

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph empty_graph(std::size_t n);
Graph petersen_graph();
/// Circulant graph on Z_n with the given jump set; always regular.
Graph circulant_graph(std::size_t n, const std::vector<std::size_t>& jumps);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Builds a family by name: path, cycle, complete, complete_bipartite
/// (alias cbipartite), empty, petersen. Throws InvalidParameter on bad sizes.
Graph build_family(std::string_view family, const std::vector<long>& params);

/// Parses descriptors such as "complete:4", "cbipartite:2,3", "petersen".
Graph parse_family_descriptor(std::string_view descriptor);

// ---- degree data ----

std::vector<std::size_t> degrees(const Graph& g);
Regularity regularity(const Graph& g);

/// Part sizes (a, b) with a <= b when g is K_{a,b} with a, b >= 1.
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g);

// ---- matrices ----

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix degree_matrix(const Graph& g);
/// n x m vertex-edge incidence, column j = j-th canonical edge.
IntMatrix incidence_matrix(const Graph& g);

// ---- derived graphs ----

Graph line_graph(const Graph& g);
/// Vertices V(g) then one inserted vertex per edge in canonical edge order.
Graph q_graph(const Graph& g);
Graph total_graph(const Graph& g);

/// Number of unordered pairs of distinct edges sharing an endpoint.
std::size_t incident_edge_pairs(const Graph& g);

/// Q/T vertex- or edge-join. Vertex blocks are V(g1), I(g1), V(g2).
/// Throws InvalidInput when g1 has no edges.
Graph join(JoinKind kind, const Graph& g1, const Graph& g2);

// ---- edge-list text format ----

/// "n m" then m lines "i j" with i < j in canonical order.
void write_edge_list(std::ostream& os, const Graph& g);
std::string to_edge_list(const Graph& g);
/// Throws InvalidInput on malformed text.
Graph read_edge_list(std::istream& is);
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::string& path);

}  // namespace ajoin
