#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "charcol/chain.hpp"
#include "charcol/sparse.hpp"

namespace charcol {

/// Undirected multigraph with loops; edge (u, w) carries <u x Ind(t), w>.
struct McKayGraph {
  struct Edge {
    int u = 0;  // u <= w
    int w = 0;
    Integer weight;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  int n = 0;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;  // sorted by (u, w)

  /// Symmetric adjacency matrix.
  SparseMatrix adjacency() const;
  static McKayGraph from_adjacency(int n, std::vector<std::string> vertices, const SparseMatrix& a);

  friend bool operator==(const McKayGraph&, const McKayGraph&) = default;
};

McKayGraph build_graph(const Chain& chain, int n);
/// Vertices: the plus basis; adjacency: the reduced operator Y.
McKayGraph reduced_graph(const Chain& chain, int n);

/// One node statement per vertex, one edge statement per unordered pair with
/// nonzero weight (loops included), attribute weight=K.
std::string export_dot(const McKayGraph& g);
/// Same schema as the operator dump: {"n","basis","entries"}.
nlohmann::ordered_json export_json(const McKayGraph& g);
McKayGraph graph_from_json(const nlohmann::ordered_json& j);
/// "dot" or "json"; throws UsageError otherwise.
std::string export_graph(const McKayGraph& g, const std::string& format);

}  // namespace charcol
