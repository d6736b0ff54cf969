#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace prodstruct {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v,
/// sorted and deduplicated.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws MalformedInput on self-loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool adjacent(int u, int v) const;

  std::map<int, std::string> labels;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

bool operator==(const Graph& a, const Graph& b);

struct Layering {
  std::vector<std::vector<int>> layers;
  std::vector<int> layer_of;

  static Layering from_layer_of(const std::vector<int>& layer_of);
  /// Throws MalformedInput if a vertex is missing or repeated.
  static Layering from_layers(int n, const std::vector<std::vector<int>>& layers);
};

/// A vertex partition. Parts are indexed by part id; a part may be empty
/// (empty parts do not become quotient vertices).
struct HPartition {
  std::vector<std::vector<int>> parts;
  std::vector<int> part_of;

  static HPartition from_part_of(const std::vector<int>& part_of, int num_parts = -1);
  /// Throws MalformedInput on overlapping or non-covering parts.
  static HPartition from_parts(int n, const std::vector<std::vector<int>>& parts);
  static HPartition singletons(int n);
  int num_parts() const { return static_cast<int>(parts.size()); }
};

struct Quotient {
  Graph h;
  std::vector<int> vertex_of_part;  ///< -1 for empty parts
  std::vector<int> part_of_vertex;
};

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<Edge> tree_edges;
  int root = -1;

  int num_nodes() const { return static_cast<int>(bags.size()); }
  int width() const;
  int max_bag() const;
};

struct TDValidation {
  bool valid = false;
  int width = -1;
  std::vector<std::string> violations;
};

/// Edges whose endpoints lie in layers two or more apart.
std::vector<Edge> validate_layering(const Graph& g, const Layering& l);

/// max |S_x ∩ L_i ∩ count_only| over parts and layers.
int layered_width(const HPartition& p, const Layering& l,
                  const std::vector<bool>* count_only = nullptr);

Quotient quotient(const Graph& g, const HPartition& p);

TDValidation validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// (part id, layer index, copy index) per vertex.
using ProductCoord = std::array<int, 3>;
std::vector<ProductCoord> embed_into_product(const Graph& g, const HPartition& p,
                                             const Layering& l);
/// Edges of g that do not land on an edge of H ⊠ P ⊠ K_ell under emb.
std::vector<Edge> check_product_embedding(const Graph& g, const HPartition& p,
                                          const std::vector<ProductCoord>& emb, int ell);

// small helpers shared across modules
std::vector<int> bfs_distances(const Graph& g, int src);
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Graph on the given vertices (renumbered in the given order).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph graph_union(const Graph& a, const Graph& b);

}  // namespace prodstruct
