#pragma once

// Directed multigraphs without self-loops or orientation-reversed duplicates
// of the same arrow being distinguished: edges are ordered pairs (tail, head)
// of distinct 1-based vertices, kept as a sorted multiset. Provides the
// cocomposition of a graph along a partition of its vertices, external
// connectedness, relabeling by permutations, the induced permutation of
// connected components, the component permutation attached to insertion at a
// vertex, enumeration of small acyclic graphs and oriented cycle listing.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcl/rational.hpp"

namespace pcl {

using Edge = std::pair<int, int>;  // (tail, head), 1-based, tail != head

struct Graph {
  int n_vertices = 0;
  std::vector<Edge> edges;  // sorted multiset

  Graph() = default;
  Graph(int n, std::vector<Edge> e);

  int n_edges() const { return (int)edges.size(); }
  bool operator==(const Graph& o) const {
    return n_vertices == o.n_vertices && edges == o.edges;
  }
  bool operator<(const Graph& o) const {
    if (n_vertices != o.n_vertices) return n_vertices < o.n_vertices;
    return edges < o.edges;
  }
  std::string str() const;  // "n; i->j, i->j, ..."
};

Graph parse_graph(const std::string& s);

// Acyclic as an undirected multigraph (a double edge counts as a cycle).
bool is_acyclic(const Graph& g);

// Connected components of the underlying undirected graph, each a sorted list
// of vertices, ordered by smallest vertex label.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Cocomposition of g along the partition (m_1, ..., m_n) of its vertices into
// consecutive groups. outer has n vertices (group k collapses to vertex k);
// inner[k-1] is the graph induced on group k, relabeled 1..m_k. Every edge of
// g maps to exactly one edge of outer or of some inner graph.
struct Cocomposition {
  Graph outer;
  std::vector<Graph> inner;
  // For each edge index e of g (in sorted order): (0, idx) if it maps to
  // outer.edges[idx], or (k, idx) if it maps to inner[k-1].edges[idx].
  std::vector<std::pair<int, int>> edge_image;
};

Cocomposition cocompose(const Graph& g, const std::vector<int>& m);

// Groups externally connected to vertex k of g: group labels j such that some
// unoriented edge-simple path in the outer graph starts at the group i
// containing k, with a first edge that is the image of an edge of g incident
// to vertex k, and reaches j. The result is sorted; j = i can occur.
std::vector<int> externally_connected(const Graph& g, const std::vector<int>& m,
                                      int k);

// Relabel vertices i -> sigma(i). sigma is a 1-based image table.
Graph permute_graph(const Graph& g, const std::vector<int>& sigma);

// The permutation sigma~ of 1..s (s = number of components of g) with
// sigma(component sigma~(k) of g) = component k of permute_graph(g, sigma).
std::vector<int> induced_component_permutation(const Graph& g,
                                               const std::vector<int>& sigma);

// Data of the component permutation attached to insertion of an m-vertex
// graph at vertex k of the outer structure of g in G(n+m-1):
// cocompose g along (1,..,1,m,1,..,1) with the m-group at position k. Returns
// nothing if the outer graph of that cocomposition has a cycle.
struct RhoData {
  std::vector<int> rho;  // permutation of 1..s+t-1 (1-based image table)
  int s = 0;             // components of the inner graph at position k
  int t = 0;             // components of the outer graph
  int q = 0;             // outer component containing the collapsed vertex k
};

std::optional<RhoData> rho_permutation(const Graph& g, int k, int m);

// All acyclic graphs on n vertices (n <= 5), deterministically ordered.
std::vector<Graph> enumerate_acyclic(int n);

// Directed simple cycles (head-to-tail) of length in [2, max_len], each as a
// list of edge indices into g.edges in cycle order, starting from the
// smallest vertex on the cycle. Deterministic order.
std::vector<std::vector<int>> oriented_cycles(const Graph& g, int max_len);

// Block composition sigma(tau_1, ..., tau_n) of permutations: sigma in S_n,
// tau_k in S_{m_k}, result in S_{m_1+...+m_n} sending M_{k-1}+i (with
// M_k = m_1+...+m_k) to tau_k(i) + sum of m_{sigma^{-1}(j)} over j < sigma(k).
// All permutations are 1-based image tables.
std::vector<int> block_permutation(const std::vector<int>& sigma,
                                   const std::vector<std::vector<int>>& taus);

}  // namespace pcl
