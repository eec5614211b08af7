#include "pcl/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace pcl {

Graph::Graph(int n, std::vector<Edge> e) : n_vertices(n), edges(std::move(e)) {
  if (n < 0) throw error("graph needs a nonnegative vertex count");
  for (const auto& [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw error("graph edge endpoint out of range");
    if (a == b) throw error("graph edges may not be loops");
  }
  std::sort(edges.begin(), edges.end());
}

std::string Graph::str() const {
  std::ostringstream os;
  os << n_vertices << ";";
  for (size_t i = 0; i < edges.size(); ++i) {
    os << (i ? "," : "") << " " << edges[i].first << "->" << edges[i].second;
  }
  return os.str();
}

Graph parse_graph(const std::string& s) {
  auto semi = s.find(';');
  if (semi == std::string::npos) throw error("graph syntax: missing ';'");
  int n;
  try {
    size_t pos;
    n = std::stoi(s.substr(0, semi), &pos);
    while (pos < semi && std::isspace((unsigned char)s[pos])) ++pos;
    if (pos != semi) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw error("graph syntax: bad vertex count in '" + s + "'");
  }
  std::vector<Edge> edges;
  std::string rest = s.substr(semi + 1);
  std::istringstream is(rest);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    // Trim whitespace.
    auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) {
      if (edges.empty() && is.eof()) break;  // "n;" with trailing space
      throw error("graph syntax: empty edge in '" + s + "'");
    }
    auto e = tok.find_last_not_of(" \t");
    tok = tok.substr(b, e - b + 1);
    auto arrow = tok.find("->");
    if (arrow == std::string::npos)
      throw error("graph syntax: edge '" + tok + "' lacks '->'");
    try {
      int tail = std::stoi(tok.substr(0, arrow));
      int head = std::stoi(tok.substr(arrow + 2));
      edges.emplace_back(tail, head);
    } catch (const std::exception&) {
      throw error("graph syntax: bad edge '" + tok + "'");
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false if already joined.
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool is_acyclic(const Graph& g) {
  UnionFind uf(g.n_vertices);
  for (const auto& [a, b] : g.edges)
    if (!uf.join(a - 1, b - 1)) return false;
  return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  UnionFind uf(g.n_vertices);
  for (const auto& [a, b] : g.edges) uf.join(a - 1, b - 1);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < g.n_vertices; ++v) groups[uf.find(v)].push_back(v + 1);
  std::vector<std::vector<int>> comps;
  for (auto& [root, vs] : groups) comps.push_back(std::move(vs));
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return comps;
}

Cocomposition cocompose(const Graph& g, const std::vector<int>& m) {
  int n = (int)m.size();
  std::vector<int> offset(n + 1, 0);  // offset[k] = m_1 + ... + m_k
  for (int k = 0; k < n; ++k) {
    if (m[k] < 0) throw error("cocomposition: negative group size");
    offset[k + 1] = offset[k] + m[k];
  }
  if (offset[n] != g.n_vertices)
    throw error("cocomposition: group sizes do not sum to the vertex count");
  // group_of[v-1] = 1-based group of vertex v.
  std::vector<int> group_of(g.n_vertices);
  for (int k = 1; k <= n; ++k)
    for (int v = offset[k - 1] + 1; v <= offset[k]; ++v) group_of[v - 1] = k;

  struct RawEdge {
    Edge e;
    int source;  // index into g.edges
  };
  std::vector<RawEdge> outer_raw;
  std::vector<std::vector<RawEdge>> inner_raw(n);
  for (int idx = 0; idx < (int)g.edges.size(); ++idx) {
    auto [a, b] = g.edges[idx];
    int ga = group_of[a - 1], gb = group_of[b - 1];
    if (ga == gb)
      inner_raw[ga - 1].push_back({{a - offset[ga - 1], b - offset[ga - 1]}, idx});
    else
      outer_raw.push_back({{ga, gb}, idx});
  }

  Cocomposition result;
  result.edge_image.resize(g.edges.size());
  auto build = [&result](int which, int nv, std::vector<RawEdge>& raw) {
    std::stable_sort(raw.begin(), raw.end(),
                     [](const RawEdge& x, const RawEdge& y) { return x.e < y.e; });
    std::vector<Edge> edges;
    for (int i = 0; i < (int)raw.size(); ++i) {
      edges.push_back(raw[i].e);
      result.edge_image[raw[i].source] = {which, i};
    }
    return Graph(nv, std::move(edges));
  };
  result.outer = build(0, n, outer_raw);
  for (int k = 1; k <= n; ++k)
    result.inner.push_back(build(k, m[k - 1], inner_raw[k - 1]));
  return result;
}

std::vector<int> externally_connected(const Graph& g, const std::vector<int>& m,
                                      int k) {
  if (k < 1 || k > g.n_vertices)
    throw error("externally_connected: vertex index out of range");
  Cocomposition co = cocompose(g, m);
  const Graph& outer = co.outer;
  // Group i containing vertex k.
  int offset = 0, group = 0;
  for (int j = 0; j < (int)m.size(); ++j) {
    if (k <= offset + m[j]) {
      group = j + 1;
      break;
    }
    offset += m[j];
  }

  // Outer edge indices that are images of g-edges incident to vertex k.
  std::set<int> first_edges;
  for (int idx = 0; idx < (int)g.edges.size(); ++idx) {
    if (co.edge_image[idx].first != 0) continue;
    if (g.edges[idx].first == k || g.edges[idx].second == k)
      first_edges.insert(co.edge_image[idx].second);
  }

  // Enumerate unoriented edge-simple paths from vertex k whose first edge is
  // in first_edges, collecting every vertex reached after at least one edge.
  std::set<int> reached;
  std::vector<bool> used(outer.edges.size(), false);
  std::vector<std::vector<std::pair<int, int>>> incident(outer.n_vertices + 1);
  for (int i = 0; i < (int)outer.edges.size(); ++i) {
    incident[outer.edges[i].first].push_back({i, outer.edges[i].second});
    incident[outer.edges[i].second].push_back({i, outer.edges[i].first});
  }
  std::function<void(int)> walk = [&](int v) {
    reached.insert(v);
    for (auto [ei, w] : incident[v]) {
      if (used[ei]) continue;
      used[ei] = true;
      walk(w);
      used[ei] = false;
    }
  };
  for (int ei : first_edges) {
    used[ei] = true;
    int other = (outer.edges[ei].first == group) ? outer.edges[ei].second
                                                 : outer.edges[ei].first;
    walk(other);
    used[ei] = false;
  }
  return std::vector<int>(reached.begin(), reached.end());
}

Graph permute_graph(const Graph& g, const std::vector<int>& sigma) {
  if ((int)sigma.size() != g.n_vertices)
    throw error("permutation size does not match the vertex count");
  std::vector<Edge> edges;
  edges.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges)
    edges.emplace_back(sigma[a - 1], sigma[b - 1]);
  return Graph(g.n_vertices, std::move(edges));
}

std::vector<int> induced_component_permutation(const Graph& g,
                                               const std::vector<int>& sigma) {
  Graph pg = permute_graph(g, sigma);
  auto src = connected_components(g);
  auto dst = connected_components(pg);
  // comp_of_dst[v-1] = index (1-based) of the component of pg containing v.
  std::vector<int> comp_of_dst(g.n_vertices, 0);
  for (int j = 0; j < (int)dst.size(); ++j)
    for (int v : dst[j]) comp_of_dst[v - 1] = j + 1;
  // sigma~ with sigma(component sigma~(k) of g) = component k of pg.
  std::vector<int> tilde(src.size(), 0);
  for (int j = 0; j < (int)src.size(); ++j) {
    int image = sigma[src[j][0] - 1];
    int k = comp_of_dst[image - 1];
    tilde[k - 1] = j + 1;
  }
  return tilde;
}

std::optional<RhoData> rho_permutation(const Graph& g, int k, int m) {
  int n = g.n_vertices - m + 1;
  if (m < 0 || n < 1 || k < 1 || k > n)
    throw error("rho_permutation: invalid insertion position or size");
  std::vector<int> part(n, 1);
  part[k - 1] = m;
  Cocomposition co = cocompose(g, part);
  if (!is_acyclic(co.outer)) return std::nullopt;

  auto g_comps = connected_components(g);
  std::vector<int> g_comp_of(g.n_vertices, 0);
  for (int j = 0; j < (int)g_comps.size(); ++j)
    for (int v : g_comps[j]) g_comp_of[v - 1] = j + 1;

  auto inner_comps = connected_components(co.inner[k - 1]);
  auto outer_comps = connected_components(co.outer);
  RhoData data;
  data.s = (int)inner_comps.size();
  data.t = (int)outer_comps.size();

  std::vector<int> outer_comp_of(n, 0);
  for (int j = 0; j < (int)outer_comps.size(); ++j)
    for (int v : outer_comps[j]) outer_comp_of[v - 1] = j + 1;
  data.q = outer_comp_of[k - 1];

  // Group u != k of the partition is the single g-vertex u (u < k) or
  // u + m - 1 (u > k); group k covers g-vertices k .. k+m-1.
  auto group_vertex = [&](int u) { return u < k ? u : u + m - 1; };

  data.rho.assign(data.s + data.t - 1, 0);
  for (int i = 1; i <= data.s; ++i) {
    int gv = k - 1 + inner_comps[i - 1][0];  // g-vertex of the inner component
    data.rho[i - 1] = g_comp_of[gv - 1];
  }
  for (int j = 1; j <= data.t; ++j) {
    if (j == data.q) continue;
    // Any vertex u != k of this outer component identifies the g-component.
    int u = 0;
    for (int v : outer_comps[j - 1])
      if (v != k) {
        u = v;
        break;
      }
    if (u == 0) throw error("rho_permutation: outer component has no free vertex");
    int arg = (j < data.q) ? data.s + j : data.s - 1 + j;
    data.rho[arg - 1] = g_comp_of[group_vertex(u) - 1];
  }
  return data;
}

std::vector<Graph> enumerate_acyclic(int n) {
  if (n < 1 || n > 5) throw error("enumerate_acyclic supports 1 <= n <= 5");
  // Acyclic multigraphs have no repeated or opposed edges, so they are
  // exactly the orientations of forests on n labeled vertices.
  std::vector<Edge> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> base;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (mask & (1u << i)) base.push_back(pairs[i]);
    Graph undirected(n, base);
    if (!is_acyclic(undirected)) continue;
    for (unsigned flip = 0; flip < (1u << base.size()); ++flip) {
      std::vector<Edge> edges = base;
      for (size_t i = 0; i < base.size(); ++i)
        if (flip & (1u << i)) std::swap(edges[i].first, edges[i].second);
      out.emplace_back(n, std::move(edges));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> oriented_cycles(const Graph& g, int max_len) {
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> out_edges(g.n_vertices + 1);
  for (int i = 0; i < (int)g.edges.size(); ++i)
    out_edges[g.edges[i].first].push_back(i);

  std::vector<int> path;
  std::vector<bool> on_path(g.n_vertices + 1, false);
  std::function<void(int, int)> extend = [&](int start, int v) {
    for (int ei : out_edges[v]) {
      int w = g.edges[ei].second;
      if (w == start) {
        if ((int)path.size() + 1 >= 2) {
          auto cyc = path;
          cyc.push_back(ei);
          cycles.push_back(std::move(cyc));
        }
        continue;
      }
      if (w < start || on_path[w]) continue;
      if ((int)path.size() + 1 >= max_len) continue;
      on_path[w] = true;
      path.push_back(ei);
      extend(start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (int start = 1; start <= g.n_vertices; ++start) {
    if (max_len < 2) break;
    extend(start, start);
  }
  return cycles;
}

std::vector<int> block_permutation(const std::vector<int>& sigma,
                                   const std::vector<std::vector<int>>& taus) {
  int n = (int)sigma.size();
  if ((int)taus.size() != n)
    throw error("block permutation needs one inner permutation per slot");
  std::vector<int> m(n), inv(n);
  for (int k = 1; k <= n; ++k) {
    int img = sigma[k - 1];
    if (img < 1 || img > n) throw error("block permutation: bad outer table");
    inv[img - 1] = k;
    m[k - 1] = (int)taus[k - 1].size();
  }
  // offset[k-1] = total size of the blocks placed before block k by sigma.
  std::vector<int> offset(n, 0);
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j < sigma[k - 1]; ++j) offset[k - 1] += m[inv[j - 1] - 1];
  std::vector<int> out;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= m[k - 1]; ++i)
      out.push_back(taus[k - 1][i - 1] + offset[k - 1]);
  return out;
}

}  // namespace pcl
