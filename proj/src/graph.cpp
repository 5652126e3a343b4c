#include "bitile/graph.hpp"

#include <algorithm>
#include <queue>

#include "bitile/error.hpp"

namespace bitile {

namespace {

// BFS 2-coloring; on an odd cycle returns the cycle as witness text.
struct ColoringResult {
  std::vector<int> color;  // -1 unvisited
  std::vector<int> component;
  int component_count = 0;
};

std::string cycle_witness(const std::vector<int>& parent, int a, int b) {
  // Walk both endpoints of the offending edge up to their common ancestor.
  std::vector<int> pa{a}, pb{b};
  auto depth = [&](int v) {
    int d = 0;
    for (int u = v; parent[u] != u; u = parent[u]) ++d;
    return d;
  };
  int da = depth(a), db = depth(b);
  int x = a, y = b;
  while (da > db) { x = parent[x]; pa.push_back(x); --da; }
  while (db > da) { y = parent[y]; pb.push_back(y); --db; }
  while (x != y) {
    x = parent[x]; pa.push_back(x);
    y = parent[y]; pb.push_back(y);
  }
  std::string out = "odd cycle:";
  for (int v : pa) out += " " + std::to_string(v);
  for (auto it = pb.rbegin(); it != pb.rend(); ++it)
    if (*it != pa.back()) out += " " + std::to_string(*it);
  return out;
}

}  // namespace

TileGraph TileGraph::build(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count < 1)
    throw Error(ErrorCode::InvalidArgument, "pattern needs at least one vertex");
  TileGraph g;
  g.h_ = vertex_count;
  g.adj_.assign(vertex_count, {});
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
      throw Error(ErrorCode::InvalidArgument,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    if (a == b) throw Error(ErrorCode::InvalidArgument, "self loop at " + std::to_string(a));
    if (g.has_edge(a, b)) continue;
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
    g.edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());

  std::vector<int> color(vertex_count, -1), comp(vertex_count, -1), parent(vertex_count);
  int comp_count = 0;
  for (int s = 0; s < vertex_count; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    comp[s] = comp_count;
    parent[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.adj_[v]) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          comp[u] = comp_count;
          parent[u] = v;
          q.push(u);
        } else if (color[u] == color[v]) {
          throw Error(ErrorCode::NotBipartite, cycle_witness(parent, v, u));
        }
      }
    }
    ++comp_count;
  }

  std::vector<ComponentColoring> comps(comp_count);
  for (int v = 0; v < vertex_count; ++v) {
    auto& cc = comps[comp[v]];
    (color[v] == 0 ? cc.u_side : cc.w_side).push_back(v);
  }
  for (auto& cc : comps) {
    if (cc.u_side.size() > cc.w_side.size()) std::swap(cc.u_side, cc.w_side);
    std::sort(cc.u_side.begin(), cc.u_side.end());
    std::sort(cc.w_side.begin(), cc.w_side.end());
  }

  auto degseq = [&](const ComponentColoring& cc) {
    std::vector<int> ds;
    for (int v : cc.u_side) ds.push_back(static_cast<int>(g.adj_[v].size()));
    for (int v : cc.w_side) ds.push_back(static_cast<int>(g.adj_[v].size()));
    std::sort(ds.begin(), ds.end());
    return ds;
  };
  std::stable_sort(comps.begin(), comps.end(),
                   [&](const ComponentColoring& a, const ComponentColoring& b) {
                     if (a.c() != b.c()) return a.c() > b.c();
                     if (a.d() != b.d()) return a.d() > b.d();
                     return degseq(a) < degseq(b);
                   });
  g.components_ = std::move(comps);
  return g;
}

bool TileGraph::has_edge(int a, int b) const {
  for (int u : adj_[a])
    if (u == b) return true;
  return false;
}

std::vector<int> TileGraph::component_sizes() const {
  std::vector<int> out;
  for (const auto& c : components_) out.push_back(c.c());
  return out;
}

std::vector<int> TileGraph::component_imbalances() const {
  std::vector<int> out;
  for (const auto& c : components_) out.push_back(c.d());
  return out;
}

HostGraph HostGraph::build(int side_size, const std::vector<Edge>& edges) {
  if (side_size < 1) throw Error(ErrorCode::Unbalanced, "side size must be positive");
  HostGraph g;
  g.n_ = side_size;
  g.adj_x_.assign(side_size, Bitset(side_size));
  g.adj_y_.assign(side_size, Bitset(side_size));
  for (auto [x, y] : edges) {
    if (x < 0 || y < 0 || x >= side_size || y >= side_size)
      throw Error(ErrorCode::EdgeWithinSide,
                  "edge (" + std::to_string(x) + "," + std::to_string(y) +
                      ") outside X x Y for n=" + std::to_string(side_size));
    if (g.adj_x_[x].test(y)) continue;
    g.adj_x_[x].set(y);
    g.adj_y_[y].set(x);
    ++g.edge_count_;
  }
  g.min_degree_ = side_size;
  for (int x = 0; x < side_size; ++x)
    g.min_degree_ = std::min(g.min_degree_, g.degree_x(x));
  for (int y = 0; y < side_size; ++y)
    g.min_degree_ = std::min(g.min_degree_, g.degree_y(y));
  return g;
}

long long HostGraph::edges_between(const std::vector<int>& xs, const std::vector<int>& ys) const {
  Bitset ymask(n_);
  for (int y : ys) ymask.set(y);
  long long total = 0;
  for (int x : xs) total += static_cast<long long>((adj_x_[x] & ymask).count());
  return total;
}

Rational HostGraph::density(const std::vector<int>& xs, const std::vector<int>& ys) const {
  if (xs.empty() || ys.empty())
    throw Error(ErrorCode::EmptySubset, "density requires nonempty subsets");
  return Rational(edges_between(xs, ys),
                  static_cast<std::int64_t>(xs.size()) * static_cast<std::int64_t>(ys.size()));
}

Rational HostGraph::density() const {
  if (edge_count_ == 0) return Rational(0);
  return Rational(edge_count_, static_cast<std::int64_t>(n_) * n_);
}

HostGraph HostGraph::with_edges(const std::vector<Edge>& extra) const {
  std::vector<Edge> all = edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return build(n_, all);
}

std::vector<Edge> HostGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int x = 0; x < n_; ++x)
    for (auto y = adj_x_[x].find_first(); y != Bitset::npos; y = adj_x_[x].find_next(y))
      out.emplace_back(x, static_cast<int>(y));
  return out;
}

}  // namespace bitile
