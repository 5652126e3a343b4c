#include "bitile/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "bitile/error.hpp"

namespace bitile {

namespace {

using Clock = std::chrono::steady_clock;

// ---- component isomorphism grouping ----------------------------------

std::vector<int> sorted_degrees(const TileGraph& h, const ComponentColoring& cc) {
  std::vector<int> ds;
  for (int v : cc.u_side) ds.push_back(static_cast<int>(h.neighbors(v).size()));
  for (int v : cc.w_side) ds.push_back(static_cast<int>(h.neighbors(v).size()));
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Backtracking isomorphism test between two tiny components.
bool components_isomorphic(const TileGraph& h, const ComponentColoring& a,
                           const ComponentColoring& b) {
  if (a.c() != b.c() || a.d() != b.d()) return false;
  if (sorted_degrees(h, a) != sorted_degrees(h, b)) return false;
  std::vector<int> av = a.u_side, bv = b.u_side;
  av.insert(av.end(), a.w_side.begin(), a.w_side.end());
  bv.insert(bv.end(), b.w_side.begin(), b.w_side.end());
  const int k = static_cast<int>(av.size());
  std::vector<int> map(k, -1);
  std::vector<bool> used(k, false);
  auto edge_in = [&](const std::vector<int>& vs, int i, int j) {
    return h.has_edge(vs[i], vs[j]);
  };
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    for (int j = 0; j < k; ++j) {
      if (used[j]) continue;
      bool ok = h.neighbors(av[i]).size() == h.neighbors(bv[j]).size();
      for (int p = 0; ok && p < i; ++p)
        if (edge_in(av, i, p) != edge_in(bv, j, map[p])) ok = false;
      if (!ok) continue;
      map[i] = j;
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
      map[i] = -1;
    }
    return false;
  };
  return dfs(dfs, 0);
}

// BFS order of one component; every non-root vertex has an earlier neighbor.
std::vector<int> bfs_order(const TileGraph& h, const ComponentColoring& cc) {
  std::vector<int> verts = cc.u_side;
  verts.insert(verts.end(), cc.w_side.begin(), cc.w_side.end());
  if (verts.size() == 1) return verts;
  int root = verts[0];
  for (int v : verts)
    if (h.neighbors(v).size() > h.neighbors(root).size()) root = v;
  std::vector<int> order{root};
  std::set<int> seen{root};
  for (size_t i = 0; i < order.size(); ++i) {
    for (int nb : h.neighbors(order[i])) {
      if (seen.insert(nb).second) order.push_back(nb);
    }
  }
  return order;
}

// Enumerates all embeddings of one component into the host for one
// orientation (side_of tells which host side each pattern vertex uses).
void enumerate_component(const HostGraph& g, const TileGraph& h, const std::vector<int>& order,
                         const std::vector<bool>& on_x, ComponentEmbeddings& out,
                         bool swapped_flag, std::set<std::vector<Bitset::block_type>>& seen) {
  const int n = g.n();
  const int k = static_cast<int>(order.size());
  std::vector<int> image(k, -1);
  Bitset used_x(n), used_y(n);

  auto emit = [&]() {
    Bitset mask(2 * n);
    std::vector<int> xs, ys;
    for (int i = 0; i < k; ++i) {
      if (on_x[i]) {
        mask.set(image[i]);
        xs.push_back(image[i]);
      } else {
        mask.set(n + image[i]);
        ys.push_back(image[i]);
      }
    }
    std::vector<Bitset::block_type> key(mask.num_blocks());
    boost::to_block_range(mask, key.begin());
    if (!seen.insert(key).second) return;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    out.masks.push_back(std::move(mask));
    out.swapped.push_back(swapped_flag);
    out.xs.push_back(std::move(xs));
    out.ys.push_back(std::move(ys));
  };

  auto dfs = [&](auto&& self, int i) -> void {
    if (i == k) {
      emit();
      return;
    }
    int pv = order[i];
    // Candidates: common neighborhood of already-placed pattern neighbors.
    Bitset cand;
    bool constrained = false;
    for (int j = 0; j < i; ++j) {
      if (!h.has_edge(pv, order[j])) continue;
      const Bitset& row = on_x[j] ? g.row_x(image[j]) : g.row_y(image[j]);
      if (!constrained) {
        cand = row;
        constrained = true;
      } else {
        cand &= row;
      }
    }
    if (!constrained) {
      cand = Bitset(n);
      cand.set();
    }
    cand -= on_x[i] ? used_x : used_y;
    for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
      image[i] = static_cast<int>(v);
      (on_x[i] ? used_x : used_y).set(v);
      self(self, i + 1);
      (on_x[i] ? used_x : used_y).reset(v);
    }
    image[i] = -1;
  };
  dfs(dfs, 0);
}

// ---- branch and bound -------------------------------------------------

struct SearchShared {
  std::atomic<std::int64_t> nodes{0};
  std::atomic<int> incumbent{-1};
  std::atomic<bool> stop{false};
  std::atomic<bool> out_of_budget{false};
  std::int64_t node_limit = 0;
  Clock::time_point deadline;
  std::mutex best_mutex;
  int best_k = -1;               // guarded by best_mutex
  std::vector<int> best_pieces;  // flattened (class, entry) pairs
};

struct SearchContext {
  const EmbeddingCatalog* catalog = nullptr;
  int n = 0;
  int h_total = 0;
  int target = -1;  // factor mode: required copy count; -1 for max mode
  // Host component structure for the factor-mode reachability prune.
  std::vector<int> host_comp_of;  // global vertex -> host component
  int host_comp_count = 0;
  std::vector<std::vector<bool>> reachable;  // [x_count][y_count]
  SearchShared* shared = nullptr;
};

struct NodeState {
  Bitset free;
  std::vector<int> placed_per_class;
  std::vector<int> pieces;  // (class, entry) pairs, flattened
  std::vector<int> comp_free_x;
  std::vector<int> comp_free_y;
  int used = 0;
};

int tiling_upper_bound(const SearchContext& ctx, const NodeState& st) {
  const auto& classes = ctx.catalog->classes;
  int free_count = static_cast<int>(st.free.count());
  int k = 0;
  for (;;) {
    long long need = 0;
    for (size_t i = 0; i < classes.size(); ++i) {
      long long want = static_cast<long long>(k + 1) * classes[i].multiplicity -
                       st.placed_per_class[i];
      if (want > 0) need += want * (classes[i].u_size + classes[i].w_size);
    }
    if (need > free_count) break;
    ++k;
  }
  return k;
}

bool factor_prune_ok(const SearchContext& ctx, const NodeState& st, int comp) {
  return ctx.reachable[st.comp_free_x[comp]][st.comp_free_y[comp]];
}

void record_if_better(const SearchContext& ctx, const NodeState& st) {
  const auto& classes = ctx.catalog->classes;
  int k = INT32_MAX;
  for (size_t i = 0; i < classes.size(); ++i)
    k = std::min(k, st.placed_per_class[i] / classes[i].multiplicity);
  if (classes.empty()) k = 0;
  if (k <= ctx.shared->incumbent.load(std::memory_order_relaxed)) return;
  std::lock_guard<std::mutex> lock(ctx.shared->best_mutex);
  if (k <= ctx.shared->best_k) return;
  ctx.shared->best_k = k;
  ctx.shared->best_pieces = st.pieces;
  ctx.shared->incumbent.store(k);
}

// Depth-first search branching on the smallest free vertex.
void search(const SearchContext& ctx, NodeState& st) {
  auto* sh = ctx.shared;
  if (sh->stop.load(std::memory_order_relaxed)) return;
  std::int64_t node = sh->nodes.fetch_add(1, std::memory_order_relaxed);
  if (node >= sh->node_limit || (node % 1024 == 0 && Clock::now() > sh->deadline)) {
    sh->out_of_budget.store(true);
    sh->stop.store(true);
    return;
  }

  const bool factor_mode = ctx.target >= 0;
  record_if_better(ctx, st);
  if (factor_mode && sh->incumbent.load() >= ctx.target) {
    sh->stop.store(true);
    return;
  }

  auto v = st.free.find_first();
  if (v == Bitset::npos) return;

  int bound = tiling_upper_bound(ctx, st);
  if (factor_mode) {
    if (bound < ctx.target) return;
  } else if (bound <= sh->incumbent.load()) {
    return;
  }

  const auto& classes = ctx.catalog->classes;
  // Branch 1..m: place a piece covering v.
  for (size_t ci = 0; ci < classes.size(); ++ci) {
    const auto& cls = classes[ci];
    if (factor_mode && st.placed_per_class[ci] >= ctx.target * cls.multiplicity) continue;
    for (size_t e = 0; e < cls.masks.size(); ++e) {
      const Bitset& m = cls.masks[e];
      if (!m.test(v)) continue;
      if (!m.is_subset_of(st.free)) continue;

      st.free -= m;
      ++st.placed_per_class[ci];
      st.used += cls.u_size + cls.w_size;
      st.pieces.push_back(static_cast<int>(ci));
      st.pieces.push_back(static_cast<int>(e));
      int comp = ctx.host_comp_of[v];
      int dx = static_cast<int>(cls.xs[e].size()), dy = static_cast<int>(cls.ys[e].size());
      st.comp_free_x[comp] -= dx;
      st.comp_free_y[comp] -= dy;

      if (!factor_mode || factor_prune_ok(ctx, st, comp)) search(ctx, st);

      st.comp_free_x[comp] += dx;
      st.comp_free_y[comp] += dy;
      st.pieces.pop_back();
      st.pieces.pop_back();
      st.used -= cls.u_size + cls.w_size;
      --st.placed_per_class[ci];
      st.free |= m;
      if (sh->stop.load(std::memory_order_relaxed)) return;
    }
  }

  if (!factor_mode) {
    // Leave v uncovered.
    st.free.reset(v);
    search(ctx, st);
    st.free.set(v);
  }
}

std::vector<int> host_components(const HostGraph& g) {
  const int n = g.n();
  std::vector<int> comp(2 * n, -1);
  int count = 0;
  for (int s = 0; s < 2 * n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      const Bitset& row = v < n ? g.row_x(v) : g.row_y(v - n);
      int base = v < n ? n : 0;
      for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u)) {
        int gu = base + static_cast<int>(u);
        if (comp[gu] == -1) {
          comp[gu] = count;
          stack.push_back(gu);
        }
      }
    }
    ++count;
  }
  return comp;
}

SolveResult run_search(const HostGraph& g, const TileGraph& h, const SolveBudget& budget,
                       int target) {
  EmbeddingCatalog catalog = build_embedding_catalog(g, h);
  const int n = g.n();

  SearchShared shared;
  shared.node_limit = budget.node_limit;
  shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(budget.time_limit_secs));
  shared.incumbent.store(-1);

  SearchContext ctx;
  ctx.catalog = &catalog;
  ctx.n = n;
  ctx.h_total = h.vertex_count();
  ctx.target = target;
  ctx.host_comp_of = host_components(g);
  ctx.host_comp_count = 1 + *std::max_element(ctx.host_comp_of.begin(), ctx.host_comp_of.end());
  ctx.shared = &shared;

  // Reachability of exact per-host-component (x, y) leftovers by piece
  // side-usage sums; used as a factor-mode prune.
  if (target >= 0) {
    ctx.reachable.assign(n + 1, std::vector<bool>(n + 1, false));
    ctx.reachable[0][0] = true;
    for (int x = 0; x <= n; ++x)
      for (int y = 0; y <= n; ++y) {
        if (ctx.reachable[x][y]) continue;
        for (const auto& cls : catalog.classes) {
          int a = cls.u_size, b = cls.w_size;
          if (x >= a && y >= b && ctx.reachable[x - a][y - b]) ctx.reachable[x][y] = true;
          if (x >= b && y >= a && ctx.reachable[x - b][y - a]) ctx.reachable[x][y] = true;
          if (ctx.reachable[x][y]) break;
        }
      }
  }

  NodeState root;
  root.free = Bitset(2 * n);
  root.free.set();
  root.placed_per_class.assign(catalog.classes.size(), 0);
  root.comp_free_x.assign(ctx.host_comp_count, 0);
  root.comp_free_y.assign(ctx.host_comp_count, 0);
  for (int v = 0; v < 2 * n; ++v)
    (v < n ? root.comp_free_x : root.comp_free_y)[ctx.host_comp_of[v]]++;

  bool root_feasible = true;
  if (target >= 0) {
    for (int c = 0; c < ctx.host_comp_count; ++c)
      if (!factor_prune_ok(ctx, root, c)) root_feasible = false;
  }

  if (root_feasible) {
    if (budget.workers <= 1) {
      search(ctx, root);
    } else {
      // Split the root branching across workers.
      struct RootBranch {
        int cls, entry;  // entry == -1 encodes the skip branch
      };
      std::vector<RootBranch> branches;
      auto v = root.free.find_first();
      for (size_t ci = 0; ci < catalog.classes.size(); ++ci)
        for (size_t e = 0; e < catalog.classes[ci].masks.size(); ++e)
          if (catalog.classes[ci].masks[e].test(v)) branches.push_back({(int)ci, (int)e});
      if (target < 0) branches.push_back({-1, -1});

      std::atomic<size_t> next{0};
      auto worker = [&]() {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= branches.size() || shared.stop.load()) return;
          NodeState st = root;
          auto [ci, e] = branches[i];
          if (ci < 0) {
            st.free.reset(v);
            search(ctx, st);
            continue;
          }
          const auto& cls = catalog.classes[ci];
          const Bitset& m = cls.masks[e];
          if (!m.is_subset_of(st.free)) continue;
          st.free -= m;
          st.placed_per_class[ci]++;
          st.used += cls.u_size + cls.w_size;
          st.pieces = {ci, e};
          int comp = ctx.host_comp_of[v];
          st.comp_free_x[comp] -= static_cast<int>(cls.xs[e].size());
          st.comp_free_y[comp] -= static_cast<int>(cls.ys[e].size());
          if (target < 0 || factor_prune_ok(ctx, st, comp)) search(ctx, st);
        }
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < budget.workers; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
  }

  SolveResult result;
  result.nodes = shared.nodes.load();
  result.budget_exceeded = shared.out_of_budget.load();
  int best = std::max(0, shared.incumbent.load());
  result.copies = best;
  result.optimal = !result.budget_exceeded;

  // Rebuild the best assignment from the recorded pieces.
  std::vector<std::vector<std::pair<int, int>>> by_class(catalog.classes.size());
  {
    std::lock_guard<std::mutex> lock(shared.best_mutex);
    for (size_t i = 0; i + 1 < shared.best_pieces.size(); i += 2)
      by_class[shared.best_pieces[i]].push_back({shared.best_pieces[i], shared.best_pieces[i + 1]});
  }
  Bitset used(2 * n);
  for (int copy = 0; copy < best; ++copy) {
    PlacedCopy pc;
    std::vector<int> taken(catalog.classes.size(), 0);
    for (int comp_idx = 0; comp_idx < static_cast<int>(h.components().size()); ++comp_idx) {
      int cls = catalog.class_of_component[comp_idx];
      int slot = copy * catalog.classes[cls].multiplicity;
      // Count how many slots of this class earlier components of the copy used.
      for (int prev = 0; prev < comp_idx; ++prev)
        if (catalog.class_of_component[prev] == cls) ++slot;
      auto [c, e] = by_class[cls][slot];
      PlacedComponent piece;
      piece.component = comp_idx;
      piece.swapped = catalog.classes[c].swapped[e];
      piece.x_vertices = catalog.classes[c].xs[e];
      piece.y_vertices = catalog.classes[c].ys[e];
      used |= catalog.classes[c].masks[e];
      pc.pieces.push_back(std::move(piece));
    }
    result.best.copies.push_back(std::move(pc));
  }
  for (int x = 0; x < n; ++x)
    if (!used.test(x)) result.best.leftover_x.push_back(x);
  for (int y = 0; y < n; ++y)
    if (!used.test(n + y)) result.best.leftover_y.push_back(y);
  return result;
}

}  // namespace

EmbeddingCatalog build_embedding_catalog(const HostGraph& g, const TileGraph& h) {
  EmbeddingCatalog catalog;
  const auto& comps = h.components();
  catalog.class_of_component.assign(comps.size(), -1);
  for (size_t i = 0; i < comps.size(); ++i) {
    for (size_t c = 0; c < catalog.classes.size(); ++c) {
      if (components_isomorphic(h, comps[catalog.classes[c].representative], comps[i])) {
        catalog.class_of_component[i] = static_cast<int>(c);
        catalog.classes[c].multiplicity++;
        break;
      }
    }
    if (catalog.class_of_component[i] != -1) continue;
    ComponentEmbeddings cls;
    cls.representative = static_cast<int>(i);
    cls.multiplicity = 1;
    cls.u_size = static_cast<int>(comps[i].u_side.size());
    cls.w_size = static_cast<int>(comps[i].w_side.size());
    catalog.class_of_component[i] = static_cast<int>(catalog.classes.size());
    catalog.classes.push_back(std::move(cls));
  }

  for (auto& cls : catalog.classes) {
    const auto& cc = comps[cls.representative];
    auto order = bfs_order(h, cc);
    std::set<int> uset(cc.u_side.begin(), cc.u_side.end());
    std::vector<bool> u_on_x(order.size()), w_on_x(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
      bool in_u = uset.count(order[i]) > 0;
      u_on_x[i] = in_u;   // natural orientation: U on X, W on Y
      w_on_x[i] = !in_u;  // swapped: W on X
    }
    std::set<std::vector<Bitset::block_type>> seen;
    enumerate_component(g, h, order, u_on_x, cls, false, seen);
    enumerate_component(g, h, order, w_on_x, cls, true, seen);
  }
  return catalog;
}

SolveResult max_h_tiling(const HostGraph& g, const TileGraph& h, const SolveBudget& budget) {
  return run_search(g, h, budget, -1);
}

bool has_h_factor(const HostGraph& g, const TileGraph& h, const SolveBudget& budget) {
  if ((2LL * g.n()) % h.vertex_count() != 0)
    throw Error(ErrorCode::DivisibilityViolation,
                "h = " + std::to_string(h.vertex_count()) +
                    " does not divide 2n = " + std::to_string(2 * g.n()));
  int target = static_cast<int>(2LL * g.n() / h.vertex_count());
  SolveResult r = run_search(g, h, budget, target);
  if (r.copies >= target) return true;
  if (r.budget_exceeded)
    throw Error(ErrorCode::BudgetExceeded, "undecided after " + std::to_string(r.nodes) + " nodes");
  return false;
}

MatchingResult max_matching_pair(const HostGraph& g, const std::vector<int>& xs,
                                 const std::vector<int>& ys) {
  // Hopcroft-Karp over the sub-pair.
  const int nx = static_cast<int>(xs.size());
  const int ny = static_cast<int>(ys.size());
  std::vector<int> ypos(g.n(), -1);
  for (int j = 0; j < ny; ++j) ypos[ys[j]] = j;
  std::vector<std::vector<int>> adj(nx);
  for (int i = 0; i < nx; ++i) {
    const Bitset& row = g.row_x(xs[i]);
    for (auto y = row.find_first(); y != Bitset::npos; y = row.find_next(y))
      if (ypos[y] != -1) adj[i].push_back(ypos[y]);
  }

  const int INF = INT32_MAX;
  std::vector<int> match_x(nx, -1), match_y(ny, -1), dist(nx);
  auto bfs = [&]() {
    std::vector<int> queue;
    for (int i = 0; i < nx; ++i) {
      if (match_x[i] == -1) {
        dist[i] = 0;
        queue.push_back(i);
      } else {
        dist[i] = INF;
      }
    }
    bool found = false;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int i = queue[qi];
      for (int j : adj[i]) {
        int i2 = match_y[j];
        if (i2 == -1) {
          found = true;
        } else if (dist[i2] == INF) {
          dist[i2] = dist[i] + 1;
          queue.push_back(i2);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, int i) -> bool {
    for (int j : adj[i]) {
      int i2 = match_y[j];
      if (i2 == -1 || (dist[i2] == dist[i] + 1 && self(self, i2))) {
        match_x[i] = j;
        match_y[j] = i;
        return true;
      }
    }
    dist[i] = INF;
    return false;
  };

  MatchingResult out;
  while (bfs()) {
    for (int i = 0; i < nx; ++i)
      if (match_x[i] == -1 && dfs(dfs, i)) ++out.size;
  }
  for (int i = 0; i < nx; ++i)
    if (match_x[i] != -1) out.pairs.emplace_back(xs[i], ys[match_x[i]]);
  return out;
}

MatchingResult max_matching(const HostGraph& g) {
  std::vector<int> xs(g.n()), ys(g.n());
  for (int i = 0; i < g.n(); ++i) xs[i] = ys[i] = i;
  return max_matching_pair(g, xs, ys);
}

namespace {

// Does the host contain this component on exactly these side sets with the
// given orientation? Searches for an adjacency-preserving bijection.
bool piece_embeds(const HostGraph& g, const TileGraph& h, const ComponentColoring& cc,
                  const PlacedComponent& piece) {
  const std::vector<int>& to_x = piece.swapped ? cc.w_side : cc.u_side;
  const std::vector<int>& to_y = piece.swapped ? cc.u_side : cc.w_side;
  if (to_x.size() != piece.x_vertices.size() || to_y.size() != piece.y_vertices.size())
    return false;

  auto order = bfs_order(h, cc);
  std::set<int> xclass(to_x.begin(), to_x.end());
  std::vector<int> image(h.vertex_count(), -1);
  std::vector<bool> used_x(piece.x_vertices.size(), false), used_y(piece.y_vertices.size(), false);

  auto dfs = [&](auto&& self, size_t i) -> bool {
    if (i == order.size()) return true;
    int pv = order[i];
    bool on_x = xclass.count(pv) > 0;
    const auto& pool = on_x ? piece.x_vertices : piece.y_vertices;
    auto& used = on_x ? used_x : used_y;
    for (size_t c = 0; c < pool.size(); ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) {
        int pu = order[j];
        if (!h.has_edge(pv, pu)) continue;
        int hv = pool[c], hu = image[pu];
        ok = on_x ? g.adjacent(hv, hu) : g.adjacent(hu, hv);
      }
      if (!ok) continue;
      image[pv] = pool[c];
      used[c] = true;
      if (self(self, i + 1)) return true;
      used[c] = false;
      image[pv] = -1;
    }
    return false;
  };
  return dfs(dfs, 0);
}

}  // namespace

ValidationReport validate_tiling(const HostGraph& g, const TileGraph& h,
                                 const TilingAssignment& assignment) {
  const int n = g.n();
  const auto& comps = h.components();
  Bitset used(2 * n);

  for (size_t ci = 0; ci < assignment.copies.size(); ++ci) {
    const auto& copy = assignment.copies[ci];
    std::vector<int> seen(comps.size(), 0);
    for (const auto& piece : copy.pieces) {
      if (piece.component < 0 || piece.component >= static_cast<int>(comps.size()))
        return {false, "copy " + std::to_string(ci) + ": bad component index"};
      seen[piece.component]++;
      for (int x : piece.x_vertices) {
        if (x < 0 || x >= n) return {false, "copy " + std::to_string(ci) + ": X index out of range"};
        if (used.test(x))
          return {false, "DisjointnessViolation: X vertex " + std::to_string(x) + " reused"};
        used.set(x);
      }
      for (int y : piece.y_vertices) {
        if (y < 0 || y >= n) return {false, "copy " + std::to_string(ci) + ": Y index out of range"};
        if (used.test(n + y))
          return {false, "DisjointnessViolation: Y vertex " + std::to_string(y) + " reused"};
        used.set(n + y);
      }
      if (!piece_embeds(g, h, comps[piece.component], piece))
        return {false, "EmbeddingViolation: copy " + std::to_string(ci) + " component " +
                           std::to_string(piece.component)};
    }
    for (size_t k = 0; k < comps.size(); ++k)
      if (seen[k] != 1)
        return {false, "copy " + std::to_string(ci) + ": component " + std::to_string(k) +
                           " appears " + std::to_string(seen[k]) + " times"};
  }

  Bitset leftover(2 * n);
  for (int x : assignment.leftover_x) {
    if (x < 0 || x >= n) return {false, "leftover X index out of range"};
    if (leftover.test(x)) return {false, "duplicate leftover X vertex"};
    leftover.set(x);
  }
  for (int y : assignment.leftover_y) {
    if (y < 0 || y >= n) return {false, "leftover Y index out of range"};
    if (leftover.test(n + y)) return {false, "duplicate leftover Y vertex"};
    leftover.set(n + y);
  }
  if ((used & leftover).any()) return {false, "leftover overlaps used vertices"};
  if ((used | leftover).count() != static_cast<size_t>(2 * n))
    return {false, "leftover accounting: used + leftover does not cover the host"};
  return {};
}

}  // namespace bitile
