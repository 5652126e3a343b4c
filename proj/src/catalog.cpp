#include "bitile/catalog.hpp"

#include "bitile/error.hpp"

namespace bitile {

namespace {

TileGraph star(int leaves) {  // K_{1,leaves}, center 0
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return TileGraph::build(leaves + 1, e);
}

// Disjoint union; vertex ids of b are shifted past a.
TileGraph disjoint(const TileGraph& a, const TileGraph& b) {
  std::vector<Edge> e = a.edges();
  for (auto [x, y] : b.edges()) e.emplace_back(x + a.vertex_count(), y + a.vertex_count());
  return TileGraph::build(a.vertex_count() + b.vertex_count(), e);
}

TileGraph complete(int u, int w) {
  std::vector<Edge> e;
  for (int a = 0; a < u; ++a)
    for (int b = 0; b < w; ++b) e.emplace_back(a, u + b);
  return TileGraph::build(u + w, e);
}

TileGraph cycle(int len) {
  std::vector<Edge> e;
  for (int i = 0; i < len; ++i) e.emplace_back(i, (i + 1) % len);
  return TileGraph::build(len, e);
}

TileGraph path(int verts) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < verts; ++i) e.emplace_back(i, i + 1);
  return TileGraph::build(verts, e);
}

TileGraph isolated() { return TileGraph::build(1, {}); }

std::vector<CatalogEntry> make_catalog() {
  TileGraph k2 = complete(1, 1);
  std::vector<CatalogEntry> out;
  out.push_back({"K2", k2});
  out.push_back({"2K2", disjoint(k2, k2)});
  out.push_back({"3K2", disjoint(disjoint(k2, k2), k2)});
  out.push_back({"K12", star(2)});
  out.push_back({"K12+K2", disjoint(star(2), k2)});
  out.push_back({"K13+K12", disjoint(star(3), star(2))});
  out.push_back({"K12+K12", disjoint(star(2), star(2))});
  out.push_back({"K22", complete(2, 2)});
  out.push_back({"K33", complete(3, 3)});
  out.push_back({"C6", cycle(6)});
  out.push_back({"C6+K2", disjoint(cycle(6), k2)});
  out.push_back({"P4", path(4)});
  out.push_back({"K12+K1", disjoint(star(2), isolated())});
  out.push_back({"K13+K12+K2", disjoint(disjoint(star(3), star(2)), k2)});
  out.push_back({"K14+K25", disjoint(star(4), complete(2, 5))});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& pattern_catalog() {
  static const std::vector<CatalogEntry> catalog = make_catalog();
  return catalog;
}

const TileGraph& catalog_pattern(const std::string& name) {
  for (const auto& entry : pattern_catalog())
    if (entry.name == name) return entry.pattern;
  throw Error(ErrorCode::InvalidArgument, "unknown catalog pattern '" + name + "'");
}

}  // namespace bitile
