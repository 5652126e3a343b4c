#include "bitile/json_io.hpp"

#include <fstream>
#include <sstream>

#include "bitile/error.hpp"

namespace bitile {

namespace {

std::vector<Edge> edges_from_json(const Json& j) {
  std::vector<Edge> edges;
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw Error(ErrorCode::ParseError, "each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

}  // namespace

TileGraph pattern_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw Error(ErrorCode::ParseError, "pattern JSON needs \"vertices\" and \"edges\"");
  return TileGraph::build(j["vertices"].get<int>(), edges_from_json(j["edges"]));
}

Json pattern_to_json(const TileGraph& h) {
  Json j;
  j["vertices"] = h.vertex_count();
  Json edges = Json::array();
  for (auto [a, b] : h.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

HostGraph host_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(ErrorCode::ParseError, "host JSON needs \"n\" and \"edges\"");
  return HostGraph::build(j["n"].get<int>(), edges_from_json(j["edges"]));
}

Json host_to_json(const HostGraph& g) {
  Json j;
  j["n"] = g.n();
  Json edges = Json::array();
  for (auto [x, y] : g.edges()) edges.push_back({x, y});
  j["edges"] = std::move(edges);
  return j;
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Json parameters_to_json(const TilingParameters& p) {
  Json j;
  j["h"] = p.h;
  j["u"] = p.u;
  j["w"] = p.w;
  Json comps = Json::array();
  for (size_t i = 0; i < p.component_sizes.size(); ++i)
    comps.push_back({{"c", p.component_sizes[i]}, {"d", p.component_imbalances[i]}});
  j["components"] = std::move(comps);
  j["chi_cr"] = p.chi_cr ? rational_to_json(*p.chi_cr) : Json(nullptr);
  j["hcf_c"] = p.hcf.hcf_c;
  j["hcf_chi"] =
      p.hcf.hcf_chi.kind == HcfValue::Finite ? Json(p.hcf.hcf_chi.value) : Json(p.hcf.hcf_chi.str());
  j["hcf_chi_c"] = p.hcf.hcf_chi_c.kind == HcfValue::Finite ? Json(p.hcf.hcf_chi_c.value)
                                                            : Json(p.hcf.hcf_chi_c.str());
  j["difference_set"] = p.hcf.difference_set;
  j["hcf_indicator"] = p.hcf.indicator;
  if (p.zeta) {
    j["zeta"] = p.zeta->values;
    j["zeta_max"] = p.zeta->max_abs;
  }
  if (p.beta) {
    j["beta"] = p.beta->values;
    j["beta_max"] = p.beta->max_abs;
  }
  if (p.constants) {
    j["c1"] = rational_to_json(p.constants->c1);
    j["c1_ceil"] = p.constants->c1_ceil;
    j["c2_bound"] = p.constants->c2_bound;
    j["c2_extremal"] = rational_to_json(p.constants->c2_extremal);
    j["c2_nonextremal"] = rational_to_json(p.constants->c2_nonextremal);
  }
  return j;
}

Json threshold_to_json(const ThresholdResult& t) {
  Json j;
  j["value"] = rational_to_json(t.value);
  j["value_ceil"] = ceil_of(t.value);
  j["regime"] = regime_name(t.regime);
  if (t.lower_bound) j["lower_bound"] = *t.lower_bound;
  return j;
}

Json witness_to_json(const ExtremalWitness& w) {
  Json j;
  j["case"] = witness_case_name(w.tag);
  j["n"] = w.n;
  j["min_degree"] = w.claimed_min_degree;
  j["blocks"] = Json::array({Json{{"x", w.block_x[0]}, {"y", w.block_y[0]}},
                             Json{{"x", w.block_x[1]}, {"y", w.block_y[1]}}});
  j["obstruction"] = w.obstruction;
  j["host"] = host_to_json(w.host);
  return j;
}

Json no_factor_report_to_json(const NoFactorReport& r) {
  Json j;
  j["solver_ran"] = r.solver_ran;
  if (r.solver_ran) j["factor_found"] = r.factor_found;
  j["analytic"] = r.analytic;
  return j;
}

Json assignment_to_json(const TilingAssignment& a) {
  Json copies = Json::array();
  for (size_t i = 0; i < a.copies.size(); ++i) {
    for (const auto& piece : a.copies[i].pieces) {
      Json p;
      p["copy"] = i;
      p["component"] = piece.component;
      p["swapped"] = piece.swapped;
      p["X_vertices"] = piece.x_vertices;
      p["Y_vertices"] = piece.y_vertices;
      copies.push_back(std::move(p));
    }
  }
  Json j;
  j["copies"] = std::move(copies);
  j["leftover_X"] = a.leftover_x;
  j["leftover_Y"] = a.leftover_y;
  return j;
}

Json leftover_report_to_json(const LeftoverReport& r) {
  Json j;
  j["leftover_x"] = r.leftover_x;
  j["leftover_y"] = r.leftover_y;
  j["residue"] = r.residue;
  j["p"] = r.p;
  j["q"] = r.q;
  j["copies_w_in_y"] = r.copies_w_in_y;
  return j;
}

Json validation_to_json(const ValidationReport& r) {
  Json j;
  j["ok"] = r.ok;
  if (!r.ok) j["violation"] = r.violation;
  return j;
}

std::string pattern_to_dot(const TileGraph& h) {
  std::ostringstream os;
  os << "graph pattern {\n";
  for (int v = 0; v < h.vertex_count(); ++v) os << "  v" << v << ";\n";
  for (auto [a, b] : h.edges()) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string host_to_dot(const HostGraph& g) {
  std::ostringstream os;
  os << "graph host {\n  rankdir=LR;\n";
  os << "  subgraph cluster_x { label=\"X\";";
  for (int x = 0; x < g.n(); ++x) os << " x" << x << ";";
  os << " }\n";
  os << "  subgraph cluster_y { label=\"Y\";";
  for (int y = 0; y < g.n(); ++y) os << " y" << y << ";";
  os << " }\n";
  for (auto [x, y] : g.edges()) os << "  x" << x << " -- y" << y << ";\n";
  os << "}\n";
  return os.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << content;
}

}  // namespace bitile
