#ifndef BITILE_JSON_IO_HPP
#define BITILE_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "bitile/arithmetic.hpp"
#include "bitile/complete_tiler.hpp"
#include "bitile/constructions.hpp"
#include "bitile/exact_solver.hpp"
#include "bitile/graph.hpp"
#include "bitile/tiling.hpp"

namespace bitile {

using Json = nlohmann::ordered_json;

// Pattern files: {"vertices": int, "edges": [[a,b],...]}, 0-based.
TileGraph pattern_from_json(const Json& j);
Json pattern_to_json(const TileGraph& h);

// Host files: {"n": int, "edges": [[x,y],...]}, 0-based side-local indices.
HostGraph host_from_json(const Json& j);
Json host_to_json(const HostGraph& g);

Json rational_to_json(const Rational& r);  // "p/q" string, exact

Json parameters_to_json(const TilingParameters& p);
Json threshold_to_json(const ThresholdResult& t);
Json witness_to_json(const ExtremalWitness& w);
Json no_factor_report_to_json(const NoFactorReport& r);
Json assignment_to_json(const TilingAssignment& a);
Json leftover_report_to_json(const LeftoverReport& r);
Json validation_to_json(const ValidationReport& r);

std::string pattern_to_dot(const TileGraph& h);
std::string host_to_dot(const HostGraph& g);

Json parse_json_text(const std::string& text);  // wraps parse errors
Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace bitile

#endif
