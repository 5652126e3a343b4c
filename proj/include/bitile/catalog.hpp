#ifndef BITILE_CATALOG_HPP
#define BITILE_CATALOG_HPP

#include <string>
#include <vector>

#include "bitile/graph.hpp"

namespace bitile {

struct CatalogEntry {
  std::string name;
  TileGraph pattern;
};

// Built-in patterns used by the experiments and the test suites.
const std::vector<CatalogEntry>& pattern_catalog();

// Throws InvalidArgument for unknown names.
const TileGraph& catalog_pattern(const std::string& name);

}  // namespace bitile

#endif
