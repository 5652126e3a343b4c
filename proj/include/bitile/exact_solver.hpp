#ifndef BITILE_EXACT_SOLVER_HPP
#define BITILE_EXACT_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bitile/graph.hpp"
#include "bitile/tiling.hpp"

namespace bitile {

struct SolveBudget {
  std::int64_t node_limit = 10'000'000;
  double time_limit_secs = 60.0;
  int workers = 1;
};

// All embeddings of one component-isomorphism class of H into the host,
// deduplicated by image vertex-set pair.
struct ComponentEmbeddings {
  int representative = 0;   // canonical component index of the class
  int multiplicity = 0;     // how many components of H are in the class
  int u_size = 0;
  int w_size = 0;
  // Each entry is a (global mask over 2n vertices, swapped flag) pair;
  // global vertex v < n is X vertex v, otherwise Y vertex v - n.
  std::vector<Bitset> masks;
  std::vector<bool> swapped;
  std::vector<std::vector<int>> xs;  // X-side vertices per entry
  std::vector<std::vector<int>> ys;  // Y-side vertices per entry
};

struct EmbeddingCatalog {
  std::vector<ComponentEmbeddings> classes;
  std::vector<int> class_of_component;  // component index -> class index
};

EmbeddingCatalog build_embedding_catalog(const HostGraph& g, const TileGraph& h);

struct SolveResult {
  TilingAssignment best;
  int copies = 0;
  bool optimal = false;       // proven optimal / decision complete
  std::int64_t nodes = 0;
  bool budget_exceeded = false;
};

// Maximum number of vertex-disjoint H-copies, by branch and bound over
// component placements. Throws nothing; budget exhaustion is reported in
// the result together with the incumbent.
SolveResult max_h_tiling(const HostGraph& g, const TileGraph& h, const SolveBudget& budget = {});

// True iff G has a perfect H-factor. Throws DivisibilityViolation when h
// does not divide 2n, BudgetExceeded when undecided.
bool has_h_factor(const HostGraph& g, const TileGraph& h, const SolveBudget& budget = {});

struct MatchingResult {
  int size = 0;
  std::vector<std::pair<int, int>> pairs;  // (x, y)
};

// Hopcroft-Karp on the full host.
MatchingResult max_matching(const HostGraph& g);

// Hopcroft-Karp restricted to a (possibly unbalanced) sub-pair.
MatchingResult max_matching_pair(const HostGraph& g, const std::vector<int>& xs,
                                 const std::vector<int>& ys);

// Checks disjointness, per-piece embedding correctness (injection search
// respecting the orientation flag) and leftover accounting.
ValidationReport validate_tiling(const HostGraph& g, const TileGraph& h,
                                 const TilingAssignment& assignment);

}  // namespace bitile

#endif
