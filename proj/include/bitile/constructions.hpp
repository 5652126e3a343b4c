#ifndef BITILE_CONSTRUCTIONS_HPP
#define BITILE_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>

#include "bitile/exact_solver.hpp"
#include "bitile/graph.hpp"

namespace bitile {

enum class WitnessCase { HcfC3plus, HcfC2, HcfChi3, HcfOne };

const char* witness_case_name(WitnessCase c);

// Lower-bound host: a disjoint union of two complete bipartite blocks,
// balanced overall, with the claimed minimum degree and no H-factor.
struct ExtremalWitness {
  HostGraph host;
  WitnessCase tag;
  std::int64_t n = 0;
  std::int64_t claimed_min_degree = 0;
  // Block b is K_{x_sizes[b], y_sizes[b]}: X indices then Y indices are
  // assigned to blocks contiguously in order.
  std::int64_t block_x[2] = {0, 0};
  std::int64_t block_y[2] = {0, 0};
  std::string obstruction;  // the counting argument blocking the factor
};

// Builds a disjoint union K_{x0,y0} u K_{x1,y1} as one balanced host.
HostGraph two_block_host(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1);

// Dispatches on the hcf family of H; n is m*h/2. Case 4 additionally
// requires h | nu and h | nw.
ExtremalWitness extremal_construction(const TileGraph& h, std::int64_t m);

// Smallest m >= 1 for which extremal_construction accepts H.
std::int64_t smallest_admissible_m(const TileGraph& h);

struct NoFactorReport {
  bool solver_ran = false;
  bool factor_found = false;  // must stay false for a valid witness
  std::int64_t nodes = 0;
  std::string analytic;  // case-specific counting obstruction
};

// Confirms by exact search that the witness has no H-factor (2n <= 32),
// and reports the analytic obstruction. Larger instances get the analytic
// report only, flagged solver_ran = false.
NoFactorReport verify_no_factor(const ExtremalWitness& witness, const TileGraph& h,
                                const SolveBudget& budget = {});

}  // namespace bitile

#endif
