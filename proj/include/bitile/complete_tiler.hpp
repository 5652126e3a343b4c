#ifndef BITILE_COMPLETE_TILER_HPP
#define BITILE_COMPLETE_TILER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "bitile/arithmetic.hpp"
#include "bitile/graph.hpp"
#include "bitile/rational.hpp"
#include "bitile/tiling.hpp"

namespace bitile {

// Parameters of a swap-based factor of K_{mu+t, mw-t}.
struct CompleteTilingSpec {
  std::int64_t m = 0;
  std::int64_t t = 0;
  std::int64_t q = 0;  // t = q(w-u) + r with 0 <= r < w-u
  std::int64_t r = 0;
};

struct LeftoverReport {
  std::int64_t leftover_x = 0;
  std::int64_t leftover_y = 0;
  std::int64_t residue = 0;  // (|X| + |Y|) mod h
  std::int64_t p = 0;        // decomposition values used by the branch taken
  std::int64_t q = 0;
  std::int64_t copies_w_in_y = 0;
};

// The complete bipartite pattern K_{u,w}, vertices 0..u-1 on the U side.
TileGraph make_complete_bipartite(int u, int w);

// Explicit H-factor of K_{mu+t, mw-t} by the three-stage swap procedure:
// natural factor, q full swaps, then r*beta_j component swaps. Requires
// hcf_chi_c(H) = 1, u < w, t >= 0, m >= r*beta + q and q >= r*beta.
TilingAssignment factor_complete(const TileGraph& h, std::int64_t m, std::int64_t t);

struct FeasibilityResult {
  bool feasible = false;
  std::string reason;              // set when infeasible
  Rational ratio;                  // |X| / |Y|
  Rational ratio_lower;            // (1 + gamma) u / w
  Rational m_bound;                // right side of the admissibility inequality
  std::optional<CompleteTilingSpec> params;  // set when feasible
};

// Ratio-window + admissibility test for an H-factor of K_{sizeX, sizeY}.
FeasibilityResult feasible_corollary(const TileGraph& h, std::int64_t size_x,
                                     std::int64_t size_y, const Rational& gamma);

// K_{u,w}-tiling of K_{sizeX, sizeY} with u/w <= sizeX/sizeY <= 1 leaving
// at most h + (w-u) - 2 vertices uncovered.
std::pair<TilingAssignment, LeftoverReport> kuw_almost_tiling(int u, int w, std::int64_t size_x,
                                                              std::int64_t size_y);

// K_{u,w}-tiling of K_{mu-c, mw+c} covering all but at most (c+u-1)h/u vertices.
std::pair<TilingAssignment, LeftoverReport> kuw_deficit_tiling(int u, int w, std::int64_t m,
                                                               std::int64_t c);

}  // namespace bitile

#endif
