#ifndef BITILE_EXTREMAL_TILER_HPP
#define BITILE_EXTREMAL_TILER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitile/graph.hpp"
#include "bitile/rational.hpp"
#include "bitile/tiling.hpp"

namespace bitile {

struct DenseEmbedConfig {
  // Min-degree slack of the dense embedder; the classification parameter
  // defaults to alpha^(1/3) = min{1/(5h^2), rho/(2h)}.
  Rational rho;
  std::optional<Rational> alpha13_override;

  static DenseEmbedConfig defaults_for(int h);
  Rational alpha13(int h) const;
};

struct ClaimCheck {
  std::string name;
  bool holds = false;
  bool vacuous = false;
  std::string detail;
};

// The A1/A2/A0/B1/B2/B0 classification of a near-extremal host.
struct ExtremalPartition {
  std::vector<int> a1, a2, a0;  // X side
  std::vector<int> b1, b2, b0;  // Y side
  Rational alpha13;
  Rational alpha;
  Rational density_ab;
  // True when alpha^(1/3) >= 1/2; the low/high thresholds then overlap and
  // vertices satisfying both are assigned to the low class.
  bool threshold_overlap = false;
  std::vector<ClaimCheck> claim_checks;
  bool all_claims_hold = false;
};

ExtremalPartition classify_extremal(const HostGraph& g, const TileGraph& h,
                                    const std::vector<int>& a_set, const std::vector<int>& b_set,
                                    const Rational& alpha13);

struct Star {
  int center = 0;  // index within the center side
  std::vector<int> leaves;
};

struct StarHypotheses {
  Rational c;
  std::int64_t capital_m = 0;
};

struct StarSets {
  std::vector<Star> centered_v1;
  std::vector<Star> centered_v2;
};

// 2*need vertex-disjoint k-stars across the pair, need centered per side.
// When hypotheses are supplied they are validated first (HypothesesUnmet).
// v1_on_x says which host side holds V1.
StarSets find_disjoint_stars(const HostGraph& g, const std::vector<int>& v1,
                             const std::vector<int>& v2, bool v1_on_x, int k, int need,
                             const std::optional<StarHypotheses>& hypotheses = std::nullopt);

// Embedding of a whole pattern into a dense pair: F's U classes go to the
// X part and W classes to the Y part unless flipping a component is needed
// to fit. Enforces the (1 - rho) min-degree precondition.
TilingAssignment dense_embed(const HostGraph& g, const TileGraph& f, const std::vector<int>& x_part,
                             const std::vector<int>& y_part, const Rational& rho);

struct StageTrace {
  std::string stage;
  std::string note;
};

struct ExtremalTilingResult {
  TilingAssignment assignment;
  ExtremalPartition partition;
  std::int64_t m1 = 0, m2 = 0, s = 0, t = 0;  // after-repair bookkeeping
  bool sides_swapped = false;                  // pair roles exchanged so m1 >= m2
  std::vector<StageTrace> trace;
  std::vector<ClaimCheck> pipeline_checks;  // Claim 4.10 accounting, parity identity
};

// The full Part I / Part II pipeline. Requires hcf(H) = 1, 2n = mh and
// delta(G) >= (u/h) n + ceil(c1(H)); throws PipelineStageFailed naming the
// stage and inequality otherwise.
ExtremalTilingResult tile_extremal(const HostGraph& g, const TileGraph& h,
                                   const std::vector<int>& a_set, const std::vector<int>& b_set,
                                   const DenseEmbedConfig& config);

}  // namespace bitile

#endif
