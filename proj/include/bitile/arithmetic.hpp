#ifndef BITILE_ARITHMETIC_HPP
#define BITILE_ARITHMETIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitile/graph.hpp"
#include "bitile/rational.hpp"

namespace bitile {

// gcd of the color-class difference set D(H); Infinite when D(H) = {0}.
// NoImbalance marks an all-balanced imbalance vector (gcd base empty).
struct HcfValue {
  enum Kind { Finite, Infinite, NoImbalance } kind = Finite;
  std::int64_t value = 0;

  bool at_most(std::int64_t bound) const { return kind == Finite && value <= bound; }
  bool is_one() const { return kind == Finite && value == 1; }
  std::string str() const;
};

struct HcfFamily {
  std::int64_t hcf_c = 0;
  HcfValue hcf_chi;         // gcd of nonzero elements of D(H)
  HcfValue hcf_chi_c;       // gcd of the d_i
  std::vector<std::int64_t> difference_set;  // D(H), sorted ascending
  bool indicator = false;   // hcf(H) = 1
};

struct BezoutResult {
  std::int64_t gcd = 0;
  std::vector<std::int64_t> coefficients;
};

struct CoefficientVector {
  std::vector<std::int64_t> values;
  std::int64_t max_abs = 0;
};

struct ZetaBeta {
  CoefficientVector zeta;
  CoefficientVector beta;
};

struct TilingConstants {
  Rational c1;
  std::int64_t c1_ceil = 0;
  std::int64_t c2_bound = 0;        // 8 h^2
  Rational c2_extremal;             // 4 h^2
  Rational c2_nonextremal;          // (4w/u)(h + w - u - 2)
};

enum class ThresholdRegime { CriticalChromatic, ZhaoExact, ChromaticUpper };

struct ThresholdResult {
  Rational value;
  ThresholdRegime regime = ThresholdRegime::CriticalChromatic;
  std::optional<std::int64_t> lower_bound;  // Prop-1.3-style, ChromaticUpper only
};

const char* regime_name(ThresholdRegime r);

// Everything `analyze` reports.
struct TilingParameters {
  int h = 0;
  int u = 0;
  int w = 0;
  std::vector<int> component_sizes;
  std::vector<int> component_imbalances;
  std::optional<Rational> chi_cr;  // absent for edgeless H
  HcfFamily hcf;
  std::optional<CoefficientVector> zeta;     // present iff hcf_c = 1
  std::optional<CoefficientVector> beta;     // present iff hcf_chi_c = 1
  std::optional<TilingConstants> constants;  // present iff hcf(H) = 1
};

// sigma(H): smallest color class over all proper 2-colorings, by a
// reachable-sum DP over the +-d_i orientation choices.
int compute_sigma(const TileGraph& h);

// h / w exactly; throws EdgelessPattern when H has no edge.
Rational compute_chi_cr(const TileGraph& h);

HcfFamily compute_hcf_family(const TileGraph& h);

// Coefficients b with sum b_i a_i = gcd(a) and max |b_i| <= max a_i,
// minimal in max-norm, lexicographically smallest among those.
BezoutResult bezout_bounded(const std::vector<std::int64_t>& a);

// Throws HcfNotOne naming the failed precondition. Zeta needs hcf_c = 1;
// beta needs gcd of the nonzero d_i equal 1 (zero-imbalance components get
// coefficient 0).
ZetaBeta zeta_beta(const TileGraph& h);

CoefficientVector zeta_coefficients(const TileGraph& h);
CoefficientVector beta_coefficients(const TileGraph& h);

TilingConstants constants(const TileGraph& h);

ThresholdResult threshold(const TileGraph& h, std::int64_t n);

TilingParameters analyze(const TileGraph& h);

}  // namespace bitile

#endif
