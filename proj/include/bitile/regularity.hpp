#ifndef BITILE_REGULARITY_HPP
#define BITILE_REGULARITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bitile/graph.hpp"
#include "bitile/rational.hpp"

namespace bitile {

enum class RegularityVerdict {
  Regular,         // certified by exhaustive check
  RegularVacuous,  // no qualifying subset pair exists (eps too large)
  Irregular,       // certified, witness attached
  NotRefuted,      // sampled check found no witness
};

const char* regularity_verdict_name(RegularityVerdict v);

struct RegularPairStats {
  int size_x = 0;
  int size_y = 0;
  Rational density;
  Rational eps;
  int delta_xy = 0;  // min degree from the X part into the Y part
  int delta_yx = 0;
  int max_xy = 0;
  int max_yx = 0;
  RegularityVerdict verdict = RegularityVerdict::Regular;
  std::vector<int> witness_a;  // host X indices; Irregular only
  std::vector<int> witness_b;
  Rational witness_density;
  std::int64_t trials = 0;  // sampled runs only
};

// Exhaustive check of the regularity definition; both sides <= 14.
RegularPairStats check_regular_exact(const HostGraph& g, const std::vector<int>& xs,
                                     const std::vector<int>& ys, const Rational& eps);

// One-sided randomized check sampling subset pairs at sizes just above the
// eps threshold. Irregular verdicts carry a verified witness.
RegularPairStats check_regular_sampled(const HostGraph& g, const std::vector<int>& xs,
                                       const std::vector<int>& ys, const Rational& eps,
                                       std::int64_t trials, std::uint64_t seed = 1);

struct SuperRegularReport {
  RegularPairStats regularity;
  bool degrees_ok = false;
  std::vector<int> failing_x;  // vertices with d(x, Y) <= delta
  std::vector<int> failing_y;
  bool super_regular = false;
};

// Regularity (exact when both sides <= 14, sampled otherwise) plus the
// per-vertex density threshold d(x,Y) > delta on both sides.
SuperRegularReport check_super_regular(const HostGraph& g, const std::vector<int>& xs,
                                       const std::vector<int>& ys, const Rational& eps,
                                       const Rational& delta, std::int64_t trials = 2000,
                                       std::uint64_t seed = 1);

struct BicliqueEmbedding {
  std::vector<int> xs;  // a chosen host X vertices
  std::vector<int> ys;  // b common neighbors
};

// Greedy K_{a,b} construction in a dense pair, exact-search fallback.
BicliqueEmbedding embed_in_regular_pair(const HostGraph& g, const std::vector<int>& xs,
                                        const std::vector<int>& ys, int a, int b);

}  // namespace bitile

#endif
