#include "bitile/arithmetic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bitile/error.hpp"

namespace bitile {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Set of values sum e_i * d_i over e_i in {-1, +1}.
std::set<std::int64_t> signed_sums(const std::vector<int>& ds) {
  std::set<std::int64_t> reach{0};
  for (int d : ds) {
    std::set<std::int64_t> next;
    for (auto s : reach) {
      next.insert(s + d);
      next.insert(s - d);
    }
    reach = std::move(next);
  }
  return reach;
}

}  // namespace

std::string HcfValue::str() const {
  switch (kind) {
    case Finite: return std::to_string(value);
    case Infinite: return "infinity";
    case NoImbalance: return "no_imbalance";
  }
  return {};
}

const char* regime_name(ThresholdRegime r) {
  switch (r) {
    case ThresholdRegime::CriticalChromatic: return "CriticalChromatic";
    case ThresholdRegime::ZhaoExact: return "ZhaoExact";
    case ThresholdRegime::ChromaticUpper: return "ChromaticUpper";
  }
  return {};
}

int compute_sigma(const TileGraph& h) {
  auto sums = signed_sums(h.component_imbalances());
  std::int64_t best = 0;
  for (auto s : sums) best = std::max(best, s < 0 ? -s : s);
  return static_cast<int>((h.vertex_count() - best) / 2);
}

Rational compute_chi_cr(const TileGraph& h) {
  if (h.edge_count() == 0)
    throw Error(ErrorCode::EdgelessPattern, "chi_cr undefined for edgeless patterns");
  int u = compute_sigma(h);
  return Rational(h.vertex_count(), h.vertex_count() - u);
}

HcfFamily compute_hcf_family(const TileGraph& h) {
  HcfFamily out;
  std::int64_t gc = 0;
  for (int c : h.component_sizes()) gc = gcd64(gc, c);
  out.hcf_c = gc;

  auto ds = h.component_imbalances();
  std::set<std::int64_t> diffs;
  for (auto s : signed_sums(ds)) diffs.insert(s < 0 ? -s : s);
  out.difference_set.assign(diffs.begin(), diffs.end());

  std::int64_t gchi = 0;
  for (auto v : diffs) gchi = gcd64(gchi, v);
  if (gchi == 0) {
    out.hcf_chi = {HcfValue::Infinite, 0};
  } else {
    out.hcf_chi = {HcfValue::Finite, gchi};
  }

  std::int64_t gdc = 0;
  for (int d : ds) gdc = gcd64(gdc, d);
  if (gdc == 0) {
    out.hcf_chi_c = {HcfValue::NoImbalance, 0};
  } else {
    out.hcf_chi_c = {HcfValue::Finite, gdc};
  }

  out.indicator = out.hcf_c == 1 && out.hcf_chi.at_most(2);
  return out;
}

BezoutResult bezout_bounded(const std::vector<std::int64_t>& a) {
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "bezout needs at least one entry");
  std::int64_t target = 0, max_a = 0;
  for (auto v : a) {
    if (v < 1) throw Error(ErrorCode::InvalidArgument, "bezout entries must be positive");
    target = gcd64(target, v);
    max_a = std::max(max_a, v);
  }
  const int k = static_cast<int>(a.size());

  // Suffix gcds and suffix coefficient capacity, for pruning.
  std::vector<std::int64_t> suffix_gcd(k + 1, 0), suffix_sum(k + 1, 0);
  for (int i = k - 1; i >= 0; --i) {
    suffix_gcd[i] = gcd64(suffix_gcd[i + 1], a[i]);
    suffix_sum[i] = suffix_sum[i + 1] + a[i];
  }

  std::vector<std::int64_t> coeff(k, 0), found;
  // Depth-first in lexicographic order; the first full assignment reaching
  // the target under the current max-norm bound is the answer for that bound.
  auto dfs = [&](auto&& self, int idx, std::int64_t remaining, std::int64_t bound) -> bool {
    if (idx == k) return remaining == 0;
    if (remaining % (suffix_gcd[idx] == 0 ? 1 : suffix_gcd[idx]) != 0) return false;
    if (remaining > bound * suffix_sum[idx] || remaining < -bound * suffix_sum[idx]) return false;
    for (std::int64_t b = -bound; b <= bound; ++b) {
      coeff[idx] = b;
      if (self(self, idx + 1, remaining - b * a[idx], bound)) return true;
    }
    return false;
  };

  // Fact-1.5 guarantees a solution with max-norm at most max a_i.
  for (std::int64_t bound = 0; bound <= max_a; ++bound) {
    if (dfs(dfs, 0, target, bound)) {
      return {target, coeff};
    }
  }
  throw Error(ErrorCode::SearchFailed, "no bounded coefficients found (unreachable)");
}

namespace {

CoefficientVector compute_zeta(const TileGraph& h, const HcfFamily& fam) {
  if (fam.hcf_c != 1)
    throw Error(ErrorCode::HcfNotOne,
                "zeta requires hcf_c(H) = 1, got " + std::to_string(fam.hcf_c));
  std::vector<std::int64_t> cs;
  for (int c : h.component_sizes()) cs.push_back(c);
  CoefficientVector out;
  out.values = bezout_bounded(cs).coefficients;
  for (auto z : out.values) out.max_abs = std::max(out.max_abs, z < 0 ? -z : z);
  return out;
}

CoefficientVector compute_beta(const TileGraph& h, const HcfFamily& fam) {
  if (!fam.hcf_chi_c.is_one())
    throw Error(ErrorCode::HcfNotOne,
                "beta requires hcf_chi_c(H) = 1, got " + fam.hcf_chi_c.str());
  auto ds = h.component_imbalances();
  std::vector<std::int64_t> nonzero;
  std::vector<size_t> where;
  for (size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] != 0) {
      nonzero.push_back(ds[i]);
      where.push_back(i);
    }
  }
  auto br = bezout_bounded(nonzero);
  CoefficientVector out;
  out.values.assign(ds.size(), 0);
  for (size_t i = 0; i < where.size(); ++i) out.values[where[i]] = br.coefficients[i];
  for (auto b : out.values) out.max_abs = std::max(out.max_abs, b < 0 ? -b : b);
  return out;
}

}  // namespace

ZetaBeta zeta_beta(const TileGraph& h) {
  auto fam = compute_hcf_family(h);
  return {compute_zeta(h, fam), compute_beta(h, fam)};
}

CoefficientVector zeta_coefficients(const TileGraph& h) {
  return compute_zeta(h, compute_hcf_family(h));
}

CoefficientVector beta_coefficients(const TileGraph& h) {
  return compute_beta(h, compute_hcf_family(h));
}

TilingConstants constants(const TileGraph& h) {
  auto fam = compute_hcf_family(h);
  if (!fam.indicator)
    throw Error(ErrorCode::HcfNotOne, "c1(H) requires hcf(H) = 1");
  auto zb = zeta_beta(h);
  const std::int64_t hh = h.vertex_count();
  const std::int64_t u = compute_sigma(h);
  const std::int64_t w = hh - u;

  TilingConstants out;
  out.c1 = Rational(zb.zeta.max_abs) * hh * hh + Rational(zb.beta.max_abs) * (w - u) * (w - u) +
           (Rational(hh, 2) + 1) * (w - u) + w;
  out.c1_ceil = ceil_of(out.c1);
  out.c2_bound = 8 * hh * hh;
  out.c2_extremal = Rational(4 * hh * hh);
  out.c2_nonextremal = Rational(4 * w, u) * (hh + w - u - 2);
  return out;
}

ThresholdResult threshold(const TileGraph& h, std::int64_t n) {
  const std::int64_t hh = h.vertex_count();
  if ((2 * n) % hh != 0)
    throw Error(ErrorCode::DivisibilityViolation,
                "h = " + std::to_string(hh) + " must divide 2n = " + std::to_string(2 * n));
  auto fam = compute_hcf_family(h);
  const std::int64_t u = compute_sigma(h);
  const std::int64_t w = hh - u;

  ThresholdResult out;
  if (fam.indicator) {
    auto cs = constants(h);
    out.value = Rational(u * n, hh) + cs.c1_ceil;
    out.regime = ThresholdRegime::CriticalChromatic;
    return out;
  }
  out.value = Rational(n, 2) + Rational(3 * hh, 2) - 2;
  if (u == w) {
    out.regime = ThresholdRegime::ZhaoExact;
  } else {
    out.regime = ThresholdRegime::ChromaticUpper;
    out.lower_bound = ceil_of(Rational(n, 2)) - 1;
  }
  return out;
}

TilingParameters analyze(const TileGraph& h) {
  TilingParameters p;
  p.h = h.vertex_count();
  p.u = compute_sigma(h);
  p.w = p.h - p.u;
  p.component_sizes = h.component_sizes();
  p.component_imbalances = h.component_imbalances();
  if (h.edge_count() > 0) p.chi_cr = compute_chi_cr(h);
  p.hcf = compute_hcf_family(h);
  if (p.hcf.hcf_c == 1) p.zeta = compute_zeta(h, p.hcf);
  if (p.hcf.hcf_chi_c.is_one()) p.beta = compute_beta(h, p.hcf);
  if (p.hcf.indicator) p.constants = constants(h);
  return p;
}

}  // namespace bitile
