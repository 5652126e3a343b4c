#include "bitile/constructions.hpp"

#include <algorithm>

#include "bitile/arithmetic.hpp"
#include "bitile/error.hpp"

namespace bitile {

const char* witness_case_name(WitnessCase c) {
  switch (c) {
    case WitnessCase::HcfC3plus: return "HcfC3plus";
    case WitnessCase::HcfC2: return "HcfC2";
    case WitnessCase::HcfChi3: return "HcfChi3";
    case WitnessCase::HcfOne: return "HcfOne";
  }
  return {};
}

HostGraph two_block_host(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1) {
  if (x0 + x1 != y0 + y1)
    throw Error(ErrorCode::Unbalanced, "two-block host must be balanced overall");
  if (x0 < 0 || x1 < 0 || y0 < 0 || y1 < 0)
    throw Error(ErrorCode::InvalidArgument, "negative block size");
  std::vector<Edge> edges;
  for (std::int64_t x = 0; x < x0; ++x)
    for (std::int64_t y = 0; y < y0; ++y) edges.emplace_back((int)x, (int)y);
  for (std::int64_t x = 0; x < x1; ++x)
    for (std::int64_t y = 0; y < y1; ++y) edges.emplace_back((int)(x0 + x), (int)(y0 + y));
  return HostGraph::build(static_cast<int>(x0 + x1), edges);
}

ExtremalWitness extremal_construction(const TileGraph& h, std::int64_t m) {
  const std::int64_t hh = h.vertex_count();
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  if ((m * hh) % 2 != 0)
    throw Error(ErrorCode::DivisibilityViolation,
                "m*h must be even so that 2n = mh, got m*h = " + std::to_string(m * hh));
  const std::int64_t n = m * hh / 2;
  const std::int64_t lo = n / 2, hi = (n + 1) / 2;  // floor, ceil

  auto fam = compute_hcf_family(h);
  const std::int64_t u = compute_sigma(h);
  const std::int64_t w = hh - u;

  ExtremalWitness out{HostGraph::build(1, {}), WitnessCase::HcfOne, n, 0, {0, 0}, {0, 0}, ""};
  if (fam.hcf_c >= 3) {
    out.tag = WitnessCase::HcfC3plus;
    out.block_x[0] = hi;
    out.block_y[0] = lo + 1;
    out.block_x[1] = lo;
    out.block_y[1] = hi - 1;
    out.obstruction =
        "block orders differ by 2 but component orders of H are multiples of hcf_c = " +
        std::to_string(fam.hcf_c) + " >= 3, so no arrangement balances the blocks";
  } else if (fam.hcf_c == 2) {
    out.tag = WitnessCase::HcfC2;
    if (n % 2 == 1) {
      out.block_x[0] = hi;
      out.block_y[0] = lo;
      out.block_x[1] = lo;
      out.block_y[1] = hi;
    } else {
      out.block_x[0] = n / 2;
      out.block_y[0] = n / 2 + 1;
      out.block_x[1] = n / 2;
      out.block_y[1] = n / 2 - 1;
    }
    out.obstruction =
        "every component of H has even order while both host blocks have odd order";
  } else if (fam.hcf_c == 1 && fam.hcf_chi.kind == HcfValue::Finite && fam.hcf_chi.value >= 3) {
    out.tag = WitnessCase::HcfChi3;
    out.block_x[0] = lo + 1;
    out.block_y[0] = hi - 1;
    out.block_x[1] = hi - 1;
    out.block_y[1] = lo + 1;
    out.obstruction =
        "block color classes differ by 1 or 2 but per-component imbalances are multiples of "
        "hcf_chi_c >= 3";
  } else if (fam.indicator) {
    out.tag = WitnessCase::HcfOne;
    if ((n * u) % hh != 0 || (n * w) % hh != 0)
      throw Error(ErrorCode::DivisibilityViolation,
                  "case 4 needs h | nu and h | nw; smallest valid m is " +
                      std::to_string(smallest_admissible_m(h)));
    out.block_x[0] = n * u / hh - 1;
    out.block_y[0] = n * w / hh + 1;
    out.block_x[1] = n * w / hh + 1;
    out.block_y[1] = n * u / hh - 1;
    if (out.block_x[0] < 1)
      throw Error(ErrorCode::DivisibilityViolation, "m too small: empty block in case 4");
    out.obstruction = "sigma(G) = mu - 2 < mu = m * sigma(H), so no H-factor arrangement exists";
  } else {
    // hcf_c = 1 with hcf_chi = 2 and indicator false cannot occur for
    // bipartite H; reaching this means the case analysis is broken.
    throw Error(ErrorCode::NoCaseApplies,
                "no construction case applies (hcf_c = " + std::to_string(fam.hcf_c) +
                    ", hcf_chi = " + fam.hcf_chi.str() + ")");
  }

  out.host = two_block_host(out.block_x[0], out.block_y[0], out.block_x[1], out.block_y[1]);
  std::int64_t claim;
  if (out.tag == WitnessCase::HcfOne) {
    claim = n * u / hh - 1;
  } else {
    claim = (n + 1) / 2 - 1;
  }
  out.claimed_min_degree = claim;
  if (out.host.min_degree() != claim)
    throw Error(ErrorCode::NoCaseApplies,
                "constructed min degree " + std::to_string(out.host.min_degree()) +
                    " does not match the claimed " + std::to_string(claim));
  return out;
}

std::int64_t smallest_admissible_m(const TileGraph& h) {
  const std::int64_t hh = h.vertex_count();
  for (std::int64_t m = 1; m <= 4 * hh * hh; ++m) {
    if ((m * hh) % 2 != 0) continue;
    try {
      extremal_construction(h, m);
      return m;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorCode::NoCaseApplies, "no admissible m found");
}

NoFactorReport verify_no_factor(const ExtremalWitness& witness, const TileGraph& h,
                                const SolveBudget& budget) {
  NoFactorReport rep;
  rep.analytic = witness.obstruction;
  if (2 * witness.n > 32) {
    rep.solver_ran = false;
    return rep;
  }
  try {
    rep.factor_found = has_h_factor(witness.host, h, budget);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded)
      throw Error(ErrorCode::InstanceTooLarge, "solver budget exceeded; analytic report only");
    throw;
  }
  rep.solver_ran = true;
  return rep;
}

}  // namespace bitile
