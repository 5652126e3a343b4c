#include "bitile/complete_tiler.hpp"

#include <algorithm>

#include "bitile/error.hpp"

namespace bitile {

namespace {

std::vector<int> take_range(std::int64_t& counter, int count) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = static_cast<int>(counter++);
  return out;
}

// Builds copies on an implicit complete host: vertex indices are handed out
// in one fixed scan over copies and components, so output is deterministic.
TilingAssignment assemble(const TileGraph& h, const std::vector<std::vector<bool>>& swapped,
                          std::int64_t size_x, std::int64_t size_y) {
  TilingAssignment out;
  std::int64_t next_x = 0, next_y = 0;
  const auto& comps = h.components();
  for (const auto& copy_flags : swapped) {
    PlacedCopy copy;
    for (size_t j = 0; j < comps.size(); ++j) {
      PlacedComponent piece;
      piece.component = static_cast<int>(j);
      piece.swapped = copy_flags[j];
      int ui = static_cast<int>(comps[j].u_side.size());
      int wi = static_cast<int>(comps[j].w_side.size());
      int on_x = piece.swapped ? wi : ui;
      int on_y = piece.swapped ? ui : wi;
      piece.x_vertices = take_range(next_x, on_x);
      piece.y_vertices = take_range(next_y, on_y);
      copy.pieces.push_back(std::move(piece));
    }
    out.copies.push_back(std::move(copy));
  }
  if (next_x > size_x || next_y > size_y)
    throw Error(ErrorCode::PreconditionViolated,
                "assembled copies exceed host sides (internal accounting)");
  for (std::int64_t x = next_x; x < size_x; ++x) out.leftover_x.push_back(static_cast<int>(x));
  for (std::int64_t y = next_y; y < size_y; ++y) out.leftover_y.push_back(static_cast<int>(y));
  return out;
}

}  // namespace

TileGraph make_complete_bipartite(int u, int w) {
  std::vector<Edge> edges;
  for (int a = 0; a < u; ++a)
    for (int b = 0; b < w; ++b) edges.emplace_back(a, u + b);
  return TileGraph::build(u + w, edges);
}

TilingAssignment factor_complete(const TileGraph& h, std::int64_t m, std::int64_t t) {
  auto fam = compute_hcf_family(h);
  if (!fam.hcf_chi_c.is_one())
    throw Error(ErrorCode::PreconditionViolated,
                "factor_complete requires hcf_chi_c(H) = 1, got " + fam.hcf_chi_c.str());
  const std::int64_t u = compute_sigma(h);
  const std::int64_t w = h.vertex_count() - u;
  if (u >= w) throw Error(ErrorCode::PreconditionViolated, "factor_complete requires u < w");
  if (t < 0) throw Error(ErrorCode::PreconditionViolated, "t must be nonnegative");
  if (m < 1) throw Error(ErrorCode::PreconditionViolated, "m must be positive");

  const std::int64_t q = t / (w - u);
  const std::int64_t r = t % (w - u);
  auto beta = beta_coefficients(h);
  const std::int64_t beta_max = beta.max_abs;
  if (m < r * beta_max + q)
    throw Error(ErrorCode::PreconditionViolated,
                "m >= r*beta + q fails: " + std::to_string(m) + " < " +
                    std::to_string(r * beta_max + q));
  if (q < r * beta_max)
    throw Error(ErrorCode::PreconditionViolated, "q >= r*beta fails: " + std::to_string(q) +
                                                     " < " + std::to_string(r * beta_max));

  const auto& comps = h.components();
  // Stage (i): natural factor shape; stage (ii): fully swap the first q copies.
  std::vector<std::vector<bool>> swapped(m, std::vector<bool>(comps.size(), false));
  for (std::int64_t i = 0; i < q; ++i) swapped[i].assign(comps.size(), true);
  // Stage (iii): swap r*beta_j pieces of C_j among unswapped copies when
  // beta_j > 0, and -r*beta_j pieces back among swapped copies when
  // beta_j < 0; lowest-indexed eligible copies first.
  for (size_t j = 0; j < comps.size(); ++j) {
    std::int64_t bj = beta.values[j];
    if (bj > 0) {
      std::int64_t count = r * bj;
      if (count > m - q)
        throw Error(ErrorCode::PreconditionViolated, "not enough unswapped copies for stage 3");
      for (std::int64_t i = q; i < q + count; ++i) swapped[i][j] = true;
    } else if (bj < 0) {
      std::int64_t count = -r * bj;
      if (count > q)
        throw Error(ErrorCode::PreconditionViolated, "not enough swapped copies for stage 3");
      for (std::int64_t i = 0; i < count; ++i) swapped[i][j] = false;
    }
  }

  // Side accounting must land exactly on K_{mu+t, mw-t}.
  std::int64_t on_x = 0;
  for (const auto& flags : swapped)
    for (size_t j = 0; j < comps.size(); ++j)
      on_x += flags[j] ? comps[j].w_side.size() : comps[j].u_side.size();
  if (on_x != m * u + t)
    throw Error(ErrorCode::PreconditionViolated, "swap accounting mismatch (internal)");

  return assemble(h, swapped, m * u + t, m * w - t);
}

FeasibilityResult feasible_corollary(const TileGraph& h, std::int64_t size_x,
                                     std::int64_t size_y, const Rational& gamma) {
  auto fam = compute_hcf_family(h);
  if (!fam.indicator)
    throw Error(ErrorCode::PreconditionViolated, "feasible_corollary requires hcf(H) = 1");
  const std::int64_t u = compute_sigma(h);
  const std::int64_t hh = h.vertex_count();
  const std::int64_t w = hh - u;
  if (gamma <= 0 || gamma >= Rational(w - u, u))
    throw Error(ErrorCode::PreconditionViolated,
                "gamma must lie in (0, (w-u)/u) = (0, " + to_string(Rational(w - u, u)) + ")");
  if ((size_x + size_y) % hh != 0)
    throw Error(ErrorCode::DivisibilityViolation, "h must divide sizeX + sizeY");

  FeasibilityResult out;
  out.ratio = Rational(size_x, size_y);
  out.ratio_lower = (Rational(1) + gamma) * Rational(u, w);
  const std::int64_t beta_max = beta_coefficients(h).max_abs;
  out.m_bound = Rational((w - u) * (w - u) * beta_max) * (Rational(hh) + u * gamma) /
                (Rational(u * w) * gamma);

  if (out.ratio < out.ratio_lower || out.ratio > 1) {
    out.reason = "ratio outside window";
    return out;
  }
  const std::int64_t m = (size_x + size_y) / hh;
  if (Rational(m) < out.m_bound) {
    out.reason = "m below admissibility bound";
    return out;
  }
  CompleteTilingSpec spec;
  spec.m = m;
  spec.t = size_x - m * u;
  spec.q = spec.t / (w - u);
  spec.r = spec.t % (w - u);
  if (m < spec.r * beta_max + spec.q || spec.q < spec.r * beta_max) {
    out.reason = "swap-factor inequalities fail despite admissibility bound";
    return out;
  }
  out.feasible = true;
  out.params = spec;
  return out;
}

std::pair<TilingAssignment, LeftoverReport> kuw_almost_tiling(int u, int w, std::int64_t size_x,
                                                              std::int64_t size_y) {
  if (u < 1 || u >= w) throw Error(ErrorCode::PreconditionViolated, "needs 1 <= u < w");
  const std::int64_t hh = u + w;
  if (size_x < 0 || size_y < 1)
    throw Error(ErrorCode::RatioViolation, "host sides must be positive");
  if (Rational(size_x, size_y) < Rational(u, w) || size_x > size_y)
    throw Error(ErrorCode::RatioViolation,
                "sizeX/sizeY must lie in [u/w, 1], got " + to_string(Rational(size_x, size_y)));

  TileGraph kuw = make_complete_bipartite(u, w);
  LeftoverReport rep;
  rep.residue = (size_x + size_y) % hh;
  const std::int64_t m = (size_x + size_y) / hh;
  const std::int64_t t = size_x - m * u;  // ratio window makes t >= 0
  const std::int64_t qd = m == 0 ? 0 : t / (w - u);
  const std::int64_t p = m == 0 ? 0 : t % (w - u);
  rep.p = p;
  rep.q = qd;

  std::int64_t w_in_x = 0, w_in_y = 0;
  if (m == 0) {
    // Host smaller than one copy; everything is leftover, total <= h - 1.
  } else if (p <= rep.residue) {
    // At small m the proof's q can exceed m; capping keeps the leftover at
    // exactly the residue, which still meets the bound.
    w_in_x = std::min(qd, m);
    w_in_y = m - w_in_x;
  } else {
    w_in_x = qd;
    w_in_y = m - qd - 1;
  }

  std::vector<std::vector<bool>> flags;
  for (std::int64_t i = 0; i < w_in_y; ++i) flags.push_back({false});
  for (std::int64_t i = 0; i < w_in_x; ++i) flags.push_back({true});
  TilingAssignment tiling = assemble(kuw, flags, size_x, size_y);
  rep.leftover_x = static_cast<std::int64_t>(tiling.leftover_x.size());
  rep.leftover_y = static_cast<std::int64_t>(tiling.leftover_y.size());
  rep.copies_w_in_y = w_in_y;
  return {std::move(tiling), rep};
}

std::pair<TilingAssignment, LeftoverReport> kuw_deficit_tiling(int u, int w, std::int64_t m,
                                                               std::int64_t c) {
  if (u < 1 || u >= w) throw Error(ErrorCode::PreconditionViolated, "needs 1 <= u < w");
  if (c < 0 || m <= c) throw Error(ErrorCode::PreconditionViolated, "needs m > c >= 0");
  const std::int64_t size_x = m * u - c;
  const std::int64_t size_y = m * w + c;

  TileGraph kuw = make_complete_bipartite(u, w);
  LeftoverReport rep;
  rep.residue = 0;
  const std::int64_t p = c / u;
  const std::int64_t qp = c % u;
  rep.p = p;
  rep.q = qp;

  std::int64_t copies = qp == 0 ? m - p : m - p - 1;
  std::vector<std::vector<bool>> flags(copies, std::vector<bool>{false});
  TilingAssignment tiling = assemble(kuw, flags, size_x, size_y);
  rep.leftover_x = static_cast<std::int64_t>(tiling.leftover_x.size());
  rep.leftover_y = static_cast<std::int64_t>(tiling.leftover_y.size());
  rep.copies_w_in_y = copies;
  return {std::move(tiling), rep};
}

}  // namespace bitile
