#include "bitile/regularity.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "bitile/error.hpp"
#include "bitile/exact_solver.hpp"

namespace bitile {

namespace {

Rational pair_density(const HostGraph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
  return g.density(xs, ys);
}

void fill_degree_stats(const HostGraph& g, const std::vector<int>& xs, const std::vector<int>& ys,
                       RegularPairStats& st) {
  Bitset ymask(g.n()), xmask(g.n());
  for (int y : ys) ymask.set(y);
  for (int x : xs) xmask.set(x);
  st.delta_xy = static_cast<int>(ys.size());
  st.delta_yx = static_cast<int>(xs.size());
  st.max_xy = 0;
  st.max_yx = 0;
  for (int x : xs) {
    int d = static_cast<int>((g.row_x(x) & ymask).count());
    st.delta_xy = std::min(st.delta_xy, d);
    st.max_xy = std::max(st.max_xy, d);
  }
  for (int y : ys) {
    int d = static_cast<int>((g.row_y(y) & xmask).count());
    st.delta_yx = std::min(st.delta_yx, d);
    st.max_yx = std::max(st.max_yx, d);
  }
}

// Qualifying sizes are those with size > eps * whole, strict.
bool size_qualifies(std::int64_t size, std::int64_t whole, const Rational& eps) {
  return Rational(size) > eps * whole;
}

}  // namespace

const char* regularity_verdict_name(RegularityVerdict v) {
  switch (v) {
    case RegularityVerdict::Regular: return "Regular";
    case RegularityVerdict::RegularVacuous: return "RegularVacuous";
    case RegularityVerdict::Irregular: return "Irregular";
    case RegularityVerdict::NotRefuted: return "NotRefuted";
  }
  return {};
}

RegularPairStats check_regular_exact(const HostGraph& g, const std::vector<int>& xs,
                                     const std::vector<int>& ys, const Rational& eps) {
  if (xs.empty() || ys.empty()) throw Error(ErrorCode::EmptySubset, "pair sides must be nonempty");
  if (xs.size() > 14 || ys.size() > 14)
    throw Error(ErrorCode::TooLargeForExact, "exact check limited to sides of at most 14");
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");

  RegularPairStats st;
  st.size_x = static_cast<int>(xs.size());
  st.size_y = static_cast<int>(ys.size());
  st.eps = eps;
  st.density = pair_density(g, xs, ys);
  fill_degree_stats(g, xs, ys, st);

  const int nx = st.size_x, ny = st.size_y;
  bool any_pair_qualifies = false;

  // For a fixed A, density extremes over B of a fixed size are attained by
  // the top / bottom vertices ranked by degree into A, so sorting suffices
  // for an exact verdict.
  std::vector<int> deg(ny);
  for (std::uint32_t amask = 1; amask < (1u << nx); ++amask) {
    int asize = __builtin_popcount(amask);
    if (!size_qualifies(asize, nx, eps)) continue;
    for (int j = 0; j < ny; ++j) deg[j] = 0;
    for (int i = 0; i < nx; ++i) {
      if (!(amask & (1u << i))) continue;
      const Bitset& row = g.row_x(xs[i]);
      for (int j = 0; j < ny; ++j)
        if (row.test(ys[j])) ++deg[j];
    }
    std::vector<int> order(ny);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });

    std::int64_t prefix = 0, total = 0;
    for (int j = 0; j < ny; ++j) total += deg[j];
    for (int b = 1; b <= ny; ++b) {
      prefix += deg[order[b - 1]];
      if (!size_qualifies(b, ny, eps)) continue;
      any_pair_qualifies = true;
      // Top-b edges = prefix; bottom-b edges = total - (edges of top (ny-b)).
      std::int64_t others = 0;
      for (int j = 0; j < ny - b; ++j) others += deg[order[j]];
      std::int64_t emax = prefix;
      std::int64_t emin = total - others;
      for (auto [count, top] : {std::pair<std::int64_t, bool>{emax, true}, {emin, false}}) {
        Rational dens(count, static_cast<std::int64_t>(asize) * b);
        Rational gap = dens - st.density;
        if (gap < 0) gap = -gap;
        if (gap >= eps) {
          st.verdict = RegularityVerdict::Irregular;
          for (int i = 0; i < nx; ++i)
            if (amask & (1u << i)) st.witness_a.push_back(xs[i]);
          for (int j = 0; j < b; ++j)
            st.witness_b.push_back(ys[order[top ? j : ny - 1 - j]]);
          std::sort(st.witness_b.begin(), st.witness_b.end());
          st.witness_density = dens;
          return st;
        }
      }
    }
  }
  st.verdict = any_pair_qualifies ? RegularityVerdict::Regular : RegularityVerdict::RegularVacuous;
  return st;
}

RegularPairStats check_regular_sampled(const HostGraph& g, const std::vector<int>& xs,
                                       const std::vector<int>& ys, const Rational& eps,
                                       std::int64_t trials, std::uint64_t seed) {
  if (xs.empty() || ys.empty()) throw Error(ErrorCode::EmptySubset, "pair sides must be nonempty");
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");

  RegularPairStats st;
  st.size_x = static_cast<int>(xs.size());
  st.size_y = static_cast<int>(ys.size());
  st.eps = eps;
  st.density = pair_density(g, xs, ys);
  fill_degree_stats(g, xs, ys, st);
  st.trials = trials;

  // Smallest qualifying sizes; the definition's quantifier is hardest there.
  auto min_qualifying = [&](int whole) {
    std::int64_t s = floor_of(eps * whole) + 1;
    return s;
  };
  std::int64_t asize = min_qualifying(st.size_x);
  std::int64_t bsize = min_qualifying(st.size_y);
  if (asize > st.size_x || bsize > st.size_y) {
    st.verdict = RegularityVerdict::RegularVacuous;
    return st;
  }

  std::mt19937_64 rng(seed);
  std::vector<int> xpool = xs, ypool = ys;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    std::shuffle(xpool.begin(), xpool.end(), rng);
    std::shuffle(ypool.begin(), ypool.end(), rng);
    std::vector<int> a(xpool.begin(), xpool.begin() + asize);
    std::vector<int> b(ypool.begin(), ypool.begin() + bsize);
    Rational dens = g.density(a, b);
    Rational gap = dens - st.density;
    if (gap < 0) gap = -gap;
    if (gap >= eps) {
      st.verdict = RegularityVerdict::Irregular;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      st.witness_a = std::move(a);
      st.witness_b = std::move(b);
      st.witness_density = dens;
      st.trials = trial + 1;
      return st;
    }
  }
  st.verdict = RegularityVerdict::NotRefuted;
  return st;
}

SuperRegularReport check_super_regular(const HostGraph& g, const std::vector<int>& xs,
                                       const std::vector<int>& ys, const Rational& eps,
                                       const Rational& delta, std::int64_t trials,
                                       std::uint64_t seed) {
  SuperRegularReport rep;
  if (xs.size() <= 14 && ys.size() <= 14) {
    rep.regularity = check_regular_exact(g, xs, ys, eps);
  } else {
    rep.regularity = check_regular_sampled(g, xs, ys, eps, trials, seed);
  }

  Bitset ymask(g.n()), xmask(g.n());
  for (int y : ys) ymask.set(y);
  for (int x : xs) xmask.set(x);
  for (int x : xs) {
    Rational d(static_cast<std::int64_t>((g.row_x(x) & ymask).count()),
               static_cast<std::int64_t>(ys.size()));
    if (!(d > delta)) rep.failing_x.push_back(x);
  }
  for (int y : ys) {
    Rational d(static_cast<std::int64_t>((g.row_y(y) & xmask).count()),
               static_cast<std::int64_t>(xs.size()));
    if (!(d > delta)) rep.failing_y.push_back(y);
  }
  rep.degrees_ok = rep.failing_x.empty() && rep.failing_y.empty();
  bool regular_ok = rep.regularity.verdict == RegularityVerdict::Regular ||
                    rep.regularity.verdict == RegularityVerdict::RegularVacuous ||
                    rep.regularity.verdict == RegularityVerdict::NotRefuted;
  rep.super_regular = regular_ok && rep.degrees_ok;
  return rep;
}

BicliqueEmbedding embed_in_regular_pair(const HostGraph& g, const std::vector<int>& xs,
                                        const std::vector<int>& ys, int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::InvalidArgument, "a and b must be positive");
  if (a > static_cast<int>(xs.size()) || b > static_cast<int>(ys.size()))
    throw Error(ErrorCode::EmbedFailed, "pattern larger than the pair");

  Bitset ymask(g.n());
  for (int y : ys) ymask.set(y);

  // Greedy: repeatedly take the X vertex keeping the joint neighborhood
  // largest; then any b common neighbors.
  Bitset common = ymask;
  std::vector<int> chosen;
  std::vector<bool> used(xs.size(), false);
  for (int step = 0; step < a; ++step) {
    int best = -1;
    size_t best_count = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      if (used[i]) continue;
      size_t c = (g.row_x(xs[i]) & common).count();
      if (best == -1 || c > best_count) {
        best = static_cast<int>(i);
        best_count = c;
      }
    }
    if (best == -1 || best_count < static_cast<size_t>(b)) {
      chosen.clear();
      break;
    }
    used[best] = true;
    chosen.push_back(xs[best]);
    common &= g.row_x(xs[best]);
  }
  if (static_cast<int>(chosen.size()) == a && common.count() >= static_cast<size_t>(b)) {
    BicliqueEmbedding out;
    out.xs = chosen;
    for (auto y = common.find_first(); y != Bitset::npos && static_cast<int>(out.ys.size()) < b;
         y = common.find_next(y))
      out.ys.push_back(static_cast<int>(y));
    return out;
  }

  // Exact fallback: exhaustive search for an X subset with a large enough
  // joint neighborhood.
  std::vector<int> pick;
  BicliqueEmbedding out;
  std::int64_t nodes = 0;
  auto dfs = [&](auto&& self, size_t start, Bitset cnb) -> bool {
    if (++nodes > 5'000'000) throw Error(ErrorCode::EmbedFailed, "fallback search budget exhausted");
    if (static_cast<int>(pick.size()) == a) {
      if (cnb.count() < static_cast<size_t>(b)) return false;
      out.xs = pick;
      for (auto y = cnb.find_first(); y != Bitset::npos && static_cast<int>(out.ys.size()) < b;
           y = cnb.find_next(y))
        out.ys.push_back(static_cast<int>(y));
      return true;
    }
    for (size_t i = start; i < xs.size(); ++i) {
      Bitset next = cnb & g.row_x(xs[i]);
      if (next.count() < static_cast<size_t>(b)) continue;
      pick.push_back(xs[i]);
      if (self(self, i + 1, next)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (dfs(dfs, 0, ymask)) return out;
  throw Error(ErrorCode::EmbedFailed,
              "no K_{" + std::to_string(a) + "," + std::to_string(b) + "} in the pair");
}

}  // namespace bitile
