#pragma once

// Polymatroid games: greedy minimization of separable objectives over the
// sum polymatroid, stepwise decomposition into per-player vectors, and the
// matroid / base-game solvers built on top.

#include <cstddef>
#include <string>
#include <vector>

#include "tucong/model.hpp"

namespace tucong {

// v lies in the sum polymatroid of the oracles: v >= 0 and
// v(U) <= sum_i g_i(U) for every subset U.
inline bool membership(const std::vector<PolymatroidOracle>& oracles, const IntVec& v) {
  if (oracles.empty()) {
    for (const Int& x : v)
      if (x != 0) return false;
    return true;
  }
  const std::size_t n = oracles[0].ground;
  if (n > 20) throw PreconditionError("polymatroid membership: ground set above cap 20");
  if (v.size() != n) return false;
  for (const Int& x : v)
    if (x < 0) return false;
  for (const PolymatroidOracle& g : oracles)
    if (g.ground != n) throw PreconditionError("polymatroid membership: mismatched ground sets");
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Int lhs = 0, rhs = 0;
    for (std::size_t e = 0; e < n; ++e)
      if (mask >> e & 1) lhs += v[e];
    for (const PolymatroidOracle& g : oracles) rhs += g.value(mask);
    if (lhs > rhs) return false;
  }
  return true;
}

namespace detail {

// Nondecreasing first differences of f, given as the table f(0..cap).
inline void require_convex_table(const IntVec& f, std::size_t j) {
  for (std::size_t i = 2; i < f.size(); ++i)
    if (f[i - 1] - f[i - 2] > f[i] - f[i - 1])
      throw PreconditionError("greedy: objective for resource " + std::to_string(j) +
                              " is not weakly convex");
}

} // namespace detail

// Minimizes sum_j f_j(z_j) over the sum polymatroid by taking the cheapest
// feasible unit increment while one with a negative marginal exists.
// f[j] is the table f_j(0), f_j(1), ..., all the same length.
inline AggregatedLoad greedy_min_separable(const std::vector<PolymatroidOracle>& oracles,
                                           const std::vector<IntVec>& f) {
  const std::size_t n = oracles.empty() ? f.size() : oracles[0].ground;
  if (n > 20) throw PreconditionError("greedy: ground set above cap 20");
  if (f.size() != n) throw PreconditionError("greedy: one objective table per resource");
  for (std::size_t j = 0; j < n; ++j) {
    if (f[j].empty() || f[j][0] != 0)
      throw PreconditionError("greedy: objective tables must start at f(0) = 0");
    detail::require_convex_table(f[j], j);
  }
  AggregatedLoad out;
  out.z.assign(n, Int(0));
  IntVec probe = out.z;
  for (;;) {
    bool found = false;
    std::size_t best_j = 0;
    Int best_marginal = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t cur = out.z[j].convert_to<std::size_t>();
      if (cur + 1 >= f[j].size()) continue;
      Int marginal = f[j][cur + 1] - f[j][cur];
      if (marginal >= 0) continue;
      if (found && marginal >= best_marginal) continue;
      probe[j] += 1;
      bool ok = membership(oracles, probe);
      probe[j] -= 1;
      if (!ok) continue;
      found = true;
      best_j = j;
      best_marginal = marginal;
    }
    if (!found) return out;
    out.z[best_j] += 1;
    probe[best_j] += 1;
  }
}

namespace detail {

// Lexicographically largest integer x with x <= z, x in the polymatroid of
// gi, and z - x in the polymatroid of grest (tables indexed by mask).
// Backtracking over coordinates; once a coordinate is fixed, every subset
// constraint involving only fixed coordinates is final and prunes the
// branch. A greedy maximal vector is not enough here: which units player i
// absorbs decides whether the rest can cover the residual.
inline bool stage_vector(const IntVec& gi, const IntVec& grest, const IntVec& z, IntVec& x,
                         std::size_t r) {
  const std::size_t n = z.size();
  if (r == n) return true;
  for (Int v = z[r]; v >= 0; --v) {
    x[r] = v;
    bool ok = true;
    const std::size_t below = std::size_t{1} << r;
    for (std::size_t sub = 0; ok && sub < below; ++sub) {
      std::size_t mask = sub | below;
      Int xs = 0, zs = 0;
      for (std::size_t e = 0; e <= r; ++e)
        if (mask >> e & 1) {
          xs += x[e];
          zs += z[e];
        }
      if (xs > gi[mask] || zs - xs > grest[mask]) ok = false;
    }
    if (ok && stage_vector(gi, grest, z, x, r + 1)) return true;
  }
  x[r] = 0;
  return false;
}

} // namespace detail

// Splits z across the players: each player in turn takes a vector of its
// polymatroid chosen so the residual load still lies in the sum polymatroid
// of the remaining players; the last player takes the residual outright.
inline std::vector<IntVec> decompose_polymatroid(const std::vector<PolymatroidOracle>& oracles,
                                                 const AggregatedLoad& load) {
  if (!membership(oracles, load.z))
    throw PreconditionError("polymatroid decomposition: z outside the sum polymatroid");
  const std::size_t players = oracles.size();
  std::vector<IntVec> out;
  if (players == 0) return out;
  const std::size_t n = oracles[0].ground;
  IntVec z = load.z;
  for (std::size_t i = 0; i + 1 < players; ++i) {
    IntVec grest(std::size_t{1} << n, Int(0));
    for (std::size_t k = i + 1; k < players; ++k)
      for (std::size_t mask = 0; mask < grest.size(); ++mask)
        grest[mask] += oracles[k].table[mask];
    IntVec x(n, Int(0));
    if (!detail::stage_vector(oracles[i].table, grest, z, x, 0))
      throw InternalInvariantError("polymatroid decomposition: no stage vector exists");
    std::vector<PolymatroidOracle> rest(oracles.begin() + i + 1, oracles.end());
    IntVec residual = z;
    for (std::size_t r = 0; r < n; ++r) residual[r] -= x[r];
    if (!detail::poly_member_single(oracles[i], x) || !membership(rest, residual))
      throw InternalInvariantError("polymatroid decomposition: unsound stage vector");
    z = std::move(residual);
    out.push_back(std::move(x));
  }
  if (!detail::poly_member_single(oracles.back(), z))
    throw InternalInvariantError("polymatroid decomposition: residual infeasible for last player");
  out.push_back(std::move(z));
  return out;
}

// N oracles plus delays long enough for the maximum possible load.
struct PolymatroidGame {
  std::vector<PolymatroidOracle> oracles;
  PolyMode mode = PolyMode::IndependentSet;
  DelayTable delays;

  GameInstance to_instance() const {
    GameInstance inst;
    inst.players = oracles.size();
    inst.resources = oracles.empty() ? delays.resources() : oracles[0].ground;
    inst.kind = StrategyKind::Polymatroid;
    inst.poly = oracles;
    inst.mode = mode;
    inst.delays = delays;
    inst.symmetric = inst.compute_symmetric();
    inst.validate();
    return inst;
  }

  static PolymatroidGame from_instance(const GameInstance& inst) {
    if (inst.kind != StrategyKind::Polymatroid)
      throw PreconditionError("polymatroid solver requires polymatroid descriptors");
    PolymatroidGame game;
    game.oracles = inst.poly;
    game.mode = inst.mode;
    game.delays = inst.delays;
    return game;
  }
};

// Matroid rank functions are the oracles with unit increments.
inline bool has_unit_increments(const PolymatroidOracle& g) {
  for (std::size_t mask = 0; mask < g.table.size(); ++mask)
    for (std::size_t e = 0; e < g.ground; ++e) {
      if (mask >> e & 1) continue;
      if (g.value(mask | (std::size_t{1} << e)) - g.value(mask) > 1) return false;
    }
  return true;
}

struct PolymatroidSolveResult {
  GameState state;
  // Nash guarantees are stated for matroid rank oracles; general polymatroid
  // oracles are solved by the same pipeline but flagged here.
  bool within_guarantees = true;
  std::string note;
};

namespace detail {

inline std::vector<IntVec> potential_tables(const DelayTable& d) {
  std::vector<IntVec> f(d.resources());
  for (std::size_t j = 0; j < d.resources(); ++j) {
    f[j].resize(d.load_cap() + 1);
    f[j][0] = 0;
    for (std::size_t i = 1; i <= d.load_cap(); ++i) f[j][i] = f[j][i - 1] + d.rows[j][i - 1];
  }
  return f;
}

inline std::vector<IntVec> social_tables(const DelayTable& d) {
  std::vector<IntVec> f(d.resources());
  for (std::size_t j = 0; j < d.resources(); ++j) {
    f[j].resize(d.load_cap() + 1);
    f[j][0] = 0;
    for (std::size_t i = 1; i <= d.load_cap(); ++i) f[j][i] = Int(i) * d.rows[j][i - 1];
  }
  return f;
}

inline GameState poly_pipeline(const PolymatroidGame& game, const std::vector<IntVec>& f,
                               bool base) {
  AggregatedLoad z = greedy_min_separable(game.oracles, f);
  std::vector<IntVec> xs = decompose_polymatroid(game.oracles, z);
  if (base)
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Int total = 0;
      for (const Int& v : xs[i]) total += v;
      if (total != game.oracles[i].rank())
        throw InternalInvariantError("base game: shifted optimum is not a base");
    }
  std::size_t n = game.oracles.empty() ? 0 : game.oracles[0].ground;
  return GameState::from_strategies(std::move(xs), n);
}

} // namespace detail

// Pure Nash equilibrium of a (poly)matroid game: potential minimizer via the
// greedy aggregate; base mode first shifts the delays so bases win.
inline PolymatroidSolveResult solve_matroid_nash(const PolymatroidGame& game) {
  GameInstance inst = game.to_instance();
  PolymatroidSolveResult res;
  for (const PolymatroidOracle& g : game.oracles)
    if (!has_unit_increments(g)) {
      res.within_guarantees = false;
      res.note = "non-matroid polymatroid oracle: Nash output is outside stated guarantees";
    }
  const bool base = game.mode == PolyMode::Base;
  DelayTable d = base ? shift_delays(game.delays, ShiftMode::Nash, inst.resources)
                      : game.delays;
  res.state = detail::poly_pipeline(game, detail::potential_tables(d), base);
  validate_state(inst, res.state);
  return res;
}

// Socially optimal state of a (poly)matroid game with weakly convex delays.
inline GameState solve_polymatroid_social(const PolymatroidGame& game) {
  if (!is_weakly_convex(game.delays))
    throw PreconditionError(
        "social optimum requires weakly convex delays (NP-hard otherwise)");
  GameInstance inst = game.to_instance();
  const bool base = game.mode == PolyMode::Base;
  DelayTable d = base ? shift_delays(game.delays, ShiftMode::Social, inst.resources)
                      : game.delays;
  GameState s = detail::poly_pipeline(game, detail::social_tables(d), base);
  validate_state(inst, s);
  return s;
}

} // namespace tucong
