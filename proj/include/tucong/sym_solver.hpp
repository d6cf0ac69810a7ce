#pragma once

// Symmetric solver: optimize the aggregated load via an LP over the
// y-variables, then split it into per-player 0/1 strategies through the
// integer decomposition property of the TU polytope.

#include <cstddef>
#include <vector>

#include "tucong/lp.hpp"
#include "tucong/model.hpp"

namespace tucong {

// Block LP over y^1..y^N in [0,1]^n: minimize sum_j sum_i d_j(i) y^i_j
// subject to N*b_lo <= sum_i A y^i <= N*b_hi.
inline LinearProgram build_aggregated_lp(const TUSystem& sys, const DelayTable& d,
                                         std::size_t players) {
  sys.validate();
  d.validate();
  const std::size_t n = sys.num_resources(), m = sys.a.rows;
  LinearProgram lp;
  lp.objective.resize(players * n);
  for (std::size_t i = 0; i < players; ++i)
    for (std::size_t j = 0; j < n; ++j) lp.objective[i * n + j] = Rat(d.rows[j][i]);
  lp.constraints = IntMatrix(m, players * n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i < players; ++i)
      for (std::size_t j = 0; j < n; ++j) lp.constraints.at(r, i * n + j) = sys.a.at(r, j);
  lp.row_lo.resize(m);
  lp.row_hi.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    lp.row_lo[r] = sys.row_lo[r].finite ? Bound::at(Int(players) * sys.row_lo[r].value)
                                        : Bound::none();
    lp.row_hi[r] = sys.row_hi[r].finite ? Bound::at(Int(players) * sys.row_hi[r].value)
                                        : Bound::none();
  }
  lp.var_lo.assign(players * n, Int(0));
  lp.var_hi.assign(players * n, Int(1));
  return lp;
}

// Solves the aggregated LP and folds y into z_j = sum_i y^i_j.
inline AggregatedLoad solve_aggregated(const TUSystem& sys, const DelayTable& d,
                                       std::size_t players) {
  LinearProgram lp = build_aggregated_lp(sys, d, players);
  LpOutcome out = solve_lp(lp);
  if (out.status == LpStatus::Infeasible)
    throw InfeasibleError("aggregated problem: no feasible state");
  if (out.status != LpStatus::Optimal)
    throw InternalInvariantError("aggregated problem: unbounded on a box domain");
  if (!is_integral(out.solution))
    throw InternalInvariantError("aggregated LP returned a non-integral vertex on a TU system");
  const std::size_t n = sys.num_resources();
  AggregatedLoad load;
  load.z.assign(n, Int(0));
  for (std::size_t i = 0; i < players; ++i)
    for (std::size_t j = 0; j < n; ++j) load.z[j] += rat_num(out.solution[i * n + j]);
  return load;
}

namespace detail {

// The stage polyhedron: s in P, z - s in (k-1)P, 0/1 box intersected with
// [z-(k-1), z].
inline LinearProgram decomposition_stage_lp(const TUSystem& sys, std::size_t remaining,
                                            const IntVec& z) {
  const std::size_t n = sys.num_resources(), m = sys.a.rows;
  const Int k1 = Int(remaining) - 1;
  LinearProgram lp;
  lp.objective.assign(n, Rat(0));
  lp.constraints = sys.a;
  lp.row_lo.resize(m);
  lp.row_hi.resize(m);
  IntVec az = mat_vec(sys.a, z);
  for (std::size_t r = 0; r < m; ++r) {
    // lo = max(b_lo, Az - (k-1) b_hi), hi = min(b_hi, Az - (k-1) b_lo)
    Bound lo = sys.row_lo[r];
    if (sys.row_hi[r].finite) {
      Int alt = az[r] - k1 * sys.row_hi[r].value;
      if (!lo.finite || alt > lo.value) lo = Bound::at(alt);
    }
    Bound hi = sys.row_hi[r];
    if (sys.row_lo[r].finite) {
      Int alt = az[r] - k1 * sys.row_lo[r].value;
      if (!hi.finite || alt < hi.value) hi = Bound::at(alt);
    }
    lp.row_lo[r] = lo;
    lp.row_hi[r] = hi;
  }
  lp.var_lo.resize(n);
  lp.var_hi.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Int lo = z[j] - k1;
    if (lo < 0) lo = 0;
    Int hi = z[j] < 1 ? z[j] : Int(1);
    lp.var_lo[j] = lo;
    lp.var_hi[j] = hi;
  }
  return lp;
}

} // namespace detail

// Splits an integral aggregated load into per-player strategies, peeling one
// vertex per stage and shrinking the multiplier.
inline std::vector<IntVec> decompose(const TUSystem& sys, std::size_t players,
                                     const AggregatedLoad& load) {
  IntVec z = load.z;
  std::vector<IntVec> out;
  for (std::size_t remaining = players; remaining >= 1; --remaining) {
    LinearProgram lp = detail::decomposition_stage_lp(sys, remaining, z);
    LpOutcome v = find_vertex(lp);
    if (v.status != LpStatus::Optimal)
      throw InternalInvariantError(
          "decomposition stage infeasible; contradicts the integer decomposition property");
    if (!is_integral(v.solution))
      throw InternalInvariantError("decomposition stage returned a fractional vertex");
    IntVec x(sys.num_resources());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = rat_num(v.solution[j]);
    if (!sys.contains(x))
      throw InternalInvariantError("decomposition produced an infeasible strategy");
    for (std::size_t j = 0; j < x.size(); ++j) z[j] -= x[j];
    out.push_back(std::move(x));
  }
  for (const Int& r : z)
    if (r != 0) throw InternalInvariantError("decomposition does not sum to the aggregated load");
  return out;
}

// Pure Nash equilibrium of a symmetric TU game: global potential minimizer.
inline GameState solve_symmetric_nash(const GameInstance& inst) {
  inst.validate();
  if (inst.kind != StrategyKind::Tu)
    throw PreconditionError("symmetric solver requires TU strategy systems");
  if (!inst.symmetric)
    throw PreconditionError(
        "asymmetric TU instance: the aggregation algorithm does not apply; "
        "use dynamics or brute force");
  if (inst.players == 0) return GameState::from_strategies({}, inst.resources);
  const TUSystem& sys = inst.tu[0];
  if (find_vertex(sys.relaxation()).status != LpStatus::Optimal)
    throw InfeasibleError("player strategy set is empty");
  AggregatedLoad z = solve_aggregated(sys, inst.delays, inst.players);
  std::vector<IntVec> xs = decompose(sys, inst.players, z);
  return GameState::from_strategies(std::move(xs), inst.resources);
}

// Socially optimal state under weakly convex delays: Nash pipeline on the
// transformed delays d'.
inline GameState solve_symmetric_social(const GameInstance& inst) {
  if (!is_weakly_convex(inst.delays))
    throw PreconditionError(
        "social optimum requires weakly convex delays (NP-hard otherwise)");
  GameInstance prime = inst;
  prime.delays = transform_social(inst.delays);
  return solve_symmetric_nash(prime);
}

} // namespace tucong
