#pragma once

// Exact best-response dynamics and Nash verification. Each best response for
// a TU player is one LP over its polytope with costs frozen at the other
// players' loads; polymatroid players are handled by exact enumeration.

#include <cstddef>
#include <optional>
#include <vector>

#include "tucong/lp.hpp"
#include "tucong/model.hpp"
#include "tucong/oracle.hpp"

namespace tucong {

namespace detail {

// Loads with player i removed.
inline IntVec loads_without(const GameState& s, std::size_t i, std::size_t resources) {
  IntVec t(resources);
  for (std::size_t j = 0; j < resources; ++j) t[j] = s.load[j] - s.strategies[i][j];
  return t;
}

// Cost of strategy x for player i against the frozen loads t.
inline Int deviation_cost(const GameInstance& inst, const IntVec& t, const IntVec& x) {
  Int cost = 0;
  for (std::size_t j = 0; j < inst.resources; ++j)
    if (x[j] > 0) cost += x[j] * inst.delays.at(j, t[j] + x[j]);
  return cost;
}

} // namespace detail

// Exact cost-minimizing strategy for player i against the rest of s, or
// nullopt when the current strategy is already optimal.
inline std::optional<IntVec> best_response(const GameInstance& inst, const GameState& s,
                                           std::size_t i) {
  if (i >= inst.players) throw PreconditionError("player index out of range");
  validate_state(inst, s);
  IntVec t = detail::loads_without(s, i, inst.resources);
  IntVec best;
  Int best_cost;
  if (inst.kind == StrategyKind::Tu) {
    // 0/1 strategy: cost is linear with c_j = d_j(t_j + 1)
    RatVec c(inst.resources);
    for (std::size_t j = 0; j < inst.resources; ++j) c[j] = Rat(inst.delays.at(j, t[j] + 1));
    LpOutcome out = solve_lp(inst.tu[i].relaxation(c));
    if (out.status != LpStatus::Optimal)
      throw InfeasibleError("best response: player polytope is empty");
    if (!is_integral(out.solution))
      throw InternalInvariantError("best response: fractional vertex on a TU polytope");
    best.resize(inst.resources);
    for (std::size_t j = 0; j < inst.resources; ++j) best[j] = rat_num(out.solution[j]);
    best_cost = detail::deviation_cost(inst, t, best);
  } else {
    // multi-unit loads make the cost nonlinear in x; enumerate exactly
    std::vector<IntVec> list = enumerate_player_strategies(inst, i);
    if (list.empty()) throw InfeasibleError("best response: player has no strategy");
    bool first = true;
    for (const IntVec& x : list) {
      Int cost = detail::deviation_cost(inst, t, x);
      if (first || cost < best_cost) {
        best = x;
        best_cost = cost;
        first = false;
      }
    }
  }
  if (best_cost < detail::deviation_cost(inst, t, s.strategies[i])) return best;
  return std::nullopt;
}

enum class DynamicsEnd { NashReached, IterationCap };

struct DynamicsStep {
  std::size_t player;
  Int old_cost;
  Int new_cost;
  Int potential_after;
};

struct DynamicsTrace {
  std::vector<DynamicsStep> steps;
  DynamicsEnd end = DynamicsEnd::NashReached;
};

// One feasible strategy per player for the automatic initial state.
inline GameState initial_state(const GameInstance& inst) {
  std::vector<IntVec> xs;
  for (std::size_t i = 0; i < inst.players; ++i) {
    if (inst.kind == StrategyKind::Tu) {
      LpOutcome out = find_vertex(inst.tu[i].relaxation());
      if (out.status != LpStatus::Optimal)
        throw InfeasibleError("player " + std::to_string(i) + " has no feasible strategy");
      if (!is_integral(out.solution))
        throw InternalInvariantError("initial state: fractional vertex on a TU polytope");
      IntVec x(inst.resources);
      for (std::size_t j = 0; j < inst.resources; ++j) x[j] = rat_num(out.solution[j]);
      xs.push_back(std::move(x));
    } else {
      std::vector<IntVec> list = enumerate_player_strategies(inst, i);
      if (list.empty())
        throw InfeasibleError("player " + std::to_string(i) + " has no feasible strategy");
      xs.push_back(list.front());
    }
  }
  return GameState::from_strategies(std::move(xs), inst.resources);
}

// Round-robin best-response dynamics: per sweep, the first player with an
// improving move takes its best response; stops at a Nash state or at the
// iteration cap.
inline std::pair<GameState, DynamicsTrace> run_dynamics(const GameInstance& inst,
                                                        GameState state, std::size_t cap) {
  inst.validate();
  validate_state(inst, state);
  DynamicsTrace trace;
  Int last_phi = potential(inst, state);
  for (std::size_t iter = 0; iter < cap; ++iter) {
    std::optional<std::size_t> mover;
    std::optional<IntVec> move;
    for (std::size_t i = 0; i < inst.players && !mover; ++i)
      if (auto br = best_response(inst, state, i)) {
        mover = i;
        move = std::move(br);
      }
    if (!mover) {
      trace.end = DynamicsEnd::NashReached;
      return {std::move(state), std::move(trace)};
    }
    Int old_cost = player_cost(inst, state, *mover);
    state.strategies[*mover] = std::move(*move);
    state.load = state.recompute_load(inst.resources);
    Int new_cost = player_cost(inst, state, *mover);
    Int phi = potential(inst, state);
    if (phi - last_phi != new_cost - old_cost || phi >= last_phi)
      throw InternalInvariantError("dynamics: potential did not drop by the cost improvement");
    last_phi = phi;
    trace.steps.push_back({*mover, old_cost, new_cost, phi});
  }
  // a final check so a cap landing exactly on a Nash state is reported as such
  bool settled = true;
  for (std::size_t i = 0; i < inst.players && settled; ++i)
    if (best_response(inst, state, i)) settled = false;
  trace.end = settled ? DynamicsEnd::NashReached : DynamicsEnd::IterationCap;
  return {std::move(state), std::move(trace)};
}

inline std::pair<GameState, DynamicsTrace> run_dynamics(const GameInstance& inst,
                                                        std::size_t cap) {
  return run_dynamics(inst, initial_state(inst), cap);
}

struct NashWitness {
  std::size_t player;
  IntVec better;
};

// Empty result means s is a pure Nash equilibrium; otherwise one improving
// deviation is returned as the witness.
inline std::optional<NashWitness> verify_nash(const GameInstance& inst, const GameState& s) {
  for (std::size_t i = 0; i < inst.players; ++i)
    if (auto br = best_response(inst, s, i)) return NashWitness{i, std::move(*br)};
  return std::nullopt;
}

} // namespace tucong
