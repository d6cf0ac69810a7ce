#pragma once

// Brute-force ground truth. Deliberately unclever: these routines are the
// oracles the solvers are tested against, so they stay auditable.

#include <cstddef>
#include <utility>
#include <vector>

#include "tucong/model.hpp"

namespace tucong {

// All 0/1 vectors satisfying the row bounds, in lexicographic order
// (x_1 is the most significant coordinate).
inline std::vector<IntVec> enumerate_strategies(const TUSystem& sys) {
  const std::size_t n = sys.num_resources();
  if (n > 20) throw PreconditionError("enumerate_strategies: more than 20 resources");
  std::vector<IntVec> out;
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    IntVec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = (code >> (n - 1 - j)) & 1;
    if (sys.contains(x)) out.push_back(std::move(x));
  }
  return out;
}

// Integer vectors of one polymatroid, lexicographic.
inline std::vector<IntVec> enumerate_polymatroid_points(const PolymatroidOracle& g) {
  if (g.ground > 5) throw PreconditionError("polymatroid enumeration: |R| above cap 5");
  std::vector<IntVec> out;
  IntVec x(g.ground, Int(0));
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == g.ground) {
      out.push_back(x);
      return;
    }
    for (Int v = 0;; ++v) {
      x[j] = v;
      if (!detail::poly_member_single(g, x)) break;
      self(self, j + 1);
    }
    x[j] = 0;
  };
  rec(rec, 0);
  return out;
}

// Integer vectors of the sum polymatroid of the given oracles.
inline std::vector<IntVec> enumerate_polymatroid_points(
    const std::vector<PolymatroidOracle>& oracles) {
  if (oracles.empty()) return {IntVec{}};
  PolymatroidOracle sum;
  sum.ground = oracles[0].ground;
  sum.table.assign(std::size_t{1} << sum.ground, Int(0));
  for (const PolymatroidOracle& g : oracles) {
    if (g.ground != sum.ground)
      throw PreconditionError("polymatroid enumeration: mismatched ground sets");
    for (std::size_t mask = 0; mask < sum.table.size(); ++mask) sum.table[mask] += g.table[mask];
  }
  Int total = sum.rank();
  if (total > 6) throw PreconditionError("polymatroid enumeration: total rank above cap 6");
  return enumerate_polymatroid_points(sum);
}

// Player i's strategy list for either descriptor kind (base filter applied).
inline std::vector<IntVec> enumerate_player_strategies(const GameInstance& inst, std::size_t i) {
  if (inst.kind == StrategyKind::Tu) return enumerate_strategies(inst.tu[i]);
  std::vector<IntVec> pts = enumerate_polymatroid_points(inst.poly[i]);
  if (inst.mode != PolyMode::Base) return pts;
  std::vector<IntVec> bases;
  for (IntVec& x : pts) {
    Int total = 0;
    for (const Int& v : x) total += v;
    if (total == inst.poly[i].rank()) bases.push_back(std::move(x));
  }
  return bases;
}

namespace detail {

inline std::vector<std::vector<IntVec>> all_strategy_lists(const GameInstance& inst,
                                                           std::size_t joint_cap = 1'000'000) {
  std::vector<std::vector<IntVec>> lists;
  std::size_t joint = 1;
  for (std::size_t i = 0; i < inst.players; ++i) {
    lists.push_back(enumerate_player_strategies(inst, i));
    if (lists.back().empty()) return lists; // infeasible; caller handles
    if (joint > joint_cap / lists.back().size())
      throw PreconditionError("brute force: joint strategy space above cap");
    joint *= lists.back().size();
  }
  return lists;
}

template <typename Visit>
void for_each_state(const GameInstance& inst, const std::vector<std::vector<IntVec>>& lists,
                    Visit&& visit) {
  std::vector<std::size_t> pick(inst.players, 0);
  for (;;) {
    std::vector<IntVec> xs;
    xs.reserve(inst.players);
    for (std::size_t i = 0; i < inst.players; ++i) xs.push_back(lists[i][pick[i]]);
    visit(GameState::from_strategies(std::move(xs), inst.resources));
    std::size_t i = 0;
    while (i < inst.players && ++pick[i] == lists[i].size()) pick[i++] = 0;
    if (i == inst.players) break;
  }
}

} // namespace detail

inline std::pair<GameState, Int> brute_force_min_potential(const GameInstance& inst) {
  auto lists = detail::all_strategy_lists(inst);
  for (const auto& l : lists)
    if (l.empty()) throw InfeasibleError("brute force: a player has no feasible strategy");
  bool first = true;
  GameState best_state;
  Int best = 0;
  detail::for_each_state(inst, lists, [&](GameState s) {
    Int phi = potential(inst, s);
    if (first || phi < best) {
      best = phi;
      best_state = std::move(s);
      first = false;
    }
  });
  return {best_state, best};
}

inline std::pair<GameState, Int> brute_force_min_social(const GameInstance& inst) {
  auto lists = detail::all_strategy_lists(inst);
  for (const auto& l : lists)
    if (l.empty()) throw InfeasibleError("brute force: a player has no feasible strategy");
  bool first = true;
  GameState best_state;
  Int best = 0;
  detail::for_each_state(inst, lists, [&](GameState s) {
    Int g = social_delay(inst, s);
    if (first || g < best) {
      best = g;
      best_state = std::move(s);
      first = false;
    }
  });
  return {best_state, best};
}

// Definition-level Nash check: no player has any strictly improving
// unilateral deviation.
inline bool is_nash_by_definition(const GameInstance& inst, const GameState& s,
                                  const std::vector<std::vector<IntVec>>& lists) {
  for (std::size_t i = 0; i < inst.players; ++i) {
    Int cost = player_cost(inst, s, i);
    for (const IntVec& alt : lists[i]) {
      if (alt == s.strategies[i]) continue;
      GameState dev = s;
      dev.strategies[i] = alt;
      dev.load = dev.recompute_load(inst.resources);
      if (player_cost(inst, dev, i) < cost) return false;
    }
  }
  return true;
}

inline std::vector<GameState> brute_force_all_nash(const GameInstance& inst) {
  auto lists = detail::all_strategy_lists(inst);
  for (const auto& l : lists)
    if (l.empty()) throw InfeasibleError("brute force: a player has no feasible strategy");
  std::vector<GameState> nash;
  detail::for_each_state(inst, lists, [&](GameState s) {
    if (is_nash_by_definition(inst, s, lists)) nash.push_back(std::move(s));
  });
  return nash;
}

} // namespace tucong
