#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "tucong/lp.hpp"
#include "tucong/numeric.hpp"

namespace tucong {

// One player's strategy polytope {x in {0,1}^n : row_lo <= Ax <= row_hi}.
// Entries of A are in {-1,0,1}; variable bounds are fixed to [0,1].
struct TUSystem {
  IntMatrix a; // m x n
  std::vector<Bound> row_lo;
  std::vector<Bound> row_hi;

  std::size_t num_resources() const { return a.cols; }

  void validate() const {
    if (row_lo.size() != a.rows || row_hi.size() != a.rows)
      throw PreconditionError("TU system: inconsistent dimensions");
    for (const Int& v : a.data)
      if (v < -1 || v > 1)
        throw PreconditionError("TU system: matrix entry outside {-1,0,1}");
    for (std::size_t i = 0; i < a.rows; ++i)
      if (row_lo[i].finite && row_hi[i].finite && row_lo[i].value > row_hi[i].value)
        throw PreconditionError("TU system: row lower bound above upper");
  }

  bool contains(const IntVec& x) const {
    if (x.size() != a.cols) return false;
    for (const Int& v : x)
      if (v < 0 || v > 1) return false;
    IntVec act = mat_vec(a, x);
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (row_lo[i].finite && act[i] < row_lo[i].value) return false;
      if (row_hi[i].finite && act[i] > row_hi[i].value) return false;
    }
    return true;
  }

  // The relaxation [0,1]^n with the row bounds, as an LP with the given
  // objective (zeros when only feasibility matters).
  LinearProgram relaxation(RatVec objective = {}) const {
    LinearProgram lp;
    lp.objective = objective.empty() ? RatVec(a.cols, Rat(0)) : std::move(objective);
    lp.constraints = a;
    lp.row_lo = row_lo;
    lp.row_hi = row_hi;
    lp.var_lo.assign(a.cols, Int(0));
    lp.var_hi.assign(a.cols, Int(1));
    return lp;
  }

  friend bool operator==(const TUSystem& x, const TUSystem& y) {
    return x.a == y.a && x.row_lo == y.row_lo && x.row_hi == y.row_hi;
  }
};

// Per-resource nondecreasing integer delays d_j(1..N).
struct DelayTable {
  // rows[j][i-1] = d_j(i); all rows have the same length (the load cap,
  // which equals the player count for 0/1 games).
  std::vector<IntVec> rows;

  std::size_t resources() const { return rows.size(); }
  std::size_t load_cap() const { return rows.empty() ? 0 : rows[0].size(); }

  const Int& at(std::size_t j, const Int& load) const {
    if (load < 1 || load > Int(rows[j].size()))
      throw PreconditionError("delay lookup: load " + load.str() +
                              " outside table for resource " + std::to_string(j));
    return rows[j][load.convert_to<std::size_t>() - 1];
  }

  void validate() const {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[j].size() != load_cap())
        throw PreconditionError("delay table: ragged rows");
      for (std::size_t i = 0; i + 1 < rows[j].size(); ++i)
        if (rows[j][i] > rows[j][i + 1])
          throw PreconditionError("delay table: delays must be nondecreasing");
    }
  }

  Int max_abs() const {
    Int best = 0;
    for (const IntVec& r : rows)
      for (const Int& v : r)
        if (abs(v) > best) best = abs(v);
    return best;
  }

  friend bool operator==(const DelayTable& a, const DelayTable& b) = default;
};

// Submodular, nondecreasing, normalized integer set function over a ground
// set of |R| resources, stored as an explicit table indexed by subset mask.
struct PolymatroidOracle {
  std::size_t ground = 0;
  IntVec table; // size 2^ground, table[mask] = g(mask)

  const Int& value(std::size_t mask) const { return table[mask]; }
  const Int& rank() const { return table[table.size() - 1]; } // g(R)

  void validate() const;

  friend bool operator==(const PolymatroidOracle& a, const PolymatroidOracle& b) = default;
};

inline void PolymatroidOracle::validate() const {
  if (ground > 20) throw PreconditionError("polymatroid oracle: ground set above cap 20");
  if (table.size() != (std::size_t{1} << ground))
    throw PreconditionError("polymatroid oracle: table size is not 2^|R|");
  if (table[0] != 0) throw PreconditionError("polymatroid oracle: g(empty) must be 0");
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    if (table[mask] < 0) throw PreconditionError("polymatroid oracle: negative value");
    for (std::size_t e = 0; e < ground; ++e) {
      if (mask >> e & 1) continue;
      if (table[mask] > table[mask | (std::size_t{1} << e)])
        throw PreconditionError("polymatroid oracle: not nondecreasing");
    }
  }
  for (std::size_t u = 0; u < table.size(); ++u)
    for (std::size_t v = u + 1; v < table.size(); ++v)
      if (table[u] + table[v] < table[u | v] + table[u & v])
        throw PreconditionError("polymatroid oracle: not submodular");
}

// True iff the three polymatroid axioms hold (no exception interface).
inline bool validate_oracle(const PolymatroidOracle& g) {
  try {
    g.validate();
  } catch (const PreconditionError&) {
    return false;
  }
  return true;
}

enum class StrategyKind { Tu, Polymatroid };
enum class PolyMode { IndependentSet, Base };

struct GameInstance {
  std::size_t players = 0;
  std::size_t resources = 0;
  StrategyKind kind = StrategyKind::Tu;
  std::vector<TUSystem> tu;               // size players when kind == Tu
  std::vector<PolymatroidOracle> poly;    // size players when kind == Polymatroid
  PolyMode mode = PolyMode::IndependentSet;
  DelayTable delays;
  bool symmetric = false;

  void validate() const {
    delays.validate();
    if (delays.resources() != resources)
      throw PreconditionError("instance: delay table does not cover all resources");
    if (kind == StrategyKind::Tu) {
      if (tu.size() != players) throw PreconditionError("instance: one TU system per player");
      for (const TUSystem& s : tu) {
        s.validate();
        if (s.num_resources() != resources)
          throw PreconditionError("instance: TU system resource count mismatch");
      }
      if (delays.load_cap() != players)
        throw PreconditionError("instance: delay table must have one entry per player");
    } else {
      if (poly.size() != players)
        throw PreconditionError("instance: one polymatroid oracle per player");
      Int cap = 0;
      for (const PolymatroidOracle& g : poly) {
        g.validate();
        if (g.ground != resources)
          throw PreconditionError("instance: oracle ground set mismatch");
        cap += g.rank();
      }
      if (Int(delays.load_cap()) < cap)
        throw PreconditionError("instance: delay table shorter than the maximum load");
    }
    if (symmetric != compute_symmetric())
      throw PreconditionError("instance: symmetric flag inconsistent with descriptors");
  }

  bool compute_symmetric() const {
    if (players == 0) return true;
    if (kind == StrategyKind::Tu) {
      for (std::size_t i = 1; i < tu.size(); ++i)
        if (!(tu[i] == tu[0])) return false;
    } else {
      for (std::size_t i = 1; i < poly.size(); ++i)
        if (!(poly[i] == poly[0])) return false;
    }
    return true;
  }

  friend bool operator==(const GameInstance& a, const GameInstance& b) = default;
};

// Per-player strategies plus the cached load vector t_j = sum_i x^i_j.
struct GameState {
  std::vector<IntVec> strategies;
  IntVec load;

  static GameState from_strategies(std::vector<IntVec> xs, std::size_t resources) {
    GameState s;
    s.strategies = std::move(xs);
    s.load.assign(resources, Int(0));
    for (const IntVec& x : s.strategies) {
      if (x.size() != resources)
        throw PreconditionError("state: strategy length mismatch");
      for (std::size_t j = 0; j < resources; ++j) s.load[j] += x[j];
    }
    return s;
  }

  IntVec recompute_load(std::size_t resources) const {
    IntVec t(resources, Int(0));
    for (const IntVec& x : strategies)
      for (std::size_t j = 0; j < resources; ++j) t[j] += x[j];
    return t;
  }

  friend bool operator==(const GameState& a, const GameState& b) = default;
};

// Aggregated per-resource usage z_j = sum_i x^i_j.
struct AggregatedLoad {
  IntVec z;
};

namespace detail {

inline bool poly_member_single(const PolymatroidOracle& g, const IntVec& v);

} // namespace detail

// Feasibility of x for player i's descriptor.
inline bool strategy_feasible(const GameInstance& inst, std::size_t i, const IntVec& x) {
  if (x.size() != inst.resources) return false;
  for (const Int& v : x)
    if (v < 0) return false;
  if (inst.kind == StrategyKind::Tu) return inst.tu[i].contains(x);
  if (!detail::poly_member_single(inst.poly[i], x)) return false;
  if (inst.mode == PolyMode::Base) {
    Int total = 0;
    for (const Int& v : x) total += v;
    if (total != inst.poly[i].rank()) return false;
  }
  return true;
}

inline void validate_state(const GameInstance& inst, const GameState& s) {
  if (s.strategies.size() != inst.players)
    throw PreconditionError("state: wrong number of strategies");
  for (std::size_t i = 0; i < inst.players; ++i)
    if (!strategy_feasible(inst, i, s.strategies[i]))
      throw PreconditionError("state: infeasible strategy for player " + std::to_string(i));
  if (s.load != s.recompute_load(inst.resources))
    throw PreconditionError("state: cached load inconsistent");
}

namespace detail {

inline bool poly_member_single(const PolymatroidOracle& g, const IntVec& v) {
  for (std::size_t mask = 1; mask < (std::size_t{1} << g.ground); ++mask) {
    Int sum = 0;
    for (std::size_t e = 0; e < g.ground; ++e)
      if (mask >> e & 1) sum += v[e];
    if (sum > g.value(mask)) return false;
  }
  return true;
}

} // namespace detail

// Rosenthal potential: sum_j sum_{i<=t_j} d_j(i).
inline Int potential(const GameInstance& inst, const GameState& s) {
  validate_state(inst, s);
  Int phi = 0;
  for (std::size_t j = 0; j < inst.resources; ++j)
    for (Int i = 1; i <= s.load[j]; ++i) phi += inst.delays.at(j, i);
  return phi;
}

// Social delay: sum_j t_j * d_j(t_j). In the polymatroid case this equals
// the sum of the players' costs since t_j = sum_i x^i_j.
inline Int social_delay(const GameInstance& inst, const GameState& s) {
  validate_state(inst, s);
  Int gamma = 0;
  for (std::size_t j = 0; j < inst.resources; ++j)
    if (s.load[j] > 0) gamma += s.load[j] * inst.delays.at(j, s.load[j]);
  return gamma;
}

// Cost of player i: sum_j x^i_j * d_j(t_j).
inline Int player_cost(const GameInstance& inst, const GameState& s, std::size_t i) {
  if (i >= inst.players) throw PreconditionError("player index out of range");
  validate_state(inst, s);
  Int cost = 0;
  for (std::size_t j = 0; j < inst.resources; ++j)
    if (s.strategies[i][j] > 0) cost += s.strategies[i][j] * inst.delays.at(j, s.load[j]);
  return cost;
}

// i*d(i) has nondecreasing first differences (with d(0) = 0, the i = 1 step
// is implied by monotonicity).
inline bool is_weakly_convex(const DelayTable& d) {
  for (std::size_t j = 0; j < d.resources(); ++j) {
    const IntVec& r = d.rows[j];
    for (std::size_t i = 2; i < r.size(); ++i) {
      // indices: r[i-2] = d(i-1), r[i-1] = d(i), r[i] = d(i+1), with i >= 2
      Int lhs = Int(i) * r[i - 1] - Int(i - 1) * r[i - 2];
      Int rhs = Int(i + 1) * r[i] - Int(i) * r[i - 1];
      if (lhs > rhs) return false;
    }
  }
  return true;
}

// d'_j(i) = i*d_j(i) - (i-1)*d_j(i-1), with d_j(0) fixed to 0. Turns the
// potential of the transformed game into the social delay of the original.
inline DelayTable transform_social(const DelayTable& d) {
  if (!is_weakly_convex(d))
    throw PreconditionError("transform_social requires weakly convex delays");
  DelayTable out;
  out.rows.resize(d.resources());
  for (std::size_t j = 0; j < d.resources(); ++j) {
    const IntVec& r = d.rows[j];
    out.rows[j].resize(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      out.rows[j][i] = Int(i + 1) * r[i] - Int(i) * (i == 0 ? Int(0) : r[i - 1]);
  }
  out.validate();
  return out;
}

enum class ShiftMode { Nash, Social };

// Uniform delay shift reducing maximum-cardinality (base) games to the
// unrestricted ones: 2|R|Delta+1 (nash) or 2N|R|Delta+1 (social), with
// Delta the largest delay magnitude and N the table's load cap.
inline Int shift_constant(const DelayTable& d, ShiftMode mode, std::size_t resource_count) {
  Int delta = d.max_abs();
  Int k = Int(2) * Int(resource_count) * delta + 1;
  if (mode == ShiftMode::Social) k = Int(2) * Int(d.load_cap()) * Int(resource_count) * delta + 1;
  return k;
}

inline DelayTable shift_delays(const DelayTable& d, ShiftMode mode, std::size_t resource_count) {
  Int k = shift_constant(d, mode, resource_count);
  DelayTable out = d;
  for (IntVec& row : out.rows)
    for (Int& v : row) v -= k;
  return out;
}

} // namespace tucong
