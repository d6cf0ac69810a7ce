#pragma once

// Hardness-instance generators: positive not-all-equal SAT formulas compiled
// into perfect-matching and perfect-vertex-cover games whose improving moves
// mirror single-variable flips.

#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "tucong/frontends.hpp"
#include "tucong/model.hpp"

namespace tucong {

enum class SatFlavor { Nae2, Nae3 };
enum class SatConstant { None, Zero, One };

struct SatClause {
  std::vector<std::size_t> vars; // distinct variable indices
  SatConstant constant = SatConstant::None;
  Int weight = 1;
};

struct SatInstance {
  std::size_t variables = 0;
  SatFlavor flavor = SatFlavor::Nae2;
  std::vector<SatClause> clauses;

  void validate() const {
    if (clauses.empty()) throw PreconditionError("sat: no clauses");
    for (const SatClause& c : clauses) {
      if (c.weight < 1) throw PreconditionError("sat: clause weight must be positive");
      for (std::size_t i = 0; i < c.vars.size(); ++i) {
        if (c.vars[i] >= variables) throw PreconditionError("sat: variable index out of range");
        for (std::size_t k = i + 1; k < c.vars.size(); ++k)
          if (c.vars[i] == c.vars[k])
            throw PreconditionError("sat: repeated variable in a clause");
      }
      if (flavor == SatFlavor::Nae2) {
        if (c.vars.empty())
          throw PreconditionError("sat: clause needs at least one variable");
        std::size_t total = c.vars.size() + (c.constant == SatConstant::None ? 0 : 1);
        if (total > 2) throw PreconditionError("sat: 2SAT clause with more than two constituents");
      } else {
        if (c.vars.size() != 3)
          throw PreconditionError("sat: 3SAT clause needs exactly three variables");
        if (c.constant != SatConstant::None)
          throw PreconditionError("sat: constants are not supported in 3SAT clauses");
      }
    }
  }
};

// Total weight of the not-all-equal-satisfied clauses.
inline Int sat_value(const SatInstance& sat, const std::vector<int>& assignment) {
  if (assignment.size() != sat.variables)
    throw PreconditionError("sat: assignment length mismatch");
  Int total = 0;
  for (const SatClause& c : sat.clauses) {
    bool any0 = c.constant == SatConstant::Zero, any1 = c.constant == SatConstant::One;
    for (std::size_t v : c.vars) (assignment[v] ? any1 : any0) = true;
    if (any0 && any1) total += c.weight;
  }
  return total;
}

// One clause per line, `w : lit [lit [lit]]`; literals are 1-based variable
// indices or the constants T/F; '#' starts a comment.
inline SatInstance parse_sat_text(const std::string& text, SatFlavor flavor) {
  SatInstance sat;
  sat.flavor = flavor;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string weight_tok;
    if (!(in >> weight_tok)) continue; // blank line
    std::string colon;
    if (!(in >> colon) || colon != ":")
      throw PreconditionError("sat parse: expected `w : lit ...` in line: " + line);
    SatClause c;
    try {
      c.weight = Int(weight_tok);
    } catch (const std::exception&) {
      throw PreconditionError("sat parse: bad weight in line: " + line);
    }
    std::string lit;
    while (in >> lit) {
      if (lit == "T" || lit == "F") {
        if (c.constant != SatConstant::None)
          throw PreconditionError("sat parse: more than one constant in line: " + line);
        c.constant = lit == "T" ? SatConstant::One : SatConstant::Zero;
        continue;
      }
      std::size_t pos = 0;
      unsigned long idx = 0;
      try {
        idx = std::stoul(lit, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != lit.size() || idx == 0)
        throw PreconditionError("sat parse: bad literal `" + lit + "` in line: " + line);
      c.vars.push_back(idx - 1);
      if (idx > sat.variables) sat.variables = idx;
    }
    sat.clauses.push_back(std::move(c));
  }
  sat.validate();
  return sat;
}

struct ReductionArtifact {
  GameInstance instance;
  GraphSpec graph;
  // labels[i][b] = player i's strategy vector mapped to assignment bit b
  std::vector<std::array<IntVec, 2>> labels;
  std::vector<std::string> warnings;
};

namespace detail {

// Shared gadget chain for the perfect-matching reductions. Per clause j a
// 4-cycle u_j, v_j, z_j, vbar_j with z_j glued to u_{j+1} (cyclically);
// players are variables, each walking the u-spine and picking the v side of
// the clauses it appears in and the vbar side of the rest.
// weighted(m, w) supplies the delay row of the clause's v-edges.
template <typename Weighted>
ReductionArtifact sat_to_pm(const SatInstance& sat, Weighted&& weighted) {
  sat.validate();
  const std::size_t n = sat.clauses.size(), players = sat.variables;
  if (players == 0) throw PreconditionError("sat: no variables");
  ReductionArtifact art;
  GraphSpec& g = art.graph;
  g.nodes = n + 2 * n; // u_j = j, v_j = n + 2j, vbar_j = n + 2j + 1
  auto u = [&](std::size_t j) { return j; };
  auto z = [&](std::size_t j) { return (j + 1) % n; };
  auto v = [&](std::size_t j) { return n + 2 * j; };
  auto vbar = [&](std::size_t j) { return n + 2 * j + 1; };
  for (std::size_t j = 0; j < n; ++j) {
    g.edges.push_back({v(j), u(j)});    // 4j
    g.edges.push_back({v(j), z(j)});    // 4j + 1
    g.edges.push_back({vbar(j), u(j)}); // 4j + 2
    g.edges.push_back({vbar(j), z(j)}); // 4j + 3
  }
  for (std::size_t i = 0; i < players; ++i) {
    PlayerSubgraph sub;
    for (std::size_t j = 0; j < n; ++j) sub.nodes.push_back(u(j));
    for (std::size_t j = 0; j < n; ++j) {
      bool mine = false;
      for (std::size_t w : sat.clauses[j].vars)
        if (w == i) mine = true;
      sub.nodes.push_back(mine ? v(j) : vbar(j));
      std::size_t base = 4 * j + (mine ? 0 : 2);
      sub.edges.push_back(base);
      sub.edges.push_back(base + 1);
    }
    g.subgraphs.push_back(std::move(sub));
  }
  DelayTable d;
  d.rows.assign(g.edges.size(), IntVec(players, Int(0)));
  for (std::size_t j = 0; j < n; ++j) {
    const SatClause& c = sat.clauses[j];
    IntVec row = weighted(c.vars.size(), c.weight, players);
    // the v-u edge counts the 0-side, silenced when the clause already holds
    // a constant 1; the v-z edge counts the 1-side, silenced by a constant 0
    if (c.constant != SatConstant::One) d.rows[4 * j] = row;
    if (c.constant != SatConstant::Zero) d.rows[4 * j + 1] = row;
  }
  art.instance = perfect_matching_game(g, d, players);
  for (std::size_t i = 0; i < players; ++i) {
    std::array<IntVec, 2> lab;
    lab[0].assign(g.edges.size(), Int(0));
    lab[1].assign(g.edges.size(), Int(0));
    const PlayerSubgraph& sub = g.subgraphs[i];
    for (std::size_t k = 0; k < sub.edges.size(); k += 2) {
      lab[0][sub.edges[k]] = 1;     // u-side matching
      lab[1][sub.edges[k + 1]] = 1; // z-side matching
    }
    art.labels.push_back(std::move(lab));
  }
  return art;
}

} // namespace detail

// Weighted NAE 2SAT as an asymmetric perfect-matching game whose improving
// moves are exactly the value-improving variable flips.
inline ReductionArtifact nae2sat_to_pm(const SatInstance& sat) {
  if (sat.flavor != SatFlavor::Nae2) throw PreconditionError("expected the 2SAT flavor");
  return detail::sat_to_pm(sat, [](std::size_t m, const Int& w, std::size_t players) {
    IntVec row(players);
    for (std::size_t i = 1; i <= players; ++i)
      row[i - 1] = m == 1 ? w : w * Int(i - 1);
    return row;
  });
}

// Unweighted NAE 3SAT as a perfect-matching game with weakly convex delays
// whose social optimum is zero exactly on satisfiable formulas.
inline ReductionArtifact nae3sat_to_pm_social(const SatInstance& sat) {
  if (sat.flavor != SatFlavor::Nae3) throw PreconditionError("expected the 3SAT flavor");
  ReductionArtifact art =
      detail::sat_to_pm(sat, [](std::size_t, const Int&, std::size_t players) {
        IntVec row(players, Int(0));
        for (std::size_t i = 2; i <= players; ++i) row[i - 1] = Int(i) - 2;
        return row;
      });
  for (const SatClause& c : sat.clauses)
    if (c.weight != 1) {
      art.warnings.push_back("clause weights are ignored by the social reduction");
      break;
    }
  if (!is_weakly_convex(art.instance.delays))
    throw InternalInvariantError("social reduction produced non-weakly-convex delays");
  return art;
}

// Weighted NAE 2SAT as an asymmetric perfect-vertex-cover game. Per clause
// an 8-cycle u_j, s_j, v_j, t_j, z_j, tbar_j, vbar_j, sbar_j with z_j glued
// to u_{j+1}; the weighted nodes are s_j (0-side) and v_j (1-side).
inline ReductionArtifact nae2sat_to_pvc(const SatInstance& sat) {
  if (sat.flavor != SatFlavor::Nae2) throw PreconditionError("expected the 2SAT flavor");
  sat.validate();
  const std::size_t n = sat.clauses.size(), players = sat.variables;
  if (players == 0) throw PreconditionError("sat: no variables");
  ReductionArtifact art;
  GraphSpec& g = art.graph;
  g.nodes = n + 6 * n;
  auto u = [&](std::size_t j) { return j; };
  auto z = [&](std::size_t j) { return (j + 1) % n; };
  auto s = [&](std::size_t j) { return n + 6 * j; };
  auto v = [&](std::size_t j) { return n + 6 * j + 1; };
  auto t = [&](std::size_t j) { return n + 6 * j + 2; };
  auto tbar = [&](std::size_t j) { return n + 6 * j + 3; };
  auto vbar = [&](std::size_t j) { return n + 6 * j + 4; };
  auto sbar = [&](std::size_t j) { return n + 6 * j + 5; };
  for (std::size_t j = 0; j < n; ++j) {
    g.edges.push_back({u(j), s(j)});
    g.edges.push_back({s(j), v(j)});
    g.edges.push_back({v(j), t(j)});
    g.edges.push_back({t(j), z(j)});
    g.edges.push_back({z(j), tbar(j)});
    g.edges.push_back({tbar(j), vbar(j)});
    g.edges.push_back({vbar(j), sbar(j)});
    g.edges.push_back({sbar(j), u(j)});
  }
  for (std::size_t i = 0; i < players; ++i) {
    PlayerSubgraph sub;
    for (std::size_t j = 0; j < n; ++j) sub.nodes.push_back(u(j));
    for (std::size_t j = 0; j < n; ++j) {
      bool mine = false;
      for (std::size_t w : sat.clauses[j].vars)
        if (w == i) mine = true;
      std::size_t base = 8 * j;
      if (mine) {
        sub.nodes.push_back(s(j));
        sub.nodes.push_back(v(j));
        sub.nodes.push_back(t(j));
        sub.edges.insert(sub.edges.end(), {base, base + 1, base + 2, base + 3});
      } else {
        sub.nodes.push_back(tbar(j));
        sub.nodes.push_back(vbar(j));
        sub.nodes.push_back(sbar(j));
        sub.edges.insert(sub.edges.end(), {base + 4, base + 5, base + 6, base + 7});
      }
    }
    g.subgraphs.push_back(std::move(sub));
  }
  DelayTable d;
  d.rows.assign(g.nodes, IntVec(players, Int(0)));
  for (std::size_t j = 0; j < n; ++j) {
    const SatClause& c = sat.clauses[j];
    IntVec row(players);
    for (std::size_t i = 1; i <= players; ++i)
      row[i - 1] = c.vars.size() == 1 ? c.weight : c.weight * Int(i - 1);
    if (c.constant != SatConstant::One) d.rows[s(j)] = row;
    if (c.constant != SatConstant::Zero) d.rows[v(j)] = row;
  }
  art.instance = perfect_vertex_cover_game(g, d, players);
  for (std::size_t i = 0; i < players; ++i) {
    std::array<IntVec, 2> lab;
    lab[0].assign(g.nodes, Int(0));
    lab[1].assign(g.nodes, Int(0));
    const PlayerSubgraph& sub = g.subgraphs[i];
    for (std::size_t j = 0; j < n; ++j) {
      // subgraph node layout per clause: u first (block of n), then the
      // three side nodes in cycle order
      std::size_t a = sub.nodes[n + 3 * j], mid = sub.nodes[n + 3 * j + 1],
                  b = sub.nodes[n + 3 * j + 2];
      lab[0][a] = 1;   // s or tbar
      lab[0][b] = 1;   // t or sbar
      lab[1][u(j)] = 1;
      lab[1][mid] = 1; // v or vbar
    }
    art.labels.push_back(std::move(lab));
  }
  return art;
}

// Assignment read off a state built from the labeled strategies.
inline std::vector<int> map_state_assignment(const ReductionArtifact& art, const GameState& s) {
  if (s.strategies.size() != art.labels.size())
    throw PreconditionError("reduction map: player count mismatch");
  std::vector<int> assignment(art.labels.size());
  for (std::size_t i = 0; i < art.labels.size(); ++i) {
    if (s.strategies[i] == art.labels[i][0]) assignment[i] = 0;
    else if (s.strategies[i] == art.labels[i][1]) assignment[i] = 1;
    else throw PreconditionError("reduction map: unlabeled strategy for player " +
                                 std::to_string(i));
  }
  return assignment;
}

inline GameState map_assignment_state(const ReductionArtifact& art,
                                      const std::vector<int>& assignment) {
  if (assignment.size() != art.labels.size())
    throw PreconditionError("reduction map: assignment length mismatch");
  std::vector<IntVec> xs;
  for (std::size_t i = 0; i < art.labels.size(); ++i)
    xs.push_back(art.labels[i][assignment[i] ? 1 : 0]);
  return GameState::from_strategies(std::move(xs), art.instance.resources);
}

} // namespace tucong
