#pragma once

// Graph-game frontends: compile matching, edge-cover, stable-set,
// vertex-cover, perfect variants, and single-unit network games into TU
// systems consumed by the generic solvers.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tucong/model.hpp"

namespace tucong {

struct PlayerSubgraph {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> edges;
};

struct TerminalPair {
  std::size_t source = 0;
  std::size_t sink = 0;
};

struct GraphSpec {
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges; // (tail, head) when directed
  bool directed = false;
  std::vector<PlayerSubgraph> subgraphs; // node games and edge games
  std::vector<TerminalPair> pairs;       // network games

  void validate() const {
    for (const auto& [u, v] : edges)
      if (u >= nodes || v >= nodes) throw PreconditionError("graph: edge endpoint out of range");
    for (const PlayerSubgraph& sub : subgraphs) {
      for (std::size_t v : sub.nodes)
        if (v >= nodes) throw PreconditionError("graph: subgraph node out of range");
      for (std::size_t e : sub.edges) {
        if (e >= edges.size()) throw PreconditionError("graph: subgraph edge out of range");
        bool tail = false, head = false;
        for (std::size_t v : sub.nodes) {
          if (v == edges[e].first) tail = true;
          if (v == edges[e].second) head = true;
        }
        if (!tail || !head)
          throw PreconditionError("graph: subgraph edge with endpoint outside subgraph");
      }
    }
    for (const TerminalPair& p : pairs)
      if (p.source >= nodes || p.sink >= nodes)
        throw PreconditionError("graph: terminal out of range");
  }

  bool is_bipartite() const {
    std::vector<int> color(nodes, -1);
    for (std::size_t start = 0; start < nodes; ++start) {
      if (color[start] != -1) continue;
      color[start] = 0;
      std::vector<std::size_t> stack{start};
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : edges) {
          std::size_t w;
          if (a == v) w = b;
          else if (b == v) w = a;
          else continue;
          if (color[w] == -1) {
            color[w] = 1 - color[v];
            stack.push_back(w);
          } else if (color[w] == color[v]) {
            return false;
          }
        }
      }
    }
    return true;
  }
};

namespace detail {

inline void require_bipartite(const GraphSpec& g, const char* game) {
  if (!g.is_bipartite())
    throw PreconditionError(std::string(game) + " game requires a bipartite graph");
}

inline const PlayerSubgraph whole_graph(const GraphSpec& g) {
  PlayerSubgraph sub;
  for (std::size_t v = 0; v < g.nodes; ++v) sub.nodes.push_back(v);
  for (std::size_t e = 0; e < g.edges.size(); ++e) sub.edges.push_back(e);
  return sub;
}

inline std::vector<PlayerSubgraph> player_subgraphs(const GraphSpec& g, std::size_t players) {
  if (g.subgraphs.empty()) return std::vector<PlayerSubgraph>(players, whole_graph(g));
  if (g.subgraphs.size() != players)
    throw PreconditionError("graph: one subgraph per player expected");
  return g.subgraphs;
}

enum class EdgeGame { Matching, EdgeCover, PerfectMatching };
enum class NodeGame { StableSet, VertexCover, PerfectVertexCover };

// Rows: one per subgraph node over that player's edges; edges outside the
// subgraph are pinned to zero with unit rows.
inline TUSystem edge_game_system(const GraphSpec& g, const PlayerSubgraph& sub, EdgeGame kind) {
  const std::size_t n = g.edges.size();
  std::vector<bool> in_sub(n, false);
  for (std::size_t e : sub.edges) in_sub[e] = true;
  TUSystem sys;
  sys.a = IntMatrix(sub.nodes.size(), n);
  for (std::size_t r = 0; r < sub.nodes.size(); ++r)
    for (std::size_t e : sub.edges)
      if (g.edges[e].first == sub.nodes[r] || g.edges[e].second == sub.nodes[r])
        sys.a.at(r, e) = 1;
  for (std::size_t r = 0; r < sub.nodes.size(); ++r) {
    switch (kind) {
      case EdgeGame::Matching:
        sys.row_lo.push_back(Bound::none());
        sys.row_hi.push_back(Bound::at(1));
        break;
      case EdgeGame::EdgeCover:
        sys.row_lo.push_back(Bound::at(1));
        sys.row_hi.push_back(Bound::none());
        break;
      case EdgeGame::PerfectMatching:
        sys.row_lo.push_back(Bound::at(1));
        sys.row_hi.push_back(Bound::at(1));
        break;
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (in_sub[e]) continue;
    IntMatrix grown(sys.a.rows + 1, n);
    std::copy(sys.a.data.begin(), sys.a.data.end(), grown.data.begin());
    grown.at(sys.a.rows, e) = 1;
    sys.a = std::move(grown);
    sys.row_lo.push_back(Bound::at(0));
    sys.row_hi.push_back(Bound::at(0));
  }
  return sys;
}

// Rows: one per subgraph edge over that player's nodes; nodes outside the
// subgraph are pinned to zero.
inline TUSystem node_game_system(const GraphSpec& g, const PlayerSubgraph& sub, NodeGame kind) {
  const std::size_t n = g.nodes;
  std::vector<bool> in_sub(n, false);
  for (std::size_t v : sub.nodes) in_sub[v] = true;
  TUSystem sys;
  sys.a = IntMatrix(sub.edges.size(), n);
  for (std::size_t r = 0; r < sub.edges.size(); ++r) {
    sys.a.at(r, g.edges[sub.edges[r]].first) = 1;
    sys.a.at(r, g.edges[sub.edges[r]].second) = 1;
  }
  for (std::size_t r = 0; r < sub.edges.size(); ++r) {
    switch (kind) {
      case NodeGame::StableSet:
        sys.row_lo.push_back(Bound::none());
        sys.row_hi.push_back(Bound::at(1));
        break;
      case NodeGame::VertexCover:
        sys.row_lo.push_back(Bound::at(1));
        sys.row_hi.push_back(Bound::none());
        break;
      case NodeGame::PerfectVertexCover:
        sys.row_lo.push_back(Bound::at(1));
        sys.row_hi.push_back(Bound::at(1));
        break;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (in_sub[v]) continue;
    IntMatrix grown(sys.a.rows + 1, n);
    std::copy(sys.a.data.begin(), sys.a.data.end(), grown.data.begin());
    grown.at(sys.a.rows, v) = 1;
    sys.a = std::move(grown);
    sys.row_lo.push_back(Bound::at(0));
    sys.row_hi.push_back(Bound::at(0));
  }
  return sys;
}

inline GameInstance assemble(std::vector<TUSystem> systems, const DelayTable& d,
                             std::size_t resources) {
  GameInstance inst;
  inst.players = systems.size();
  inst.resources = resources;
  inst.kind = StrategyKind::Tu;
  inst.tu = std::move(systems);
  inst.delays = d;
  inst.symmetric = inst.compute_symmetric();
  inst.validate();
  return inst;
}

template <typename Kind, TUSystem (*Build)(const GraphSpec&, const PlayerSubgraph&, Kind)>
GameInstance graph_game(const GraphSpec& g, const DelayTable& d, std::size_t players,
                        Kind kind, std::size_t resources) {
  g.validate();
  std::vector<TUSystem> systems;
  for (const PlayerSubgraph& sub : player_subgraphs(g, players))
    systems.push_back(Build(g, sub, kind));
  return assemble(std::move(systems), d, resources);
}

} // namespace detail

inline GameInstance matching_game(const GraphSpec& g, const DelayTable& d, std::size_t players) {
  detail::require_bipartite(g, "matching");
  return detail::graph_game<detail::EdgeGame, detail::edge_game_system>(
      g, d, players, detail::EdgeGame::Matching, g.edges.size());
}

inline GameInstance edge_cover_game(const GraphSpec& g, const DelayTable& d,
                                    std::size_t players) {
  detail::require_bipartite(g, "edge cover");
  return detail::graph_game<detail::EdgeGame, detail::edge_game_system>(
      g, d, players, detail::EdgeGame::EdgeCover, g.edges.size());
}

inline GameInstance perfect_matching_game(const GraphSpec& g, const DelayTable& d,
                                          std::size_t players) {
  detail::require_bipartite(g, "perfect matching");
  return detail::graph_game<detail::EdgeGame, detail::edge_game_system>(
      g, d, players, detail::EdgeGame::PerfectMatching, g.edges.size());
}

inline GameInstance stable_set_game(const GraphSpec& g, const DelayTable& d,
                                    std::size_t players) {
  detail::require_bipartite(g, "stable set");
  return detail::graph_game<detail::NodeGame, detail::node_game_system>(
      g, d, players, detail::NodeGame::StableSet, g.nodes);
}

inline GameInstance vertex_cover_game(const GraphSpec& g, const DelayTable& d,
                                      std::size_t players) {
  detail::require_bipartite(g, "vertex cover");
  return detail::graph_game<detail::NodeGame, detail::node_game_system>(
      g, d, players, detail::NodeGame::VertexCover, g.nodes);
}

inline GameInstance perfect_vertex_cover_game(const GraphSpec& g, const DelayTable& d,
                                              std::size_t players) {
  detail::require_bipartite(g, "perfect vertex cover");
  return detail::graph_game<detail::NodeGame, detail::node_game_system>(
      g, d, players, detail::NodeGame::PerfectVertexCover, g.nodes);
}

// Single-unit flow game: strategies are the 0/1 solutions of Ax = b^i over
// the node-arc incidence matrix (an r-s path plus possibly node-disjoint
// circuits; with negative delays a minimizer may use such circuits, hence
// the warning).
inline GameInstance network_game(const GraphSpec& g, const DelayTable& d,
                                 std::vector<std::string>* warnings = nullptr) {
  g.validate();
  if (!g.directed) throw PreconditionError("network game requires a directed graph");
  if (g.pairs.empty()) throw PreconditionError("network game: one terminal pair per player");
  const std::size_t n = g.edges.size();
  IntMatrix a(g.nodes, n);
  for (std::size_t e = 0; e < n; ++e) {
    a.at(g.edges[e].first, e) -= 1;  // tail
    a.at(g.edges[e].second, e) += 1; // head
  }
  std::vector<TUSystem> systems;
  for (const TerminalPair& p : g.pairs) {
    TUSystem sys;
    sys.a = a;
    sys.row_lo.assign(g.nodes, Bound::at(0));
    sys.row_hi.assign(g.nodes, Bound::at(0));
    if (p.source != p.sink) {
      sys.row_lo[p.source] = sys.row_hi[p.source] = Bound::at(-1);
      sys.row_lo[p.sink] = sys.row_hi[p.sink] = Bound::at(1);
    }
    systems.push_back(std::move(sys));
  }
  if (warnings) {
    bool negative = false;
    for (const IntVec& row : d.rows)
      for (const Int& v : row)
        if (v < 0) negative = true;
    if (negative)
      warnings->push_back(
          "negative delays: a flow minimizer may include circuits outside any single path");
  }
  return detail::assemble(std::move(systems), d, n);
}

// Maximum-cardinality variant via the uniform delay shift; equilibria (nash
// mode) or social optima (social mode) of the shifted game are the
// cardinality-restricted ones.
inline GameInstance cardinality_variant(const GameInstance& inst, ShiftMode mode) {
  GameInstance out = inst;
  out.delays = shift_delays(inst.delays, mode, inst.resources);
  return out;
}

} // namespace tucong
