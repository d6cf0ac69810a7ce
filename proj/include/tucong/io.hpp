#pragma once

// Instance and state documents (JSON). Parsing is strict: delays must be
// integers, bounds are integers or null, unknown strategy kinds are
// rejected. render/parse round-trips are bit-exact on the model level.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tucong/frontends.hpp"
#include "tucong/model.hpp"

namespace tucong {

using Json = nlohmann::json;

namespace detail {

inline Int json_to_int(const Json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw PreconditionError(std::string("document: bad integer string for ") + what);
    }
  }
  throw PreconditionError(std::string("document: expected an integer for ") + what);
}

inline Json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return Json(v.convert_to<long long>());
  return Json(v.str());
}

inline IntVec json_to_ivec(const Json& j, const char* what) {
  if (!j.is_array()) throw PreconditionError(std::string("document: expected an array for ") + what);
  IntVec out;
  for (const Json& e : j) out.push_back(json_to_int(e, what));
  return out;
}

inline Json ivec_to_json(const IntVec& v) {
  Json out = Json::array();
  for (const Int& e : v) out.push_back(int_to_json(e));
  return out;
}

inline Bound json_to_bound(const Json& j, const char* what) {
  if (j.is_null()) return Bound::none();
  return Bound::at(json_to_int(j, what));
}

inline Json bound_to_json(const Bound& b) { return b.finite ? int_to_json(b.value) : Json(); }

inline TUSystem json_to_tu(const Json& j) {
  if (!j.is_object() || j.value("kind", "tu") != "tu")
    throw PreconditionError("document: expected a tu strategy descriptor");
  TUSystem sys;
  const Json& rows = j.at("matrix");
  if (!rows.is_array()) throw PreconditionError("document: tu matrix must be an array of rows");
  std::size_t cols = 0;
  for (const Json& r : rows) {
    IntVec row = json_to_ivec(r, "tu matrix row");
    if (sys.a.rows == 0 && cols == 0) cols = row.size();
    if (row.size() != cols) throw PreconditionError("document: ragged tu matrix");
    IntMatrix grown(sys.a.rows + 1, cols);
    std::copy(sys.a.data.begin(), sys.a.data.end(), grown.data.begin());
    for (std::size_t c = 0; c < cols; ++c) grown.at(sys.a.rows, c) = row[c];
    sys.a = std::move(grown);
  }
  if (j.contains("resources")) {
    std::size_t n = j.at("resources").get<std::size_t>();
    if (sys.a.rows == 0) sys.a = IntMatrix(0, n);
    else if (sys.a.cols != n)
      throw PreconditionError("document: tu matrix width disagrees with resources");
  }
  for (const Json& b : j.at("row_lo")) sys.row_lo.push_back(json_to_bound(b, "row_lo"));
  for (const Json& b : j.at("row_hi")) sys.row_hi.push_back(json_to_bound(b, "row_hi"));
  sys.validate();
  return sys;
}

inline Json tu_to_json(const TUSystem& sys) {
  Json j;
  j["kind"] = "tu";
  j["resources"] = sys.a.cols;
  Json rows = Json::array();
  for (std::size_t r = 0; r < sys.a.rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < sys.a.cols; ++c) row.push_back(int_to_json(sys.a.at(r, c)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  Json lo = Json::array(), hi = Json::array();
  for (const Bound& b : sys.row_lo) lo.push_back(bound_to_json(b));
  for (const Bound& b : sys.row_hi) hi.push_back(bound_to_json(b));
  j["row_lo"] = std::move(lo);
  j["row_hi"] = std::move(hi);
  return j;
}

inline GraphSpec json_to_graph(const Json& j, bool network) {
  GraphSpec g;
  g.nodes = j.at("nodes").get<std::size_t>();
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw PreconditionError("document: graph edge must be a pair");
    g.edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
  }
  g.directed = j.value("directed", network);
  if (j.contains("players")) {
    for (const Json& p : j.at("players")) {
      if (network) {
        TerminalPair pair;
        pair.source = p.at("source").get<std::size_t>();
        pair.sink = p.at("sink").get<std::size_t>();
        g.pairs.push_back(pair);
      } else {
        PlayerSubgraph sub;
        for (const Json& v : p.at("subgraph_nodes")) sub.nodes.push_back(v.get<std::size_t>());
        for (const Json& e : p.at("subgraph_edges")) sub.edges.push_back(e.get<std::size_t>());
        g.subgraphs.push_back(std::move(sub));
      }
    }
  }
  g.validate();
  return g;
}

} // namespace detail

inline GameInstance parse_instance(const Json& doc) {
  if (!doc.is_object()) throw PreconditionError("document: instance must be an object");
  std::size_t players = doc.at("players").get<std::size_t>();
  std::size_t resources = doc.at("resources").get<std::size_t>();
  DelayTable d;
  for (const Json& row : doc.at("delays"))
    d.rows.push_back(detail::json_to_ivec(row, "delays"));
  const Json& strat = doc.at("strategy");
  if (strat.is_array()) {
    // per-player TU descriptor list
    GameInstance inst;
    inst.players = players;
    inst.resources = resources;
    inst.kind = StrategyKind::Tu;
    for (const Json& s : strat) inst.tu.push_back(detail::json_to_tu(s));
    inst.delays = std::move(d);
    inst.symmetric = inst.compute_symmetric();
    inst.validate();
    return inst;
  }
  if (!strat.is_object())
    throw PreconditionError("document: strategy must be an object or a per-player list");
  std::string kind = strat.value("kind", "tu");
  if (kind == "tu") {
    GameInstance inst;
    inst.players = players;
    inst.resources = resources;
    inst.kind = StrategyKind::Tu;
    inst.tu.assign(players, detail::json_to_tu(strat));
    inst.delays = std::move(d);
    inst.symmetric = true;
    inst.validate();
    return inst;
  }
  if (kind == "polymatroid") {
    GameInstance inst;
    inst.players = players;
    inst.resources = resources;
    inst.kind = StrategyKind::Polymatroid;
    std::string mode = strat.value("mode", "independent_set");
    if (mode == "base") inst.mode = PolyMode::Base;
    else if (mode == "independent_set") inst.mode = PolyMode::IndependentSet;
    else throw PreconditionError("document: polymatroid mode must be independent_set or base");
    if (strat.contains("tables")) {
      for (const Json& t : strat.at("tables")) {
        PolymatroidOracle g;
        g.ground = resources;
        g.table = detail::json_to_ivec(t, "polymatroid table");
        inst.poly.push_back(std::move(g));
      }
    } else {
      PolymatroidOracle g;
      g.ground = resources;
      g.table = detail::json_to_ivec(strat.at("table"), "polymatroid table");
      inst.poly.assign(players, std::move(g));
    }
    inst.delays = std::move(d);
    inst.symmetric = inst.compute_symmetric();
    inst.validate();
    return inst;
  }
  if (kind == "network") {
    GraphSpec g = detail::json_to_graph(strat, true);
    if (g.pairs.size() != players)
      throw PreconditionError("document: one terminal pair per player expected");
    return network_game(g, d);
  }
  if (kind == "matching" || kind == "edge_cover" || kind == "perfect_matching" ||
      kind == "stable_set" || kind == "vertex_cover" || kind == "perfect_vertex_cover") {
    GraphSpec g = detail::json_to_graph(strat, false);
    if (kind == "matching") return matching_game(g, d, players);
    if (kind == "edge_cover") return edge_cover_game(g, d, players);
    if (kind == "perfect_matching") return perfect_matching_game(g, d, players);
    if (kind == "stable_set") return stable_set_game(g, d, players);
    if (kind == "vertex_cover") return vertex_cover_game(g, d, players);
    return perfect_vertex_cover_game(g, d, players);
  }
  throw PreconditionError("document: unknown strategy kind `" + kind + "`");
}

inline GameInstance parse_instance_text(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw PreconditionError("document: invalid JSON");
  return parse_instance(doc);
}

inline Json render_instance(const GameInstance& inst) {
  inst.validate();
  Json doc;
  doc["players"] = inst.players;
  doc["resources"] = inst.resources;
  Json delays = Json::array();
  for (const IntVec& row : inst.delays.rows) delays.push_back(detail::ivec_to_json(row));
  doc["delays"] = std::move(delays);
  if (inst.kind == StrategyKind::Tu) {
    if (inst.symmetric && inst.players > 0) {
      doc["strategy"] = detail::tu_to_json(inst.tu[0]);
    } else {
      Json list = Json::array();
      for (const TUSystem& s : inst.tu) list.push_back(detail::tu_to_json(s));
      doc["strategy"] = std::move(list);
    }
  } else {
    Json strat;
    strat["kind"] = "polymatroid";
    strat["mode"] = inst.mode == PolyMode::Base ? "base" : "independent_set";
    Json tables = Json::array();
    for (const PolymatroidOracle& g : inst.poly) tables.push_back(detail::ivec_to_json(g.table));
    strat["tables"] = std::move(tables);
    doc["strategy"] = std::move(strat);
  }
  return doc;
}

inline GameState parse_state(const Json& doc, const GameInstance& inst) {
  if (!doc.is_object() || !doc.contains("strategies"))
    throw PreconditionError("state document: expected a strategies array");
  std::vector<IntVec> xs;
  for (const Json& row : doc.at("strategies"))
    xs.push_back(detail::json_to_ivec(row, "strategies"));
  GameState s = GameState::from_strategies(std::move(xs), inst.resources);
  validate_state(inst, s);
  return s;
}

inline GameState parse_state_text(const std::string& text, const GameInstance& inst) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw PreconditionError("state document: invalid JSON");
  return parse_state(doc, inst);
}

inline Json render_state(const GameState& s) {
  Json doc;
  Json xs = Json::array();
  for (const IntVec& x : s.strategies) xs.push_back(detail::ivec_to_json(x));
  doc["strategies"] = std::move(xs);
  doc["load"] = detail::ivec_to_json(s.load);
  return doc;
}

} // namespace tucong
