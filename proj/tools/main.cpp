// Command-line surface: parse instance documents, dispatch the solvers,
// verify states, generate hardness instances, and emit structured reports.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tucong/dynamics.hpp"
#include "tucong/io.hpp"
#include "tucong/oracle.hpp"
#include "tucong/polymatroid.hpp"
#include "tucong/reductions.hpp"
#include "tucong/sym_solver.hpp"
#include "tucong/tu_check.hpp"

namespace {

using namespace tucong;

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write file: " + path);
  out << text;
}

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void print_summary(const GameInstance& inst) {
  std::cout << "players: " << inst.players << "\n";
  std::cout << "resources: " << inst.resources << "\n";
  std::cout << "symmetric: " << (inst.symmetric ? "yes" : "no") << "\n";
  std::cout << "descriptor: " << (inst.kind == StrategyKind::Tu ? "tu" : "polymatroid") << "\n";
}

// Every solve command re-checks its answer by definition-level evaluation,
// independent of the solver path.
bool print_nash_verification(const GameInstance& inst, const GameState& s) {
  std::optional<NashWitness> w = verify_nash(inst, s);
  if (!w) {
    std::cout << "verified: nash (no improving unilateral deviation)\n";
    return true;
  }
  std::cout << "verified: NOT nash, player " << w->player << " improves\n";
  return false;
}

void maybe_verify_tu(const GameInstance& inst, bool wanted) {
  if (!wanted) return;
  if (inst.kind != StrategyKind::Tu) {
    std::cout << "tu_check: skipped (polymatroid descriptors)\n";
    return;
  }
  InstanceTuReport rep = check_instance_tu(inst);
  std::cout << "tu_check: " << (rep.all_tu() ? "all systems TU" : "NON-TU system found") << "\n";
  if (!rep.all_tu()) throw PreconditionError("instance has a non-TU strategy system");
}

GameInstance load_instance(const std::string& path, bool verify_tu, const std::string& mode) {
  GameInstance inst = parse_instance_text(read_file(path));
  if (mode == "nash") inst = cardinality_variant(inst, ShiftMode::Nash);
  else if (mode == "social") inst = cardinality_variant(inst, ShiftMode::Social);
  else if (!mode.empty())
    throw PreconditionError("--mode takes nash or social");
  maybe_verify_tu(inst, verify_tu);
  return inst;
}

int cmd_solve_nash(const std::string& path, bool verify_tu, const std::string& mode,
                   bool quiet) {
  Clock clock;
  GameInstance inst = load_instance(path, verify_tu, mode);
  GameState s;
  std::string note;
  if (inst.kind == StrategyKind::Tu) {
    s = solve_symmetric_nash(inst);
  } else {
    PolymatroidSolveResult res = solve_matroid_nash(PolymatroidGame::from_instance(inst));
    s = res.state;
    note = res.note;
  }
  if (quiet) {
    std::cout << render_state(s).dump() << "\n";
    return kExitOk;
  }
  std::cout << "command: solve-nash " << path << "\n";
  print_summary(inst);
  std::cout << "state: " << render_state(s).dump() << "\n";
  std::cout << "potential: " << potential(inst, s).str() << "\n";
  std::cout << "social_delay: " << social_delay(inst, s).str() << "\n";
  if (!note.empty()) std::cout << "note: " << note << "\n";
  bool ok = print_nash_verification(inst, s);
  std::cout << "time_ms: " << clock.ms() << "\n";
  return ok ? kExitOk : kExitInternal;
}

int cmd_solve_social(const std::string& path, bool verify_tu, const std::string& mode,
                     bool quiet) {
  Clock clock;
  GameInstance inst = load_instance(path, verify_tu, mode);
  GameState s = inst.kind == StrategyKind::Tu
                    ? solve_symmetric_social(inst)
                    : solve_polymatroid_social(PolymatroidGame::from_instance(inst));
  if (quiet) {
    std::cout << render_state(s).dump() << "\n";
    return kExitOk;
  }
  std::cout << "command: solve-social " << path << "\n";
  print_summary(inst);
  std::cout << "state: " << render_state(s).dump() << "\n";
  std::cout << "potential: " << potential(inst, s).str() << "\n";
  // definition-level re-evaluation, not the solver's own objective value
  std::cout << "social_delay: " << social_delay(inst, s).str() << "\n";
  std::cout << "time_ms: " << clock.ms() << "\n";
  return kExitOk;
}

int cmd_dynamics(const std::string& path, const std::string& state_path, std::size_t max_iters,
                 bool verify_tu, bool quiet) {
  Clock clock;
  GameInstance inst = load_instance(path, verify_tu, "");
  GameState start = state_path.empty() ? initial_state(inst)
                                       : parse_state_text(read_file(state_path), inst);
  auto [s, trace] = run_dynamics(inst, start, max_iters);
  if (quiet) {
    std::cout << render_state(s).dump() << "\n";
    return kExitOk;
  }
  std::cout << "command: dynamics " << path << "\n";
  print_summary(inst);
  std::cout << "steps: " << trace.steps.size() << "\n";
  for (const DynamicsStep& step : trace.steps)
    std::cout << "step: player " << step.player << " cost " << step.old_cost.str() << " -> "
              << step.new_cost.str() << " potential " << step.potential_after.str() << "\n";
  std::cout << "end: "
            << (trace.end == DynamicsEnd::NashReached ? "nash_reached" : "iteration_cap") << "\n";
  std::cout << "state: " << render_state(s).dump() << "\n";
  std::cout << "potential: " << potential(inst, s).str() << "\n";
  bool ok = trace.end == DynamicsEnd::IterationCap || print_nash_verification(inst, s);
  std::cout << "time_ms: " << clock.ms() << "\n";
  return ok ? kExitOk : kExitInternal;
}

int cmd_verify(const std::string& path, const std::string& state_path, bool quiet) {
  GameInstance inst = parse_instance_text(read_file(path));
  GameState s = parse_state_text(read_file(state_path), inst);
  std::optional<NashWitness> w = verify_nash(inst, s);
  if (quiet) {
    std::cout << (w ? "no" : "yes") << "\n";
    return kExitOk;
  }
  std::cout << "command: verify " << path << "\n";
  std::cout << "nash: " << (w ? "no" : "yes") << "\n";
  if (w) {
    std::cout << "witness_player: " << w->player << "\n";
    Json better = detail::ivec_to_json(w->better);
    std::cout << "witness_strategy: " << better.dump() << "\n";
  }
  std::cout << "potential: " << potential(inst, s).str() << "\n";
  std::cout << "social_delay: " << social_delay(inst, s).str() << "\n";
  return kExitOk;
}

int cmd_brute(const std::string& path, const std::string& objective, bool quiet) {
  Clock clock;
  GameInstance inst = parse_instance_text(read_file(path));
  std::pair<GameState, Int> best;
  if (objective == "potential") best = brute_force_min_potential(inst);
  else if (objective == "social") best = brute_force_min_social(inst);
  else throw PreconditionError("--objective takes potential or social");
  if (quiet) {
    std::cout << best.second.str() << "\n";
    return kExitOk;
  }
  std::cout << "command: brute " << path << "\n";
  print_summary(inst);
  std::cout << "objective: " << objective << "\n";
  std::cout << "value: " << best.second.str() << "\n";
  std::cout << "state: " << render_state(best.first).dump() << "\n";
  std::cout << "time_ms: " << clock.ms() << "\n";
  return kExitOk;
}

int cmd_check_tu(const std::string& path, bool quiet) {
  GameInstance inst = parse_instance_text(read_file(path));
  InstanceTuReport rep = check_instance_tu(inst);
  if (quiet) {
    std::cout << (rep.all_tu() ? "yes" : "no") << "\n";
    return kExitOk;
  }
  std::cout << "command: check-tu " << path << "\n";
  for (std::size_t i = 0; i < rep.players.size(); ++i) {
    const auto& v = rep.players[i];
    std::cout << "player " << i << ": " << (v.tu ? "TU" : "not TU");
    if (v.violation) {
      std::cout << " (submatrix determinant " << v.violation->det.str() << ", rows";
      for (std::size_t r : v.violation->rows) std::cout << " " << r;
      std::cout << ", cols";
      for (std::size_t c : v.violation->cols) std::cout << " " << c;
      std::cout << ")";
    }
    std::cout << "\n";
  }
  std::cout << "all_tu: " << (rep.all_tu() ? "yes" : "no") << "\n";
  return kExitOk;
}

Json labels_to_json(const ReductionArtifact& art) {
  Json map;
  Json players = Json::array();
  for (const auto& lab : art.labels) {
    Json entry;
    entry["assignment_0"] = detail::ivec_to_json(lab[0]);
    entry["assignment_1"] = detail::ivec_to_json(lab[1]);
    players.push_back(std::move(entry));
  }
  map["players"] = std::move(players);
  return map;
}

int cmd_gen_reduction(const std::string& kind, const std::string& formula_path,
                      const std::string& out_path, const std::string& map_path, bool quiet) {
  SatFlavor flavor = kind == "pm-nae3sat-social" ? SatFlavor::Nae3 : SatFlavor::Nae2;
  SatInstance sat = parse_sat_text(read_file(formula_path), flavor);
  ReductionArtifact art;
  if (kind == "pm-nae2sat") art = nae2sat_to_pm(sat);
  else if (kind == "pvc-nae2sat") art = nae2sat_to_pvc(sat);
  else if (kind == "pm-nae3sat-social") art = nae3sat_to_pm_social(sat);
  else throw PreconditionError("--kind takes pm-nae2sat, pvc-nae2sat, or pm-nae3sat-social");
  Json doc = render_instance(art.instance);
  Json map = labels_to_json(art);
  if (!out_path.empty()) write_file(out_path, doc.dump(2) + "\n");
  if (!map_path.empty()) write_file(map_path, map.dump(2) + "\n");
  if (quiet) {
    if (out_path.empty()) std::cout << doc.dump() << "\n";
    return kExitOk;
  }
  std::cout << "command: gen-reduction --kind " << kind << " " << formula_path << "\n";
  std::cout << "variables: " << sat.variables << "\n";
  std::cout << "clauses: " << sat.clauses.size() << "\n";
  std::cout << "players: " << art.instance.players << "\n";
  std::cout << "resources: " << art.instance.resources << "\n";
  for (const std::string& w : art.warnings) std::cout << "warning: " << w << "\n";
  if (out_path.empty()) std::cout << "instance: " << doc.dump() << "\n";
  else std::cout << "instance_file: " << out_path << "\n";
  if (map_path.empty()) std::cout << "mapping: " << map.dump() << "\n";
  else std::cout << "mapping_file: " << map_path << "\n";
  return kExitOk;
}

// Random symmetric TU instance for test corpora: one row style per instance
// (consecutive-ones intervals or a digraph incidence transpose), delays
// nondecreasing in [-max_delay, max_delay].
int cmd_gen_random(unsigned long long seed, std::size_t players, std::size_t resources,
                   std::size_t rows, long long max_delay, const std::string& out_path,
                   bool quiet) {
  if (resources == 0 || players == 0) throw PreconditionError("gen-random: empty dimensions");
  std::mt19937_64 rng(seed);
  TUSystem sys;
  sys.a = IntMatrix(rows, resources);
  if (rng() % 2 == 0) {
    for (std::size_t r = 0; r < rows; ++r) {
      std::size_t lo = rng() % resources;
      std::size_t hi = lo + rng() % (resources - lo);
      for (std::size_t c = lo; c <= hi; ++c) sys.a.at(r, c) = 1;
    }
  } else {
    for (std::size_t r = 0; r < rows; ++r) {
      std::size_t tail = rng() % resources;
      std::size_t head = rng() % resources;
      sys.a.at(r, tail) -= 1;
      sys.a.at(r, head) += 1;
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    long long span = 2 * (long long)players + 1;
    long long lo = (long long)(rng() % span) - (long long)players;
    sys.row_lo.push_back(rng() % 3 == 0 ? Bound::none() : Bound::at(lo));
    sys.row_hi.push_back(rng() % 3 == 0 ? Bound::none()
                                        : Bound::at(lo + (long long)(rng() % (players + 1))));
  }
  GameInstance inst;
  inst.players = players;
  inst.resources = resources;
  inst.kind = StrategyKind::Tu;
  inst.tu.assign(players, sys);
  for (std::size_t j = 0; j < resources; ++j) {
    IntVec row(players);
    long long span = 2 * max_delay + 1;
    for (std::size_t i = 0; i < players; ++i)
      row[i] = Int((long long)(rng() % span) - max_delay);
    std::sort(row.begin(), row.end());
    inst.delays.rows.push_back(std::move(row));
  }
  inst.symmetric = true;
  inst.validate();
  Json doc = render_instance(inst);
  if (!out_path.empty()) {
    write_file(out_path, doc.dump(2) + "\n");
    if (!quiet) std::cout << "instance_file: " << out_path << "\n";
  } else {
    std::cout << doc.dump(quiet ? -1 : 2) << "\n";
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for integer-splittable congestion games"};
  app.require_subcommand(1);
  bool quiet = false;

  std::string inst_path, state_path, mode, objective = "potential";
  std::string kind, formula_path, out_path, map_path;
  bool verify_tu = false;
  std::size_t max_iters = 100000;
  unsigned long long seed = 0;
  std::size_t players = 3, resources = 4, rows = 3;
  long long max_delay = 5;

  CLI::App* solve_nash = app.add_subcommand("solve-nash", "pure Nash equilibrium");
  solve_nash->add_option("instance", inst_path)->required();
  solve_nash->add_flag("--verify-tu", verify_tu, "check strategy matrices for total unimodularity first");
  solve_nash->add_option("--mode", mode, "cardinality variant: nash or social delay shift");

  CLI::App* solve_social = app.add_subcommand("solve-social", "socially optimal state");
  solve_social->add_option("instance", inst_path)->required();
  solve_social->add_flag("--verify-tu", verify_tu);
  solve_social->add_option("--mode", mode);

  CLI::App* dynamics = app.add_subcommand("dynamics", "best-response dynamics");
  dynamics->add_option("instance", inst_path)->required();
  dynamics->add_option("--state", state_path, "initial state document");
  dynamics->add_option("--max-iters", max_iters);
  dynamics->add_flag("--verify-tu", verify_tu);

  CLI::App* verify = app.add_subcommand("verify", "Nash check for a given state");
  verify->add_option("instance", inst_path)->required();
  verify->add_option("--state", state_path)->required();

  CLI::App* brute = app.add_subcommand("brute", "exhaustive minimization (small instances)");
  brute->add_option("instance", inst_path)->required();
  brute->add_option("--objective", objective, "potential or social");

  CLI::App* check_tu = app.add_subcommand("check-tu", "total unimodularity report");
  check_tu->add_option("instance", inst_path)->required();

  CLI::App* gen_reduction = app.add_subcommand("gen-reduction", "hardness gadget generator");
  gen_reduction->add_option("formula", formula_path)->required();
  gen_reduction->add_option("--kind", kind)->required();
  gen_reduction->add_option("--out", out_path, "instance document file");
  gen_reduction->add_option("--map", map_path, "assignment mapping file");

  CLI::App* gen_random = app.add_subcommand("gen-random", "random symmetric TU instance");
  gen_random->add_option("--seed", seed)->required();
  gen_random->add_option("--players", players);
  gen_random->add_option("--resources", resources);
  gen_random->add_option("--rows", rows);
  gen_random->add_option("--max-delay", max_delay)->check(CLI::PositiveNumber);
  gen_random->add_option("--out", out_path);

  for (CLI::App* sub : app.get_subcommands({}))
    sub->add_flag("--quiet", quiet, "value-only output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_nash->parsed()) return cmd_solve_nash(inst_path, verify_tu, mode, quiet);
    if (solve_social->parsed()) return cmd_solve_social(inst_path, verify_tu, mode, quiet);
    if (dynamics->parsed())
      return cmd_dynamics(inst_path, state_path, max_iters, verify_tu, quiet);
    if (verify->parsed()) return cmd_verify(inst_path, state_path, quiet);
    if (brute->parsed()) return cmd_brute(inst_path, objective, quiet);
    if (check_tu->parsed()) return cmd_check_tu(inst_path, quiet);
    if (gen_reduction->parsed())
      return cmd_gen_reduction(kind, formula_path, out_path, map_path, quiet);
    if (gen_random->parsed())
      return cmd_gen_random(seed, players, resources, rows, max_delay, out_path, quiet);
  } catch (const InternalInvariantError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitPrecondition;
}
