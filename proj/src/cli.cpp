// Copyright 2026 The qwsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwsym/cli.hpp"

#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qwsym/errors.hpp"
#include "qwsym/io.hpp"

namespace qwsym::cli {
namespace {

using io::json;

struct RunConfig {
  std::string group = "line";
  std::string coin = "hadamard";
  std::string start;
  std::string symmetry;
  std::int64_t steps = -1;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
  double tol = kRelationTol;
  std::size_t radius = 3;
  bool battery = false;
  std::size_t canonicalize = 0;
  std::string nu;
  std::optional<double> psi;
};

void configure_logging() {
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("WALK_LOG_LEVEL")) {
    const std::string v = level;
    if (v == "error") spdlog::set_level(spdlog::level::err);
    else if (v == "info") spdlog::set_level(spdlog::level::info);
    else if (v == "debug") spdlog::set_level(spdlog::level::debug);
  }
}

// "@path" reads the argument from a file.
std::string read_arg(const std::string& value) {
  if (value.empty() || value.front() != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw SpecError("cannot open " + value.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to --out when given, to `fallback` otherwise.
template <typename F>
void emit(const RunConfig& cfg, std::ostream& fallback, F&& write) {
  if (cfg.out.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw SpecError("cannot write " + cfg.out);
  write(file);
}

struct Walk {
  Group group;
  QuantumCoin coin;
  WalkState start;
};

Walk load_walk(const RunConfig& cfg) {
  Group g = io::parse_group_text(read_arg(cfg.group));
  QuantumCoin coin = io::parse_coin_text(read_arg(cfg.coin), g, cfg.seed);
  WalkState start = cfg.start.empty() ? WalkState::basis(g, g.identity(), 0) : io::parse_state_text(read_arg(cfg.start), g);
  if (std::abs(start.norm() - 1.0) > 1e-10) {
    throw SpecError("start state has norm " + std::to_string(start.norm()) + ", expected 1");
  }
  return Walk{std::move(g), std::move(coin), std::move(start)};
}

std::vector<GroupElement> window(const Group& g, std::size_t radius) {
  const auto order = g.order();
  if (order && *order <= 64) return g.elements();
  return g.ball(radius);
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const Walk w = load_walk(cfg);
  const std::int64_t steps = cfg.steps < 0 ? 50 : cfg.steps;
  const auto trajectory = evolve(w.coin, w.start, steps);
  for (std::size_t n = 0; n < trajectory.size(); ++n) {
    const double drift = std::abs(trajectory[n].norm() - 1.0);
    if (drift > 1e-10) throw NumericError("norm drift " + std::to_string(drift) + " at step " + std::to_string(n));
  }
  spdlog::info("simulated {} steps on {}", steps, w.group.name());
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      os << io::distributions_json(trajectory).dump() << '\n';
    } else {
      io::write_distributions_csv(os, trajectory);
    }
  });
  return kOk;
}

int cmd_transform(const RunConfig& cfg, std::ostream& out) {
  if (cfg.symmetry.empty()) throw SpecError("transform needs --symmetry");
  const Walk w = load_walk(cfg);
  const json spec = io::read_json_text(read_arg(cfg.symmetry));
  QuantumCoin coin = w.coin;
  WalkState initial = w.start;
  json result;
  if (auto gs = io::parse_generalized(spec, w.group)) {
    TransformedWalk tw = generalized_transform(*gs, w.coin, w.start);
    coin = std::move(tw.coin);
    initial = std::move(tw.initial);
    result["family"] = to_string(gs->inner.family());
    result["automorphism"] = io::to_json(gs->perm);
  } else {
    const SymmetryTransform t = io::parse_symmetry(spec, w.group);
    coin = transform_coin(t, w.coin);
    initial = transform_state(t, w.start);
    result["family"] = to_string(t.family());
  }
  const std::int64_t steps = cfg.steps < 0 ? 1 : cfg.steps;
  json table = json::array();
  for (std::int64_t n = 0; n < steps; ++n) {
    for (const auto& x : window(w.group, cfg.radius)) {
      table.push_back(json{{"n", n}, {"x", io::to_json(x)}, {"matrix", io::to_json(coin.at(n, x))}});
    }
  }
  result["coin_table"] = std::move(table);
  result["initial_state"] = io::to_json(initial);
  emit(cfg, out, [&](std::ostream& os) { os << result.dump() << '\n'; });
  return kOk;
}

// One phase u_{n,x,c} flipped in the claimed relation; the transformed walk
// still comes from the intact symmetry.
SymmetryTransform corrupted(const SymmetryTransform& t, const json& where) {
  const Group& g = t.group();
  const auto n = where.value("n", std::int64_t{1});
  const GroupElement x = where.contains("x") ? io::parse_element(g, where.at("x")) : g.identity();
  const auto c = where.value("c", std::size_t{0});
  PhaseField phases([t, n, x, c](std::int64_t m, const GroupElement& y, std::size_t d) {
    const Complex u = t.phase(m, y, d);
    return (m == n && y == x && d == c) ? -u : u;
  });
  return make_general_symmetry(g, t.initial_operator(), std::move(phases));
}

std::vector<VerificationReport> symmetry_reports(const Walk& w, const json& spec, std::int64_t steps, double tol) {
  std::vector<VerificationReport> reports;
  if (auto gs = io::parse_generalized(spec, w.group)) {
    reports.push_back(check_symmetry_relation(w.coin, w.start, *gs, steps, tol));
    reports.push_back(check_probability_map(w.coin, w.start, *gs, steps, tol));
    return reports;
  }
  const SymmetryTransform t = io::parse_symmetry(spec, w.group);
  if (spec.contains("corrupt")) {
    const SymmetryTransform bad = corrupted(t, spec.at("corrupt"));
    auto r = check_symmetry_relation(w.coin, w.start, transform_coin(t, w.coin), transform_state(t, w.start), bad,
                                     steps, tol);
    r.case_id += "/corrupted";
    reports.push_back(std::move(r));
    return reports;
  }
  reports.push_back(check_symmetry_relation(w.coin, w.start, t, steps, tol));
  reports.push_back(check_probability_map(w.coin, w.start, t, steps, tol));
  return reports;
}

std::vector<VerificationReport> battery(std::uint64_t seed, std::int64_t steps, double tol) {
  std::vector<VerificationReport> reports;
  const std::vector<Group> groups{Group::line(), Group::cyclic(8), Group::hypercube(3)};
  for (const auto& g : groups) {
    for (auto r : run_invariant_suite(g, seed)) {
      r.case_id = g.name() + "/" + r.case_id;
      reports.push_back(std::move(r));
    }
    const QuantumCoin coin = g.degree() == 2 ? QuantumCoin::uniform(hadamard()) : QuantumCoin::uniform(grover(g.degree()));
    const WalkState start = WalkState::basis(g, g.identity(), 0);
    for (auto family : {SymmetryFamily::General, SymmetryFamily::SpaceHomogeneous, SymmetryFamily::TimeHomogeneous,
                        SymmetryFamily::FullHomogeneous}) {
      const SymmetryTransform t = random_symmetry(g, family, seed + static_cast<std::uint64_t>(family));
      for (auto r : {check_symmetry_relation(coin, start, t, steps, tol), check_probability_map(coin, start, t, steps, tol)}) {
        r.case_id = g.name() + "/" + r.case_id;
        reports.push_back(std::move(r));
      }
    }
  }
  return reports;
}

std::vector<VerificationReport> canonicalize_pipeline(std::size_t count, std::uint64_t seed, std::int64_t steps,
                                                      double tol) {
  std::vector<VerificationReport> reports;
  const Group line = Group::line();
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = seed + i;
    const QuantumCoin coin = QuantumCoin::uniform(build_line_coin(random_line_params(s)));
    const Canonicalization canon = canonicalize_line_coin(coin.at(0, line.identity()), line);
    const CoinMatrix reduced = transform_coin(canon.transform, coin).at(0, line.identity());
    const std::string id = "canonicalize/seed=" + std::to_string(s);
    reports.push_back(make_report(id + "/rotation", {max_abs_diff(reduced, rotation(canon.psi))}, kIdentityTol));
    auto r = check_symmetry_relation(coin, WalkState::basis(line, line.identity(), 0), canon.transform, steps, tol);
    r.case_id = id + "/relation";
    reports.push_back(std::move(r));
  }
  return reports;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::int64_t steps = cfg.steps < 0 ? 50 : cfg.steps;
  std::vector<VerificationReport> reports;
  if (cfg.battery) {
    auto b = battery(cfg.seed, steps, cfg.tol);
    reports.insert(reports.end(), b.begin(), b.end());
  }
  if (cfg.canonicalize > 0) {
    auto c = canonicalize_pipeline(cfg.canonicalize, cfg.seed, steps, cfg.tol);
    reports.insert(reports.end(), c.begin(), c.end());
  }
  if (!cfg.symmetry.empty()) {
    const Walk w = load_walk(cfg);
    auto s = symmetry_reports(w, io::read_json_text(read_arg(cfg.symmetry)), steps, cfg.tol);
    reports.insert(reports.end(), s.begin(), s.end());
  } else if (!cfg.battery && cfg.canonicalize == 0) {
    const Group g = io::parse_group_text(read_arg(cfg.group));
    reports = run_invariant_suite(g, cfg.seed, std::min(cfg.tol, kIdentityTol));
  }
  bool all_ok = true;
  emit(cfg, out, [&](std::ostream& os) {
    for (const auto& r : reports) {
      os << io::to_json(r).dump() << '\n';
      all_ok = all_ok && r.ok();
    }
  });
  return all_ok ? kOk : kCheckFailed;
}

CoinMatrix line_coin_matrix(const RunConfig& cfg) {
  const Group line = Group::line();
  const QuantumCoin coin = io::parse_coin_text(read_arg(cfg.coin), line, cfg.seed);
  if (!coin.time_homogeneous() || !coin.space_homogeneous()) {
    throw SpecError("line tools need a uniform coin");
  }
  return coin.at(0, line.identity());
}

int cmd_line(const std::string& tool, const RunConfig& cfg, std::ostream& out) {
  json result;
  if (tool == "canonicalize") {
    const Canonicalization c = canonicalize_line_coin(line_coin_matrix(cfg));
    const auto& p = std::get<FullHomogParams>(c.transform.parameters());
    result = json{{"psi", c.psi},
                  {"params", io::to_json(c.params)},
                  {"symmetry",
                   {{"family", "full_homog"},
                    {"epsilon", io::to_json(p.epsilon)},
                    {"character", p.gamma.description()},
                    {"Uprime", io::to_json(p.uprime)}}},
                  {"canonical_coin", io::to_json(rotation(c.psi))}};
  } else if (tool == "mirror") {
    const LineCoinParams p = decompose_line_coin(line_coin_matrix(cfg));
    const MirrorSymmetry m = mirror_generalized_symmetry(p);
    const auto& inner = std::get<FullHomogParams>(m.symmetry.inner.parameters());
    const QuantumCoin mirrored = generalized_transform(m.symmetry, QuantumCoin::uniform(build_line_coin(p)),
                                                       WalkState::basis(Group::line(), GroupElement{0}, 0))
                                     .coin;
    result = json{{"params", io::to_json(p)},
                  {"automorphism", io::to_json(m.symmetry.perm)},
                  {"inner",
                   {{"family", "full_homog"},
                    {"epsilon", io::to_json(inner.epsilon)},
                    {"character", inner.gamma.description()},
                    {"Uprime", io::to_json(inner.uprime)}}},
                  {"Q", io::to_json(m.q)},
                  {"transformed_coin", io::to_json(mirrored.at(0, GroupElement{0}))}};
  } else if (tool == "symmetric-states") {
    LineCoinParams p;
    if (cfg.psi || !cfg.nu.empty()) {
      p.nu = cfg.nu.empty() ? Complex(1.0) : io::parse_complex_text(cfg.nu);
      p.psi = cfg.psi.value_or(0.0);
      build_line_coin(p);
    } else {
      p = decompose_line_coin(line_coin_matrix(cfg));
    }
    const auto [plus, minus] = symmetric_initial_states(p);
    result = json{{"nu", io::to_json(p.nu)},
                  {"psi", p.psi},
                  {"Q", io::to_json(mirror_chirality_map(p))},
                  {"chi_plus", io::to_json(plus)},
                  {"chi_minus", io::to_json(minus)}};
  } else {
    throw SpecError("unknown line tool '" + tool + "'");
  }
  emit(cfg, out, [&](std::ostream& os) { os << result.dump() << '\n'; });
  return kOk;
}

int cmd_group(const std::string& tool, const RunConfig& cfg, std::ostream& out) {
  const Group g = io::parse_group_text(read_arg(cfg.group));
  json result{{"group", g.name()}};
  if (tool == "causal") {
    result["chi"] = g.chi() ? json(*g.chi()) : json("infinite");
    result["nonseparating"] = g.nonseparating();
    result["distinguished_generator"] = io::to_json(g.distinguished_generator());
    if (g.is_finite()) {
      const CausalStructure cs = brute_force_causal(g);
      json causal = json::array();
      for (const auto& x : cs.causal) causal.push_back(io::to_json(x));
      result["causal_subgroup"] = std::move(causal);
      result["brute_force_chi"] = cs.chi;
    }
  } else if (tool == "automorphisms") {
    json list = json::array();
    for (const auto& a : generator_automorphisms(g, cfg.seed)) list.push_back(a.generator_permutation());
    result["generator_permutations"] = std::move(list);
  } else {
    throw SpecError("unknown group tool '" + tool + "'");
  }
  emit(cfg, out, [&](std::ostream& os) { os << result.dump() << '\n'; });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_logging();
  RunConfig cfg;
  CLI::App app{"Coined quantum walks on Cayley graphs and their symmetries", "qwsym"};
  app.require_subcommand(1);

  auto add_walk = [&cfg](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "group shorthand, JSON or @file");
    sub->add_option("--coin", cfg.coin, "named coin, JSON or @file");
    sub->add_option("--start", cfg.start, "start state, e.g. \"0:(1,0)\"");
    sub->add_option("--steps", cfg.steps);
    sub->add_option("--out", cfg.out);
    sub->add_option("--seed", cfg.seed);
  };
  auto* simulate = app.add_subcommand("simulate", "per-step position distributions");
  add_walk(simulate);
  simulate->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

  auto* transform = app.add_subcommand("transform", "apply a symmetry to a walk");
  add_walk(transform);
  transform->add_option("--symmetry", cfg.symmetry)->required();
  transform->add_option("--radius", cfg.radius, "position window for the coin table");

  auto* verify = app.add_subcommand("verify", "run checks, one JSON report per line");
  add_walk(verify);
  verify->add_option("--symmetry", cfg.symmetry);
  verify->add_option("--tol", cfg.tol);
  verify->add_flag("--battery", cfg.battery, "line, cyclic(8) and hypercube(3) battery");
  verify->add_option("--canonicalize", cfg.canonicalize, "number of random line coins to canonicalize and check");

  std::string line_tool, group_tool;
  auto* line = app.add_subcommand("line", "tools for the walk on Z");
  line->add_option("tool", line_tool)->required()->check(CLI::IsMember({"canonicalize", "mirror", "symmetric-states"}));
  line->add_option("--coin", cfg.coin);
  line->add_option("--nu", cfg.nu);
  line->add_option("--psi", cfg.psi);
  line->add_option("--out", cfg.out);

  auto* group = app.add_subcommand("group", "causal subgroup and automorphisms");
  group->add_option("tool", group_tool)->required()->check(CLI::IsMember({"causal", "automorphisms"}));
  group->add_option("--group", cfg.group);
  group->add_option("--seed", cfg.seed);
  group->add_option("--out", cfg.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qwsym: " << e.what() << '\n';
    return kBadConfig;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(cfg, out);
    if (transform->parsed()) return cmd_transform(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (line->parsed()) return cmd_line(line_tool, cfg, out);
    if (group->parsed()) return cmd_group(group_tool, cfg, out);
  } catch (const DegenerateCoinError& e) {
    err << "qwsym: degenerate coin: " << e.what() << '\n';
    return kDegenerate;
  } catch (const PreconditionError& e) {
    err << "qwsym: precondition violated: " << e.what() << '\n';
    return kFamilyPrecondition;
  } catch (const NumericError& e) {
    err << "qwsym: numeric invariant violated: " << e.what() << '\n';
    return kNumericViolation;
  } catch (const Error& e) {
    err << "qwsym: invalid configuration: " << e.what() << '\n';
    return kBadConfig;
  }
  return kBadConfig;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace qwsym::cli
