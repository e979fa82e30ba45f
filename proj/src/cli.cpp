// Copyright 2026 The qbody Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qbody/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <vector>

#include "CLI11.hpp"

#include "qbody/errors.hpp"

namespace qbody::cli {
namespace {

constexpr std::size_t kMaxRealizeM = 16;

void require_even(std::size_t m) {
  if (m < 2 || m % 2 != 0) throw InvalidInputError("m must be even");
}

std::size_t ipow2(std::size_t e) { return std::size_t{1} << e; }

void emit(const Json& j, const RunConfig& config, std::ostream& out) {
  if (!config.output_path) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(*config.output_path);
  if (!file) throw IoError("cannot open " + config.output_path->string() + " for writing");
  file << j.dump(2) << '\n';
  if (!file) throw IoError("failed writing " + config.output_path->string());
}

}  // namespace

Json cmd_xo(std::size_t m) {
  require_even(m);
  const Behavior mixed = build_x_o(m);
  const CorrelationMatrix mixed_matrix = to_matrix(mixed);
  const CorrelationMatrix closed = closed_form_x_o(m);
  const ConvexCombination combo = x_o_combination(m);
  std::vector<double> weights;
  for (const auto& t : combo.terms) weights.push_back(t.weight);
  return {{"m", m},
          {"behavior", to_json(mixed)},
          {"mixture_matrix", to_json(mixed_matrix)},
          {"closed_form_matrix", to_json(closed)},
          {"max_difference", max_abs_difference(mixed_matrix, closed)},
          {"balanced_strategies", balanced_strategy_count(m)},
          {"weights", weights}};
}

Json cmd_witness(std::size_t m, std::size_t d, const ToleranceConfig& tol) {
  require_even(m);
  if (d < 1) throw InvalidInputError("d must be at least 1");
  tol.validate();
  Json j = to_json(dimension_witness(closed_form_x_o(m).to_behavior(), d, tol.rank_eps));
  j["m"] = m;
  return j;
}

Json cmd_seesaw(std::size_t m, std::size_t trials, std::uint64_t seed, const ToleranceConfig& tol,
                std::size_t max_iter, std::size_t threads) {
  if (m < 1) throw InvalidInputError("m must be at least 1");
  if (trials < 1) throw InvalidInputError("trials must be at least 1");
  tol.validate();
  SeesawOptions options;
  options.tol = tol.conv_eps;
  options.max_iter = max_iter;
  const SeesawResult best = seesaw_best(bell_matrix(m), trials, seed, options, threads);
  Json j = to_json(best);
  j["trials"] = trials;
  j["bound"] = static_cast<double>(m * m) / 2.0;
  return j;
}

Json cmd_certify(std::size_t m, const ToleranceConfig& tol) {
  if (m < 1) throw InvalidInputError("m must be at least 1");
  tol.validate();
  const AnalyticCertificate ac = analytic_certificate(m, tol.psd_eps);
  Json j = to_json(ac.certificate);
  j["gamma_max_w"] = ac.gamma_max_w;
  j["weyl_lower_bound"] = ac.weyl_lower_bound;
  j["m_eigenvalues"] = ac.m_eigenvalues;
  return j;
}

Json cmd_realize(std::size_t m, const ToleranceConfig& tol) {
  require_even(m);
  if (m > kMaxRealizeM) throw ResourceError("realize supports m <= 16");
  tol.validate();
  const TsirelsonVectors v = x_o_vectors(m);
  const QuantumRealization r = realize_from_vectors(v.a, v.b);
  const Behavior b = behavior_of(r);
  const CorrelationMatrix closed = closed_form_x_o(m);
  const double deviation = (b.joints - closed.interior()).cwiseAbs().maxCoeff();
  const double marginal = std::max(b.a_marginals.cwiseAbs().maxCoeff(),
                                   b.b_marginals.cwiseAbs().maxCoeff());
  const std::size_t local_dim = ipow2(m / 2);
  return {{"m", m},
          {"local_dimension", r.dim_a},
          {"behavior", to_json(b)},
          {"max_deviation", deviation},
          {"max_marginal", marginal},
          {"witness", to_json(dimension_witness(b, local_dim, tol.rank_eps))},
          {"realization", to_json(r)}};
}

Json cmd_cone(std::size_t grid_density, const std::filesystem::path& out, Format format,
              std::size_t threads) {
  if (grid_density < 2) throw InvalidInputError("grid density must be at least 2");
  const auto projective = projective_scan(grid_density, 1e-6, threads);
  const auto povm = povm_scan(grid_density, 1e-6, threads);

  std::ofstream file(out);
  if (!file) throw IoError("cannot open " + out.string() + " for writing");
  if (format == Format::csv) {
    write_scan_csv(file, projective);
    write_scan_csv(file, povm, false);
  } else {
    Json rows = Json::array();
    for (const auto& p : projective) rows.push_back(to_json(p));
    for (const auto& p : povm) rows.push_back(to_json(p));
    file << rows.dump() << '\n';
  }
  if (!file) throw IoError("failed writing " + out.string());

  auto summarize = [](const std::vector<ScanPoint>& pts) {
    std::map<std::string, std::size_t> counts;
    for (const auto c : {ConeClass::apex, ConeClass::equator, ConeClass::lateral_surface,
                         ConeClass::interior, ConeClass::exterior}) {
      counts[std::string(to_string(c))] = 0;
    }
    std::size_t fractional_lateral = 0;
    std::size_t axis_fractional = 0;
    std::size_t origin = 0;
    for (const auto& p : pts) {
      ++counts[std::string(to_string(p.cls))];
      const double az = std::abs(p.point.z);
      const bool fractional = az > 1e-6 && az < 1.0 - 1e-6;
      if (p.cls == ConeClass::lateral_surface && fractional) ++fractional_lateral;
      const bool on_axis = std::abs(p.point.x) <= 1e-6 && std::abs(p.point.y) <= 1e-6;
      if (on_axis && fractional) ++axis_fractional;
      if (on_axis && az <= 1e-6) ++origin;
    }
    return Json{{"points", pts.size()},
                {"classes", counts},
                {"lateral_surface_fractional_z", fractional_lateral},
                {"axis_fractional_z", axis_fractional},
                {"origin", origin}};
  };
  return {{"grid", grid_density},
          {"output", out.string()},
          {"projective", summarize(projective)},
          {"povm", summarize(povm)}};
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format == Format::csv && config.command != Command::cone) {
      throw InvalidInputError("csv output is only available for cone");
    }
    switch (config.command) {
      case Command::xo: emit(cmd_xo(config.m), config, out); break;
      case Command::witness: emit(cmd_witness(config.m, config.d, config.tolerances), config, out); break;
      case Command::seesaw:
        emit(cmd_seesaw(config.m, config.trials, config.seed, config.tolerances, config.max_iter,
                        config.parallel),
             config, out);
        break;
      case Command::certify: emit(cmd_certify(config.m, config.tolerances), config, out); break;
      case Command::realize: emit(cmd_realize(config.m, config.tolerances), config, out); break;
      case Command::cone: {
        if (!config.output_path) throw InvalidInputError("cone requires --out");
        out << cmd_cone(config.grid_density, *config.output_path,
                        config.format.value_or(Format::csv), config.parallel)
                   .dump(2)
            << '\n';
        break;
      }
    }
    return kSuccess;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimension witnesses, Bell maxima and realizations for fixed-dimension quantum correlations"};
  app.require_subcommand(1);

  RunConfig config;
  std::string profile = "default";
  std::optional<double> rank_eps;
  std::optional<double> psd_eps;
  std::optional<double> conv_eps;
  std::string out_path;
  std::string format;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Output file");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--parallel", config.parallel, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--tolerance-profile", profile, "Tolerance preset")
        ->check(CLI::IsMember({"default", "strict"}));
    sub->add_option("--rank-eps", rank_eps, "Relative singular-value threshold");
    sub->add_option("--psd-eps", psd_eps, "Absolute eigenvalue floor");
    sub->add_option("--conv-eps", conv_eps, "See-saw value-increase threshold");
    sub->add_option("--seed", config.seed, "Random seed");
  };

  struct Entry {
    const char* name;
    Command command;
    const char* help;
  };
  const Entry entries[] = {
      {"xo", Command::xo, "Witness point from the deterministic mixture and its closed form"},
      {"witness", Command::witness, "Rank-based dimension witness of the witness point"},
      {"seesaw", Command::seesaw, "See-saw maximization of the Bell polynomial"},
      {"certify", Command::certify, "Analytic primal/dual SDP certificate"},
      {"realize", Command::realize, "Explicit quantum realization of the witness point"},
      {"cone", Command::cone, "Projective versus POVM scan of the 3x2 slice"},
  };
  std::map<CLI::App*, Command> commands;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub);
    commands[sub] = e.command;
    if (e.command != Command::cone) sub->add_option("--m", config.m, "Number of settings")->required();
    if (e.command == Command::witness) sub->add_option("--d", config.d, "Local dimension")->required();
    if (e.command == Command::seesaw) {
      sub->add_option("--trials", config.trials, "Number of seeded trials");
      sub->add_option("--max-iter", config.max_iter, "Iteration cap per trial");
    }
    if (e.command == Command::cone) sub->add_option("--grid", config.grid_density, "Grid density");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) config.command = command;
  }
  config.tolerances =
      profile == "strict" ? ToleranceConfig::strict_profile() : ToleranceConfig::default_profile();
  if (rank_eps) config.tolerances.rank_eps = *rank_eps;
  if (psd_eps) config.tolerances.psd_eps = *psd_eps;
  if (conv_eps) config.tolerances.conv_eps = *conv_eps;
  if (!out_path.empty()) config.output_path = out_path;
  if (!format.empty()) config.format = format == "csv" ? Format::csv : Format::json;
  return execute(config, out, err);
}

}  // namespace qbody::cli
