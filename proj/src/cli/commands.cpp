// Copyright 2026 The qsvm Authors
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

#include "qsvm/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qsvm/circuits/builders.hpp"
#include "qsvm/circuits/coupling.hpp"
#include "qsvm/circuits/depth.hpp"
#include "qsvm/circuits/serialize.hpp"
#include "qsvm/cli/svg.hpp"
#include "qsvm/error.hpp"
#include "qsvm/metrics/metrics.hpp"

namespace qsvm::cli {
namespace {

namespace fs = std::filesystem;

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
  if (!out) throw DataError("write failed for " + path.string());
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

Circuit circuit_of(CircuitKind k) {
  return k == CircuitKind::kHhlOptimized ? circuits::build_hhl_optimized() : circuits::build_baseline_qsvm();
}

StateVector input_of(CircuitKind k) {
  return k == CircuitKind::kHhlOptimized ? circuits::hhl_input_state({1.0, -1.0}) : StateVector(4);
}

NoiseModel scaled_noise(double level, const NoiseModel& base) {
  return NoiseModel(level, level, base.readout_flip_prob(), base.seed());
}

}  // namespace

std::vector<fs::path> cmd_preprocess(const RunConfig& config) {
  const LabeledDataset ds = load_dataset(config);
  const auto train = training_points(config, ds);
  const MappingCoefficients k = mapping_for(config, ds, train);
  fs::create_directories(config.output_dir);

  std::vector<PreprocessedPoint> pts;
  pts.reserve(ds.size());
  for (const auto& p : ds.points) pts.push_back(preprocess_point(p, k, config.angle_mode));

  std::ostringstream raw, mapped, unit, angles;
  raw << "index," << ds.feature_names[0] << ',' << ds.feature_names[1] << ",label\n";
  mapped << "index,v1,v2,label\n";
  unit << "index,x1,x2,label\n";
  angles << "index,angle,label\n";
  std::vector<ScatterPoint> s_raw, s_mapped, s_unit, s_angle;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const int l = to_int(ds.labels[i]);
    const auto& p = pts[i];
    raw << i << ',' << fmt(p.raw.t1) << ',' << fmt(p.raw.t2) << ',' << l << '\n';
    mapped << i << ',' << fmt(p.mapped.v1) << ',' << fmt(p.mapped.v2) << ',' << l << '\n';
    unit << i << ',' << fmt(p.unit.x1) << ',' << fmt(p.unit.x2) << ',' << l << '\n';
    angles << i << ',' << fmt(p.angle) << ',' << l << '\n';
    s_raw.push_back({p.raw.t1, p.raw.t2, l});
    s_mapped.push_back({p.mapped.v1, p.mapped.v2, l});
    s_unit.push_back({p.unit.x1, p.unit.x2, l});
    s_angle.push_back({std::cos(p.angle), std::sin(p.angle), l});
  }

  const std::array<std::pair<std::string, std::string>, 4> csvs{{{"stage1_raw", raw.str()},
                                                                  {"stage2_mapped", mapped.str()},
                                                                  {"stage3_normalized", unit.str()},
                                                                  {"stage4_angles", angles.str()}}};
  const std::array<std::vector<ScatterPoint>*, 4> scatters{&s_raw, &s_mapped, &s_unit, &s_angle};
  std::vector<fs::path> written;
  for (std::size_t s = 0; s < csvs.size(); ++s) {
    const fs::path csv = config.output_dir / (csvs[s].first + ".csv");
    const fs::path svg = config.output_dir / (csvs[s].first + ".svg");
    write_text(csv, csvs[s].second);
    write_text(svg, scatter_svg(ds.name + " " + csvs[s].first, *scatters[s], {}, std::nullopt, s >= 2));
    written.push_back(csv);
    written.push_back(svg);
  }
  return written;
}

nlohmann::json cmd_run(const RunConfig& config) {
  const PipelineResult r = run_pipeline(config);
  nlohmann::json report = pipeline_report(config, r);
  fs::create_directories(config.output_dir);
  write_text(config.output_dir / "report.json", report.dump(2) + "\n");
  write_text(config.output_dir / "classification.csv", classification_csv(r.test, r.dataset.labels, r.predicted));

  std::vector<ScatterPoint> pts;
  for (std::size_t i = 0; i < r.test.size(); ++i) {
    pts.push_back({r.test[i].unit.x1, r.test[i].unit.x2, to_int(r.predicted[i])});
  }
  const std::vector<ScatterPoint> train{{r.training[0].unit.x1, r.training[0].unit.x2, 1},
                                        {r.training[1].unit.x1, r.training[1].unit.x2, -1}};
  const DecisionBoundary b = decision_boundary(*r.model);
  write_text(config.output_dir / "boundary.svg",
             scatter_svg(r.dataset.name + " predicted labels", pts, train, b.direction, true));
  return report;
}

double median_js(CircuitKind circuit, const NoiseModel& noise, std::uint64_t shots, int runs, unsigned threads) {
  if (runs < 1) throw InvalidArgument("median_js needs at least one run");
  const Circuit c = circuit_of(circuit);
  const StateVector in = input_of(circuit);
  const ProbDist ideal = dist_from_state(run_exact(c, in));
  std::vector<double> js;
  for (int r = 0; r < runs; ++r) {
    const Counts counts = run_noisy(c, in, noise.with_seed(noise.seed() + static_cast<std::uint64_t>(r)), shots,
                                    threads);
    js.push_back(js_divergence(ideal, dist_from_counts(counts)));
  }
  std::sort(js.begin(), js.end());
  const std::size_t m = js.size() / 2;
  return js.size() % 2 ? js[m] : 0.5 * (js[m - 1] + js[m]);
}

nlohmann::json cmd_divergence(const RunConfig& config, const DivergenceOptions& options) {
  config.validate();
  const NoiseModel noise = config.noise.value_or(NoiseModel::defaults(config.seed));
  nlohmann::json out;
  out["shots"] = config.shots;
  out["runs"] = options.runs;
  out["noise_params"] = {{"depolarizing_prob_1q", noise.depolarizing_prob_1q()},
                         {"depolarizing_prob_2q", noise.depolarizing_prob_2q()},
                         {"readout_flip_prob", noise.readout_flip_prob()},
                         {"seed", noise.seed()}};
  std::map<CircuitKind, double> at_config;
  for (CircuitKind k : {CircuitKind::kHhlOptimized, CircuitKind::kBaseline}) {
    at_config[k] = median_js(k, noise, config.shots, options.runs, config.threads);
    const Circuit c = circuit_of(k);
    out["circuits"][to_string(k)] = {{"label", c.label()},
                                     {"depth", circuits::depth(c)},
                                     {"js", at_config[k]}};
  }
  out["ordering_holds"] = at_config[CircuitKind::kHhlOptimized] < at_config[CircuitKind::kBaseline];

  bool monotone = true;
  std::map<CircuitKind, double> previous;
  for (double level : options.sweep_levels) {
    nlohmann::json row{{"level", level}};
    for (CircuitKind k : {CircuitKind::kHhlOptimized, CircuitKind::kBaseline}) {
      const double js = median_js(k, scaled_noise(level, noise), config.shots, options.runs, config.threads);
      if (previous.count(k) && js < previous[k]) monotone = false;
      previous[k] = js;
      row[to_string(k)] = js;
    }
    out["sweep"].push_back(row);
  }
  out["sweep_readout_flip_prob"] = noise.readout_flip_prob();
  out["monotone"] = monotone;
  return out;
}

nlohmann::json depth_table() {
  nlohmann::json rows = nlohmann::json::array();
  for (int m : {2, 4, 8}) {
    nlohmann::json row{{"M", m}, {"original_formula", circuits::oracle_depth_formula(m)}, {"new_oracle", 1}};
    if (m <= 4) {
      std::vector<double> angles(static_cast<std::size_t>(m), 0.3);
      row["original_constructed"] = circuits::depth(circuits::build_oracle_original_generalized(angles));
    } else {
      row["original_constructed"] = nullptr;
    }
    const std::vector<double> angles(static_cast<std::size_t>(m), 0.3);
    row["new_oracle"] = circuits::depth(circuits::build_oracle_new(angles));
    rows.push_back(row);
  }
  return {{"oracles", rows},
          {"hhl_optimized", circuits::depth(circuits::build_hhl_optimized())},
          {"baseline", circuits::depth(circuits::build_baseline_qsvm())}};
}

std::string format_depth_table(const nlohmann::json& table) {
  std::ostringstream out;
  out << std::left << std::setw(4) << "M" << std::setw(22) << "original (formula)" << std::setw(26)
      << "original (constructed)" << "new oracle\n";
  for (const auto& row : table.at("oracles")) {
    out << std::setw(4) << row.at("M").get<int>() << std::setw(22) << row.at("original_formula").get<std::int64_t>()
        << std::setw(26)
        << (row.at("original_constructed").is_null() ? std::string("-")
                                                     : std::to_string(row.at("original_constructed").get<int>()))
        << row.at("new_oracle").get<int>() << '\n';
  }
  out << "hhl_optimized depth " << table.at("hhl_optimized").get<int>() << '\n';
  out << "baseline depth " << table.at("baseline").get<int>() << '\n';
  return out.str();
}

nlohmann::json cmd_circuit_dump(const std::string& name, bool coupling) {
  const std::array<double, 2> train{angle_of({kCanonicalTargets[0], kCanonicalTargets[1]}),
                                    angle_of({kCanonicalTargets[2], kCanonicalTargets[3]})};
  std::optional<Circuit> built;
  if (name == "hhl_optimized") built = circuits::build_hhl_optimized();
  if (name == "baseline") built = circuits::build_baseline_qsvm();
  if (name == "oracle_original") built = circuits::build_oracle_original(train);
  if (name == "oracle_new") built = circuits::build_oracle_new(train);
  if (!built) throw InvalidArgument("unknown circuit '" + name + "'");
  const Circuit& c = *built;
  nlohmann::json out = circuits::to_json(c);
  out["depth"] = circuits::depth(c);
  if (coupling) {
    if (c.num_qubits() != 4) throw InvalidArgument("coupling check is defined for the 4-qubit circuits only");
    const auto map = circuits::CouplingMap::ibmqx2(circuits::CouplingMap::hhl_placement());
    nlohmann::json v = nlohmann::json::array();
    for (const auto& e : circuits::validate_coupling(c, map)) {
      v.push_back({{"gate_index", e.gate_index},
                   {"gate", e.gate},
                   {"physical_control", e.physical_control},
                   {"physical_target", e.physical_target},
                   {"reversed_edge_exists", e.reversed_edge_exists},
                   {"message", e.message}});
    }
    out["coupling_violations"] = v;
  }
  return out;
}

}  // namespace qsvm::cli
