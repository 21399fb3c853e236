#include "polgeom_cli/cli.hpp"

#include "config.hpp"
#include "table.hpp"

#include <polgeom/errors.hpp>
#include <polgeom/expfam.hpp>
#include <polgeom/flow.hpp>
#include <polgeom/indices.hpp>
#include <polgeom/natgrad.hpp>
#include <polgeom/replicator.hpp>
#include <polgeom/timeseries.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>

#ifndef POLGEOM_VERSION_STRING
#define POLGEOM_VERSION_STRING "unknown"
#endif

namespace polgeom::cli {

namespace {

/// Option values after applying flags > config file > defaults.
class Settings {
 public:
  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> flag_options;
  std::map<std::string, std::string> file_values;

  std::optional<std::string> find(const std::string& key) const {
    if (auto it = flag_options.find(key); it != flag_options.end() && it->second->count() > 0) {
      auto v = flag_values.find(key);
      return v == flag_values.end() ? std::string("true") : v->second;
    }
    if (auto it = file_values.find(key); it != file_values.end()) return it->second;
    return std::nullopt;
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    return find(key).value_or(fallback);
  }

  std::string required(const std::string& key) const {
    auto value = find(key);
    if (!value) throw InputError("missing required option --" + key);
    return *value;
  }

  double number(const std::string& key, double fallback) const {
    auto value = find(key);
    return value ? parse_double(*value, "--" + key) : fallback;
  }

  bool flag(const std::string& key) const {
    auto value = find(key);
    if (!value) return false;
    if (*value == "" || *value == "1" || *value == "true" || *value == "yes" || *value == "on") {
      return true;
    }
    if (*value == "0" || *value == "false" || *value == "no" || *value == "off") return false;
    throw InputError("invalid boolean for --" + key + ": '" + *value + "'");
  }
};

double positive(const Settings& s, const std::string& key, double fallback) {
  const double v = s.number(key, fallback);
  if (!(v > 0.0)) throw InputError("--" + key + " must be positive");
  return v;
}

double time_step(const Settings& s, double fallback) {
  const double dt = s.number("dt", fallback);
  if (!(dt > 0.0 && dt <= 1.0)) throw InputError("--dt must lie in (0, 1]");
  return dt;
}

int resolution(const Settings& s, long fallback) {
  auto value = s.find("grid");
  const long n = value ? parse_int(*value, "--grid") : fallback;
  if (n < 2 || n > 100000) throw InputError("--grid must be at least 2");
  return static_cast<int>(n);
}

IndexSpec index_spec(const Settings& s) {
  const std::string text = s.text("index", "pol");
  try {
    return IndexSpec::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--index: ") + e.what());
  }
}

Vector to_vector(const std::vector<double>& values) {
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

std::vector<std::string> numbered(const std::string& stem, Eigen::Index first, Eigen::Index last) {
  std::vector<std::string> names;
  for (Eigen::Index k = first; k <= last; ++k) names.push_back(stem + std::to_string(k));
  return names;
}

void append(std::vector<Cell>& row, const Vector& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k) row.emplace_back(v[k]);
}

struct Outcome {
  Table table;
  int code = kSuccess;
};

Outcome cmd_eval(const Settings& s, const std::vector<std::string>& inline_points) {
  const IndexSpec spec = index_spec(s);
  std::vector<Vector> points;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < inline_points.size(); ++k) {
    points.push_back(to_vector(parse_list(inline_points[k], "point " + std::to_string(k + 1))));
    labels.push_back("point " + std::to_string(k + 1));
  }
  if (auto path = s.find("input")) {
    std::ifstream in(*path);
    if (!in) throw InputError("cannot open input file '" + *path + "'");
    const NumericRows rows = read_numeric_csv(in, *path);
    for (std::size_t r = 0; r < rows.rows.size(); ++r) {
      points.push_back(to_vector(rows.rows[r]));
      labels.push_back(*path + " line " + std::to_string(rows.lines[r]));
    }
  }
  if (points.empty()) throw InputError("eval needs at least one point");
  const Eigen::Index n = points.front().size();
  Outcome result;
  Table& t = result.table;
  t.command = "eval";
  t.columns = numbered("eta", 1, n);
  for (const auto& name : numbered("pi", 0, n)) t.columns.push_back(name);
  t.columns.push_back("value");
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Vector& eta = points[k];
    if (eta.size() != n) {
      throw InputError(labels[k] + ": expected " + std::to_string(n) + " coordinates");
    }
    Vector probs(n + 1);
    probs[0] = 1.0 - eta.sum();
    probs.tail(n) = eta;
    if (probs.minCoeff() < -1e-12) {
      throw NotInterior(labels[k] + ": point lies outside the closed simplex");
    }
    probs = probs.cwiseMax(0.0);
    std::vector<Cell> row;
    append(row, eta);
    append(row, probs);
    row.emplace_back(index_value(spec, probs));
    t.add_row(std::move(row));
  }
  return result;
}

Outcome cmd_field(const Settings& s) {
  const IndexSpec spec = index_spec(s);
  const int grid = resolution(s, 11);
  const auto extent = parse_list(s.text("extent", "0,1"), "--extent");
  if (extent.size() != 2 || !(extent[0] < extent[1])) {
    throw InputError("--extent must be lo,hi with lo < hi");
  }
  const bool euclidean = s.flag("euclidean");
  const VectorField field = euclidean ? euclidean_field(spec, 2) : natural_field(spec, 2);
  Outcome result;
  Table& t = result.table;
  t.command = "field";
  t.columns = {"eta1", "eta2", "g1", "g2", "norm"};
  const double step = (extent[1] - extent[0]) / (grid - 1);
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double x = i == grid - 1 ? extent[1] : extent[0] + i * step;
      const double y = j == grid - 1 ? extent[1] : extent[0] + j * step;
      const Vector g = field(Eta{x, y});
      t.add_row({x, y, g[0], g[1], g.norm()});
    }
  }
  t.note("field", std::string(euclidean ? "euclidean" : "natural"));
  t.note("index", spec.to_string());
  return result;
}

Outcome cmd_flow(const Settings& s) {
  const IndexSpec spec = index_spec(s);
  const Vector start = to_vector(parse_list(s.required("start"), "--start"));
  const double dt = time_step(s, 0.01);
  const double t_max = positive(s, "tmax", 100.0);
  const double tol = positive(s, "tol", 1e-10);
  const VectorField field = natural_field(spec, start.size());
  const TrajectoryRecord record = integrate(field, Eta(start), dt, t_max, tol);
  Outcome result;
  Table& t = result.table;
  t.command = "flow";
  t.columns = {"t"};
  for (const auto& name : numbered("eta", 1, start.size())) t.columns.push_back(name);
  t.columns.push_back("value");
  t.columns.push_back("norm");
  for (std::size_t k = 0; k < record.size(); ++k) {
    std::vector<Cell> row{record.times[k]};
    append(row, record.states[k]);
    row.emplace_back(record.values[k]);
    row.emplace_back(record.field_norms[k]);
    t.add_row(std::move(row));
  }
  t.note("terminal_reason", std::string(to_string(record.terminal_reason)));
  if (record.terminal_reason != TerminalReason::converged) result.code = kNotConverged;
  return result;
}

Outcome cmd_fixedpoints(const Settings& s) {
  const IndexSpec spec = index_spec(s);
  const int grid = resolution(s, 7);
  const double tol = positive(s, "tol", 1e-10);
  const VectorField field = natural_field(spec, 2);
  const FixedPointSearch search = find_fixed_points(field, seed_grid(grid), tol);
  Outcome result;
  Table& t = result.table;
  t.command = "fixedpoints";
  t.columns = {"eta1", "eta2", "residual", "eig1_re", "eig1_im", "eig2_re", "eig2_im",
               "classification"};
  for (const auto& p : search.points) {
    std::vector<Cell> row;
    append(row, p.location);
    row.emplace_back(p.residual);
    for (const auto& ev : p.eigenvalues) {
      row.emplace_back(ev.real());
      row.emplace_back(ev.imag());
    }
    row.emplace_back(std::string(to_string(p.classification)));
    t.add_row(std::move(row));
  }
  t.note("index", spec.to_string());
  t.note("count", static_cast<std::int64_t>(search.points.size()));
  t.note("failed_seeds", static_cast<std::int64_t>(search.failures.size()));
  if (spec.kind == IndexSpec::Kind::cubic) {
    const CubicConditionReport report = cubic_conditions(spec.coeffs);
    t.note("uniform_condition", report.uniform_condition);
    t.note("midpoint_condition", report.midpoint_condition);
  }
  if (search.points.empty()) result.code = kNotConverged;
  return result;
}

Outcome cmd_expfam(const Settings& s) {
  const std::string which = s.required("table");
  Outcome result;
  Table& t = result.table;
  t.command = "expfam " + which;
  if (which == "triples") {
    const TripleSampleTable table = build_triple_table();
    t.columns = {"row", "x", "y", "z", "x1", "y1", "z1", "x2", "y2", "z2", "t1", "t2",
                 "polarized"};
    std::int64_t index = 0;
    for (const auto& r : table.rows) {
      const auto i = [](int v) { return Cell{static_cast<std::int64_t>(v)}; };
      t.add_row({++index, i(r.x), i(r.y), i(r.z), i(r.x1), i(r.y1), i(r.z1), i(r.x2), i(r.y2),
                 i(r.z2), i(r.t1), i(r.t2), r.polarized});
    }
    t.note("polarized_count", static_cast<std::int64_t>(table.polarized_count()));
  } else if (which == "counts") {
    const CountTable counts = count_table();
    t.columns = {"t1", "t2", "f", "indicator"};
    for (int t1 = 0; t1 < 4; ++t1) {
      for (int t2 = 0; t2 < 4; ++t2) {
        t.add_row({static_cast<std::int64_t>(t1), static_cast<std::int64_t>(t2),
                   static_cast<std::int64_t>(counts(t1, t2)), polarization_indicator(t1, t2)});
      }
    }
    t.note("total", static_cast<std::int64_t>(counts.total()));
  } else if (which == "border") {
    t.columns = {"eta1", "eta2", "value"};
    for (const auto& eta : {Eta{0.0, 0.5}, Eta{0.5, 0.0}, Eta{0.5, 0.5}}) {
      t.add_row({eta[0], eta[1], border_pol_expectation(eta)});
    }
  } else {
    throw InputError("expfam table must be one of triples, counts, border");
  }
  return result;
}

Outcome cmd_replicator(const Settings& s) {
  const std::string fitness_name = s.text("fitness", "lv");
  if (fitness_name != "lv") throw InputError("--fitness supports only 'lv'");
  const auto alpha = parse_list(s.text("alpha", "1,1"), "--alpha");
  if (alpha.size() != 2) throw InputError("--alpha needs two rates");
  LVParams params;
  params.alpha1 = alpha[0];
  params.alpha2 = alpha[1];
  params.validate();
  const auto z = parse_list(s.text("start", "2,1"), "--start");
  if (z.size() != 2) throw InputError("--start needs two populations z1,z2");
  Chart chart = Chart::solid;
  try {
    chart = parse_chart(s.text("chart", "solid"));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--chart: ") + e.what());
  }
  const double dt = time_step(s, 1e-3);
  const double t_max = positive(s, "tmax", 10.0);
  const SimplexPoint start = lv_uplift(Vec2(z[0], z[1]));
  const ReplicatorTrajectory traj =
      integrate_replicator(lv_fitness(params), chart, start, dt, t_max);
  Outcome result;
  Table& t = result.table;
  t.command = "replicator";
  const std::string stem = chart == Chart::solid ? "eta" : chart == Chart::exponential ? "theta" : "xi";
  t.columns = {"t", stem + "1", stem + "2", "pi0", "pi1", "pi2", "C"};
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const Vector& p = traj.points[k];
    std::vector<Cell> row{traj.times[k]};
    append(row, traj.states[k]);
    append(row, p);
    row.emplace_back(lv_conserved(params, Vec2(p[1] / p[0], p[2] / p[0])));
    t.add_row(std::move(row));
  }
  t.note("chart", std::string(to_string(chart)));
  t.note("terminal_reason", std::string(to_string(traj.terminal_reason)));
  if (traj.terminal_reason == TerminalReason::left_domain) result.code = kNotConverged;
  return result;
}

Outcome cmd_series(const Settings& s) {
  const IndexSpec spec = index_spec(s);
  const std::string path = s.required("input");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  const NumericRows rows = read_numeric_csv(in, path);
  if (rows.rows.size() < 2) throw InputError(path + ": a series needs at least two rows");
  if (rows.rows.front().size() < 3) {
    throw InputError(path + ": rows must be t,p0,p1[,...]");
  }
  std::vector<double> times;
  std::vector<Vector> probs;
  for (const auto& row : rows.rows) {
    times.push_back(row.front());
    probs.push_back(to_vector(std::vector<double>(row.begin() + 1, row.end())));
  }
  for (std::size_t r = 0; r < probs.size(); ++r) {
    const Vector& p = probs[r];
    if (p.minCoeff() < 0.0 || std::abs(p.sum() - 1.0) > kRowSumTol) {
      throw NotInterior(path + ": row at line " + std::to_string(rows.lines[r]) +
                        " is not a probability vector");
    }
  }
  const DistributionSeries series = DistributionSeries::from_rows(times, probs);
  const VelocityIndexReport report = analyze_series(series, spec);
  const Eigen::Index size = probs.front().size();
  Outcome result;
  Table& t = result.table;
  t.command = "series";
  t.columns = {"t_from", "t_to", "index_from", "index_to", "delta"};
  for (const auto& name : numbered("v", 0, size - 1)) t.columns.push_back(name);
  for (const char* name : {"score", "cosine", "floored"}) t.columns.emplace_back(name);
  for (const auto& step : report.steps) {
    std::vector<Cell> row{step.t_from, step.t_to, step.index_from, step.index_to, step.delta};
    append(row, step.velocity);
    row.emplace_back(step.alignment.score);
    row.push_back(step.alignment.cosine ? Cell{*step.alignment.cosine} : Cell{});
    row.emplace_back(step.floored);
    t.add_row(std::move(row));
  }
  t.note("index", spec.to_string());
  return result;
}

Outcome cmd_basin(const Settings& s) {
  const IndexSpec spec = index_spec(s);
  const int grid = resolution(s, 20);
  BasinOptions options;
  options.dt = time_step(s, options.dt);
  options.t_max = positive(s, "tmax", options.t_max);
  options.stop_tol = positive(s, "tol", options.stop_tol);
  const BasinMap map = basin_map(natural_field(spec, 2), grid, options);
  Outcome result;
  Table& t = result.table;
  t.command = "basin";
  t.columns = {"i", "j", "eta1", "eta2", "label"};
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      t.add_row({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), map.coordinate(i),
                 map.coordinate(j), static_cast<std::int64_t>(map.label(i, j))});
    }
  }
  for (std::size_t a = 0; a < map.attractors.size(); ++a) {
    const Vector& loc = map.attractors[a];
    t.note("attractor" + std::to_string(a),
           format_number(loc[0]) + ";" + format_number(loc[1]));
  }
  return result;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information-geometric analysis of polarization indices", "polgeom"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(POLGEOM_VERSION_STRING));

  Settings settings;
  std::string config_path;
  std::vector<std::string> inline_points;
  std::set<std::string> known_keys{"format", "out", "header", "config"};

  const auto value = [&](CLI::App* sub, const std::string& name, const std::string& help) {
    known_keys.insert(name);
    auto* opt = sub->add_option("--" + name, settings.flag_values[name], help);
    settings.flag_options[name + "@" + sub->get_name()] = opt;
  };
  const auto flag = [&](CLI::App* sub, const std::string& name, const std::string& help) {
    known_keys.insert(name);
    auto* opt = sub->add_flag("--" + name, help);
    settings.flag_options[name + "@" + sub->get_name()] = opt;
  };
  const auto common = [&](CLI::App* sub) {
    value(sub, "format", "Output format: csv or json");
    value(sub, "out", "Write output to PATH instead of stdout");
    flag(sub, "header", "Prefix the output with a version comment");
    sub->add_option("--config", config_path, "key=value file; flags take precedence");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate an index at points given in eta coordinates");
  common(eval);
  value(eval, "index", "pol or cubic:a,b,c,d,e");
  value(eval, "input", "CSV file with one point per row");
  eval->add_option("points", inline_points, "Inline points such as 0.5,0.5");

  auto* field = app.add_subcommand("field", "Sample the gradient field on a grid (n = 2)");
  common(field);
  value(field, "index", "pol or cubic:a,b,c,d,e");
  value(field, "grid", "Grid resolution per axis");
  value(field, "extent", "Axis range lo,hi");
  flag(field, "euclidean", "Sample the uncorrected Euclidean gradient");

  auto* flow = app.add_subcommand("flow", "Integrate the natural-gradient flow");
  common(flow);
  value(flow, "index", "pol or cubic:a,b,c,d,e");
  value(flow, "start", "Start point in eta coordinates");
  value(flow, "dt", "RK4 step");
  value(flow, "tmax", "Final time");
  value(flow, "tol", "Stop when the field norm drops below this");

  auto* fixed = app.add_subcommand("fixedpoints", "Locate and classify zeros of the field");
  common(fixed);
  value(fixed, "index", "pol or cubic:a,b,c,d,e");
  value(fixed, "grid", "Newton seeds per axis");
  value(fixed, "tol", "Residual accepted as a root");

  auto* expfam = app.add_subcommand("expfam", "Exponential-family tables");
  common(expfam);
  known_keys.insert("table");
  expfam->add_option("table", settings.flag_values["table"], "triples, counts or border");
  settings.flag_options["table@expfam"] = expfam->get_option("table");

  auto* replicator = app.add_subcommand("replicator", "Replicator dynamics with LV fitness");
  common(replicator);
  value(replicator, "fitness", "Fitness model (lv)");
  value(replicator, "alpha", "LV rates alpha1,alpha2");
  value(replicator, "start", "Rescaled populations z1,z2");
  value(replicator, "chart", "solid, exp or proj");
  value(replicator, "dt", "RK4 step");
  value(replicator, "tmax", "Final time");

  auto* series = app.add_subcommand("series", "Velocity-index report for a distribution series");
  common(series);
  value(series, "index", "pol or cubic:a,b,c,d,e");
  value(series, "input", "CSV file with rows t,p0,p1,...");

  auto* basin = app.add_subcommand("basin", "Attractor labels over a grid of starts");
  common(basin);
  value(basin, "index", "pol or cubic:a,b,c,d,e");
  value(basin, "grid", "Cells per axis");
  value(basin, "dt", "RK4 step");
  value(basin, "tmax", "Final time");
  value(basin, "tol", "Convergence threshold on the field norm");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  CLI::App* active = app.get_subcommands().front();
  const std::string name = active->get_name();
  // Keys are registered per subcommand; expose the active ones under their plain name.
  std::map<std::string, CLI::Option*> active_options;
  for (const auto& [key, opt] : settings.flag_options) {
    const auto at = key.find('@');
    if (key.substr(at + 1) == name) active_options[key.substr(0, at)] = opt;
  }
  settings.flag_options = std::move(active_options);

  try {
    if (!config_path.empty()) {
      settings.file_values = read_config_file(config_path);
      for (const auto& [key, v] : settings.file_values) {
        if (!known_keys.count(key)) throw InputError(config_path + ": unknown key '" + key + "'");
      }
    }
    const std::string format = settings.text("format", "csv");
    if (format != "csv" && format != "json") throw InputError("--format must be csv or json");

    Outcome outcome;
    if (name == "eval") outcome = cmd_eval(settings, inline_points);
    else if (name == "field") outcome = cmd_field(settings);
    else if (name == "flow") outcome = cmd_flow(settings);
    else if (name == "fixedpoints") outcome = cmd_fixedpoints(settings);
    else if (name == "expfam") outcome = cmd_expfam(settings);
    else if (name == "replicator") outcome = cmd_replicator(settings);
    else if (name == "series") outcome = cmd_series(settings);
    else outcome = cmd_basin(settings);

    RenderOptions render{settings.flag("header"), POLGEOM_VERSION_STRING};
    const auto emit = [&](std::ostream& os) {
      if (format == "json") write_json(os, outcome.table, render);
      else write_csv(os, outcome.table, render);
    };
    if (auto path = settings.find("out")) {
      std::ofstream file(*path, std::ios::binary);
      if (!file) throw InputError("cannot open output file '" + *path + "'");
      emit(file);
    } else {
      emit(out);
    }
    if (outcome.code == kNotConverged) err << "warning: " << name << " did not converge\n";
    return outcome.code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const polgeom::Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace polgeom::cli
