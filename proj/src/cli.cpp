#include "arcfit/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "arcfit/fitter.hpp"
#include "arcfit/metrics.hpp"
#include "arcfit/minimax.hpp"
#include "arcfit/oracle.hpp"

namespace arcfit {

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1.0.0";

double parse_number(const std::string& text) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse number '" + text + "'");
  }
  if (pos != text.size()) {
    throw std::invalid_argument("cannot parse number '" + text + "'");
  }
  return value;
}

// Accepts decimal radians, "pi", "pi/N", "N*pi", "N*pi/M"; with degrees=true,
// a decimal number of degrees.
double parse_angle(const std::string& text, bool degrees) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty angle");
  if (degrees) return parse_number(s) * kPi / 180.0;
  const std::size_t pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) return parse_number(s);
  double mult = 1.0, divisor = 1.0;
  std::string before = s.substr(0, pi_pos);
  std::string after = s.substr(pi_pos + 2);
  if (!before.empty()) {
    if (before.back() != '*') {
      throw std::invalid_argument("cannot parse angle '" + text + "'");
    }
    before.pop_back();
    mult = parse_number(before);
  }
  if (!after.empty()) {
    if (after.front() != '/') {
      throw std::invalid_argument("cannot parse angle '" + text + "'");
    }
    divisor = parse_number(after.substr(1));
    if (divisor == 0.0) throw std::invalid_argument("angle divisor is zero");
  }
  return mult * kPi / divisor;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string csv_quote(const std::string& s) {
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const CsvTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << row[i];
    }
    out << "\n";
  }
}

std::vector<std::string> param_names(int degree, int smoothness) {
  if (degree == 2) return {"xi"};
  if (degree == 3 && smoothness == 0) return {"xi", "eta"};
  if (degree == 3 && smoothness == 1) return {"d"};
  if (degree == 4 && smoothness == 1) return {"d", "xi"};
  return {"xi"};
}

json curve_to_json(const BezierCurve& curve) {
  json cps = json::array();
  for (const Point2& p : curve.control_points) {
    cps.push_back({p.x, p.y});
  }
  return cps;
}

json report_to_json(const ErrorReport& report) {
  return {{"max_abs_psi", report.max_abs_psi},
          {"max_psi_location", report.max_psi_location},
          {"hausdorff", report.hausdorff},
          {"num_samples", report.num_samples},
          {"refined", report.refined},
          {"radial_projection_valid", report.radial_projection_valid}};
}

void write_svg(const std::string& path, const ArcSpec& arc, const BezierCurve& curve) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open SVG output file '" + path + "'");
  const double R = 400.0;  // unit circle radius in viewport units
  const double phi = arc.half_angle();
  std::ostringstream arc_d, curve_d, err_pts;
  arc_d << std::fixed << std::setprecision(2);
  curve_d << std::fixed << std::setprecision(2);
  err_pts << std::fixed << std::setprecision(2);

  const int arc_samples = 180;
  for (int i = 0; i <= arc_samples; ++i) {
    const double a = -phi + 2.0 * phi * i / arc_samples;
    arc_d << (i == 0 ? "M" : " L") << R * std::cos(a) << " " << -R * std::sin(a);
  }
  const int curve_samples = 256;
  double max_err = 0.0;
  std::vector<double> errs(curve_samples + 1);
  for (int i = 0; i <= curve_samples; ++i) {
    const double t = -1.0 + 2.0 * i / curve_samples;
    const Point2 p = eval_curve(curve, t);
    curve_d << (i == 0 ? "M" : " L") << R * p.x << " " << -R * p.y;
    errs[i] = psi_tilde(curve, t);
    max_err = std::max(max_err, errs[i]);
  }
  // error subplot below the overlay
  const double plot_top = 520.0, plot_height = 160.0;
  for (int i = 0; i <= curve_samples; ++i) {
    const double x = -450.0 + 900.0 * i / curve_samples;
    const double y =
        plot_top + plot_height - (max_err > 0.0 ? errs[i] / max_err : 0.0) * plot_height;
    err_pts << (i ? " " : "") << x << "," << y;
  }
  std::ostringstream max_label;
  max_label << std::scientific << std::setprecision(2) << max_err;

  file << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-550 -550 1100 1300\">\n"
       << "  <path d=\"" << arc_d.str()
       << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"3\" "
          "stroke-dasharray=\"14 10\"/>\n"
       << "  <path d=\"" << curve_d.str()
       << "\" fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"2\"/>\n"
       << "  <polyline points=\"" << err_pts.str()
       << "\" fill=\"none\" stroke=\"#d73a49\" stroke-width=\"1.5\"/>\n"
       << "  <text x=\"-450\" y=\"" << plot_top - 14.0
       << "\" font-size=\"28\">radial error, max " << max_label.str() << "</text>\n"
       << "  <text x=\"-462\" y=\"" << plot_top + plot_height + 34.0
       << "\" font-size=\"24\">t = -1</text>\n"
       << "  <text x=\"400\" y=\"" << plot_top + plot_height + 34.0
       << "\" font-size=\"24\">t = 1</text>\n"
       << "</svg>\n";
  if (!file) throw std::runtime_error("failed writing SVG to '" + path + "'");
}

struct CommandOutput {
  json results;
  CsvTable csv;
};

CommandOutput cmd_fit(int degree, int smoothness, const ArcSpec& arc, int samples,
                      const std::string& svg_path) {
  const FitResult fit = fit_case(degree, smoothness, arc);
  const ErrorReport report = max_error(fit.curve, samples);
  if (!svg_path.empty()) write_svg(svg_path, arc, fit.curve);

  const std::vector<std::string> names = param_names(degree, smoothness);
  json params = json::object();
  for (std::size_t i = 0; i < fit.params.size(); ++i) params[names[i]] = fit.params[i];

  CommandOutput out;
  out.results = {{"degree", degree},
                 {"smoothness", smoothness},
                 {"params", params},
                 {"control_points", curve_to_json(fit.curve)},
                 {"c_constant", fit.c_constant},
                 {"max_abs_psi", report.max_abs_psi},
                 {"hausdorff", report.hausdorff},
                 {"branch_count", fit.branch_count},
                 {"minimax_poly",
                  {{"family", fit.minimax_poly.family},
                   {"positive_zeros", fit.minimax_poly.positive_zeros},
                   {"norm", fit.minimax_poly.norm}}},
                 {"error_report", report_to_json(report)}};
  if (!svg_path.empty()) out.results["svg_path"] = svg_path;

  out.csv.header = {"degree", "smoothness", "half_angle", "c_constant",
                    "max_abs_psi", "hausdorff", "branch_count"};
  std::vector<std::string> row = {std::to_string(degree), std::to_string(smoothness),
                                  fmt(arc.half_angle()), fmt(fit.c_constant),
                                  fmt(report.max_abs_psi), fmt(report.hausdorff),
                                  std::to_string(fit.branch_count)};
  for (std::size_t i = 0; i < fit.params.size(); ++i) {
    out.csv.header.push_back(names[i]);
    row.push_back(fmt(fit.params[i]));
  }
  for (std::size_t i = 0; i < fit.curve.control_points.size(); ++i) {
    out.csv.header.push_back("x" + std::to_string(i));
    out.csv.header.push_back("y" + std::to_string(i));
    row.push_back(fmt(fit.curve.control_points[i].x));
    row.push_back(fmt(fit.curve.control_points[i].y));
  }
  out.csv.rows.push_back(row);
  return out;
}

CommandOutput cmd_poly(int degree, int smoothness) {
  if (!(smoothness >= 0 && smoothness < degree && degree <= 8)) {
    throw std::invalid_argument(
        "poly: requires 0 <= smoothness < degree <= 8");
  }
  const ConstrainedMinimaxPoly poly = best_poly(degree, smoothness);
  const std::vector<double> alternation = alternation_points(poly);

  CommandOutput out;
  out.results = {{"degree", poly.n},
                 {"smoothness", poly.k},
                 {"family", poly.family},
                 {"positive_zeros", poly.positive_zeros},
                 {"norm", poly.norm},
                 {"alternation_points", alternation}};

  out.csv.header = {"degree", "smoothness", "family", "norm"};
  std::vector<std::string> row = {std::to_string(poly.n), std::to_string(poly.k),
                                  poly.family, fmt(poly.norm)};
  for (std::size_t i = 0; i < poly.positive_zeros.size(); ++i) {
    out.csv.header.push_back("zero" + std::to_string(i + 1));
    row.push_back(fmt(poly.positive_zeros[i]));
  }
  for (std::size_t i = 0; i < alternation.size(); ++i) {
    out.csv.header.push_back("alt" + std::to_string(i + 1));
    row.push_back(fmt(alternation[i]));
  }
  out.csv.rows.push_back(row);
  return out;
}

CommandOutput cmd_bench(const std::string& table, const ArcSpec& arc) {
  if (table != "g1-quartic") {
    throw std::invalid_argument("bench: unknown table '" + table +
                                "'; available: g1-quartic");
  }
  const double kSqrt3 = std::sqrt(3.0);
  const double w1 = std::sqrt(2.0) - 1.0;
  const double z1 =
      std::sqrt(6.0 - 4.0 * kSqrt3 + 2.0 * std::sqrt(6.0) * std::sqrt(kSqrt3 - 1.0)) / 3.0;
  struct BenchRow {
    std::string pattern;
    std::vector<double> zeros;  // empty = minimax fit
    double published;
  };
  const std::vector<BenchRow> spec_rows = {
      {"{1 1}", {1.0, 1.0}, 3.50e-5},   {"{w1 w1}", {w1, w1}, 4.75e-6},
      {"{0 1}", {0.0, 1.0}, 3.55e-6},   {"{0 0}", {0.0, 0.0}, 2.03e-6},
      {"{0 1/2}", {0.0, 0.5}, 1.11e-6}, {"{0 3/5}", {0.0, 0.6}, 1.08e-6},
      {"{0 z1}", {0.0, z1}, 7.60e-7},   {"minimax", {}, 6.34e-7},
  };

  CommandOutput out;
  out.results = json::array();
  out.csv.header = {"pattern", "zero1", "zero2", "hausdorff", "published",
                    "rel_deviation"};
  for (const BenchRow& row : spec_rows) {
    const FitResult fit = row.zeros.empty()
                              ? fit_case(4, 1, arc)
                              : fit_prescribed_zeros(4, 1, row.zeros, arc);
    const double deviation = (fit.hausdorff - row.published) / row.published;
    out.results.push_back({{"pattern", row.pattern},
                           {"zeros", fit.minimax_poly.positive_zeros},
                           {"params", fit.params},
                           {"hausdorff", fit.hausdorff},
                           {"published", row.published},
                           {"rel_deviation", deviation}});
    out.csv.rows.push_back({csv_quote(row.pattern),
                            fmt(fit.minimax_poly.positive_zeros[0]),
                            fmt(fit.minimax_poly.positive_zeros[1]), fmt(fit.hausdorff),
                            fmt(row.published), fmt(deviation)});
  }
  return out;
}

CommandOutput cmd_probe(int degree, int smoothness, const ArcSpec& arc, int resolution) {
  const FitResult fit = fit_case(degree, smoothness, arc);
  const GridSearchResult grid =
      conjecture_probe(degree, smoothness, arc, resolution, fit.params);
  const bool agreement = grid.best_max_abs_psi >= fit.max_abs_psi * (1.0 - 1e-3);

  CommandOutput out;
  json box = json::array();
  for (const auto& b : grid.search_box) box.push_back({b[0], b[1]});
  out.results = {{"degree", degree},
                 {"smoothness", smoothness},
                 {"fitted", {{"params", fit.params}, {"max_abs_psi", fit.max_abs_psi}}},
                 {"grid",
                  {{"best_params", grid.best_params},
                   {"best_max_abs_psi", grid.best_max_abs_psi},
                   {"resolution", grid.grid_resolution},
                   {"search_box", box}}},
                 {"agreement", agreement}};

  out.csv.header = {"degree", "smoothness", "half_angle", "resolution",
                    "agreement", "fit_max_abs_psi", "grid_max_abs_psi"};
  out.csv.rows.push_back({std::to_string(degree), std::to_string(smoothness),
                          fmt(arc.half_angle()), std::to_string(resolution),
                          agreement ? "true" : "false", fmt(fit.max_abs_psi),
                          fmt(grid.best_max_abs_psi)});
  return out;
}

CommandOutput cmd_error(const std::string& input_path, int samples) {
  std::ifstream file(input_path);
  if (!file) throw std::runtime_error("cannot open input file '" + input_path + "'");
  json doc;
  try {
    file >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument("invalid JSON in '" + input_path + "': " + e.what());
  }
  if (!doc.contains("degree") || !doc.contains("control_points")) {
    throw std::invalid_argument(
        "input must be a JSON object with 'degree' and 'control_points'");
  }
  BezierCurve curve;
  curve.degree = doc["degree"].get<int>();
  for (const auto& cp : doc["control_points"]) {
    if (!cp.is_array() || cp.size() != 2) {
      throw std::invalid_argument("control_points must be pairs [x, y]");
    }
    curve.control_points.push_back({cp[0].get<double>(), cp[1].get<double>()});
  }
  if (curve.degree < 0 ||
      curve.control_points.size() != static_cast<std::size_t>(curve.degree) + 1) {
    throw std::invalid_argument("control point count must equal degree + 1");
  }
  const ErrorReport report = max_error(curve, samples);

  CommandOutput out;
  out.results = report_to_json(report);
  out.csv.header = {"max_abs_psi", "max_psi_location", "hausdorff",
                    "num_samples", "refined", "radial_projection_valid"};
  out.csv.rows.push_back({fmt(report.max_abs_psi), fmt(report.max_psi_location),
                          fmt(report.hausdorff), std::to_string(report.num_samples),
                          report.refined ? "true" : "false",
                          report.radial_projection_valid ? "true" : "false"});
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"optimal G^k Bezier approximants of circular arcs"};
  app.require_subcommand(1);

  int degree = 0, smoothness = 0, samples = 10000, resolution = 101;
  unsigned seed = 0;
  std::string half_angle_text, format = "json", svg_path, table, input_path;
  bool degrees = false;

  const auto add_case = [&](CLI::App* cmd) {
    cmd->add_option("--degree", degree, "curve degree")->required();
    cmd->add_option("--smoothness", smoothness, "continuity order k")->required();
  };
  const auto add_angle = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--half-angle", half_angle_text,
                                "arc half-angle (radians; accepts pi/N, N*pi/M)");
    if (required) opt->required();
    cmd->add_flag("--degrees", degrees, "interpret --half-angle in degrees");
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* fit = app.add_subcommand("fit", "fit one supported (degree, smoothness) case");
  add_case(fit);
  add_angle(fit, true);
  add_format(fit);
  fit->add_option("--svg", svg_path, "write an overlay + error plot SVG to this path");
  fit->add_option("--samples", samples, "error-sampling density");

  CLI::App* poly = app.add_subcommand("poly", "constrained minimax polynomial of a case");
  add_case(poly);
  add_format(poly);

  CLI::App* bench = app.add_subcommand("bench", "compare prescribed-zero approximants");
  bench->add_option("table", table, "table identifier (g1-quartic)")->required();
  add_angle(bench, false);
  add_format(bench);

  CLI::App* probe = app.add_subcommand("probe", "brute-force optimality cross-check");
  add_case(probe);
  add_angle(probe, true);
  add_format(probe);
  probe->add_option("--resolution", resolution, "grid points per dimension");
  probe->add_option("--seed", seed, "seed for randomized oracles");

  CLI::App* error_cmd = app.add_subcommand("error", "error metrics of a user-supplied curve");
  error_cmd->add_option("--input", input_path, "JSON file with degree and control_points")
      ->required();
  add_format(error_cmd);
  error_cmd->add_option("--samples", samples, "error-sampling density");

  std::vector<const char*> argv;
  argv.push_back("arcfit");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  CLI::App* active = app.get_subcommands().front();
  const std::string command = active->get_name();

  json inputs = json::object();
  inputs["format"] = format;
  try {
    CommandOutput result;
    if (command == "fit" || command == "probe") {
      const double phi = parse_angle(half_angle_text, degrees);
      inputs["degree"] = degree;
      inputs["smoothness"] = smoothness;
      inputs["half_angle"] = half_angle_text;
      inputs["degrees"] = degrees;
      inputs["half_angle_radians"] = phi;
      const ArcSpec arc(phi);
      if (command == "fit") {
        inputs["samples"] = samples;
        if (!svg_path.empty()) inputs["svg"] = svg_path;
        result = cmd_fit(degree, smoothness, arc, samples, svg_path);
      } else {
        inputs["resolution"] = resolution;
        inputs["seed"] = seed;
        result = cmd_probe(degree, smoothness, arc, resolution);
      }
    } else if (command == "poly") {
      inputs["degree"] = degree;
      inputs["smoothness"] = smoothness;
      result = cmd_poly(degree, smoothness);
    } else if (command == "bench") {
      const double phi =
          half_angle_text.empty() ? kPi / 4.0 : parse_angle(half_angle_text, degrees);
      inputs["table"] = table;
      inputs["half_angle"] = half_angle_text.empty() ? "pi/4" : half_angle_text;
      inputs["half_angle_radians"] = phi;
      result = cmd_bench(table, ArcSpec(phi));
    } else {  // error
      inputs["input"] = input_path;
      inputs["samples"] = samples;
      result = cmd_error(input_path, samples);
    }

    if (format == "csv") {
      write_csv(result.csv, out);
    } else {
      const json doc = {{"schema_version", kSchemaVersion},
                        {"command", command},
                        {"inputs", inputs},
                        {"results", result.results}};
      out << doc.dump(2) << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    if (format == "csv") {
      out << "error\n" << csv_quote(e.what()) << "\n";
    } else {
      const json doc = {{"schema_version", kSchemaVersion},
                        {"command", command},
                        {"inputs", inputs},
                        {"error", e.what()}};
      out << doc.dump(2) << "\n";
    }
    return 1;
  }
}

}  // namespace arcfit
