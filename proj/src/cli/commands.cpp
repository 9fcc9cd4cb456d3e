#include "cpulse/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "cpulse/catalog.hpp"
#include "cpulse/document.hpp"
#include "cpulse/error_series.hpp"
#include "cpulse/verification.hpp"

namespace cpulse::cli {

namespace {

using nlohmann::json;

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int points = 0;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> g.lo >> c1 >> g.hi >> c2 >> g.points) || c1 != ':' || c2 != ':' || !in.eof())
    throw std::invalid_argument("grid must look like min:max:points, got '" + text + "'");
  if (g.points < 1 || !std::isfinite(g.lo) || !std::isfinite(g.hi) || g.hi < g.lo)
    throw std::invalid_argument("grid needs min <= max and at least one point");
  return g;
}

// Geometric spacing when the range is strictly positive, linear otherwise.
std::vector<double> expand_grid(const GridSpec& g) {
  if (g.lo > 0.0) return geometric_grid(g.lo, g.hi, g.points);
  return linear_grid(g.lo, g.hi, g.points);
}

struct Source {
  PulseSequence seq;
  ModelKind model;
};

// A catalog name, or a path to a sequence document.
Source load_source(const std::string& target, double theta_deg, const std::string& model_flag) {
  Source s;
  if (find_catalog_entry(target)) {
    s.seq = build_catalog_sequence(target, to_radians(theta_deg));
    s.model = s.seq.native_model();
  } else if (std::filesystem::is_regular_file(target)) {
    std::ifstream in(target);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto doc = parse_document(buf.str());
    s.seq = to_sequence(doc);
    s.model = parse_model_tag(doc.error_model);
  } else {
    throw UnknownSequence("'" + target + "' is neither a catalog sequence nor a readable document");
  }
  if (!model_flag.empty()) s.model = parse_model_tag(model_flag);
  return s;
}

// Writes to the file at `path`, or to `out` when path is empty.
bool emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path);
  if (!file || !(file << text) || !file.flush()) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

struct Options {
  std::string target;
  double theta_deg = 180.0;
  std::string model;
  std::optional<int> order;
  std::string grid = "1e-4:1e-1:25";
  std::string f_grid;
  std::string out_path;
  bool as_json = false;
  std::string variants;
  std::string theta_range = "10:180:171";
};

int cmd_synth(const Options& o, std::ostream& out, std::ostream& err) {
  auto seq = build_catalog_sequence(o.target, to_radians(o.theta_deg));
  const auto model = o.model.empty() ? seq.native_model() : parse_model_tag(o.model);
  if (!emit(o.out_path, serialize(make_document(seq, model)) + "\n", out, err)) return kUnwritable;
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto src = load_source(o.target, o.theta_deg, o.model);
  const auto target = target_rotation(src.seq.target_theta());
  const auto report = leading_error(normalize_phase(residual(src.seq, target, src.model)));
  const auto sweep = estimate_order(src.seq, src.model, target);

  std::optional<CoefficientFit> fit;
  if (report.infidelity_degree) fit = fit_leading_coefficient(src.seq, src.model, target, *report.infidelity_degree);

  const bool agree = report.order.has_value() && sweep.order.has_value() && *report.order == *sweep.order;
  const bool pass = o.order ? (agree && *report.order == *o.order) : agree;

  if (o.as_json) {
    json j;
    j["name"] = src.seq.name();
    j["error_model"] = std::string(model_tag(src.model));
    j["series_order"] = report.order ? json(*report.order) : json(nullptr);
    j["numeric_order"] = sweep.order ? json(*sweep.order) : json(nullptr);
    j["numeric_slope"] = sweep.slope;
    j["beyond_resolution"] = sweep.beyond_resolution;
    j["ambiguous"] = sweep.ambiguous;
    j["series_coefficient"] = report.infidelity_coefficient;
    j["infidelity_degree"] = report.infidelity_degree ? json(*report.infidelity_degree) : json(nullptr);
    j["numeric_coefficient"] = fit && !fit->noise_floor_reached ? json(fit->value) : json(nullptr);
    j["expected_order"] = o.order ? json(*o.order) : json(nullptr);
    j["pass"] = pass;
    out << j.dump(2) << "\n";
  } else {
    out << "sequence: " << src.seq.name() << " (" << model_tag(src.model) << ")\n";
    out << "series order: "
        << (report.order ? std::to_string(*report.order) : "> " + std::to_string(report.truncation_degree)) << "\n";
    out << "numeric order: ";
    if (sweep.order)
      out << *sweep.order;
    else
      out << (sweep.beyond_resolution ? "beyond numeric resolution" : "ambiguous");
    out << " (slope " << format_number(sweep.slope) << ")\n";
    if (report.infidelity_degree) {
      out << "leading coefficient (degree " << *report.infidelity_degree
          << "): series " << format_number(report.infidelity_coefficient);
      if (fit && !fit->noise_floor_reached) out << ", numeric " << format_number(fit->value);
      out << "\n";
    }
    if (o.order) out << "expected order: " << *o.order << " -> " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kMismatch;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const auto src = load_source(o.target, o.theta_deg, o.model);
  const auto target = target_rotation(src.seq.target_theta());
  const auto grid = expand_grid(parse_grid(o.grid));
  std::ostringstream csv;
  csv << std::setprecision(12);

  if (!o.f_grid.empty()) {
    const auto fgrid = expand_grid(parse_grid(o.f_grid));
    const auto surface = fidelity_surface(src.seq, grid, fgrid, target);
    csv << "epsilon,f,infidelity\n";
    for (std::size_t a = 0; a < grid.size(); ++a)
      for (std::size_t b = 0; b < fgrid.size(); ++b) csv << grid[a] << ',' << fgrid[b] << ',' << surface.at(a, b) << '\n';
  } else {
    const auto curve = infidelity_curve(src.seq, src.model, target, grid);
    csv << "error_value,infidelity\n";
    for (std::size_t k = 0; k < grid.size(); ++k) csv << grid[k] << ',' << curve[k] << '\n';
  }
  return emit(o.out_path, csv.str(), out, err) ? kOk : kUnwritable;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const auto names = split_list(o.variants);
  if (names.size() < 2) {
    err << "error: compare needs at least two variants\n";
    return kUsage;
  }
  std::vector<Variant> variants;
  for (const auto& n : names) {
    if (!find_catalog_entry(n)) throw UnknownSequence("unknown sequence '" + n + "'");
    variants.push_back({n, [n](double theta) { return build_catalog_sequence(n, theta); }});
  }
  const auto range = parse_grid(o.theta_range);
  std::vector<double> theta;
  for (double d : linear_grid(range.lo, range.hi, range.points)) theta.push_back(to_radians(d));
  const auto table = crossover_scan(variants, theta);

  std::ostringstream text;
  text << std::setprecision(10);
  if (o.as_json) {
    json j;
    j["variants"] = names;
    j["theta_deg"] = json::array();
    for (double t : theta) j["theta_deg"].push_back(to_degrees(t));
    j["magnitude"] = table.magnitude;
    j["comparisons"] = json::array();
    for (std::size_t v = 1; v < names.size(); ++v) {
      json c;
      c["against"] = names[v];
      c["crossover_deg"] = table.crossover[v - 1] ? json(to_degrees(*table.crossover[v - 1])) : json(nullptr);
      c["identical"] = static_cast<bool>(table.identical[v - 1]);
      c["exceeds_from_start"] = static_cast<bool>(table.exceeds_from_start[v - 1]);
      const double denom = table.magnitude[v].back();
      c["ratio_at_end"] = denom > 0.0 ? json(table.magnitude[0].back() / denom) : json(nullptr);
      j["comparisons"].push_back(c);
    }
    text << j.dump(2) << "\n";
  } else {
    text << "theta_deg";
    for (const auto& n : names) text << ',' << n;
    text << '\n';
    for (std::size_t k = 0; k < theta.size(); ++k) {
      text << to_degrees(theta[k]);
      for (const auto& m : table.magnitude) text << ',' << m[k];
      text << '\n';
    }
    for (std::size_t v = 1; v < names.size(); ++v) {
      text << "# " << names[0] << " vs " << names[v] << ": ";
      if (table.identical[v - 1])
        text << "identical magnitudes, no crossover";
      else if (table.crossover[v - 1])
        text << "crossover at " << to_degrees(*table.crossover[v - 1]) << " deg";
      else if (table.exceeds_from_start[v - 1])
        text << "no crossover, " << names[0] << " larger from the first angle";
      else
        text << "no crossover in range";
      const double denom = table.magnitude[v].back();
      if (denom > 0.0)
        text << "; ratio at " << to_degrees(theta.back()) << " deg = " << table.magnitude[0].back() / denom;
      text << '\n';
    }
  }
  return emit(o.out_path, text.str(), out, err) ? kOk : kUnwritable;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Composite pulse construction and error-order verification", "cpulse"};
  app.require_subcommand(1);
  Options o;
  int order_value = 0;

  auto* synth = app.add_subcommand("synth", "build a catalog sequence as a JSON document");
  synth->add_option("name", o.target, "catalog sequence name")->required();
  synth->add_option("--theta", o.theta_deg, "target angle in degrees");
  synth->add_option("--model", o.model, "error model tag recorded in the document")->check(CLI::IsMember({"ple", "ore", "sim"}));
  synth->add_option("--out", o.out_path, "output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "compare series and numeric error orders");
  verify->add_option("sequence", o.target, "catalog name or document path")->required();
  verify->add_option("--theta", o.theta_deg, "target angle in degrees for catalog names");
  verify->add_option("--model", o.model, "error model")->check(CLI::IsMember({"ple", "ore", "sim"}));
  auto* expect = verify->add_option("--expect-order,--order", order_value, "required error order");
  verify->add_flag("--json", o.as_json, "machine readable report");

  auto* sweep = app.add_subcommand("sweep", "infidelity over an error grid as CSV");
  sweep->add_option("sequence", o.target, "catalog name or document path")->required();
  sweep->add_option("--theta", o.theta_deg, "target angle in degrees for catalog names");
  sweep->add_option("--model", o.model, "error model")->check(CLI::IsMember({"ple", "ore", "sim"}));
  sweep->add_option("--grid", o.grid, "error grid min:max:points (epsilon axis for 2-D sweeps)");
  sweep->add_option("--f-grid", o.f_grid, "off-resonance grid min:max:points; enables a 2-D sweep");
  sweep->add_option("--out", o.out_path, "output CSV file (default: stdout)");

  auto* compare = app.add_subcommand("compare", "degree-3 pulse-length error of several sequences");
  compare->add_option("--variants", o.variants, "comma separated catalog names")->required();
  compare->add_option("--theta-range", o.theta_range, "angle grid in degrees, min:max:points");
  compare->add_flag("--json", o.as_json, "machine readable table");
  compare->add_option("--out", o.out_path, "output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (expect->count() > 0) o.order = order_value;

  try {
    if (*synth) return cmd_synth(o, out, err);
    if (*verify) return cmd_verify(o, out);
    if (*sweep) return cmd_sweep(o, out, err);
    return cmd_compare(o, out, err);
  } catch (const UnsolvableAngle& e) {
    err << "error: " << e.what() << "\n";
    return kUnsolvable;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUnsolvable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace cpulse::cli
