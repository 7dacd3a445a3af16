// gridext: command-line front end for the grid linear-extension library.
//
// Exit codes: 0 ok, 1 assertion failure, 2 usage error, 3 resource cap.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gridext/bounds.hpp"
#include "gridext/counting.hpp"
#include "gridext/errors.hpp"
#include "gridext/grid.hpp"
#include "gridext/harness.hpp"
#include "gridext/jumps.hpp"
#include "gridext/sampling.hpp"
#include "gridext/transposition_graph.hpp"

namespace {

using gridext::GridShape;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Globals {
  std::uint64_t seed = 42;
  std::string format;
  std::string out;
  std::optional<std::size_t> cap;
};

struct ShapeArgs {
  std::string shape;
  int m = 0;
  int n = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--shape", shape, "Grid shape, e.g. 3x3 or 2x2x2");
    cmd->add_option("--m", m, "Chain length for [m]^n");
    cmd->add_option("--n", n, "Dimension for [m]^n");
  }

  GridShape resolve() const {
    if (!shape.empty()) return GridShape::parse(shape);
    if (m > 0 && n > 0) return GridShape::cube(m, n);
    throw gridext::DomainError("give --shape AxB... or both --m and --n");
  }
};

json shape_json(const GridShape& shape) { return json(shape.lengths()); }

std::string join(std::span<const std::size_t> values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw gridext::DomainError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<gridext::LinearExtension> load_extensions(const GridShape& shape, const std::string& path) {
  if (path.empty() || path == "-") return gridext::read_extensions(shape, std::cin);
  std::ifstream in(path);
  if (!in) throw gridext::DomainError("cannot open '" + path + "'");
  return gridext::read_extensions(shape, in);
}

json bound_json(const gridext::BoundReport& r) {
  json inputs = json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  json value;
  if (const auto* d = std::get_if<double>(&r.value)) {
    value = *d;
  } else {
    value = gridext::to_decimal(std::get<gridext::BigCount>(r.value));
  }
  return {{"name", r.name}, {"inputs", inputs}, {"value", value}, {"vacuous", r.vacuous}};
}

int cmd_count(const Globals& g, const ShapeArgs& args) {
  const auto shape = args.resolve();
  const auto count = gridext::count_extensions(shape, g.cap.value_or(gridext::kDefaultStateCap));
  const auto lower = gridext::factorial_product_lower_bound(shape);
  const auto upper = gridext::lemma2_upper_bound(shape);
  Sink sink(g.out);
  auto& os = sink.stream();
  if (g.format == "csv") {
    os << "shape,count,lower_fact,upper_lemma2\n"
       << shape.to_string() << ',' << count << ',' << lower << ',' << upper << '\n';
  } else if (g.format == "text") {
    os << "shape        " << shape.to_string() << "\ncount        " << count << "\nlower_fact   " << lower
       << "\nupper_lemma2 " << upper << '\n';
  } else {
    json j = {{"shape", shape_json(shape)},
              {"count", gridext::to_decimal(count)},
              {"lower_fact", gridext::to_decimal(lower)},
              {"upper_lemma2", gridext::to_decimal(upper)}};
    os << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Globals& g, const ShapeArgs& args) {
  const auto shape = args.resolve();
  Sink sink(g.out);
  auto& os = sink.stream();
  gridext::for_each_extension(
      shape, [&](std::span<const std::size_t> order) { os << gridext::format_extension(order) << '\n'; },
      g.cap.value_or(gridext::kDefaultEnumerationCap));
  return kExitOk;
}

struct SampleArgs {
  std::string method = "exact";
  std::size_t samples = 1000;
  std::size_t steps = 10'000;
  double laziness = 0.5;
  std::string pits_csv;
};

int cmd_sample(const Globals& g, const ShapeArgs& args, const SampleArgs& sa) {
  const auto shape = args.resolve();
  gridext::SamplerConfig cfg;
  cfg.method = gridext::parse_sampling_method(sa.method);
  cfg.seed = g.seed;
  cfg.mcmc_steps = sa.steps;
  cfg.laziness = sa.laziness;
  cfg.state_cap = g.cap.value_or(gridext::kDefaultStateCap);
  cfg.validate();
  if (sa.samples == 0) throw gridext::DomainError("--samples must be positive");

  std::optional<std::ofstream> samples_file;
  if (!g.out.empty()) {
    samples_file.emplace(g.out);
    if (!*samples_file) throw gridext::DomainError("cannot open '" + g.out + "' for writing");
    gridext::for_each_sample(shape, cfg, sa.samples, [&](std::size_t, std::span<const std::size_t> order) {
      *samples_file << gridext::format_extension(order) << '\n';
    });
  }
  const auto stats = gridext::empirical_jump_stats(shape, cfg, sa.samples);

  if (!sa.pits_csv.empty()) {
    std::ofstream csv(sa.pits_csv);
    if (!csv) throw gridext::DomainError("cannot open '" + sa.pits_csv + "' for writing");
    csv << "k,mean_pits,stderr\n";
    for (std::size_t k = 0; k < stats.pits_profile.size(); ++k) {
      csv << k + 1 << ',' << stats.pits_profile[k].mean << ',' << stats.pits_profile[k].std_error << '\n';
    }
  }

  if (g.format == "csv") {
    std::cout << "k,mean_pits,stderr\n";
    for (std::size_t k = 0; k < stats.pits_profile.size(); ++k) {
      std::cout << k + 1 << ',' << stats.pits_profile[k].mean << ',' << stats.pits_profile[k].std_error << '\n';
    }
    return kExitOk;
  }
  if (g.format == "text") {
    std::cout << "shape       " << shape.to_string() << "\nmethod      " << sa.method << "\nsamples     "
              << sa.samples << "\nmean_degree " << stats.degree.mean << " +/- " << stats.degree.std_error << '\n';
    return kExitOk;
  }
  json histogram = json::object();
  for (const auto& [d, c] : stats.degree_histogram) histogram[std::to_string(d)] = c;
  json pits = json::array();
  for (const auto& e : stats.pits_profile) pits.push_back(e.mean);
  json j = {{"version", GRIDEXT_VERSION},
            {"config",
             {{"shape", shape_json(shape)},
              {"method", sa.method},
              {"samples", sa.samples},
              {"seed", g.seed},
              {"steps", sa.steps},
              {"laziness", sa.laziness},
              {"cap", cfg.state_cap}}},
            {"mean_degree", stats.degree.mean},
            {"stderr", stats.degree.std_error},
            {"histogram", histogram},
            {"mean_pits_profile", pits}};
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_jumps(const Globals& g, const ShapeArgs& args, const std::string& in_path) {
  const auto shape = args.resolve();
  const auto extensions = load_extensions(shape, in_path);
  Sink sink(g.out);
  auto& os = sink.stream();
  if (g.format == "json") {
    json rows = json::array();
    for (const auto& ext : extensions) {
      const auto profile = gridext::jumps(ext);
      rows.push_back({{"degree", profile.degree()},
                      {"jump_times", profile.jump_times},
                      {"pits", gridext::pits_sequence(ext).counts}});
    }
    os << rows.dump() << '\n';
    return kExitOk;
  }
  os << "extension,degree,jump_times,pits\n";
  for (std::size_t i = 0; i < extensions.size(); ++i) {
    const auto profile = gridext::jumps(extensions[i]);
    os << i << ',' << profile.degree() << ',' << join(profile.jump_times, ' ') << ','
       << join(gridext::pits_sequence(extensions[i]).counts, ' ') << '\n';
  }
  return kExitOk;
}

int cmd_pits(const Globals& g, const ShapeArgs& args, const std::string& in_path, std::optional<double> R) {
  const auto shape = args.resolve();
  const auto extensions = load_extensions(shape, in_path);
  std::optional<double> threshold;
  if (R) {
    if (!shape.equilateral()) throw gridext::DomainError("--R needs an equilateral shape");
    threshold = gridext::pits_threshold(shape.length(0), shape.dimension(), *R).real();
  }
  Sink sink(g.out);
  auto& os = sink.stream();
  if (g.format == "json") {
    json rows = json::array();
    for (const auto& ext : extensions) {
      const auto seq = gridext::pits_sequence(ext);
      json row = {{"pits", seq.counts}};
      if (threshold) row["deficit_fraction"] = gridext::deficit_fraction(seq, *threshold);
      rows.push_back(row);
    }
    os << rows.dump() << '\n';
    return kExitOk;
  }
  os << "extension,pits" << (threshold ? ",deficit_fraction" : "") << '\n';
  for (std::size_t i = 0; i < extensions.size(); ++i) {
    const auto seq = gridext::pits_sequence(extensions[i]);
    os << i << ',' << join(seq.counts, ' ');
    if (threshold) os << ',' << gridext::deficit_fraction(seq, *threshold);
    os << '\n';
  }
  return kExitOk;
}

int cmd_graph(const Globals& g, const ShapeArgs& args, const std::string& dot_path) {
  const auto shape = args.resolve();
  const auto graph = gridext::build_graph(shape, g.cap.value_or(gridext::kDefaultEnumerationCap));
  const auto stats = gridext::graph_stats(graph);
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw gridext::DomainError("cannot open '" + dot_path + "' for writing");
    gridext::write_dot(dot, graph);
  }
  Sink sink(g.out);
  auto& os = sink.stream();
  if (g.format == "text") {
    os << "vertices " << stats.vertex_count << "\nedges    " << stats.edge_count << "\nmin_deg  " << stats.min_deg
       << "\nmax_deg  " << stats.max_deg << "\navg_deg  " << stats.avg_deg_exact.get_str() << "\nconnected "
       << (stats.connected ? "yes" : "no") << '\n';
    return kExitOk;
  }
  json histogram = json::object();
  for (const auto& [d, c] : stats.degree_histogram) histogram[std::to_string(d)] = c;
  json j = {{"vertices", stats.vertex_count},
            {"edges", stats.edge_count},
            {"min_deg", stats.min_deg},
            {"max_deg", stats.max_deg},
            {"avg_deg", stats.avg_deg},
            {"avg_deg_exact", stats.avg_deg_exact.get_str()},
            {"connected", stats.connected},
            {"degree_histogram", histogram}};
  os << j.dump() << '\n';
  return kExitOk;
}

int cmd_bounds(const Globals& g, double m, int n, std::optional<double> R, std::optional<double> delta) {
  const auto reports = gridext::bound_reports(m, n, R, delta);
  Sink sink(g.out);
  auto& os = sink.stream();
  if (g.format == "csv") {
    os << "name,value,vacuous\n";
    for (const auto& r : reports) {
      os << r.name << ',' << bound_json(r)["value"].dump() << ',' << (r.vacuous ? "true" : "false") << '\n';
    }
    return kExitOk;
  }
  json out = json::array();
  for (const auto& r : reports) out.push_back(bound_json(r));
  os << out.dump() << '\n';
  return kExitOk;
}

int cmd_verify(const Globals& g, const std::string& suite_name, const gridext::HarnessConfig& hc) {
  const auto suite = gridext::run_suite(suite_name, hc);
  Sink sink(g.out);
  auto& os = sink.stream();
  if (g.format == "text") {
    for (const auto& c : suite.checks) {
      os << (c.passed ? "PASS " : "FAIL ") << c.shape << ' ' << c.name << ": " << c.operation << " = " << c.measured
         << ", expected " << c.relation << ' ' << c.expected << '\n';
    }
    os << suite.name << ": " << suite.checks.size() - suite.failures() << '/' << suite.checks.size() << " passed\n";
  } else {
    json checks = json::array();
    for (const auto& c : suite.checks) {
      checks.push_back({{"shape", c.shape},
                        {"name", c.name},
                        {"operation", c.operation},
                        {"relation", c.relation},
                        {"measured", c.measured},
                        {"expected", c.expected},
                        {"passed", c.passed}});
    }
    json shapes = json::array();
    for (const auto& s : suite.shapes) shapes.push_back(s.to_string());
    json j = {{"version", GRIDEXT_VERSION},
              {"config",
               {{"suite", suite_name},
                {"seed", hc.seed},
                {"samples", hc.samples},
                {"steps", hc.mcmc_steps},
                {"cap", hc.state_cap}}},
              {"suite", suite.name},
              {"shapes", shapes},
              {"passed", suite.passed()},
              {"failures", suite.failures()},
              {"checks", checks}};
    os << j.dump(2) << '\n';
  }
  return suite.passed() ? kExitOk : kExitFailed;
}

int cmd_conjecture_scan(const Globals& g, std::size_t max_size, const gridext::HarnessConfig& hc) {
  const auto rows = gridext::conjecture_scan(max_size, hc);
  Sink sink(g.out);
  auto& os = sink.stream();
  if (g.format == "json") {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"m", r.m},
                     {"n", r.n},
                     {"size", r.size},
                     {"method", r.method},
                     {"avg_jump", r.avg_jump},
                     {"ratio", r.ratio},
                     {"ratio_stderr", r.std_error},
                     {"avg_jump_exact", r.avg_jump_exact}});
    }
    json j = {{"version", GRIDEXT_VERSION},
              {"config", {{"max_size", max_size}, {"seed", hc.seed}, {"samples", hc.samples}, {"steps", hc.mcmc_steps}}},
              {"rows", out}};
    os << j.dump(2) << '\n';
    return kExitOk;
  }
  os << "# gridext " << GRIDEXT_VERSION << " conjecture-scan max_size=" << max_size << " seed=" << hc.seed
     << " samples=" << hc.samples << " steps=" << hc.mcmc_steps << '\n';
  os << "m,n,size,method,avg_jump,ratio,ratio_stderr,avg_jump_exact\n";
  os.precision(10);
  for (const auto& r : rows) {
    os << r.m << ',' << r.n << ',' << r.size << ',' << r.method << ',' << r.avg_jump << ',' << r.ratio << ','
       << r.std_error << ',' << r.avg_jump_exact << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and randomized analysis of linear extensions of grid posets"};
  app.set_version_flag("--version", std::string(GRIDEXT_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out, "Output file (samples file for `sample`)");
  app.add_option("--cap", g.cap, "Resource cap (down-set states or extensions, per command)");

  ShapeArgs shape;
  auto* count = app.add_subcommand("count", "Count linear extensions exactly");
  shape.attach(count);

  auto* enumerate = app.add_subcommand("enumerate", "List every linear extension");
  shape.attach(enumerate);

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Draw uniform random linear extensions");
  shape.attach(sample);
  sample->add_option("--method", sa.method)->check(CLI::IsMember({"exact", "mcmc"}))->capture_default_str();
  sample->add_option("--samples", sa.samples)->capture_default_str();
  sample->add_option("--steps", sa.steps, "MCMC steps per sample")->capture_default_str();
  sample->add_option("--laziness", sa.laziness)->capture_default_str();
  sample->add_option("--pits-csv", sa.pits_csv, "Write the mean pits profile as CSV");

  std::string in_path;
  auto* jumps = app.add_subcommand("jumps", "Jump times and pits of extensions read from a file");
  shape.attach(jumps);
  jumps->add_option("--in", in_path, "Extension file ('-' for stdin)");

  std::optional<double> R;
  auto* pits = app.add_subcommand("pits", "Pits sequences of extensions read from a file");
  shape.attach(pits);
  pits->add_option("--in", in_path, "Extension file ('-' for stdin)");
  pits->add_option("--R", R, "Report the fraction of times with pits below 2^-R (me/2)^(n-1)");

  std::string dot_path;
  auto* graph = app.add_subcommand("graph", "Build the transposition graph");
  shape.attach(graph);
  graph->add_option("--dot", dot_path, "Write Graphviz output");

  std::optional<double> delta;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the closed-form bounds at (m, n)");
  double bound_m = 0;
  int bound_n = 0;
  bounds->add_option("--m", bound_m, "Chain length; any real >= 2")->required();
  bounds->add_option("--n", bound_n)->required();
  bounds->add_option("--R", R);
  bounds->add_option("--delta", delta);

  std::string suite_name;
  gridext::HarnessConfig hc;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite_name)->required()->check(CLI::IsMember(gridext::suite_names()));
  verify->add_option("--samples", hc.samples)->capture_default_str();
  verify->add_option("--steps", hc.mcmc_steps)->capture_default_str();

  std::size_t max_size = 27;
  auto* scan = app.add_subcommand("conjecture-scan", "Average jump number of [m]^n relative to m^n");
  scan->add_option("--max-size", max_size)->capture_default_str();
  scan->add_option("--samples", hc.samples)->capture_default_str();
  scan->add_option("--steps", hc.mcmc_steps)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  hc.seed = g.seed;
  if (g.cap) hc.state_cap = *g.cap;

  auto format_or = [&](const char* fallback) {
    if (g.format.empty()) g.format = fallback;
  };

  try {
    if (*count) return format_or("json"), cmd_count(g, shape);
    if (*enumerate) return format_or("text"), cmd_enumerate(g, shape);
    if (*sample) return format_or("json"), cmd_sample(g, shape, sa);
    if (*jumps) return format_or("csv"), cmd_jumps(g, shape, in_path);
    if (*pits) return format_or("csv"), cmd_pits(g, shape, in_path, R);
    if (*graph) return format_or("json"), cmd_graph(g, shape, dot_path);
    if (*bounds) return format_or("json"), cmd_bounds(g, bound_m, bound_n, R, delta);
    if (*verify) return format_or("json"), cmd_verify(g, suite_name, hc);
    if (*scan) return format_or("csv"), cmd_conjecture_scan(g, max_size, hc);
  } catch (const gridext::ResourceError& e) {
    std::cerr << "gridext: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gridext: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "gridext: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
