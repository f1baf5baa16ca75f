// graphdiff: spectral diffusion distances between graphs, plus the experiment
// harness. Exit codes: 0 ok, 1 runtime failure, 2 parse error, 3 bad flag combo.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphdiff/experiments.hpp"
#include "graphdiff/graph.hpp"
#include "graphdiff/linear_frontier.hpp"

using namespace graphdiff;
using json = nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCombo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string variant = "linear";
  double alpha = 1.0;
  double r = 1.0;
  double dt = 0.01;
  std::string window = "1e-6:10";
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out;
  bool squared = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--variant", c.variant, "linear, linear-fixed, tsgdd, exp, exp-fixed, hammond");
  cmd->add_option("--alpha", c.alpha, "fixed alpha for linear-fixed and exp-fixed");
  cmd->add_option("--r", c.r, "tsgdd exponent");
  cmd->add_option("--dt", c.dt, "t step of the exponential continuation");
  cmd->add_option("--alpha-window", c.window, "alpha search window lo:hi");
  cmd->add_option("--seed", c.seed, "base seed");
  cmd->add_option("--jobs", c.jobs, "worker threads");
  cmd->add_option("--out", c.out, "output path (default stdout)");
  cmd->add_flag("--squared", c.squared, "report squared distances");
}

double parse_number(const std::string& s) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw CLI::ConversionError("number", s);
  }
  return v;
}

AlphaWindow parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw CLI::ConversionError("--alpha-window", text);
  AlphaWindow w{parse_number(text.substr(0, colon)), parse_number(text.substr(colon + 1))};
  if (!(w.low > 0) || !(w.low < w.high)) throw UsageError("--alpha-window needs 0 < lo < hi");
  return w;
}

Variant parse_variant(const std::string& s) {
  if (s == "linear") return Variant::LinearFree;
  if (s == "linear-fixed") return Variant::LinearFixedAlpha;
  if (s == "tsgdd") return Variant::TSGDD;
  if (s == "exp") return Variant::ExpFree;
  if (s == "exp-fixed") return Variant::ExpFixedAlpha;
  if (s == "hammond") return Variant::Hammond;
  throw CLI::ConversionError("--variant", s);
}

LineageFamily parse_family_arg(const std::string& s) {
  if (auto f = parse_family(s)) return *f;
  throw CLI::ConversionError("family", s);
}

DistanceSpec make_spec(const Common& c) {
  DistanceSpec spec;
  spec.variant = parse_variant(c.variant);
  spec.alpha = c.alpha;
  spec.r = c.r;
  spec.exp.dt = c.dt;
  spec.exp.window = parse_window(c.window);
  if (!(c.dt > 0)) throw UsageError("--dt must be positive");
  if (!(c.alpha > 0)) throw UsageError("--alpha must be positive");
  return spec;
}

ExpOptions make_exp(const Common& c) { return make_spec(c).exp; }

template <class Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  write(f);
}

json optional_number(const std::optional<double>& v) {
  return v && std::isfinite(*v) ? json(*v) : json(nullptr);
}

int run_dist(const Common& c, const std::string& pa, const std::string& pb) {
  const DistanceSpec spec = make_spec(c);
  const Graph a = load_edge_list(pa);
  const Graph b = load_edge_list(pb);
  if (spec.variant == Variant::Hammond && a.size() != b.size()) {
    throw UsageError("--variant hammond needs graphs of equal size");
  }
  if (spec.variant == Variant::ExpFree && (a.size() == 0 || b.size() == 0)) {
    throw UsageError("--variant exp needs non-empty graphs");
  }
  const DistanceResult r = compute_distance(a, b, spec);
  json j;
  j["variant"] = std::string(to_string(r.variant));
  j["value"] = c.squared ? r.squared : r.value;
  j["t_star"] = optional_number(r.t_star);
  j["alpha_star"] = optional_number(r.alpha_star);
  j["matching"] = r.matching.rows;
  j["swapped"] = r.swapped;
  j["work"] = {{"units", r.work.units}, {"calls", r.work.calls}};
  std::cout << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphdiff: diffusion distances between graphs of different sizes"};
  app.require_subcommand(1);

  Common common;

  std::string path_a, path_b;
  auto* dist = app.add_subcommand("dist", "distance between two edge-list files");
  dist->add_option("a", path_a, "first graph")->required();
  dist->add_option("b", path_b, "second graph")->required();
  add_common(dist, common);

  TripletConfig tcfg;
  std::vector<double> p_list{0.25, 0.5, 0.75};
  auto* trip = app.add_subcommand("triplets", "triangle-inequality census on random triplets");
  trip->add_option("--count", tcfg.count);
  trip->add_option("--p-list", p_list)->delimiter(',');
  trip->add_option("--n1-min", tcfg.n1_min);
  trip->add_option("--n1-max", tcfg.n1_max);
  trip->add_option("--span", tcfg.span);
  trip->add_option("--ordering", tcfg.ordering)->check(CLI::IsMember({"123", "213", "321"}));
  add_common(trip, common);

  LineageTableConfig lcfg;
  auto* table = app.add_subcommand("lineage-table", "mean distances between lineage members");
  table->add_option("--i-min", lcfg.i_min);
  table->add_option("--i-max", lcfg.i_max);
  add_common(table, common);

  std::string fam_a = "path", fam_b = "path";
  int n_min = 20, n_max = 60;
  auto* conv = app.add_subcommand("converge", "distance between consecutive lineage members");
  conv->add_option("--family-a", fam_a);
  conv->add_option("--family-b", fam_b);
  conv->add_option("--n-min", n_min);
  conv->add_option("--n-max", n_max);
  add_common(conv, common);

  int pb_min = 4, pb_max = 20;
  auto* prod = app.add_subcommand("product-bound", "grid distances against the product bound");
  prod->add_option("--n-min", pb_min);
  prod->add_option("--n-max", pb_max);
  add_common(prod, common);

  BaselineConfig bcfg;
  auto* base = app.add_subcommand("baseline", "frontier work against golden-section search");
  base->add_option("--count", bcfg.count);
  base->add_option("--p-list", p_list)->delimiter(',');
  base->add_option("--n1-min", bcfg.n1_min);
  base->add_option("--n1-max", bcfg.n1_max);
  base->add_option("--span", bcfg.span);
  add_common(base, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*dist) return run_dist(common, path_a, path_b);

    if (*trip) {
      tcfg.seed = common.seed;
      tcfg.jobs = common.jobs;
      tcfg.p_list = p_list;
      tcfg.distance = make_spec(common);
      if (tcfg.distance.variant == Variant::Hammond) {
        throw UsageError("triplets have unequal sizes; hammond is not available");
      }
      if (tcfg.n1_min < 1 || tcfg.n1_min > tcfg.n1_max || tcfg.span < 0 || p_list.empty()) {
        throw UsageError("triplets: empty size range or p list");
      }
      const auto rows = triplet_discrepancy_experiment(tcfg);
      emit(common.out, [&](std::ostream& o) { write_triplets_csv(o, rows); });
      const DiscSummary s = summarize(rows);
      std::cerr << "valid " << s.valid << "/" << s.rows << ", disc<=1 in "
                << 100.0 * s.satisfied_fraction << "%, max disc " << s.max_disc << '\n';
      return 0;
    }

    if (*table) {
      if (lcfg.i_min < 1 || lcfg.i_min > lcfg.i_max) throw UsageError("lineage-table: bad range");
      lcfg.exp = make_exp(common);
      lcfg.squared = common.squared;
      lcfg.jobs = common.jobs;
      const auto cells = lineage_table(lcfg);
      emit(common.out, [&](std::ostream& o) { write_lineage_csv(o, cells); });
      return 0;
    }

    if (*conv) {
      const LineageFamily a = parse_family_arg(fam_a);
      const LineageFamily b = parse_family_arg(fam_b);
      if (n_min > n_max || n_min < lineage_minimum(a) || n_min + 1 < lineage_minimum(b)) {
        throw UsageError("converge: range outside the families' sizes");
      }
      const auto rows = convergence_sweep(a, b, n_min, n_max, make_exp(common), common.squared,
                                          common.jobs);
      emit(common.out, [&](std::ostream& o) { write_convergence_csv(o, rows); });
      return 0;
    }

    if (*prod) {
      if (pb_min < 2 || pb_min > pb_max) throw UsageError("product-bound: bad range");
      const auto rows = product_bound_sweep(pb_min, pb_max, make_exp(common), common.jobs);
      emit(common.out, [&](std::ostream& o) { write_product_bound_csv(o, rows); });
      return 0;
    }

    if (*base) {
      bcfg.seed = common.seed;
      bcfg.jobs = common.jobs;
      bcfg.p_list = p_list;
      if (bcfg.n1_min < 1 || bcfg.n1_min > bcfg.n1_max || bcfg.span < 0 || p_list.empty()) {
        throw UsageError("baseline: empty size range or p list");
      }
      const auto rows = baseline_experiment(bcfg);
      emit(common.out, [&](std::ostream& o) { write_baseline_csv(o, rows); });
      return 0;
    }
  } catch (const CLI::ConversionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCombo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
