#include "graphdiff/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "graphdiff/bounds.hpp"
#include "graphdiff/linear_frontier.hpp"
#include "graphdiff/scalar_search.hpp"

namespace graphdiff {

DistanceResult compute_distance(const Spectrum& a, const Spectrum& b, const DistanceSpec& spec) {
  switch (spec.variant) {
    case Variant::LinearFree: return linear_distance(a, b, spec.exp.window);
    case Variant::LinearFixedAlpha: return fixed_alpha_linear_distance(a, b, spec.alpha);
    case Variant::TSGDD: return tsgdd(a, b, spec.r);
    case Variant::ExpFree: return exp_distance(a, b, spec.exp);
    case Variant::ExpFixedAlpha: return fixed_alpha_exp_distance(a, b, spec.alpha);
    case Variant::Hammond: break;
  }
  throw std::invalid_argument("compute_distance: hammond needs graphs, not spectra");
}

DistanceResult compute_distance(const Graph& a, const Graph& b, const DistanceSpec& spec) {
  if (spec.variant == Variant::Hammond) return hammond_distance(a, b);
  return compute_distance(laplacian_spectrum(a), laplacian_spectrum(b), spec);
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1, jobs), count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          fn(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// ---- triplets ----------------------------------------------------------------

Triplet make_triplet(const TripletConfig& cfg, std::size_t index) {
  if (cfg.p_list.empty()) throw std::invalid_argument("triplets: empty p list");
  Triplet t;
  t.seed = derive_seed(cfg.seed, index);
  t.p = cfg.p_list[index % cfg.p_list.size()];
  SplitMix64 rng(t.seed);
  const int n1 = rng.uniform_int(cfg.n1_min, cfg.n1_max);
  const int n2 = rng.uniform_int(n1, n1 + cfg.span);
  const int n3 = rng.uniform_int(n2, n2 + cfg.span);
  t.g1 = random_bernoulli_graph(n1, t.p, derive_seed(t.seed, 1));
  t.g2 = random_bernoulli_graph(n2, t.p, derive_seed(t.seed, 2));
  t.g3 = random_bernoulli_graph(n3, t.p, derive_seed(t.seed, 3));
  return t;
}

std::vector<TripletRow> triplet_discrepancy_experiment(const TripletConfig& cfg) {
  if (cfg.ordering != "123" && cfg.ordering != "213" && cfg.ordering != "321") {
    throw std::invalid_argument("triplets: ordering must be 123, 213 or 321");
  }
  std::vector<TripletRow> rows(cfg.count);
  parallel_for(cfg.count, cfg.jobs, [&](std::size_t k) {
    const Triplet t = make_triplet(cfg, k);
    const Spectrum s[3] = {laplacian_spectrum(t.g1), laplacian_spectrum(t.g2),
                           laplacian_spectrum(t.g3)};
    const int a = cfg.ordering[0] - '1';
    const int b = cfg.ordering[1] - '1';
    const int c = cfg.ordering[2] - '1';
    TripletRow& r = rows[k];
    r.index = k;
    r.n1 = t.g1.size();
    r.n2 = t.g2.size();
    r.n3 = t.g3.size();
    r.p = t.p;
    r.seed = t.seed;
    r.d12 = compute_distance(s[a], s[b], cfg.distance).value;
    r.d23 = compute_distance(s[b], s[c], cfg.distance).value;
    r.d13 = compute_distance(s[a], s[c], cfg.distance).value;
    const double den = r.d12 + r.d23;
    r.degenerate = !(den > 0);
    r.disc = r.degenerate ? std::nan("") : r.d13 / den;
  });
  return rows;
}

DiscSummary summarize(const std::vector<TripletRow>& rows) {
  DiscSummary s;
  s.rows = rows.size();
  for (const auto& r : rows) {
    if (r.degenerate) continue;
    ++s.valid;
    if (r.disc <= 1.0) ++s.satisfied;
    s.max_disc = std::max(s.max_disc, r.disc);
  }
  s.satisfied_fraction = s.valid ? static_cast<double>(s.satisfied) / s.valid : 0.0;
  return s;
}

// ---- lineage table -------------------------------------------------------------

const std::vector<LineageFamily>& table_families() {
  static const std::vector<LineageFamily> f{LineageFamily::SquareGrid, LineageFamily::Path,
                                            LineageFamily::Cycle, LineageFamily::MultiBarbell};
  return f;
}

std::optional<Graph> table_member(LineageFamily family, int i) {
  const bool squared_size = family == LineageFamily::Path || family == LineageFamily::Cycle;
  const int n = squared_size ? i * i : i;
  if (n < lineage_minimum(family)) return std::nullopt;
  return lineage_member(family, n);
}

std::vector<LineageCell> lineage_table(const LineageTableConfig& cfg) {
  const auto& fams = table_families();
  // Spectra of every member that can appear, computed once.
  std::map<std::pair<LineageFamily, int>, Spectrum> spectra;
  for (auto f : fams) {
    for (int i = cfg.i_min; i <= cfg.i_max + 1; ++i) {
      if (auto g = table_member(f, i)) spectra.emplace(std::pair{f, i}, laplacian_spectrum(*g));
    }
  }
  struct Task {
    std::size_t cell;
    int i;
    double value = 0.0;
  };
  std::vector<LineageCell> cells;
  std::vector<Task> tasks;
  for (auto row : fams) {
    for (auto col : fams) {
      LineageCell c;
      c.row = row;
      c.col = col;
      for (int i = cfg.i_min; i <= cfg.i_max; ++i) {
        if (spectra.contains({row, i}) && spectra.contains({col, i + 1})) {
          c.indices.push_back(i);
          tasks.push_back({cells.size(), i});
        }
      }
      cells.push_back(std::move(c));
    }
  }
  parallel_for(tasks.size(), cfg.jobs, [&](std::size_t k) {
    Task& t = tasks[k];
    const LineageCell& c = cells[t.cell];
    const DistanceResult r =
        exp_distance(spectra.at({c.row, t.i}), spectra.at({c.col, t.i + 1}), cfg.exp);
    t.value = cfg.squared ? r.squared : r.value;
  });
  for (const auto& t : tasks) cells[t.cell].values.push_back(t.value);
  for (auto& c : cells) {
    double sum = 0.0;
    for (double v : c.values) sum += v;
    c.mean = c.values.empty() ? std::nan("") : sum / c.values.size();
  }
  return cells;
}

// ---- convergence ---------------------------------------------------------------

std::vector<ConvergenceRow> convergence_sweep(LineageFamily a, LineageFamily b, int n_min,
                                              int n_max, const ExpOptions& opt, bool squared,
                                              int jobs) {
  if (n_min > n_max) throw std::invalid_argument("convergence_sweep: empty range");
  std::vector<ConvergenceRow> rows(n_max - n_min + 1);
  parallel_for(rows.size(), jobs, [&](std::size_t k) {
    const int n = n_min + static_cast<int>(k);
    const DistanceResult r = exp_distance(lineage_member(a, n), lineage_member(b, n + 1), opt);
    rows[k] = {n, squared ? r.squared : r.value, r.alpha_star.value_or(std::nan("")),
               r.t_star.value_or(std::nan(""))};
  });
  return rows;
}

// ---- product bound --------------------------------------------------------------

std::vector<ProductBoundRow> product_bound_sweep(int n_min, int n_max, const ExpOptions& opt,
                                                 int jobs) {
  if (n_min > n_max) throw std::invalid_argument("product_bound_sweep: empty range");
  std::vector<ProductBoundRow> rows(n_max - n_min + 1);
  parallel_for(rows.size(), jobs, [&](std::size_t k) {
    const int n = n_min + static_cast<int>(k);
    const Spectrum p1 = laplacian_spectrum(path_graph(n));
    const Spectrum p2 = laplacian_spectrum(path_graph(n + 1));
    const DistanceResult factor = exp_distance(p1, p2, opt);
    ProductBoundRow& r = rows[k];
    r.n = n;
    r.t_c = *factor.t_star;
    r.alpha_c = *factor.alpha_star;
    r.bound = product_special_case_bound(p1, p2, r.t_c, r.alpha_c, NormCombination::Sum);
    r.bound_min = product_special_case_bound(p1, p2, r.t_c, r.alpha_c, NormCombination::Min);
    r.direct = exp_distance(lineage_member(LineageFamily::SquareGrid, n),
                            lineage_member(LineageFamily::SquareGrid, n + 1), opt)
                   .value;
  });
  return rows;
}

// ---- baseline -----------------------------------------------------------------

BaselineResult golden_section_baseline(const Spectrum& a, const Spectrum& b, AlphaWindow window) {
  const auto ord = order_operands(a, b);
  const Spectrum& s1 = *ord.small;
  const Spectrum& s2 = *ord.large;
  BaselineResult out;
  const Frontier f = linear_frontier(s1, s2, window);
  out.frontier_work = f.work;
  if (f.entries.empty()) return out;

  out.frontier_value = f.entries.front().min_value;
  std::vector<double> starts;
  for (const auto& e : f.entries) {
    out.frontier_value = std::min(out.frontier_value, e.min_value);
    if (std::isfinite(e.alpha_opt) && e.alpha_opt >= e.lo && e.alpha_opt <= e.hi) {
      starts.push_back(e.alpha_opt);
    }
  }
  if (starts.empty()) {
    // The envelope is monotone on the window; its minimum is an endpoint.
    const double lo = f.envelope(s1, s2, window.low);
    const double hi = f.envelope(s1, s2, window.high);
    starts.push_back(lo <= hi ? window.low : window.high);
  }
  out.local_minima = starts.size();

  out.baseline_value = std::numeric_limits<double>::infinity();
  for (double x : starts) {
    const double lo = std::max(window.low, 0.618 * x);
    const double hi = std::min(window.high, 1.618 * x);
    const ScalarMinimum m = golden_section_minimize(
        [&](double alpha) {
          return lap_solve_linear(s1, s2, alpha, &out.baseline_work).total_cost;
        },
        lo, hi, 1e-12);
    out.baseline_value = std::min(out.baseline_value, m.value);
  }
  return out;
}

std::vector<BaselineRow> baseline_experiment(const BaselineConfig& cfg) {
  if (cfg.p_list.empty()) throw std::invalid_argument("baseline: empty p list");
  std::vector<BaselineRow> rows(cfg.count);
  parallel_for(cfg.count, cfg.jobs, [&](std::size_t k) {
    const std::uint64_t seed = derive_seed(cfg.seed, k);
    SplitMix64 rng(seed);
    BaselineRow& r = rows[k];
    r.index = k;
    r.p = cfg.p_list[k % cfg.p_list.size()];
    r.n1 = rng.uniform_int(cfg.n1_min, cfg.n1_max);
    r.n2 = rng.uniform_int(r.n1, r.n1 + cfg.span);
    const Graph g1 = random_bernoulli_graph(r.n1, r.p, derive_seed(seed, 1));
    const Graph g2 = random_bernoulli_graph(r.n2, r.p, derive_seed(seed, 2));
    r.result = golden_section_baseline(laplacian_spectrum(g1), laplacian_spectrum(g2));
  });
  return rows;
}

}  // namespace graphdiff
