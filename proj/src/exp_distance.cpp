#include "graphdiff/exp_distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

#include "graphdiff/linear_frontier.hpp"
#include "graphdiff/scalar_search.hpp"

namespace graphdiff {

namespace {

constexpr double kAlphaTol = 1e-12;
constexpr double kCrossTol = 1e-10;

bool strictly_better(double candidate, double reference) {
  return candidate < reference - 1e-12 * std::max(1.0, std::abs(reference));
}

}  // namespace

double exp_cost(const Assignment& m, const Spectrum& s1, const Spectrum& s2, double alpha,
                double t) {
  double total = 0.0;
  for (int j = 0; j < m.size(); ++j) {
    const double d = std::exp((t / alpha) * s1[j]) - std::exp(alpha * t * s2[m.rows[j]]);
    total += d * d;
  }
  return total;
}

CostMatrix exp_cost_matrix(const Spectrum& s1, const Spectrum& s2, double alpha, double t) {
  if (s1.size() > s2.size()) throw std::invalid_argument("smaller spectrum must come first");
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  std::vector<double> e1(s1.size());
  for (int j = 0; j < s1.size(); ++j) e1[j] = std::exp((t / alpha) * s1[j]);
  CostMatrix c(s2.size(), s1.size());
  for (int i = 0; i < s2.size(); ++i) {
    const double e2 = std::exp(alpha * t * s2[i]);
    for (int j = 0; j < s1.size(); ++j) {
      const double d = e1[j] - e2;
      c(i, j) = d * d;
    }
  }
  return c;
}

Assignment lap_solve_exponential(const Spectrum& s1, const Spectrum& s2, double alpha, double t,
                                 WorkCounter* work) {
  Assignment a = solve_rlap(exp_cost_matrix(s1, s2, alpha, t), work);
  canonicalize_matching(a);
  a.total_cost = exp_cost(a, s1, s2, alpha, t);
  return a;
}

AlphaMinimum minimize_alpha_for_matching(const Assignment& m, const Spectrum& s1,
                                         const Spectrum& s2, double t, AlphaWindow window,
                                         std::optional<double> warm) {
  auto f = [&](double a) { return exp_cost(m, s1, s2, a, t); };
  if (warm) {
    // Local search first; fall back to the whole window when the minimum
    // sits on an interior edge of the local bracket.
    const double w = std::clamp(*warm, window.low, window.high);
    const double lo = std::max(window.low, w / 1.25);
    const double hi = std::min(window.high, w * 1.25);
    ScalarMinimum local = brent_minimize(f, lo, hi, kAlphaTol);
    const double fw = f(w);
    if (fw < local.value) local = {w, fw, 0};
    const double edge = 1e-6 * local.x;
    const bool at_edge = (lo > window.low && local.x - lo < edge) ||
                         (hi < window.high && hi - local.x < edge);
    if (!at_edge) return {local.x, local.value};
    const ScalarMinimum global = brent_minimize(f, window.low, window.high, kAlphaTol);
    if (global.value < local.value) return {global.x, global.value};
    return {local.x, local.value};
  }
  const ScalarMinimum best = brent_minimize(f, window.low, window.high, kAlphaTol);
  return {best.x, best.value};
}

const ExpEntry* ExpFrontier::best() const {
  const ExpEntry* b = nullptr;
  for (const auto& e : entries) {
    if (!b || e.value < b->value) b = &e;
  }
  return b;
}

ExpFrontier init_exp_frontier(const Spectrum& s1, const Spectrum& s2, double t,
                              AlphaWindow window) {
  Frontier lin = linear_frontier(s1, s2, window);
  ExpFrontier f;
  f.window = window;
  f.work = lin.work;
  for (auto& e : lin.entries) {
    ExpEntry x;
    x.alpha = std::isfinite(e.alpha_opt) ? std::clamp(e.alpha_opt, window.low, window.high)
                                         : window.high;
    x.matching = std::move(e.matching);
    f.entries.push_back(std::move(x));
  }
  t_step(f, s1, s2, t);
  return f;
}

namespace {

// Entries attaining the lower envelope at their own minimizing alpha, judged
// against their kNeighbours nearest entries on either side (in alpha order)
// and the current best entry. A full pairwise check is quadratic in the
// retained set, which reaches thousands of matchings on grid pairs.
constexpr std::size_t kNeighbours = 4;

std::vector<std::size_t> envelope_members(const ExpFrontier& f, const Spectrum& s1,
                                          const Spectrum& s2) {
  const std::size_t k_max = f.entries.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < k_max; ++k) {
    if (f.entries[k].value < f.entries[best].value) best = k;
  }
  std::vector<double> e1(s1.size()), e2(s2.size());
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < k_max; ++k) {
    const ExpEntry& e = f.entries[k];
    for (int j = 0; j < s1.size(); ++j) e1[j] = std::exp((f.t / e.alpha) * s1[j]);
    for (int i = 0; i < s2.size(); ++i) e2[i] = std::exp(e.alpha * f.t * s2[i]);
    auto cost = [&](const Assignment& m) {
      double total = 0.0;
      for (int j = 0; j < m.size(); ++j) {
        const double d = e1[j] - e2[m.rows[j]];
        total += d * d;
      }
      return total;
    };
    const double tol = 1e-12 * std::max(1.0, e.value);
    bool on = k == best || cost(f.entries[best].matching) >= e.value - tol;
    const std::size_t lo = k > kNeighbours ? k - kNeighbours : 0;
    const std::size_t hi = std::min(k_max, k + kNeighbours + 1);
    for (std::size_t j = lo; j < hi && on; ++j) {
      if (j != k && cost(f.entries[j].matching) < e.value - tol) on = false;
    }
    if (on) out.push_back(k);
  }
  return out;
}

void sort_by_alpha(std::vector<ExpEntry>& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const ExpEntry& a, const ExpEntry& b) { return a.alpha < b.alpha; });
}

}  // namespace

void t_step(ExpFrontier& f, const Spectrum& s1, const Spectrum& s2, double t) {
  f.t = t;
  for (auto& e : f.entries) {
    const AlphaMinimum am = minimize_alpha_for_matching(e.matching, s1, s2, t, f.window, e.alpha);
    e.alpha = am.alpha;
    e.value = am.value;
  }
  sort_by_alpha(f.entries);

  std::set<std::vector<int>> known;
  for (const auto& e : f.entries) known.insert(e.matching.rows);
  std::set<std::pair<std::vector<int>, std::vector<int>>> closed;

  bool expanded = true;
  while (expanded) {
    expanded = false;
    const auto members = envelope_members(f, s1, s2);
    for (std::size_t q = 0; q + 1 < members.size() && !expanded; ++q) {
      const ExpEntry& a = f.entries[members[q]];
      const ExpEntry& b = f.entries[members[q + 1]];
      if (!(a.alpha < b.alpha)) continue;
      if (!closed.emplace(a.matching.rows, b.matching.rows).second) continue;

      auto diff = [&](double x) {
        return exp_cost(a.matching, s1, s2, x, t) - exp_cost(b.matching, s1, s2, x, t);
      };
      const auto root = bisect_root(diff, a.alpha, b.alpha, kCrossTol);
      if (!root) continue;
      const double x = *root;
      Assignment m3 = resolve_disagreement(
          a.matching, b.matching, s2.size(),
          [&](int i, int j) {
            const double d = std::exp((t / x) * s1[j]) - std::exp(x * t * s2[i]);
            return d * d;
          },
          &f.work);
      const double c3 = exp_cost(m3, s1, s2, x, t);
      const double ref =
          std::min(exp_cost(a.matching, s1, s2, x, t), exp_cost(b.matching, s1, s2, x, t));
      if (known.contains(m3.rows) || !strictly_better(c3, ref)) continue;

      ExpEntry e;
      const AlphaMinimum am = minimize_alpha_for_matching(m3, s1, s2, t, f.window, x);
      e.alpha = am.alpha;
      e.value = am.value;
      known.insert(m3.rows);
      e.matching = std::move(m3);
      e.matching.total_cost = e.value;
      f.entries.push_back(std::move(e));
      sort_by_alpha(f.entries);
      expanded = true;
    }
  }
}

std::vector<ExpCurvePoint> exp_objective_curve(const Spectrum& a, const Spectrum& b,
                                               const std::vector<double>& times,
                                               const ExpOptions& opt) {
  const auto ord = order_operands(a, b);
  std::vector<ExpCurvePoint> out;
  if (times.empty()) return out;
  ExpFrontier f = init_exp_frontier(*ord.small, *ord.large, times.front(), opt.window);
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (k > 0) t_step(f, *ord.small, *ord.large, times[k]);
    const ExpEntry* e = f.best();
    out.push_back({times[k], e ? e->value : 0.0, e ? e->alpha : 1.0});
  }
  return out;
}

DistanceResult exp_distance(const Spectrum& a, const Spectrum& b, const ExpOptions& opt) {
  if (a.empty() || b.empty()) throw std::invalid_argument("exp_distance: empty graph");
  if (!(opt.dt > 0) || !(opt.t_init > 0)) throw std::invalid_argument("exp_distance: bad t grid");
  const auto ord = order_operands(a, b);
  const Spectrum& s1 = *ord.small;
  const Spectrum& s2 = *ord.large;

  ExpFrontier f = init_exp_frontier(s1, s2, opt.t_init, opt.window);
  double prev = f.best()->value;
  double best_t = opt.t_init;
  double best_v = prev;
  ExpEntry best_e = *f.best();

  for (int k = 1;; ++k) {
    const double t = opt.t_init + k * opt.dt;
    if (t > opt.t_cap + 1e-12) break;
    t_step(f, s1, s2, t);
    const ExpEntry* e = f.best();
    if (e->value > best_v) {
      best_v = e->value;
      best_t = t;
      best_e = *e;
    }
    if (!opt.full_sweep && e->value <= prev) break;
    prev = e->value;
  }

  // Probes start from a copy of the most recent state, which holds every
  // matching retained so far.
  WorkCounter probe_work;
  auto probe = [&](double t) {
    ExpFrontier g = f;
    const double before = g.work.units;
    const std::size_t calls = g.work.calls;
    t_step(g, s1, s2, t);
    probe_work.units += g.work.units - before;
    probe_work.calls += g.work.calls - calls;
    return g;
  };
  const double lo = std::max(opt.t_init * 0.5, best_t - opt.dt);
  const double hi = best_t + opt.dt;
  const ScalarMinimum peak = golden_section_maximize(
      [&](double t) { return probe(t).best()->value; }, lo, hi, opt.t_tol);
  if (peak.value > best_v) {
    const ExpFrontier g = probe(peak.x);
    best_v = g.best()->value;
    best_t = peak.x;
    best_e = *g.best();
  }

  DistanceResult r;
  r.variant = Variant::ExpFree;
  r.swapped = ord.swapped;
  r.squared = std::max(0.0, best_v);
  r.value = std::sqrt(r.squared);
  r.t_star = best_t;
  r.alpha_star = best_e.alpha;
  r.matching = best_e.matching;
  r.matching.total_cost = best_v;
  r.work = f.work;
  r.work += probe_work;
  return r;
}

DistanceResult exp_distance(const Graph& a, const Graph& b, const ExpOptions& opt) {
  return exp_distance(laplacian_spectrum(a), laplacian_spectrum(b), opt);
}

DistanceResult fixed_alpha_exp_distance(const Spectrum& a, const Spectrum& b, double alpha) {
  const auto ord = order_operands(a, b);
  const Spectrum& s1 = *ord.small;
  const Spectrum& s2 = *ord.large;
  DistanceResult r;
  r.variant = Variant::ExpFixedAlpha;
  r.swapped = ord.swapped;
  r.alpha_star = alpha;
  auto f = [&](double t) { return lap_solve_exponential(s1, s2, alpha, t, &r.work).total_cost; };

  // 20 points per decade on [1e-3, 1e3].
  constexpr int kPoints = 121;
  std::vector<double> ts(kPoints), vs(kPoints);
  for (int k = 0; k < kPoints; ++k) {
    ts[k] = std::pow(10.0, -3.0 + 6.0 * k / (kPoints - 1));
    vs[k] = f(ts[k]);
  }
  double best_t = ts[0], best_v = vs[0];
  for (int k = 0; k < kPoints; ++k) {
    const bool left = k == 0 || vs[k] >= vs[k - 1];
    const bool right = k + 1 == kPoints || vs[k] >= vs[k + 1];
    if (!(left && right)) continue;
    ScalarMinimum m{ts[k], vs[k], 0};
    if (k > 0 && k + 1 < kPoints) m = golden_section_maximize(f, ts[k - 1], ts[k + 1], 1e-10);
    if (vs[k] > m.value) m = {ts[k], vs[k], 0};
    if (m.value > best_v) {
      best_v = m.value;
      best_t = m.x;
    }
  }
  r.t_star = best_t;
  r.matching = lap_solve_exponential(s1, s2, alpha, best_t);
  r.squared = std::max(0.0, best_v);
  r.value = std::sqrt(r.squared);
  return r;
}

HammondCurve::HammondCurve(const Graph& g1, const Graph& g2) {
  if (g1.size() != g2.size()) {
    throw std::invalid_argument("hammond_distance: graphs must have the same size");
  }
  const EigenDecomposition d1 = decompose(laplacian(g1));
  const EigenDecomposition d2 = decompose(laplacian(g2));
  const int n = g1.size();
  l1_.resize(n);
  l2_.resize(n);
  for (int k = 0; k < n; ++k) {
    l1_[k] = d1.spectrum[k];
    l2_[k] = d2.spectrum[k];
  }
  overlap_ = (d1.vectors.transpose() * d2.vectors).array().square().matrix();
}

double HammondCurve::operator()(double t) const {
  // ||K1 - K2||^2 = tr K1^2 + tr K2^2 - 2 tr K1 K2, all in the eigenbases.
  const Eigen::VectorXd e1 = (t * l1_).array().exp().matrix();
  const Eigen::VectorXd e2 = (t * l2_).array().exp().matrix();
  const double cross = e1.dot(overlap_ * e2);
  return std::max(0.0, e1.squaredNorm() + e2.squaredNorm() - 2.0 * cross);
}

DistanceResult hammond_distance(const Graph& g1, const Graph& g2) {
  const HammondCurve curve(g1, g2);
  DistanceResult r;
  r.variant = Variant::Hammond;
  // The curve is 0 at t = 0 and decays for large t; scan, then refine.
  constexpr double kStep = 0.01;
  constexpr int kSteps = 10000;
  double best_t = 0.0, best_v = 0.0;
  for (int k = 1; k <= kSteps; ++k) {
    const double t = k * kStep;
    const double v = curve(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  if (best_t > 0) {
    const ScalarMinimum m = golden_section_maximize(
        [&](double t) { return curve(t); }, std::max(0.0, best_t - kStep), best_t + kStep, 1e-10);
    if (m.value > best_v) {
      best_v = m.value;
      best_t = m.x;
    }
  }
  r.t_star = best_t;
  r.squared = best_v;
  r.value = std::sqrt(best_v);
  return r;
}

}  // namespace graphdiff
