#include "graphdiff/linear_frontier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace graphdiff {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_sizes(const Spectrum& s1, const Spectrum& s2) {
  if (s1.size() > s2.size()) throw std::invalid_argument("smaller spectrum must come first");
}

bool strictly_better(double candidate, double reference) {
  return candidate < reference - 1e-12 * std::max(1.0, std::abs(reference));
}

}  // namespace

CostMatrix linear_cost_matrix(const Spectrum& s1, const Spectrum& s2, double alpha) {
  check_sizes(s1, s2);
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  CostMatrix c(s2.size(), s1.size());
  for (int i = 0; i < s2.size(); ++i) {
    const double b = alpha * s2[i];
    for (int j = 0; j < s1.size(); ++j) {
      const double d = s1[j] / alpha - b;
      c(i, j) = d * d;
    }
  }
  return c;
}

double linear_cost(const Assignment& m, const Spectrum& s1, const Spectrum& s2, double alpha) {
  double total = 0.0;
  for (int j = 0; j < m.size(); ++j) {
    const double d = s1[j] / alpha - alpha * s2[m.rows[j]];
    total += d * d;
  }
  return total;
}

void canonicalize_matching(Assignment& m) {
  std::sort(m.rows.begin(), m.rows.end());
}

Assignment lap_solve_linear(const Spectrum& s1, const Spectrum& s2, double alpha,
                            WorkCounter* work) {
  Assignment a = solve_rlap(linear_cost_matrix(s1, s2, alpha), work);
  canonicalize_matching(a);
  a.total_cost = linear_cost(a, s1, s2, alpha);
  return a;
}

CostCoeffs cost_coeffs(const Assignment& m, const Spectrum& s1, const Spectrum& s2) {
  CostCoeffs c;
  for (double v : s1.values()) c.B += v * v;
  for (int j = 0; j < m.size(); ++j) {
    const double l2 = s2[m.rows[j]];
    c.A += l2 * l2;
    c.C += 2.0 * s1[j] * l2;
  }
  return c;
}

std::optional<double> crossing_alpha(const CostCoeffs& c1, const CostCoeffs& c2) {
  const double da = c1.A - c2.A;
  if (std::abs(da) <= 1e-12 * std::max({c1.A, c2.A, 1.0})) return std::nullopt;
  // f1 - f2 = (A1 - A2) a^2 - (C1 - C2); B cancels.
  const double r = (c1.C - c2.C) / da;
  if (!(r > 0) || !std::isfinite(r)) return std::nullopt;
  return std::sqrt(r);
}

Assignment resolve_disagreement(const Assignment& m1, const Assignment& m2, int n2,
                                const std::function<double(int, int)>& cost,
                                WorkCounter* work, bool split_blocks) {
  const int n1 = m1.size();
  if (m2.size() != n1) throw std::invalid_argument("resolve_disagreement: size mismatch");
  std::vector<char> taken(n2, 0);
  // Disagreeing columns grouped into blocks; each block is one sub-problem.
  struct Block {
    std::vector<int> cols;
    int lo, hi;
  };
  std::vector<Block> blocks;
  for (int j = 0; j < n1; ++j) {
    const int a = m1.rows[j], b = m2.rows[j];
    if (a == b) {
      taken[a] = 1;
      continue;
    }
    const int lo = std::min(a, b), hi = std::max(a, b);
    if (blocks.empty() || (split_blocks && lo > blocks.back().hi)) {
      blocks.push_back({{j}, lo, hi});
    } else {
      Block& k = blocks.back();
      k.cols.push_back(j);
      k.lo = std::min(k.lo, lo);
      k.hi = std::max(k.hi, hi);
    }
  }
  Assignment out;
  out.rows = m1.rows;
  for (const Block& k : blocks) {
    std::vector<int> rows;
    for (int i = k.lo; i <= k.hi; ++i) {
      if (!taken[i]) rows.push_back(i);
    }
    CostMatrix sub(static_cast<int>(rows.size()), static_cast<int>(k.cols.size()));
    for (int a = 0; a < sub.rows(); ++a) {
      for (int b = 0; b < sub.cols(); ++b) sub(a, b) = cost(rows[a], k.cols[b]);
    }
    const Assignment s = solve_rlap(sub, work);
    for (int b = 0; b < sub.cols(); ++b) out.rows[k.cols[b]] = rows[s.rows[b]];
  }
  canonicalize_matching(out);
  return out;
}

MergeResult merge_solutions(const Assignment& m1, const Assignment& m2, const Spectrum& s1,
                            const Spectrum& s2, double alpha1, double alpha2,
                            WorkCounter* work) {
  MergeResult out;
  out.matching = m1;
  if (m1.same_pairs(m2)) return out;

  const auto star = crossing_alpha(cost_coeffs(m1, s1, s2), cost_coeffs(m2, s1, s2));
  if (!star) return out;
  // Rounding can push the crossing a hair outside [alpha1, alpha2].
  const double slack = 1e-12 * std::max(1.0, alpha2);
  if (*star < alpha1 - slack || *star > alpha2 + slack) return out;
  const double a = std::clamp(*star, alpha1, alpha2);
  out.alpha_star = a;

  Assignment m3 = resolve_disagreement(
      m1, m2, s2.size(),
      [&](int i, int j) {
        const double d = s1[j] / a - a * s2[i];
        return d * d;
      },
      work, true);
  m3.total_cost = linear_cost(m3, s1, s2, a);
  const double ref = std::min(linear_cost(m1, s1, s2, a), linear_cost(m2, s1, s2, a));
  if (!m3.same_pairs(m1) && !m3.same_pairs(m2) && strictly_better(m3.total_cost, ref)) {
    out.status = MergeStatus::New;
  }
  out.matching = std::move(m3);
  return out;
}

FrontierEntry make_entry(Assignment m, const Spectrum& s1, const Spectrum& s2, double found_at) {
  FrontierEntry e;
  e.coeffs = cost_coeffs(m, s1, s2);
  e.matching = std::move(m);
  e.found_at = found_at;
  if (e.coeffs.A > 0) {
    e.alpha_opt = std::pow(e.coeffs.B / e.coeffs.A, 0.25);
    e.min_value = std::max(0.0, 2.0 * std::sqrt(e.coeffs.A * e.coeffs.B) - e.coeffs.C);
  } else {
    // f = B / a^2 - C with C = 0: decreasing to 0 as a grows.
    e.alpha_opt = kInf;
    e.min_value = 0.0;
  }
  return e;
}

double Frontier::envelope(const Spectrum& s1, const Spectrum& s2, double alpha) const {
  double best = kInf;
  for (const auto& e : entries) best = std::min(best, linear_cost(e.matching, s1, s2, alpha));
  return best;
}

Frontier linear_frontier(const Spectrum& s1, const Spectrum& s2, AlphaWindow window) {
  check_sizes(s1, s2);
  if (!(window.low > 0) || !(window.low < window.high)) {
    throw std::invalid_argument("linear_frontier: bad alpha window");
  }
  Frontier f;
  f.window = window;
  if (s1.empty()) return f;

  auto& list = f.entries;
  list.push_back(make_entry(lap_solve_linear(s1, s2, window.low, &f.work), s1, s2, window.low));
  Assignment high = lap_solve_linear(s1, s2, window.high, &f.work);
  if (!high.same_pairs(list.front().matching)) {
    list.push_back(make_entry(std::move(high), s1, s2, window.high));
  }

  // Gaps between neighbours are closed left to right; a new matching splits
  // its gap and the left half is examined next.
  std::size_t i = 0;
  while (i + 1 < list.size()) {
    MergeResult r = merge_solutions(list[i].matching, list[i + 1].matching, s1, s2,
                                    list[i].found_at, list[i + 1].found_at, &f.work);
    if (r.status == MergeStatus::New) {
      list.insert(list.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                  make_entry(std::move(r.matching), s1, s2, *r.alpha_star));
    } else {
      ++i;
    }
  }

  for (std::size_t k = 0; k < list.size(); ++k) {
    list[k].lo = k == 0 ? window.low : list[k - 1].hi;
    if (k + 1 == list.size()) {
      list[k].hi = window.high;
    } else {
      const auto c = crossing_alpha(list[k].coeffs, list[k + 1].coeffs);
      const double x = c ? *c : list[k + 1].found_at;
      list[k].hi = std::clamp(x, list[k].found_at, list[k + 1].found_at);
    }
  }
  return f;
}

namespace {

DistanceResult finish(DistanceResult r) {
  r.squared = std::max(0.0, r.squared);
  r.value = std::sqrt(r.squared);
  return r;
}

}  // namespace

DistanceResult linear_distance(const Spectrum& a, const Spectrum& b, AlphaWindow window) {
  const auto ord = order_operands(a, b);
  const Frontier f = linear_frontier(*ord.small, *ord.large, window);
  DistanceResult r;
  r.variant = Variant::LinearFree;
  r.swapped = ord.swapped;
  r.work = f.work;
  if (f.entries.empty()) return finish(r);
  const FrontierEntry* best = &f.entries.front();
  for (const auto& e : f.entries) {
    if (e.min_value < best->min_value) best = &e;
  }
  r.squared = best->min_value;
  r.matching = best->matching;
  if (std::isfinite(best->alpha_opt)) r.alpha_star = best->alpha_opt;
  r.matching.total_cost = best->min_value;
  return finish(r);
}

DistanceResult fixed_alpha_linear_distance(const Spectrum& a, const Spectrum& b, double alpha) {
  const auto ord = order_operands(a, b);
  DistanceResult r;
  r.variant = Variant::LinearFixedAlpha;
  r.swapped = ord.swapped;
  r.alpha_star = alpha;
  r.matching = lap_solve_linear(*ord.small, *ord.large, alpha, &r.work);
  r.squared = r.matching.total_cost;
  return finish(r);
}

DistanceResult tsgdd(const Spectrum& a, const Spectrum& b, double r_exp) {
  const auto ord = order_operands(a, b);
  const double n1 = ord.small->size();
  const double n2 = ord.large->size();
  const double alpha = std::pow(n1 / n2, r_exp);
  DistanceResult r = fixed_alpha_linear_distance(*ord.small, *ord.large, alpha);
  r.variant = Variant::TSGDD;
  r.swapped = ord.swapped;
  r.squared *= std::pow(n1 * n2, -2.0 * r_exp);
  return finish(r);
}

DistanceResult linear_distance(const Graph& a, const Graph& b, AlphaWindow window) {
  return linear_distance(laplacian_spectrum(a), laplacian_spectrum(b), window);
}

DistanceResult fixed_alpha_linear_distance(const Graph& a, const Graph& b, double alpha) {
  return fixed_alpha_linear_distance(laplacian_spectrum(a), laplacian_spectrum(b), alpha);
}

DistanceResult tsgdd(const Graph& a, const Graph& b, double r) {
  return tsgdd(laplacian_spectrum(a), laplacian_spectrum(b), r);
}

}  // namespace graphdiff
