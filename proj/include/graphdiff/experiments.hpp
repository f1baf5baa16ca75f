#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphdiff/assignment.hpp"
#include "graphdiff/distance.hpp"
#include "graphdiff/exp_distance.hpp"
#include "graphdiff/graph.hpp"

namespace graphdiff {

// Which distance to compute and its parameters.
struct DistanceSpec {
  Variant variant = Variant::LinearFree;
  double alpha = 1.0;  // LinearFixedAlpha, ExpFixedAlpha
  double r = 1.0;      // TSGDD
  ExpOptions exp;      // ExpFree; exp.window also bounds LinearFree
};

DistanceResult compute_distance(const Graph& a, const Graph& b, const DistanceSpec& spec);
DistanceResult compute_distance(const Spectrum& a, const Spectrum& b, const DistanceSpec& spec);

// Runs fn(0) .. fn(count - 1) on up to `jobs` threads. Callers write results
// into pre-sized slots, so output order never depends on scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

// ---- triangle-inequality census ------------------------------------------

struct TripletConfig {
  std::size_t count = 200;
  std::uint64_t seed = 1;
  std::vector<double> p_list{0.25, 0.5, 0.75};
  int n1_min = 5;
  int n1_max = 30;
  int span = 30;  // n2 in [n1, n1 + span], n3 in [n2, n2 + span]
  // "123", "213" or "321": the order in which the triplet enters Disc.
  std::string ordering = "123";
  DistanceSpec distance;
  int jobs = 1;
};

struct TripletRow {
  std::size_t index = 0;
  int n1 = 0, n2 = 0, n3 = 0;  // sizes in generation order
  double p = 0.0;
  std::uint64_t seed = 0;
  double d12 = 0.0, d23 = 0.0, d13 = 0.0;  // in the requested ordering
  double disc = 0.0;
  bool degenerate = false;  // d12 + d23 == 0; excluded from summaries
};

struct Triplet {
  Graph g1, g2, g3;
  double p = 0.0;
  std::uint64_t seed = 0;
};

// The index-th triplet of the census; a pure function of (cfg.seed, index).
Triplet make_triplet(const TripletConfig& cfg, std::size_t index);

std::vector<TripletRow> triplet_discrepancy_experiment(const TripletConfig& cfg);

struct DiscSummary {
  std::size_t rows = 0;
  std::size_t valid = 0;
  std::size_t satisfied = 0;  // disc <= 1
  double satisfied_fraction = 0.0;
  double max_disc = 0.0;
};

DiscSummary summarize(const std::vector<TripletRow>& rows);

// ---- lineage table --------------------------------------------------------

struct LineageTableConfig {
  int i_min = 1;
  int i_max = 12;
  ExpOptions exp;
  bool squared = false;  // report D^2 (true) or D
  int jobs = 1;
};

// Member i of each family at matched vertex counts: Sq_i, Pa_{i^2}, Cy_{i^2},
// Ba_i. Empty when the member does not exist (Cy_1, Ba_1, Ba_2).
std::optional<Graph> table_member(LineageFamily family, int i);

struct LineageCell {
  LineageFamily row = LineageFamily::Path;
  LineageFamily col = LineageFamily::Path;
  double mean = 0.0;
  std::vector<int> indices;  // i values that entered the mean
  std::vector<double> values;
};

// Cell (row, col) is the mean over i of D(row member i, col member i + 1);
// indices where either member does not exist are skipped.
std::vector<LineageCell> lineage_table(const LineageTableConfig& cfg);

// Families in table order: SquareGrid, Path, Cycle, MultiBarbell.
const std::vector<LineageFamily>& table_families();

// ---- lineage convergence --------------------------------------------------

struct ConvergenceRow {
  int n = 0;
  double distance = 0.0;
  double alpha_star = 0.0;
  double t_star = 0.0;
};

// exp_distance(member n of a, member n + 1 of b) for n in [n_min, n_max].
std::vector<ConvergenceRow> convergence_sweep(LineageFamily a, LineageFamily b, int n_min,
                                              int n_max, const ExpOptions& opt = {},
                                              bool squared = false, int jobs = 1);

// ---- product bound --------------------------------------------------------

struct ProductBoundRow {
  int n = 0;
  double direct = 0.0;     // exp_distance(Sq_n, Sq_{n+1})
  double bound = 0.0;      // sum-of-norms form at the path optimum
  double bound_min = 0.0;  // min-of-norms form at the same point
  double t_c = 0.0;
  double alpha_c = 0.0;
};

std::vector<ProductBoundRow> product_bound_sweep(int n_min, int n_max, const ExpOptions& opt = {},
                                                 int jobs = 1);

// ---- golden-section baseline ------------------------------------------------

struct BaselineResult {
  double frontier_value = 0.0;  // squared linear distance from the frontier
  double baseline_value = 0.0;  // best squared value found by golden section
  WorkCounter frontier_work;
  WorkCounter baseline_work;
  std::size_t local_minima = 0;
};

// Runs the frontier, then one golden-section search over alpha per local
// minimum of the frontier, bracket [0.618 a*, 1.618 a*], with a cold full
// assignment solve per evaluation.
BaselineResult golden_section_baseline(const Spectrum& a, const Spectrum& b,
                                       AlphaWindow window = {});

struct BaselineConfig {
  std::size_t count = 60;
  std::uint64_t seed = 1;
  std::vector<double> p_list{0.25, 0.5, 0.75};
  int n1_min = 5;
  int n1_max = 120;
  int span = 60;
  int jobs = 1;
};

struct BaselineRow {
  std::size_t index = 0;
  int n1 = 0, n2 = 0;
  double p = 0.0;
  BaselineResult result;
};

std::vector<BaselineRow> baseline_experiment(const BaselineConfig& cfg);

// ---- CSV --------------------------------------------------------------------

// Header comment, column line, then one line per row; doubles printed with 17
// significant digits so files are byte-reproducible.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& columns);
  CsvWriter& operator<<(double v);
  CsvWriter& operator<<(long long v);
  CsvWriter& operator<<(const std::string& v);
  void end_row();

 private:
  void sep();
  std::ostream& out_;
  std::size_t columns_;
  std::size_t pos_ = 0;
};

std::string format_double(double v);

void write_triplets_csv(std::ostream& out, const std::vector<TripletRow>& rows);
void write_lineage_csv(std::ostream& out, const std::vector<LineageCell>& cells);
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);
void write_product_bound_csv(std::ostream& out, const std::vector<ProductBoundRow>& rows);
void write_baseline_csv(std::ostream& out, const std::vector<BaselineRow>& rows);

}  // namespace graphdiff
