#include <cstdio>
#include <ostream>

#include "graphdiff/experiments.hpp"

namespace graphdiff {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& columns)
    : out_(out), columns_(columns.size()) {
  out_ << "# graphdiff-csv v1\n";
  for (std::size_t k = 0; k < columns.size(); ++k) out_ << (k ? "," : "") << columns[k];
  out_ << '\n';
}

void CsvWriter::sep() {
  if (pos_++ > 0) out_ << ',';
}

CsvWriter& CsvWriter::operator<<(double v) {
  sep();
  out_ << format_double(v);
  return *this;
}

CsvWriter& CsvWriter::operator<<(long long v) {
  sep();
  out_ << v;
  return *this;
}

CsvWriter& CsvWriter::operator<<(const std::string& v) {
  sep();
  out_ << v;
  return *this;
}

void CsvWriter::end_row() {
  // Short rows are padded so every line has the declared column count.
  while (pos_ < columns_) sep();
  out_ << '\n';
  pos_ = 0;
}

void write_triplets_csv(std::ostream& out, const std::vector<TripletRow>& rows) {
  CsvWriter w(out, {"index", "n1", "n2", "n3", "p", "seed", "d12", "d23", "d13", "disc",
                    "degenerate"});
  for (const auto& r : rows) {
    w << static_cast<long long>(r.index) << static_cast<long long>(r.n1)
      << static_cast<long long>(r.n2) << static_cast<long long>(r.n3) << r.p
      << std::to_string(r.seed) << r.d12 << r.d23 << r.d13 << r.disc
      << static_cast<long long>(r.degenerate);
    w.end_row();
  }
}

void write_lineage_csv(std::ostream& out, const std::vector<LineageCell>& cells) {
  CsvWriter w(out, {"row", "col", "mean", "count"});
  for (const auto& c : cells) {
    w << std::string(to_string(c.row)) << std::string(to_string(c.col)) << c.mean
      << static_cast<long long>(c.values.size());
    w.end_row();
  }
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  CsvWriter w(out, {"n", "distance", "alpha_star", "t_star"});
  for (const auto& r : rows) {
    w << static_cast<long long>(r.n) << r.distance << r.alpha_star << r.t_star;
    w.end_row();
  }
}

void write_product_bound_csv(std::ostream& out, const std::vector<ProductBoundRow>& rows) {
  CsvWriter w(out, {"n", "direct", "bound", "bound_min", "t_c", "alpha_c"});
  for (const auto& r : rows) {
    w << static_cast<long long>(r.n) << r.direct << r.bound << r.bound_min << r.t_c << r.alpha_c;
    w.end_row();
  }
}

void write_baseline_csv(std::ostream& out, const std::vector<BaselineRow>& rows) {
  CsvWriter w(out, {"index", "n1", "n2", "p", "frontier_value", "baseline_value",
                    "frontier_work", "baseline_work", "speedup", "local_minima"});
  for (const auto& r : rows) {
    const auto& b = r.result;
    w << static_cast<long long>(r.index) << static_cast<long long>(r.n1)
      << static_cast<long long>(r.n2) << r.p << b.frontier_value << b.baseline_value
      << b.frontier_work.units << b.baseline_work.units
      << b.baseline_work.units / b.frontier_work.units
      << static_cast<long long>(b.local_minima);
    w.end_row();
  }
}

}  // namespace graphdiff
