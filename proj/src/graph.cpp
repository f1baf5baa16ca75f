#include "graphdiff/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace graphdiff {

Graph::Graph(int n, std::vector<Edge> edges, std::string name)
    : n_(n), edges_(std::move(edges)), name_(std::move(name)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("graph: edge endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("graph: duplicate edge");
  }
}

bool Graph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    deg[e.u] += 1;
    deg[e.v] += 1;
  }
  return deg;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw std::invalid_argument("relabeled: permutation size mismatch");
  }
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({perm[e.u], perm[e.v]});
  return Graph(n_, std::move(out), name_);
}

SymMatrix SymMatrix::from_dense(Eigen::MatrixXd m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SymMatrix: not square");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) throw std::invalid_argument("SymMatrix: not symmetric");
    }
  }
  SymMatrix s;
  s.m_ = std::move(m);
  return s;
}

void SymMatrix::add(int i, int j, double value) {
  m_(i, j) += value;
  if (i != j) m_(j, i) += value;
}

std::string_view to_string(LineageFamily family) {
  switch (family) {
    case LineageFamily::Path: return "path";
    case LineageFamily::Cycle: return "cycle";
    case LineageFamily::SquareGrid: return "grid";
    case LineageFamily::MultiBarbell: return "barbell";
  }
  return "unknown";
}

std::optional<LineageFamily> parse_family(std::string_view text) {
  if (text == "path" || text == "paths") return LineageFamily::Path;
  if (text == "cycle" || text == "cycles") return LineageFamily::Cycle;
  if (text == "grid" || text == "grids" || text == "square-grid") return LineageFamily::SquareGrid;
  if (text == "barbell" || text == "barbells" || text == "multi-barbell") {
    return LineageFamily::MultiBarbell;
  }
  return std::nullopt;
}

SymMatrix adjacency(const Graph& g) {
  SymMatrix a(g.size());
  for (const auto& e : g.edges()) a.set(e.u, e.v, e.u == e.v ? 2.0 : 1.0);
  return a;
}

SymMatrix degree_matrix(const Graph& g) {
  SymMatrix d(g.size());
  const auto deg = g.degrees();
  for (int i = 0; i < g.size(); ++i) d.set(i, i, deg[i]);
  return d;
}

SymMatrix laplacian(const Graph& g) {
  // Accumulate in integers so row sums are exactly zero.
  const int n = g.size();
  std::vector<long long> diag(n, 0);
  SymMatrix l(n);
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;  // +2 on A and +2 on D cancel
    l.set(e.u, e.v, 1.0);
    diag[e.u] -= 1;
    diag[e.v] -= 1;
  }
  for (int i = 0; i < n; ++i) l.set(i, i, static_cast<double>(diag[i]));
  return l;
}

Graph box_product(const Graph& g, const Graph& h) {
  const int n = g.size();
  const int m = h.size();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() * m + h.edge_count() * n);
  for (const auto& e : g.edges()) {
    for (int b = 0; b < m; ++b) edges.push_back({e.u * m + b, e.v * m + b});
  }
  for (int a = 0; a < n; ++a) {
    for (const auto& e : h.edges()) edges.push_back({a * m + e.u, a * m + e.v});
  }
  return Graph(n * m, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges), "Pa_" + std::to_string(n));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges), "Cy_" + std::to_string(n));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges), "K_" + std::to_string(n));
}

Graph empty_graph(int n) { return Graph(n); }

int lineage_minimum(LineageFamily family) {
  switch (family) {
    case LineageFamily::Path:
    case LineageFamily::SquareGrid: return 1;
    case LineageFamily::Cycle:
    case LineageFamily::MultiBarbell: return 3;
  }
  return 1;
}

Graph lineage_member(LineageFamily family, int n) {
  if (n < lineage_minimum(family)) {
    throw std::invalid_argument("lineage_member: n below family minimum for " +
                                std::string(to_string(family)));
  }
  Graph g;
  switch (family) {
    case LineageFamily::Path: return path_graph(n);
    case LineageFamily::Cycle: return cycle_graph(n);
    case LineageFamily::SquareGrid:
      g = box_product(path_graph(n), path_graph(n));
      g.set_name("Sq_" + std::to_string(n));
      return g;
    case LineageFamily::MultiBarbell:
      g = box_product(cycle_graph(n), complete_graph(n));
      g.set_name("Ba_" + std::to_string(n));
      return g;
  }
  return g;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

int SplitMix64::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<int>(x % span);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 mix(base ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
  mix.next();
  return mix.next();
}

Graph random_bernoulli_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_bernoulli_graph: negative n");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("random_bernoulli_graph: p outside [0, 1]");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform() < p) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

bool is_blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  int line_no = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": expected vertex count");
      }
    } else {
      long long a = 0;
      long long b = 0;
      if (!(fields >> a >> b)) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'i j'");
      }
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
      }
      edges.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
    std::string rest;
    if (fields >> rest && rest[0] != '#') {
      throw ParseError("line " + std::to_string(line_no) + ": trailing input");
    }
  }
  if (n < 0) throw ParseError("missing vertex count");
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Graph g = read_edge_list(in);
  g.set_name(path);
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace graphdiff
