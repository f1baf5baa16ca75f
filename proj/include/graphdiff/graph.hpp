#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace graphdiff {

// Undirected edge, stored with u <= v. u == v is a self-loop.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected, unweighted graph on vertices [0, n). Edges are kept sorted and
// unique; self-loops are allowed (they count 2 towards the degree).
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on out-of-range endpoints or duplicate edges.
  explicit Graph(int n, std::vector<Edge> edges = {}, std::string name = {});

  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool has_edge(int a, int b) const;
  std::vector<int> degrees() const;

  // Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::string name_;
};

// Dense symmetric matrix. Every write goes to (i,j) and (j,i) together, so the
// stored matrix is exactly symmetric.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : m_(Eigen::MatrixXd::Zero(n, n)) {}

  // Throws std::invalid_argument unless m is square and exactly symmetric.
  static SymMatrix from_dense(Eigen::MatrixXd m);

  int size() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  void set(int i, int j, double value) {
    m_(i, j) = value;
    m_(j, i) = value;
  }
  void add(int i, int j, double value);

  const Eigen::MatrixXd& dense() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

enum class LineageFamily { Path, Cycle, SquareGrid, MultiBarbell };

std::string_view to_string(LineageFamily family);
std::optional<LineageFamily> parse_family(std::string_view text);

SymMatrix adjacency(const Graph& g);
SymMatrix degree_matrix(const Graph& g);
// A(G) - D(G). Negative semidefinite.
SymMatrix laplacian(const Graph& g);

// Cartesian product. Vertex (a, b) of the product is a * h.size() + b.
Graph box_product(const Graph& g, const Graph& h);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);

// Smallest admissible size parameter for a family.
int lineage_minimum(LineageFamily family);

// Path / Cycle: n vertices. SquareGrid: Pa_n x Pa_n. MultiBarbell: Cy_n x K_n.
Graph lineage_member(LineageFamily family, int n);

// Portable 64-bit generator: identical streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform integer on [lo, hi], both inclusive.
  int uniform_int(int lo, int hi);

 private:
  std::uint64_t state_;
};

// Mixes a base seed with a stream index; used to give every experiment item
// its own independent generator.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Each of the n(n-1)/2 vertex pairs is an edge with probability p.
Graph random_bernoulli_graph(int n, double p, std::uint64_t seed);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list text: first non-comment line is n, then one "i j" per line.
// Lines starting with '#' are comments. Throws ParseError.
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace graphdiff
