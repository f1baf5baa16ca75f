#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "graphdiff/graph.hpp"

using namespace graphdiff;

namespace {

Eigen::MatrixXd mat(std::initializer_list<std::initializer_list<double>> rows) {
  Eigen::MatrixXd m(rows.size(), rows.begin()->size());
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("laplacian is adjacency minus degree") {
  CHECK(laplacian(path_graph(3)).dense() == mat({{-1, 1, 0}, {1, -2, 1}, {0, 1, -1}}));
  CHECK(laplacian(cycle_graph(3)).dense() == mat({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}));
  CHECK(laplacian(empty_graph(1)).dense() == mat({{0}}));
}

TEST_CASE("self-loop counts twice in adjacency and degree") {
  const Graph g(2, {{0, 0}, {0, 1}});
  CHECK(adjacency(g)(0, 0) == 2.0);
  CHECK(g.degrees() == std::vector<int>{3, 1});
  CHECK(laplacian(g).dense().row(0).sum() == doctest::Approx(0.0));
}

TEST_CASE("graph rejects bad edges") {
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("box product") {
  const Graph sq = box_product(path_graph(2), path_graph(2));
  CHECK(sq.size() == 4);
  CHECK(sq.edge_count() == 4);
  for (int d : sq.degrees()) CHECK(d == 2);

  const Graph g = cycle_graph(5);
  CHECK(box_product(g, empty_graph(1)) == g);

  // Cy_3 x K_3 against the Kronecker sum of adjacencies.
  const Graph ba = box_product(cycle_graph(3), complete_graph(3));
  const Eigen::MatrixXd a1 = adjacency(cycle_graph(3)).dense();
  const Eigen::MatrixXd a2 = adjacency(complete_graph(3)).dense();
  Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(9, 9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        expect(i * 3 + k, j * 3 + k) += a1(i, j);
        expect(k * 3 + i, k * 3 + j) += a2(i, j);
      }
    }
  }
  CHECK(adjacency(ba).dense() == expect);
  for (int d : ba.degrees()) CHECK(d == 4);
  CHECK(ba == lineage_member(LineageFamily::MultiBarbell, 3));
}

TEST_CASE("lineage members") {
  const Graph p = lineage_member(LineageFamily::Path, 4);
  CHECK(p.size() == 4);
  CHECK(p.edge_count() == 3);

  const Graph sq = lineage_member(LineageFamily::SquareGrid, 3);
  CHECK(sq.size() == 9);
  CHECK(sq.edge_count() == 12);

  const Graph ba = lineage_member(LineageFamily::MultiBarbell, 4);
  CHECK(ba.size() == 16);
  for (int d : ba.degrees()) CHECK(d == 5);

  CHECK(lineage_member(LineageFamily::Cycle, 6).edge_count() == 6);
  CHECK_THROWS(lineage_member(LineageFamily::Cycle, 2));
  CHECK_THROWS(lineage_member(LineageFamily::MultiBarbell, 2));
}

TEST_CASE("family names round trip") {
  for (auto f : {LineageFamily::Path, LineageFamily::Cycle, LineageFamily::SquareGrid,
                 LineageFamily::MultiBarbell}) {
    const auto parsed = parse_family(to_string(f));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == f);
  }
  CHECK_FALSE(parse_family("torus").has_value());
}

TEST_CASE("bernoulli graphs") {
  CHECK(random_bernoulli_graph(5, 0.0, 99).edge_count() == 0);
  CHECK(random_bernoulli_graph(5, 1.0, 99) == complete_graph(5));
  CHECK(random_bernoulli_graph(30, 0.5, 7) == random_bernoulli_graph(30, 0.5, 7));
  CHECK_FALSE(random_bernoulli_graph(30, 0.5, 7) == random_bernoulli_graph(30, 0.5, 8));
  for (const auto& e : random_bernoulli_graph(40, 0.5, 3).edges()) CHECK(e.u != e.v);
}

TEST_CASE("splitmix is deterministic and seeds are decorrelated") {
  SplitMix64 a(42), b(42);
  for (int k = 0; k < 10; ++k) CHECK(a.next() == b.next());
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  SplitMix64 r(5);
  for (int k = 0; k < 1000; ++k) {
    const int x = r.uniform_int(3, 7);
    CHECK((x >= 3 && x <= 7));
    const double u = r.uniform();
    CHECK((u >= 0.0 && u < 1.0));
  }
}

TEST_CASE("relabeling") {
  const Graph g = path_graph(3);
  const std::vector<int> perm{2, 1, 0};
  const Graph h = g.relabeled(perm);
  CHECK(h.has_edge(2, 1));
  CHECK(h.has_edge(1, 0));
  CHECK(h.edge_count() == 2);
}

TEST_CASE("edge list round trip") {
  const Graph g = lineage_member(LineageFamily::SquareGrid, 3);
  std::stringstream buf;
  write_edge_list(buf, g);
  CHECK(read_edge_list(buf) == g);
}

TEST_CASE("edge list comments and errors") {
  std::istringstream ok("# a comment\n3\n0 1  # trailing\n\n1 2\n");
  CHECK(read_edge_list(ok) == path_graph(3));

  auto parse = [](const char* text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("x\n"), ParseError);
  CHECK_THROWS_AS(parse("3\n0\n"), ParseError);
  CHECK_THROWS_AS(parse("3\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse("3\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("3\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(load_edge_list("/nonexistent/graph.el"), ParseError);
}
