#include <doctest.h>

#include "herbrand/errors.hpp"
#include "herbrand/serre_graph.hpp"

using namespace herbrand;

TEST_CASE("edges come in inverse pairs and a loop counts twice toward valence") {
  SerreGraph g;
  const auto a = g.add_vertex("a");
  const auto b = g.add_vertex("b");
  const EdgeIndex loop = g.add_edge(a, a);
  const EdgeIndex ab = g.add_edge(a, b);
  CHECK(g.num_directed_edges() == 4);
  CHECK(g.edge(loop).inverse == loop + 1);
  CHECK(g.edge(ab + 1).origin == b);
  CHECK(g.edge(ab + 1).terminus == a);
  CHECK(valence(g, a) == 3);
  CHECK(valence(g, b) == 1);
  CHECK(adjacency_count(g, a, a) == 2);
  CHECK(adjacency_count(g, a, b) == 1);
  CHECK(adjacency_count(g, b, a) == 1);
  CHECK(euler_characteristic(g) == 0);
}

TEST_CASE("Laplacian of the triangle") {
  SerreGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  IntMatrix expected(3, 3);
  expected << 2, -1, -1, -1, 2, -1, -1, -1, 2;
  CHECK(laplacian_matrix(g) == expected);
  CHECK(degree_matrix(g) - adjacency_matrix(g) == expected);
  // Reordering permutes rows and columns together.
  const std::vector<VertexIndex> order{2, 0, 1};
  CHECK(laplacian_matrix(g, order) == expected);
}

TEST_CASE("loops vanish from the Laplacian") {
  SerreGraph g(1);
  g.add_edge(0, 0);
  g.add_edge(0, 0);
  CHECK(laplacian_matrix(g)(0, 0) == 0);
  CHECK(adjacency_matrix(g)(0, 0) == 4);
}

TEST_CASE("connectivity") {
  SerreGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK_FALSE(is_connected(g));
  const auto comp = connected_components(g);
  CHECK(comp[0] == comp[1]);
  CHECK(comp[0] != comp[2]);
  g.add_edge(1, 2);
  CHECK(is_connected(g));
  CHECK_FALSE(is_connected(SerreGraph()));
}

TEST_CASE("labels, lookup and errors") {
  SerreGraph g;
  g.add_vertex("x");
  g.add_vertex();
  CHECK(g.label(1) == "v2");
  CHECK(g.find("x") == VertexIndex{0});
  CHECK_FALSE(g.find("nope").has_value());
  CHECK_THROWS_AS(g.add_edge(0, 7), UnknownVertex);
  CHECK_THROWS_AS(laplacian_matrix(g, std::vector<VertexIndex>{0, 0}), std::invalid_argument);
}

TEST_CASE("DOT rendering lists each undirected edge once") {
  SerreGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge(0, 1);
  CHECK(to_dot(g, "G") == "graph \"G\" {\n  \"a\";\n  \"b\";\n  \"a\" -- \"b\";\n}\n");
}
