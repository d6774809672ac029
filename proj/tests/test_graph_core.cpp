#include <catch2/catch_amalgamated.hpp>

#include "gonbound/graph.hpp"
#include "gonbound/metric_graph.hpp"

using namespace gonbound;

namespace {

MetricGraph unit_metric(const SimpleGraph& g) {
  return MetricGraph(g, std::vector<Rat>(g.edge_count(), Rat(1)));
}

SimpleGraph cycle(int n) {
  std::vector<std::string> vs;
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) es.emplace_back(vs[i], vs[(i + 1) % n]);
  return make_graph(vs, es);
}

SimpleGraph complete(int n) {
  std::vector<std::string> vs;
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < n; ++i) vs.push_back(std::string(1, static_cast<char>('a' + i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(vs[i], vs[j]);
  return make_graph(vs, es);
}

} // namespace

TEST_CASE("validate: triangle is a valid simple graph") {
  GraphData d;
  d.vertices = {"a", "b", "c"};
  d.edges = {{"a", "b"}, {"b", "c"}, {"c", "a"}};
  CHECK(SimpleGraph::validate(d).ok());
}

TEST_CASE("validate: loop violation") {
  GraphData d;
  d.vertices = {"a"};
  d.edges = {{"a", "a"}};
  auto rep = SimpleGraph::validate(d);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.issues[0].clause == "loop");
  CHECK_THROWS_AS(SimpleGraph(d), validation_error);
}

TEST_CASE("validate: parallel edge violation") {
  GraphData d;
  d.vertices = {"a", "b"};
  d.edges = {{"a", "b"}, {"b", "a"}};
  auto rep = SimpleGraph::validate(d);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.issues[0].clause == "parallel_edge");
}

TEST_CASE("validate: two components reported") {
  GraphData d;
  d.vertices = {"a", "b", "c", "d"};
  d.edges = {{"a", "b"}, {"c", "d"}};
  auto rep = SimpleGraph::validate(d);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.issues[0].clause == "disconnected");
  // the constructor still accepts it, with the flag down
  SimpleGraph g(d);
  CHECK_FALSE(g.is_connected());
  CHECK(g.components().size() == 2);
}

TEST_CASE("degree sum equals twice the edge count") {
  for (const auto& g : {cycle(5), complete(4), make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}})}) {
    int sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("subdivide: unit edge at midpoint") {
  auto m = unit_metric(make_graph({"u", "v"}, {{"u", "v"}}));
  auto sub = subdivide(m, {PointOnGraph::on_edge(0, make_rat(1, 2))});
  CHECK(sub.graph.model().vertex_count() == 3);
  CHECK(sub.graph.model().edge_count() == 2);
  for (int e = 0; e < 2; ++e) CHECK(sub.graph.length(e) == make_rat(1, 2));
  CHECK(sub.graph.mu() == m.mu());
}

TEST_CASE("subdivide: unit triangle at all midpoints keeps mu") {
  auto g = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  auto m = unit_metric(g);
  std::vector<PointOnGraph> pts;
  for (int e = 0; e < 3; ++e) pts.push_back(PointOnGraph::on_edge(e, make_rat(1, 2)));
  auto sub = subdivide(m, pts);
  CHECK(sub.graph.model().vertex_count() == 6);
  CHECK(sub.graph.model().edge_count() == 6);
  CHECK(sub.graph.mu() == Rat(3));
}

TEST_CASE("subdivide: rational offsets partition exactly") {
  auto g = make_graph({"u", "v"}, {{"u", "v"}});
  MetricGraph m(g, {make_rat(3, 2)});
  auto sub = subdivide(m, {PointOnGraph::on_edge(0, make_rat(1, 3)), PointOnGraph::on_edge(0, Rat(1))});
  REQUIRE(sub.graph.model().edge_count() == 3);
  std::vector<Rat> lens = sub.graph.lengths();
  std::sort(lens.begin(), lens.end());
  CHECK(lens[0] == make_rat(1, 3));
  CHECK(lens[1] == make_rat(1, 2));
  CHECK(lens[2] == make_rat(2, 3));
  CHECK(sub.graph.mu() == make_rat(3, 2));
}

TEST_CASE("subdivide: point at a vertex is rejected") {
  auto m = unit_metric(make_graph({"u", "v"}, {{"u", "v"}}));
  CHECK_THROWS_AS(subdivide(m, {PointOnGraph::on_edge(0, Rat(1))}), validation_error);
  CHECK_THROWS_AS(subdivide(m, {PointOnGraph::at_vertex(0)}), validation_error);
  CHECK_THROWS_AS(subdivide(m, {PointOnGraph::on_edge(0, make_rat(1, 2)), PointOnGraph::on_edge(0, make_rat(1, 2))}),
                  validation_error);
}

TEST_CASE("subdivide then measure: mu preserved for random rational inputs") {
  auto g = complete(4);
  std::vector<Rat> lens;
  for (int e = 0; e < g.edge_count(); ++e) lens.push_back(make_rat(2 * e + 1, e + 2));
  MetricGraph m(g, lens);
  std::vector<PointOnGraph> pts;
  for (int e = 0; e < g.edge_count(); ++e) {
    pts.push_back(PointOnGraph::on_edge(e, m.length(e) * make_rat(1, 3)));
    pts.push_back(PointOnGraph::on_edge(e, m.length(e) * make_rat(7, 11)));
  }
  auto sub = subdivide(m, pts);
  CHECK(sub.graph.mu() == m.mu());
  CHECK(sub.graph.model().vertex_count() == 4 + 12);
}

TEST_CASE("essential vertices") {
  auto path = unit_metric(make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
  auto ess = essential_vertices(path);
  REQUIRE(ess.size() == 2);
  CHECK(path.model().name(ess[0]) == "a");
  CHECK(path.model().name(ess[1]) == "c");

  CHECK(essential_vertices(unit_metric(cycle(4))).empty());
  CHECK(essential_vertices(unit_metric(complete(4))).size() == 4);
}

TEST_CASE("geodesic l_min: unit K4") {
  auto m = unit_metric(complete(4));
  auto r = geodesic_l_min(m);
  REQUIRE(r);
  CHECK(*r == Rat(1));
}

TEST_CASE("geodesic l_min: two-edge path with lengths 1 and 3") {
  auto g = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  MetricGraph m(g, {Rat(1), Rat(3)});
  auto r = geodesic_l_min(m);
  REQUIRE(r);
  CHECK(*r == Rat(4)); // b has valence 2, so the only pair is (a, c)
}

TEST_CASE("geodesic l_min: circle has no essential vertex") {
  CHECK_FALSE(geodesic_l_min(unit_metric(cycle(5))).has_value());
}

TEST_CASE("geodesic l_min: tadpole counts the cycle through the junction") {
  // triangle abc with a tail c-d of length 5; junction c has valence 3
  auto g = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}});
  MetricGraph m(g, [&] {
    std::vector<Rat> l(g.edge_count(), Rat(1));
    l[*g.edge_index(*g.index_of("c"), *g.index_of("d"))] = Rat(5);
    return l;
  }());
  auto r = geodesic_l_min(m);
  REQUIRE(r);
  CHECK(*r == Rat(3)); // the triangle through c beats the length-5 tail
}

TEST_CASE("rescale scales lengths, mu and min edge length") {
  auto m = unit_metric(make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}));
  auto r = rescale(m, Rat(2));
  CHECK(r.mu() == Rat(6));
  for (int e = 0; e < 3; ++e) CHECK(r.length(e) == Rat(2));
  CHECK(rescale(m, Rat(1)) == m);

  MetricGraph mixed(make_graph({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}), {make_rat(1, 2), Rat(3)});
  auto half = rescale(mixed, make_rat(1, 2));
  CHECK(half.length(0) == make_rat(1, 4));
  CHECK(half.length(1) == make_rat(3, 2));
  CHECK(half.min_edge_length() == make_rat(1, 4));

  CHECK_THROWS_AS(rescale(m, Rat(0)), validation_error);
  CHECK_THROWS_AS(rescale(m, Rat(-1)), validation_error);
}

TEST_CASE("rescale composition is the identity") {
  MetricGraph m(complete(4), [] {
    std::vector<Rat> l;
    for (int e = 0; e < 6; ++e) l.push_back(make_rat(e + 1, 3));
    return l;
  }());
  for (auto beta : {make_rat(2), make_rat(5, 7), make_rat(1, 9)}) {
    auto back = rescale(rescale(m, beta), Rat(1) / beta);
    CHECK(back == m);
  }
}

TEST_CASE("geodesic l_min is invariant under degree-2 subdivision") {
  auto m = unit_metric(complete(4));
  auto before = geodesic_l_min(m);
  std::vector<PointOnGraph> pts;
  for (int e = 0; e < m.model().edge_count(); ++e) pts.push_back(PointOnGraph::on_edge(e, make_rat(1, 3)));
  auto sub = subdivide(m, pts);
  auto after = geodesic_l_min(sub.graph);
  REQUIRE(before);
  REQUIRE(after);
  CHECK(*before == *after);
  CHECK(essential_vertices(sub.graph).size() == essential_vertices(m).size());
}

TEST_CASE("rational parser grammar") {
  CHECK(parse_rat("3/2") == make_rat(3, 2));
  CHECK(parse_rat("-7/3") == make_rat(-7, 3));
  CHECK(parse_rat("42") == Rat(42));
  CHECK_THROWS_AS(parse_rat("nan"), validation_error);
  CHECK_THROWS_AS(parse_rat("1.5"), validation_error);
  CHECK_THROWS_AS(parse_rat("1/0"), validation_error);
  CHECK_THROWS_AS(parse_rat(""), validation_error);
  CHECK_THROWS_AS(parse_rat("2/"), validation_error);
  CHECK(format_rat(make_rat(6, 4)) == "3/2");
  CHECK(format_rat(Rat(5)) == "5");
  CHECK(rat_floor(make_rat(7, 2)) == 3);
  CHECK(rat_floor(make_rat(-7, 2)) == -4);
  CHECK(rat_floor(Rat(4)) == 4);
}
