#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "gonbound/graph.hpp"
#include "gonbound/menger.hpp"

using namespace gonbound;

namespace {

SimpleGraph cycle(int n) {
  std::vector<std::string> vs;
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) es.emplace_back(vs[i], vs[(i + 1) % n]);
  return make_graph(vs, es);
}

// exhaustive oracle: smallest separator by subset enumeration
int min_separator_bruteforce(const SimpleGraph& g, const std::vector<int>& X, const std::vector<int>& Y) {
  const int n = g.vertex_count();
  for (int size = 0; size <= n; ++size) {
    std::vector<int> sel;
    auto rec = [&](auto&& self, int start, int left) -> bool {
      if (left == 0) return is_separator(g, X, Y, sel);
      for (int v = start; v <= n - left; ++v) {
        sel.push_back(v);
        if (self(self, v + 1, left - 1)) return true;
        sel.pop_back();
      }
      return false;
    };
    if (rec(rec, 0, size)) return size;
  }
  return n;
}

void check_result(const SimpleGraph& g, const std::vector<int>& X, const std::vector<int>& Y,
                  const MengerResult& r) {
  CHECK(r.paths.size() == r.separator.size());
  CHECK(is_separator(g, X, Y, r.separator));
  // vertex-disjointness
  std::set<int> used;
  for (const auto& p : r.paths) {
    REQUIRE_FALSE(p.empty());
    CHECK(std::find(X.begin(), X.end(), p.front()) != X.end());
    CHECK(std::find(Y.begin(), Y.end(), p.back()) != Y.end());
    for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.adjacent(p[i], p[i + 1]));
    for (int v : p) CHECK(used.insert(v).second);
  }
}

} // namespace

TEST_CASE("menger: single path through a cut vertex") {
  auto g = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto r = menger(g, {g.require_index("a")}, {g.require_index("c")});
  REQUIRE(r.paths.size() == 1);
  REQUIRE(r.separator.size() == 1);
  check_result(g, {g.require_index("a")}, {g.require_index("c")}, r);
}

TEST_CASE("menger: singleton sides of C4 are cut by either endpoint") {
  // fully vertex-disjoint paths share nothing, so a singleton X forces a
  // single path, and X itself is already a minimum separator
  auto g = cycle(4);
  int v0 = g.require_index("v0"), v2 = g.require_index("v2");
  auto r = menger(g, {v0}, {v2});
  CHECK(r.paths.size() == 1);
  CHECK(static_cast<int>(r.separator.size()) == min_separator_bruteforce(g, {v0}, {v2}));
  check_result(g, {v0}, {v2}, r);
  // with both arcs available as entry/exit points the two arcs are realized
  int v1 = g.require_index("v1"), v3 = g.require_index("v3");
  auto r2 = menger(g, {v0, v1}, {v2, v3});
  CHECK(r2.paths.size() == 2);
  check_result(g, {v0, v1}, {v2, v3}, r2);
}

TEST_CASE("menger: overlapping sets yield zero-length paths") {
  auto g = cycle(4);
  int v = g.require_index("v1");
  auto r = menger(g, {v}, {v});
  REQUIRE(r.paths.size() == 1);
  CHECK(r.paths[0] == std::vector<int>{v});
  CHECK(r.separator == std::vector<int>{v});
}

TEST_CASE("menger: empty side rejected") {
  auto g = cycle(4);
  CHECK_THROWS_AS(menger(g, {}, {0}), validation_error);
}

TEST_CASE("menger agrees with the exhaustive separator oracle") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 3);
    GraphData d;
    for (int i = 0; i < n; ++i) d.vertices.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 100 < 50) d.edges.emplace_back(d.vertices[i], d.vertices[j]);
    SimpleGraph g(d);
    std::vector<int> X, Y;
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) X.push_back(v);
      if (rng() % 3 == 0) Y.push_back(v);
    }
    if (X.empty()) X.push_back(static_cast<int>(rng() % n));
    if (Y.empty()) Y.push_back(static_cast<int>(rng() % n));
    auto r = menger(g, X, Y);
    check_result(g, X, Y, r);
    CHECK(static_cast<int>(r.separator.size()) == min_separator_bruteforce(g, X, Y));
  }
}
