#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "gonbound/errors.hpp"
#include "gonbound/graph.hpp"

namespace gonbound {

struct MengerResult {
  std::vector<std::vector<int>> paths; // vertex-disjoint X-Y paths (vertex index sequences)
  std::vector<int> separator;          // minimum (X,Y)-separator, |separator| == |paths|
};

/// Maximum set of vertex-disjoint X-Y paths together with a minimum
/// separator, via unit-capacity max-flow on the vertex-split digraph.
/// A vertex lying in both X and Y counts as a zero-length path and must appear in any
/// separator. Source/sink arcs are uncapacitated so the minimum cut consists
/// of vertex arcs only.
inline MengerResult menger(const SimpleGraph& g, const std::vector<int>& X, const std::vector<int>& Y) {
  if (X.empty() || Y.empty()) throw validation_error("menger: X and Y must be non-empty");
  const int n = g.vertex_count();
  // node 2v = in(v), 2v+1 = out(v); S = 2n, T = 2n+1
  const int S = 2 * n, T = 2 * n + 1;
  const int BIG = n + 5;
  struct Arc {
    int to, cap, flow = 0;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(2 * n + 2);
  auto add = [&](int a, int b, int cap) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cap});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, 1);
  for (const auto& [u, v] : g.edges()) {
    add(2 * u + 1, 2 * v, 1);
    add(2 * v + 1, 2 * u, 1);
  }
  for (int x : X) add(S, 2 * x, BIG);
  for (int y : Y) add(2 * y + 1, T, BIG);

  auto bfs_augment = [&]() -> bool {
    std::vector<int> via(2 * n + 2, -1);
    std::deque<int> q{S};
    std::vector<char> seen(2 * n + 2, 0);
    seen[S] = 1;
    while (!q.empty() && !seen[T]) {
      int a = q.front();
      q.pop_front();
      for (int ai : out[a]) {
        const Arc& arc = arcs[ai];
        if (arc.flow < arc.cap && !seen[arc.to]) {
          seen[arc.to] = 1;
          via[arc.to] = ai;
          q.push_back(arc.to);
        }
      }
    }
    if (!seen[T]) return false;
    for (int node = T; node != S;) {
      int ai = via[node];
      arcs[ai].flow += 1;
      arcs[ai ^ 1].flow -= 1;
      node = arcs[ai ^ 1].to;
    }
    return true;
  };
  int flow = 0;
  while (bfs_augment()) ++flow;

  // residual reachability from S gives the minimum cut
  std::vector<char> reach(2 * n + 2, 0);
  std::deque<int> q{S};
  reach[S] = 1;
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (int ai : out[a]) {
      const Arc& arc = arcs[ai];
      if (arc.flow < arc.cap && !reach[arc.to]) {
        reach[arc.to] = 1;
        q.push_back(arc.to);
      }
    }
  }
  MengerResult res;
  for (int v = 0; v < n; ++v)
    if (reach[2 * v] && !reach[2 * v + 1]) res.separator.push_back(v);

  // decompose the flow into vertex sequences
  std::vector<char> vertex_arc_used(n, 0);
  auto arc_flow_to = [&](int from_node) -> int {
    for (int ai : out[from_node]) {
      Arc& arc = arcs[ai];
      if ((ai & 1) == 0 && arc.flow > 0) { // forward arc carrying flow
        arc.flow -= 1;
        return arc.to;
      }
    }
    return -1;
  };
  for (int x : X) {
    // consume one unit leaving S toward x at a time
    for (int ai : out[S]) {
      Arc& sa = arcs[ai];
      if ((ai & 1) != 0 || sa.flow <= 0 || sa.to != 2 * x) continue;
      while (sa.flow > 0) {
        sa.flow -= 1;
        std::vector<int> path;
        int node = 2 * x;
        while (node != T) {
          if (node % 2 == 0) path.push_back(node / 2);
          int nxt = arc_flow_to(node);
          if (nxt < 0) break;
          node = nxt;
        }
        res.paths.push_back(path);
      }
    }
  }
  std::sort(res.paths.begin(), res.paths.end());
  return res;
}

/// Test-oracle style check: S separates X from Y (no path between X\S and
/// Y\S avoiding S). Plain BFS.
inline bool is_separator(const SimpleGraph& g, const std::vector<int>& X, const std::vector<int>& Y,
                         const std::vector<int>& S) {
  std::vector<char> blocked(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (int s : S) blocked[s] = 1;
  std::deque<int> q;
  for (int x : X)
    if (!blocked[x] && !seen[x]) {
      seen[x] = 1;
      q.push_back(x);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : g.neighbors(v))
      if (!blocked[u] && !seen[u]) {
        seen[u] = 1;
        q.push_back(u);
      }
  }
  for (int y : Y)
    if (!blocked[y] && seen[y]) return false;
  return true;
}

} // namespace gonbound
