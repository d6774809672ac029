#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "gonbound/graph.hpp"

namespace gonbound {

/// Tree of bags. `tree` is a SimpleGraph whose vertices are node ids; `bags`
/// is indexed by tree-node index and holds sorted vertex indices of the host
/// graph. The same shape serves both decomposition flavors; validity rules
/// and the width convention differ.
struct BagTree {
  SimpleGraph tree;
  std::vector<std::vector<int>> bags;
};

using TreeDecomposition = BagTree;
using WeakTreeDecomposition = BagTree;

/// Width conventions: tree-decompositions use max bag size - 1, weak ones use
/// the plain max bag size.
inline int td_width(const TreeDecomposition& t) {
  int w = 0;
  for (const auto& b : t.bags) w = std::max<int>(w, static_cast<int>(b.size()));
  return w - 1;
}

inline int wtd_width(const WeakTreeDecomposition& t) {
  int w = 0;
  for (const auto& b : t.bags) w = std::max<int>(w, static_cast<int>(b.size()));
  return w;
}

namespace detail {

inline bool bag_contains(const std::vector<int>& bag, int v) {
  return std::binary_search(bag.begin(), bag.end(), v);
}

inline void check_tree_shape(const BagTree& t, ValidationReport& rep) {
  const auto& tr = t.tree;
  if (tr.vertex_count() == 0) {
    rep.issues.push_back({"empty_tree", "decomposition has no nodes"});
    return;
  }
  if (static_cast<int>(t.bags.size()) != tr.vertex_count())
    rep.issues.push_back({"bag_count", "bag list does not match tree nodes"});
  if (!tr.is_connected() || tr.edge_count() != tr.vertex_count() - 1)
    rep.issues.push_back({"not_a_tree", "decomposition graph is not a tree"});
}

inline void check_cover_and_subtrees(const SimpleGraph& g, const BagTree& t, ValidationReport& rep) {
  // every vertex in some bag, and its node set induces a connected subtree
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> nodes;
    for (int i = 0; i < static_cast<int>(t.bags.size()); ++i)
      if (bag_contains(t.bags[i], v)) nodes.push_back(i);
    if (nodes.empty()) {
      rep.issues.push_back({"vertex_uncovered", "vertex '" + g.name(v) + "' is in no bag"});
      continue;
    }
    // BFS inside the node set
    std::set<int> in(nodes.begin(), nodes.end());
    std::deque<int> q{nodes[0]};
    std::set<int> seen{nodes[0]};
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j : t.tree.neighbors(i))
        if (in.count(j) && !seen.count(j)) {
          seen.insert(j);
          q.push_back(j);
        }
    }
    if (seen.size() != in.size())
      rep.issues.push_back({"subtree_disconnected", "nodes holding vertex '" + g.name(v) + "' are not connected"});
  }
}

} // namespace detail

inline ValidationReport validate_td(const SimpleGraph& g, const TreeDecomposition& t) {
  ValidationReport rep;
  detail::check_tree_shape(t, rep);
  if (!rep.ok()) return rep;
  detail::check_cover_and_subtrees(g, t, rep);
  for (const auto& [u, v] : g.edges()) {
    bool inside = false;
    for (const auto& bag : t.bags)
      if (detail::bag_contains(bag, u) && detail::bag_contains(bag, v)) {
        inside = true;
        break;
      }
    if (!inside)
      rep.issues.push_back({"edge_uncovered", "edge {" + g.name(u) + "," + g.name(v) + "} lies inside no bag"});
  }
  return rep;
}

/// Weak rule: each edge needs a single bag containing it, or a tree edge
/// {i,j} with the edge inside the union of the two bags. (The single-bag
/// case only adds something for one-node trees; with any tree edge present
/// it is subsumed by the union form.)
inline ValidationReport validate_wtd(const SimpleGraph& g, const WeakTreeDecomposition& t) {
  ValidationReport rep;
  detail::check_tree_shape(t, rep);
  if (!rep.ok()) return rep;
  detail::check_cover_and_subtrees(g, t, rep);
  for (const auto& [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& bag : t.bags)
      if (detail::bag_contains(bag, u) && detail::bag_contains(bag, v)) {
        covered = true;
        break;
      }
    if (!covered)
      for (const auto& [i, j] : t.tree.edges()) {
        auto in_union = [&](int x) { return detail::bag_contains(t.bags[i], x) || detail::bag_contains(t.bags[j], x); };
        if (in_union(u) && in_union(v)) {
          covered = true;
          break;
        }
      }
    if (!covered)
      rep.issues.push_back(
          {"edge_uncovered", "edge {" + g.name(u) + "," + g.name(v) + "} lies in no adjacent bag union"});
  }
  return rep;
}

/// Restriction of a weak tree-decomposition to the induced subgraph G[U]:
/// same tree, bags intersected with U. Returns the induced graph plus the
/// decomposition re-indexed to it.
inline std::pair<SimpleGraph, WeakTreeDecomposition> restrict_wtd(const SimpleGraph& g,
                                                                  const WeakTreeDecomposition& t,
                                                                  const std::vector<int>& keep) {
  SimpleGraph sub = g.induced(keep);
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : keep) in[v] = 1;
  WeakTreeDecomposition out;
  out.tree = t.tree;
  out.bags.resize(t.bags.size());
  for (std::size_t i = 0; i < t.bags.size(); ++i) {
    for (int v : t.bags[i])
      if (in[v]) out.bags[i].push_back(sub.require_index(g.name(v)));
    std::sort(out.bags[i].begin(), out.bags[i].end());
  }
  return {std::move(sub), std::move(out)};
}

/// Add vertex v (present in bag t_node) to every bag on the tree path from
/// from_node to t_node. Keeps validity: the new node set of v is its old
/// subtree plus a path ending inside it.
inline WeakTreeDecomposition augment_wtd_path(const WeakTreeDecomposition& t, int from_node, int t_node, int v) {
  if (!detail::bag_contains(t.bags[t_node], v))
    throw validation_error("augment: vertex is not in the target bag");
  // BFS path from from_node to t_node
  std::vector<int> parent(t.tree.vertex_count(), -1);
  std::deque<int> q{from_node};
  std::vector<char> seen(t.tree.vertex_count(), 0);
  seen[from_node] = 1;
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    if (i == t_node) break;
    for (int j : t.tree.neighbors(i))
      if (!seen[j]) {
        seen[j] = 1;
        parent[j] = i;
        q.push_back(j);
      }
  }
  WeakTreeDecomposition out = t;
  for (int i = t_node; i != -1; i = parent[i]) {
    auto& bag = out.bags[i];
    if (!detail::bag_contains(bag, v)) {
      bag.push_back(v);
      std::sort(bag.begin(), bag.end());
    }
    if (i == from_node) break;
  }
  return out;
}

/// Doubling construction: root at the lowest node id, Y_root = S_root and
/// Y_i = S_i union S_parent(i). Yields a tree-decomposition of width at most
/// 2*wtd_width - 1.
inline TreeDecomposition td_from_wtd(const SimpleGraph& g, const WeakTreeDecomposition& t) {
  (void)g;
  const int root = 0;
  std::vector<int> parent(t.tree.vertex_count(), -1);
  std::deque<int> q{root};
  std::vector<char> seen(t.tree.vertex_count(), 0);
  seen[root] = 1;
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    for (int j : t.tree.neighbors(i))
      if (!seen[j]) {
        seen[j] = 1;
        parent[j] = i;
        q.push_back(j);
      }
  }
  TreeDecomposition out;
  out.tree = t.tree;
  out.bags.resize(t.bags.size());
  for (int i = 0; i < static_cast<int>(t.bags.size()); ++i) {
    std::vector<int> bag = t.bags[i];
    if (parent[i] >= 0)
      for (int v : t.bags[parent[i]]) bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    out.bags[i] = std::move(bag);
  }
  return out;
}

/// The trivial direction: a tree-decomposition reread under the weak rules.
inline WeakTreeDecomposition wtd_from_td(const SimpleGraph& g, const TreeDecomposition& t) {
  auto rep = validate_td(g, t);
  if (!rep.ok()) throw validation_error("wtd_from_td: input does not validate: " + rep.first());
  return t;
}

} // namespace gonbound
