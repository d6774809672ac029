#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gonbound/decomposition.hpp"
#include "gonbound/errors.hpp"
#include "gonbound/graph.hpp"
#include "gonbound/hitting_set.hpp"

namespace gonbound {

/// Family of vertex subsets carrying the bramble flavor: a strong bramble
/// needs pairwise intersections, a plain bramble only pairwise-connected
/// unions (touching).
struct VertexFamily {
  std::vector<std::vector<int>> members;
  bool strong = true;
};

inline ValidationReport validate_family(const SimpleGraph& g, const VertexFamily& f) {
  ValidationReport rep;
  auto mask_of = [&](const std::vector<int>& m) {
    uint64_t s = 0;
    for (int v : m) s |= (1ULL << v);
    return s;
  };
  if (g.vertex_count() > 64) {
    rep.issues.push_back({"too_large", "family validation uses 64-bit vertex masks"});
    return rep;
  }
  std::vector<uint64_t> masks;
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    const auto& m = f.members[i];
    if (m.empty()) {
      rep.issues.push_back({"empty_member", "member " + std::to_string(i) + " is empty"});
      masks.push_back(0);
      continue;
    }
    // induced connectivity
    uint64_t s = mask_of(m);
    masks.push_back(s);
    uint64_t seen = 1ULL << m[0];
    uint64_t frontier = seen;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      for (int u : g.neighbors(v))
        if ((s >> u) & 1ULL && !((seen >> u) & 1ULL)) {
          seen |= 1ULL << u;
          frontier |= 1ULL << u;
        }
    }
    if (seen != s)
      rep.issues.push_back({"member_disconnected", "member " + std::to_string(i) + " does not induce a connected subgraph"});
  }
  auto touches = [&](uint64_t a, uint64_t b) {
    if (a & b) return true;
    uint64_t closure = a;
    while (a) {
      int v = std::countr_zero(a);
      a &= a - 1;
      for (int u : g.neighbors(v)) closure |= 1ULL << u;
    }
    return (closure & b) != 0;
  };
  for (std::size_t i = 0; i < f.members.size(); ++i)
    for (std::size_t j = i + 1; j < f.members.size(); ++j) {
      if (f.strong) {
        if ((masks[i] & masks[j]) == 0)
          rep.issues.push_back({"pair_disjoint", "members " + std::to_string(i) + " and " + std::to_string(j) +
                                                     " do not intersect"});
      } else if (!touches(masks[i], masks[j])) {
        rep.issues.push_back({"pair_union_disconnected", "members " + std::to_string(i) + " and " +
                                                             std::to_string(j) + " have a disconnected union"});
      }
    }
  return rep;
}

/// Minimum hitting set size of a family, via the shared exact solver.
inline int family_order(const SimpleGraph& g, const VertexFamily& f, HittingSetOptions opts = {}) {
  auto rep = validate_family(g, f);
  if (!rep.ok()) throw validation_error("family_order: " + rep.first());
  return static_cast<int>(min_hitting_set(g.vertex_count(), f.members, opts).size());
}

struct WidthCaps {
  int treewidth_max_vertices = 12;
  int weak_max_vertices = 7;
  int bramble_max_vertices = 7;
};

struct TreewidthResult {
  int width = 0;
  TreeDecomposition decomposition;
};

/// Exact treewidth by dynamic programming over elimination prefixes
/// (subset DP); the witness decomposition is rebuilt from the recovered
/// elimination order with fill-in.
inline TreewidthResult treewidth_exact(const SimpleGraph& g, const WidthCaps& caps = {}) {
  const int n = g.vertex_count();
  if (n > caps.treewidth_max_vertices)
    throw cap_exceeded_error("treewidth: instance too large (" + std::to_string(n) + " vertices, cap " +
                             std::to_string(caps.treewidth_max_vertices) + ")");
  if (n == 0) throw validation_error("treewidth: empty graph");

  std::vector<uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  // q(W, v): #vertices outside W u {v} reachable from v through W
  auto q_count = [&](uint32_t W, int v) {
    uint32_t seen = 1u << v;
    uint32_t frontier = seen;
    uint32_t hit = 0;
    while (frontier) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      uint32_t nb = adj[x] & ~seen;
      seen |= nb;
      hit |= nb & ~W;
      frontier |= nb & W;
    }
    return std::popcount(hit & ~(1u << v));
  };

  const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<int> f(full + 1, 0);
  std::vector<int8_t> choice(full + 1, -1);
  // iterate subsets in increasing popcount order via plain increasing value
  // (every subset's proper subsets are smaller integers)
  for (uint32_t S = 1; S <= full; ++S) {
    int best = 1 << 30;
    int8_t who = -1;
    for (uint32_t rest = S; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      uint32_t W = S & ~(1u << v);
      int val = std::max(f[W], q_count(W, v));
      if (val < best) {
        best = val;
        who = static_cast<int8_t>(v);
      }
    }
    f[S] = best;
    choice[S] = who;
  }

  // recover the elimination order, last-removed first
  std::vector<int> order(n);
  uint32_t S = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    int v = choice[S];
    order[pos] = v;
    S &= ~(1u << v);
  }

  // build the decomposition by simulated elimination with fill-in
  std::vector<std::vector<char>> am(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : g.edges()) am[u][v] = am[v][u] = 1;
  std::vector<char> gone(n, 0);
  std::vector<int> pos_of(n);
  for (int i = 0; i < n; ++i) pos_of[order[i]] = i;
  GraphData tree_data;
  std::vector<std::vector<int>> bags(n);
  for (int i = 0; i < n; ++i) tree_data.vertices.push_back("n" + std::to_string(i));
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> nb;
    for (int u = 0; u < n; ++u)
      if (!gone[u] && u != v && am[v][u]) nb.push_back(u);
    bags[i] = nb;
    bags[i].push_back(v);
    std::sort(bags[i].begin(), bags[i].end());
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) am[nb[a]][nb[b]] = am[nb[b]][nb[a]] = 1;
    gone[v] = 1;
    if (!nb.empty()) {
      int first = n;
      for (int u : nb) first = std::min(first, pos_of[u]);
      parent[i] = first;
    }
  }
  int last_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[i] >= 0)
      tree_data.edges.emplace_back("n" + std::to_string(i), "n" + std::to_string(parent[i]));
    else {
      if (last_root >= 0) tree_data.edges.emplace_back("n" + std::to_string(last_root), "n" + std::to_string(i));
      last_root = i;
    }
  }
  TreewidthResult res;
  res.width = f[full];
  res.decomposition.tree = SimpleGraph(tree_data);
  // tree vertex names sort as strings; remap bags to the tree's index order
  res.decomposition.bags.resize(n);
  for (int i = 0; i < n; ++i)
    res.decomposition.bags[res.decomposition.tree.require_index("n" + std::to_string(i))] = bags[i];
  return res;
}

namespace detail {

/// All free trees with `nodes` vertices, as edge lists, one per isomorphism
/// class. Grown by leaf attachment with brute-force canonical deduplication
/// (fine for the <= 8-node range the solvers use).
inline std::vector<std::vector<std::pair<int, int>>> free_trees(int nodes) {
  std::vector<std::vector<std::vector<std::pair<int, int>>>> by_size(nodes + 1);
  if (nodes >= 1) by_size[1] = {{}};
  for (int k = 2; k <= nodes; ++k) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::vector<std::pair<int, int>>> seen_canon;
    std::vector<int> perm(k);
    for (const auto& t : by_size[k - 1]) {
      for (int attach = 0; attach < k - 1; ++attach) {
        auto cand = t;
        cand.emplace_back(attach, k - 1);
        // canonical form: lexicographically least permuted edge list
        std::vector<std::pair<int, int>> best;
        for (int i = 0; i < k; ++i) perm[i] = i;
        do {
          std::vector<std::pair<int, int>> es;
          for (auto [a, b] : cand) es.push_back(std::minmax(perm[a], perm[b]));
          std::sort(es.begin(), es.end());
          if (best.empty() || es < best) best = es;
        } while (std::next_permutation(perm.begin(), perm.end()));
        bool dup = false;
        for (const auto& c : seen_canon)
          if (c == best) {
            dup = true;
            break;
          }
        if (!dup) {
          seen_canon.push_back(best);
          out.push_back(best);
        }
      }
    }
    by_size[k] = out;
  }
  std::vector<std::vector<std::pair<int, int>>> all;
  for (int k = 1; k <= nodes; ++k)
    for (const auto& t : by_size[k]) all.push_back(t);
  return all;
}

inline int tree_size(const std::vector<std::pair<int, int>>& edges) {
  int k = 1;
  for (auto [a, b] : edges) k = std::max({k, a + 1, b + 1});
  return k;
}

/// Backtracking feasibility check: can every graph vertex be given a subtree
/// of the node tree so that adjacent vertices get touching subtrees and no
/// node carries more than `w` subtrees? Returns the bag assignment on
/// success.
inline bool assign_subtrees(const SimpleGraph& g, const std::vector<std::pair<int, int>>& tree_edges, int k, int w,
                            std::vector<uint32_t>& assign_out) {
  const int n = g.vertex_count();
  std::vector<uint32_t> tadj(k, 0);
  for (auto [a, b] : tree_edges) {
    tadj[a] |= 1u << b;
    tadj[b] |= 1u << a;
  }
  // connected node subsets, small first (small bags are tried first)
  std::vector<uint32_t> subs;
  for (uint32_t s = 1; s < (1u << k); ++s) {
    uint32_t seen = s & (~s + 1);
    uint32_t frontier = seen;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      uint32_t nb = tadj[v] & s & ~seen;
      seen |= nb;
      frontier |= nb;
    }
    if (seen == s) subs.push_back(s);
  }
  std::stable_sort(subs.begin(), subs.end(),
                   [](uint32_t a, uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<uint32_t> closure(1u << k, 0);
  for (uint32_t s : subs) {
    uint32_t c = s;
    uint32_t it = s;
    while (it) {
      int v = std::countr_zero(it);
      it &= it - 1;
      c |= tadj[v];
    }
    closure[s] = c;
  }
  // vertex order: BFS from the highest-degree vertex, so constraints bind early
  std::vector<int> order;
  {
    std::vector<char> seen(n, 0);
    int start = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) > g.degree(start)) start = v;
    std::deque<int> q{start};
    seen[start] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      order.push_back(v);
      for (int u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          q.push_back(u);
        }
    }
    for (int v = 0; v < n; ++v)
      if (!seen[v]) order.push_back(v);
  }
  std::vector<uint32_t> assign(n, 0);
  std::vector<int> load(k, 0);
  auto rec = [&](auto&& self, int pos) -> bool {
    if (pos == n) return true;
    int v = order[pos];
    for (uint32_t s : subs) {
      bool ok = true;
      for (uint32_t it = s; it;) {
        int node = std::countr_zero(it);
        it &= it - 1;
        if (load[node] + 1 > w) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (int j = 0; j < pos && ok; ++j) {
        int u = order[j];
        if (g.adjacent(u, v) && !(closure[assign[u]] & s)) ok = false;
      }
      if (!ok) continue;
      assign[v] = s;
      for (uint32_t it = s; it;) {
        int node = std::countr_zero(it);
        it &= it - 1;
        ++load[node];
      }
      if (self(self, pos + 1)) return true;
      for (uint32_t it = s; it;) {
        int node = std::countr_zero(it);
        it &= it - 1;
        --load[node];
      }
    }
    return false;
  };
  if (!rec(rec, 0)) return false;
  assign_out = assign;
  return true;
}

} // namespace detail

struct WeakTreewidthResult {
  int width = 0;
  WeakTreeDecomposition decomposition;
};

/// Exact weak treewidth: exhaustive search over free-tree shapes with up to
/// max_tree_nodes nodes (default |V|), trying widths upward from the
/// sandwich lower bound ceil((tw+1)/2). The returned decomposition always
/// validates at the reported width.
inline WeakTreewidthResult weak_treewidth_exact(const SimpleGraph& g, const WidthCaps& caps = {},
                                                int max_tree_nodes = -1) {
  const int n = g.vertex_count();
  if (n > caps.weak_max_vertices)
    throw cap_exceeded_error("weak treewidth: instance too large (" + std::to_string(n) + " vertices, cap " +
                             std::to_string(caps.weak_max_vertices) + ")");
  if (n == 0) throw validation_error("weak treewidth: empty graph");
  if (max_tree_nodes < 1) max_tree_nodes = n;

  WidthCaps tw_caps = caps;
  tw_caps.treewidth_max_vertices = std::max(caps.treewidth_max_vertices, n);
  const int tw = treewidth_exact(g, tw_caps).width;
  const int lower = (tw + 2) / 2; // ceil((tw+1)/2)
  const int upper = tw + 1;

  auto trees = detail::free_trees(max_tree_nodes);
  for (int w = lower; w <= upper; ++w) {
    for (const auto& te : trees) {
      const int k = detail::tree_size(te);
      std::vector<uint32_t> assign;
      if (!detail::assign_subtrees(g, te, k, w, assign)) continue;
      GraphData td;
      for (int i = 0; i < k; ++i) td.vertices.push_back("n" + std::to_string(i));
      for (auto [a, b] : te) td.edges.emplace_back("n" + std::to_string(a), "n" + std::to_string(b));
      WeakTreewidthResult res;
      res.decomposition.tree = SimpleGraph(td);
      res.decomposition.bags.assign(k, {});
      for (int v = 0; v < n; ++v)
        for (int node = 0; node < k; ++node)
          if ((assign[v] >> node) & 1u)
            res.decomposition.bags[res.decomposition.tree.require_index("n" + std::to_string(node))].push_back(v);
      for (auto& bag : res.decomposition.bags) std::sort(bag.begin(), bag.end());
      res.width = wtd_width(res.decomposition);
      return res;
    }
  }
  throw iteration_limit_error("weak treewidth: search space exhausted below the guaranteed upper bound");
}

struct BrambleSearchResult {
  int order = 0;
  VertexFamily witness;
};

namespace detail {

inline std::vector<uint64_t> components_avoiding(const std::vector<uint64_t>& adj, int n, uint64_t S) {
  uint64_t rest = ((n == 64) ? ~0ULL : ((1ULL << n) - 1)) & ~S;
  std::vector<uint64_t> comps;
  while (rest) {
    uint64_t seed = rest & (~rest + 1);
    uint64_t seen = seed;
    uint64_t frontier = seed;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      uint64_t nb = adj[v] & rest & ~seen;
      seen |= nb;
      frontier |= nb;
    }
    comps.push_back(seen);
    rest &= ~seen;
  }
  return comps;
}

/// Shared search for sbn (pairwise intersection) and bn (pairwise touching):
/// order >= k iff for every (k-1)-subset S one can pick a component of G - S
/// such that the picks are pairwise compatible. Components are the only
/// candidates needed: any member avoiding S extends to its component, which
/// preserves compatibility.
inline BrambleSearchResult bramble_order_search(const SimpleGraph& g, bool strong, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw cap_exceeded_error("bramble search: instance too large (" + std::to_string(n) + " vertices, cap " +
                             std::to_string(cap) + ")");
  if (n == 0) throw validation_error("bramble search: empty graph");
  std::vector<uint64_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1ULL << v;
    adj[v] |= 1ULL << u;
  }
  auto closure = [&](uint64_t s) {
    uint64_t c = s;
    while (s) {
      int v = std::countr_zero(s);
      s &= s - 1;
      c |= adj[v];
    }
    return c;
  };
  auto compatible = [&](uint64_t a, uint64_t b) {
    if (a & b) return true;
    return !strong && (closure(a) & b) != 0;
  };

  auto feasible = [&](int k, std::vector<uint64_t>& picked) -> bool {
    // slots: all (k-1)-subsets of vertices
    std::vector<std::vector<uint64_t>> domains;
    std::vector<int> idx(k - 1);
    for (int i = 0; i < k - 1; ++i) idx[i] = i;
    auto emit = [&](uint64_t S) {
      auto comps = components_avoiding(adj, n, S);
      domains.push_back(std::move(comps));
    };
    if (k == 1) {
      picked = {((n == 64) ? ~0ULL : ((1ULL << n) - 1))};
      return true;
    }
    // enumerate subsets of size k-1
    std::vector<int> sel;
    auto rec_sel = [&](auto&& self, int start, int left) -> void {
      if (left == 0) {
        uint64_t S = 0;
        for (int v : sel) S |= 1ULL << v;
        emit(S);
        return;
      }
      for (int v = start; v <= n - left; ++v) {
        sel.push_back(v);
        self(self, v + 1, left - 1);
        sel.pop_back();
      }
    };
    rec_sel(rec_sel, 0, k - 1);
    for (const auto& d : domains)
      if (d.empty()) return false;
    std::vector<int> order_ix(domains.size());
    for (std::size_t i = 0; i < domains.size(); ++i) order_ix[i] = static_cast<int>(i);
    std::stable_sort(order_ix.begin(), order_ix.end(),
                     [&](int a, int b) { return domains[a].size() < domains[b].size(); });
    std::vector<uint64_t> chosen;
    auto bt = [&](auto&& self, std::size_t i) -> bool {
      if (i == order_ix.size()) return true;
      for (uint64_t c : domains[order_ix[i]]) {
        bool ok = true;
        for (uint64_t d : chosen)
          if (!compatible(c, d)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        chosen.push_back(c);
        if (self(self, i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (!bt(bt, 0)) return false;
    picked = chosen;
    return true;
  };

  BrambleSearchResult res;
  std::vector<uint64_t> witness_masks;
  for (int k = 1; k <= n; ++k) {
    std::vector<uint64_t> picked;
    if (!feasible(k, picked)) break;
    res.order = k;
    witness_masks = picked;
  }
  std::sort(witness_masks.begin(), witness_masks.end());
  witness_masks.erase(std::unique(witness_masks.begin(), witness_masks.end()), witness_masks.end());
  res.witness.strong = strong;
  for (uint64_t m : witness_masks) {
    std::vector<int> member;
    while (m) {
      member.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    res.witness.members.push_back(std::move(member));
  }
  return res;
}

} // namespace detail

/// Maximum order of a strong bramble, with a witness family realizing it.
inline BrambleSearchResult strong_bramble_number_exact(const SimpleGraph& g, const WidthCaps& caps = {}) {
  return detail::bramble_order_search(g, /*strong=*/true, caps.bramble_max_vertices);
}

/// Maximum order of an ordinary bramble (the Seymour-Thomas dual of
/// treewidth: bn = tw + 1). Mainly an independent cross-check.
inline BrambleSearchResult bramble_number_exact(const SimpleGraph& g, const WidthCaps& caps = {}) {
  return detail::bramble_order_search(g, /*strong=*/false, caps.bramble_max_vertices);
}

} // namespace gonbound
