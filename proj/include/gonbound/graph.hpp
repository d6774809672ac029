#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gonbound/errors.hpp"

namespace gonbound {

// Raw, not-yet-validated graph description (what the JSON parser produces).
struct GraphData {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct ValidationIssue {
  std::string clause; // e.g. "loop", "parallel_edge", "disconnected"
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string first() const { return issues.empty() ? "" : issues.front().clause + ": " + issues.front().detail; }
};

/// Finite simple graph over opaque string vertex ids. Vertices are kept
/// sorted, so every index-based iteration in the library is reproducible.
/// Loops and parallel edges are rejected at construction; connectivity is
/// recorded as a flag (induced subgraphs and giant-component workflows need
/// disconnected instances).
class SimpleGraph {
public:
  SimpleGraph() = default;

  explicit SimpleGraph(const GraphData& data) {
    ValidationReport rep = validate_structure(data);
    if (!rep.ok()) throw validation_error(rep.first());
    init(data);
  }

  // Full report including the connectivity clause.
  static ValidationReport validate(const GraphData& data) {
    ValidationReport rep = validate_structure(data);
    if (rep.ok()) {
      SimpleGraph g;
      g.init(data);
      if (!g.is_connected() && g.vertex_count() > 0)
        rep.issues.push_back({"disconnected", "graph is not connected"});
    }
    return rep;
  }

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool is_connected() const { return connected_; }

  std::optional<int> index_of(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<int>(it - names_.begin());
  }

  int require_index(const std::string& name) const {
    auto idx = index_of(name);
    if (!idx) throw validation_error("unknown vertex: '" + name + "'");
    return *idx;
  }

  bool adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  int max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max<int>(d, static_cast<int>(a.size()));
    return d;
  }

  /// Edge set as sorted index pairs; position in this vector is the edge index.
  std::optional<int> edge_index(int u, int v) const {
    auto p = std::minmax(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(p.first, p.second));
    if (it == edges_.end() || *it != std::make_pair(p.first, p.second)) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
  }

  std::vector<int> component_of(int start) const {
    std::vector<char> seen(vertex_count(), 0);
    std::vector<int> stack{start}, out;
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.push_back(v);
      for (int u : adj_[v])
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::vector<int>> components() const {
    std::vector<char> seen(vertex_count(), 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < vertex_count(); ++s) {
      if (seen[s]) continue;
      auto comp = component_of(s);
      for (int v : comp) seen[v] = 1;
      comps.push_back(std::move(comp));
    }
    return comps;
  }

  /// Subgraph induced by `keep` (indices into this graph). Vertex names carry over.
  SimpleGraph induced(const std::vector<int>& keep) const {
    std::vector<char> in(vertex_count(), 0);
    for (int v : keep) in[v] = 1;
    GraphData data;
    for (int v : keep) data.vertices.push_back(names_[v]);
    for (const auto& [u, v] : edges_)
      if (in[u] && in[v]) data.edges.emplace_back(names_[u], names_[v]);
    return SimpleGraph(data);
  }

  /// Connected subgraph containing the most vertices (ties: the one whose
  /// smallest vertex name sorts first, which component order already gives).
  SimpleGraph largest_component() const {
    auto comps = components();
    const std::vector<int>* best = nullptr;
    for (const auto& c : comps)
      if (!best || c.size() > best->size()) best = &c;
    if (!best) return SimpleGraph();
    return induced(*best);
  }

private:
  static ValidationReport validate_structure(const GraphData& data) {
    ValidationReport rep;
    std::set<std::string> names;
    for (const auto& v : data.vertices) {
      if (!names.insert(v).second)
        rep.issues.push_back({"duplicate_vertex", "vertex '" + v + "' listed twice"});
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [u, v] : data.edges) {
      if (u == v) {
        rep.issues.push_back({"loop", "edge {" + u + "," + v + "} is a loop"});
        continue;
      }
      if (!names.count(u) || !names.count(v)) {
        rep.issues.push_back({"unknown_vertex", "edge {" + u + "," + v + "} uses an unlisted vertex"});
        continue;
      }
      auto key = std::minmax(u, v);
      if (!seen.insert({key.first, key.second}).second)
        rep.issues.push_back({"parallel_edge", "edge {" + u + "," + v + "} repeated"});
    }
    return rep;
  }

  void init(const GraphData& data) {
    names_ = data.vertices;
    std::sort(names_.begin(), names_.end());
    adj_.assign(names_.size(), {});
    for (const auto& [su, sv] : data.edges) {
      int u = static_cast<int>(std::lower_bound(names_.begin(), names_.end(), su) - names_.begin());
      int v = static_cast<int>(std::lower_bound(names_.begin(), names_.end(), sv) - names_.begin());
      auto p = std::minmax(u, v);
      edges_.emplace_back(p.first, p.second);
    }
    std::sort(edges_.begin(), edges_.end());
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    connected_ = names_.empty() || component_of(0).size() == names_.size();
  }

  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  bool connected_ = true;
};

inline bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
  return a.vertex_names() == b.vertex_names() && a.edges() == b.edges();
}

/// Convenience builder used all over the tests.
inline SimpleGraph make_graph(std::vector<std::string> vertices,
                              std::vector<std::pair<std::string, std::string>> edges) {
  GraphData d;
  d.vertices = std::move(vertices);
  d.edges = std::move(edges);
  return SimpleGraph(d);
}

} // namespace gonbound
