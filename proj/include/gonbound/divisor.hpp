#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <vector>

#include "gonbound/errors.hpp"
#include "gonbound/graph.hpp"

namespace gonbound {

/// Integer-valued, finitely supported function on the model vertices.
/// Coefficients are indexed by vertex index of the graph it lives on.
struct Divisor {
  std::vector<long long> coeff;

  Divisor() = default;
  explicit Divisor(int n) : coeff(n, 0) {}

  long long degree() const { return std::accumulate(coeff.begin(), coeff.end(), 0LL); }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int v = 0; v < static_cast<int>(coeff.size()); ++v)
      if (coeff[v] != 0) s.push_back(v);
    return s;
  }

  bool effective() const {
    return std::all_of(coeff.begin(), coeff.end(), [](long long c) { return c >= 0; });
  }

  bool operator==(const Divisor& o) const { return coeff == o.coeff; }
};

/// Witness of linear equivalence: D_out = D_in - L_G * z, entries >= 0.
struct FiringRecord {
  std::vector<long long> z;
};

/// L_G * z for the discrete Laplacian acting on integer vectors.
inline std::vector<long long> apply_laplacian(const SimpleGraph& g, const std::vector<long long>& z) {
  std::vector<long long> out(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    out[v] += static_cast<long long>(g.degree(v)) * z[v];
    for (int u : g.neighbors(v)) out[v] -= z[u];
  }
  return out;
}

namespace detail {
inline void check_effective_off(const SimpleGraph& g, const Divisor& d, int q, const char* who) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (v != q && d.coeff[v] < 0)
      throw validation_error(std::string(who) + ": negative coefficient at '" + g.name(v) + "' away from the base point");
}
} // namespace detail

/// Dhar burning from q. Returns the maximal vertex set U avoiding q in which
/// every vertex has at least as many chips as edges towards the burnt region;
/// empty exactly when D is q-reduced.
inline std::vector<int> dhar_burn(const SimpleGraph& g, const Divisor& d, int q) {
  detail::check_effective_off(g, d, q, "dhar_burn");
  const int n = g.vertex_count();
  std::vector<char> burnt(n, 0);
  std::vector<long long> hot(n, 0); // edges from v into the burnt region
  std::deque<int> queue;
  burnt[q] = 1;
  queue.push_back(q);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(v)) {
      if (burnt[u]) continue;
      if (++hot[u] > d.coeff[u]) {
        burnt[u] = 1;
        queue.push_back(u);
      }
    }
  }
  std::vector<int> unburnt;
  for (int v = 0; v < n; ++v)
    if (!burnt[v]) unburnt.push_back(v);
  return unburnt;
}

/// The unique q-reduced divisor equivalent to d, with the aggregated firing
/// vector as witness: d - result = L_G * z, z >= 0. Deterministic.
inline std::pair<Divisor, FiringRecord> reduce(const SimpleGraph& g, const Divisor& d, int q) {
  const int n = g.vertex_count();
  if (static_cast<int>(d.coeff.size()) != n) throw validation_error("reduce: divisor size mismatch");
  Divisor cur = d;
  std::vector<long long> z(n, 0);

  long long scale = 1;
  for (long long c : d.coeff) scale += (c < 0 ? -c : c);
  const long long round_cap = 256LL * std::max(1, g.max_degree()) * std::max(1, n) * scale + 1024;

  // Bring the divisor effective off q by borrowing (reverse firing) at deficit
  // vertices; z may go negative here and is shifted back at the end.
  long long rounds = 0;
  for (;;) {
    int v = -1;
    for (int u = 0; u < n; ++u)
      if (u != q && cur.coeff[u] < 0) {
        v = u;
        break;
      }
    if (v < 0) break;
    long long deg = g.degree(v);
    if (deg == 0) throw validation_error("reduce: isolated vertex with negative coefficient");
    long long t = (-cur.coeff[v] + deg - 1) / deg;
    z[v] -= t;
    cur.coeff[v] += t * deg;
    for (int u : g.neighbors(v)) cur.coeff[u] -= t;
    if (++rounds > round_cap)
      throw iteration_limit_error("reduce: borrowing phase exceeded its round cap");
  }

  // Dhar loop: fire the whole unburnt set once per round.
  for (;;) {
    auto unburnt = dhar_burn(g, cur, q);
    if (unburnt.empty()) break;
    std::vector<char> in(n, 0);
    for (int v : unburnt) in[v] = 1;
    for (int v : unburnt) {
      z[v] += 1;
      for (int u : g.neighbors(v)) {
        if (!in[u]) {
          cur.coeff[v] -= 1;
          cur.coeff[u] += 1;
        }
      }
    }
    if (++rounds > round_cap)
      throw iteration_limit_error("reduce: Dhar phase exceeded its round cap");
  }

  long long zmin = *std::min_element(z.begin(), z.end());
  for (auto& zv : z) zv -= zmin; // L annihilates constants
  return {cur, FiringRecord{std::move(z)}};
}

/// True iff d is equivalent to an effective divisor: the q-reduced form is
/// effective off q by construction, so only the q coefficient can fail.
inline bool equivalent_to_effective(const SimpleGraph& g, const Divisor& d, int q = 0) {
  return reduce(g, d, q).first.coeff[q] >= 0;
}

/// r(d) >= 1: every v-reduced form keeps a chip on v.
inline bool rank_at_least_one(const SimpleGraph& g, const Divisor& d) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (reduce(g, d, v).first.coeff[v] < 1) return false;
  return true;
}

struct EnumerationCaps {
  int max_vertices = 12;
  long long max_candidates = 50'000'000;
};

namespace detail {

inline long long compositions_count(int degree, int parts) {
  // C(degree + parts - 1, parts - 1), saturating
  long long r = 1;
  for (int i = 1; i <= parts - 1; ++i) {
    r = r * (degree + i) / i;
    if (r > (1LL << 60)) return 1LL << 60;
  }
  return r;
}

/// Visit all coefficient vectors >= 0 of the given degree, in ascending
/// lexicographic order over the sorted vertex order (so the first accepted
/// candidate is the lexicographic minimum). Visitor returns true to stop.
template <typename F>
bool for_each_effective(int n, long long degree, F&& visit) {
  if (n == 0) return false;
  std::vector<long long> c(n, 0);
  auto rec = [&](auto&& self, int pos, long long left) -> bool {
    if (pos == n - 1) {
      c[pos] = left;
      return visit(c);
    }
    for (long long take = 0; take <= left; ++take) {
      c[pos] = take;
      if (self(self, pos + 1, left - take)) return true;
    }
    c[pos] = 0;
    return false;
  };
  return rec(rec, 0, degree);
}

} // namespace detail

/// Exact rank by enumeration over effective divisors E:
/// r(d) = min{deg E : E >= 0, |d - E| empty} - 1.
inline long long rank(const SimpleGraph& g, const Divisor& d, const EnumerationCaps& caps = {}) {
  const int n = g.vertex_count();
  if (n > caps.max_vertices)
    throw cap_exceeded_error("rank: instance too large (" + std::to_string(n) + " vertices, cap " +
                             std::to_string(caps.max_vertices) + ")");
  if (d.degree() < 0) return -1;
  if (!equivalent_to_effective(g, d)) return -1;
  for (long long r = 1;; ++r) {
    if (detail::compositions_count(static_cast<int>(r), n) > caps.max_candidates)
      throw cap_exceeded_error("rank: enumeration budget exceeded at degree " + std::to_string(r));
    bool failed = detail::for_each_effective(n, r, [&](const std::vector<long long>& e) {
      Divisor rem = d;
      for (int v = 0; v < n; ++v) rem.coeff[v] -= e[v];
      return !equivalent_to_effective(g, rem);
    });
    if (failed) return r - 1;
  }
}

struct GonalityResult {
  long long gonality = 0;
  Divisor witness;
};

/// Smallest degree of an effective divisor of rank >= 1, with the
/// lexicographically least q-reduced witness (q = first vertex in sorted
/// order). Enumeration visits one representative per divisor class.
inline GonalityResult divisorial_gonality(const SimpleGraph& g, const EnumerationCaps& caps = {}) {
  const int n = g.vertex_count();
  if (!g.is_connected()) throw validation_error("divisorial_gonality: graph must be connected");
  if (n > caps.max_vertices)
    throw cap_exceeded_error("divisorial_gonality: instance too large (" + std::to_string(n) + " vertices, cap " +
                             std::to_string(caps.max_vertices) + ")");
  const int q = 0;
  for (long long deg = 1; deg <= n; ++deg) {
    if (detail::compositions_count(static_cast<int>(deg), n) > caps.max_candidates)
      throw cap_exceeded_error("divisorial_gonality: enumeration budget exceeded at degree " + std::to_string(deg));
    GonalityResult found;
    bool hit = detail::for_each_effective(n, deg, [&](const std::vector<long long>& c) {
      Divisor cand;
      cand.coeff = c;
      if (!dhar_burn(g, cand, q).empty()) return false; // not q-reduced: another class member was or will be visited
      if (!rank_at_least_one(g, cand)) return false;
      found = {deg, cand};
      return true;
    });
    if (hit) return found;
  }
  // unreachable: the all-ones divisor has rank >= 1 on any connected graph
  throw iteration_limit_error("divisorial_gonality: search failed to terminate");
}

} // namespace gonbound
