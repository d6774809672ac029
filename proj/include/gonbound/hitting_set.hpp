#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gonbound/errors.hpp"

namespace gonbound {

struct HittingSetOptions {
  long long node_budget = 50'000'000;
  int max_members = 64; // member-mask memoization keys on a 64-bit word
};

/// Exact minimum hitting set by branch and bound. Elements are 0..universe-1,
/// members are the sets that must each be hit. Branching follows the member
/// with the fewest elements; the lower bound is a greedy packing of pairwise
/// disjoint unhit members, memoized per unhit-member mask.
class HittingSetSolver {
public:
  HittingSetSolver(int universe, std::vector<std::vector<int>> members, HittingSetOptions opts = {})
      : universe_(universe), members_(std::move(members)), opts_(opts) {
    if (static_cast<int>(members_.size()) > opts_.max_members)
      throw cap_exceeded_error("hitting set: too many members (" + std::to_string(members_.size()) + ")");
    for (auto& m : members_) {
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
      if (m.empty()) throw validation_error("hitting set: empty member cannot be hit");
    }
    element_members_.assign(universe_, {});
    for (int i = 0; i < static_cast<int>(members_.size()); ++i)
      for (int e : members_[i]) element_members_[e] |= (1ULL << i);
    disjoint_.assign(members_.size(), 0);
    for (std::size_t i = 0; i < members_.size(); ++i) {
      for (std::size_t j = 0; j < members_.size(); ++j) {
        if (i == j) continue;
        bool meet = false;
        for (int e : members_[i])
          if ((element_members_[e] >> j) & 1ULL) {
            meet = true;
            break;
          }
        if (!meet) disjoint_[i] |= (1ULL << j);
      }
    }
  }

  std::vector<int> solve() {
    if (members_.empty()) return {};
    // greedy warm start gives the initial upper bound
    best_ = greedy();
    std::vector<int> chosen;
    uint64_t all = (members_.size() == 64) ? ~0ULL : ((1ULL << members_.size()) - 1);
    nodes_ = 0;
    descend(all, chosen);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

private:
  std::vector<int> greedy() {
    uint64_t unhit = (members_.size() == 64) ? ~0ULL : ((1ULL << members_.size()) - 1);
    std::vector<int> out;
    while (unhit) {
      int best_e = -1;
      int best_cov = -1;
      for (int e = 0; e < universe_; ++e) {
        int cov = std::popcount(element_members_[e] & unhit);
        if (cov > best_cov) {
          best_cov = cov;
          best_e = e;
        }
      }
      out.push_back(best_e);
      unhit &= ~element_members_[best_e];
    }
    return out;
  }

  int packing_bound(uint64_t unhit) {
    auto it = pack_memo_.find(unhit);
    if (it != pack_memo_.end()) return it->second;
    int count = 0;
    uint64_t avail = unhit;
    while (avail) {
      int i = std::countr_zero(avail);
      ++count;
      avail &= disjoint_[i]; // keep only members disjoint from member i
    }
    pack_memo_.emplace(unhit, count);
    return count;
  }

  void descend(uint64_t unhit, std::vector<int>& chosen) {
    if (!unhit) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (++nodes_ > opts_.node_budget) throw cap_exceeded_error("hitting set: node budget exceeded");
    if (chosen.size() + packing_bound(unhit) >= best_.size()) return;
    // branch on the smallest unhit member
    int pick = -1;
    std::size_t pick_size = static_cast<std::size_t>(-1);
    for (int i = 0; i < static_cast<int>(members_.size()); ++i)
      if ((unhit >> i) & 1ULL && members_[i].size() < pick_size) {
        pick = i;
        pick_size = members_[i].size();
      }
    std::vector<int> elems = members_[pick];
    std::stable_sort(elems.begin(), elems.end(), [&](int a, int b) {
      return std::popcount(element_members_[a] & unhit) > std::popcount(element_members_[b] & unhit);
    });
    for (int e : elems) {
      chosen.push_back(e);
      descend(unhit & ~element_members_[e], chosen);
      chosen.pop_back();
    }
  }

  int universe_;
  std::vector<std::vector<int>> members_;
  HittingSetOptions opts_;
  std::vector<uint64_t> element_members_; // element -> member mask
  std::vector<uint64_t> disjoint_;        // member -> mask of disjoint members
  std::unordered_map<uint64_t, int> pack_memo_;
  std::vector<int> best_;
  long long nodes_ = 0;
};

inline std::vector<int> min_hitting_set(int universe, const std::vector<std::vector<int>>& members,
                                        HittingSetOptions opts = {}) {
  return HittingSetSolver(universe, members, opts).solve();
}

} // namespace gonbound
