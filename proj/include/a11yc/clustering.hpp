#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "a11yc/model.hpp"

namespace a11yc {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

// Connected components of the graph joining points closer than `delta`
// (strict). Each component lists point indices ascending; components are
// ordered by their smallest index.
std::vector<std::vector<std::size_t>> cluster_by_distance(std::span<const CenterPoint> points,
                                                          double delta);

}  // namespace a11yc
