#include "a11yc/clustering.hpp"

#include <map>

namespace a11yc {

std::vector<std::vector<std::size_t>> cluster_by_distance(std::span<const CenterPoint> points,
                                                          double delta) {
  const std::size_t n = points.size();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(points[i], points[j]) < delta) uf.unite(i, j);
    }
  }

  std::vector<std::vector<std::size_t>> clusters;
  std::map<std::size_t, std::size_t> slot;  // root -> cluster index
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = slot.try_emplace(uf.find(i), clusters.size());
    if (inserted) clusters.emplace_back();
    clusters[it->second].push_back(i);
  }
  return clusters;
}

}  // namespace a11yc
