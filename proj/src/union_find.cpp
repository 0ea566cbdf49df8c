#include "segcover/union_find.hpp"

#include <numeric>
#include <utility>

namespace segcover {

UnionFind::UnionFind(std::size_t size)
    : parent_(size), rank_(size, 0), components_(size) {
  std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
}

std::uint32_t UnionFind::find(std::uint32_t x) {
  std::uint32_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) x = std::exchange(parent_[x], root);
  return root;
}

bool UnionFind::unite(std::uint32_t x, std::uint32_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  --components_;
  return true;
}

std::size_t UnionFind::path_length(std::uint32_t x) const noexcept {
  std::size_t links = 0;
  while (parent_[x] != x) {
    x = parent_[x];
    ++links;
  }
  return links;
}

}  // namespace segcover
