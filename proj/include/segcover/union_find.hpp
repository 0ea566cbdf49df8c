#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace segcover {

// Disjoint-set forest with union by rank and full path compression.
class UnionFind {
 public:
  explicit UnionFind(std::size_t size);

  std::uint32_t find(std::uint32_t x);
  // Returns true if x and y were in different sets.
  bool unite(std::uint32_t x, std::uint32_t y);

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t component_count() const noexcept { return components_; }
  bool is_root(std::uint32_t x) const noexcept { return parent_[x] == x; }

  // Number of parent links from x to its root, without compressing.
  std::size_t path_length(std::uint32_t x) const noexcept;

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t components_;
};

}  // namespace segcover
