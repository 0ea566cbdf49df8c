#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace segcover {

using ElementId = std::uint32_t;
using SubsetId = std::uint32_t;

// Fixed-capacity membership set over {0, ..., capacity-1}, one bit per
// element packed into 64-bit words. Bits at positions >= capacity are always
// zero, so word-wise counts and comparisons need no masking.
class SuccinctSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  SuccinctSet() = default;
  explicit SuccinctSet(std::size_t capacity);

  static SuccinctSet full(std::size_t capacity);
  static SuccinctSet from_elements(std::size_t capacity,
                                   std::span<const ElementId> elements);

  std::size_t capacity() const noexcept { return capacity_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(ElementId e) const noexcept {
    return (words_[e / kWordBits] >> (e % kWordBits)) & 1U;
  }
  void set(ElementId e);
  void reset(ElementId e);
  void clear() noexcept;

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool all() const noexcept { return count() == capacity_; }

  // |this ∩ other| without materializing the intersection.
  std::size_t intersection_count(const SuccinctSet& other) const;
  bool intersects(const SuccinctSet& other) const;
  bool is_subset_of(const SuccinctSet& other) const;

  SuccinctSet& operator|=(const SuccinctSet& other);
  SuccinctSet& operator&=(const SuccinctSet& other);
  // In-place difference: this \ other.
  SuccinctSet& operator-=(const SuccinctSet& other);

  friend SuccinctSet operator|(SuccinctSet a, const SuccinctSet& b) { return a |= b; }
  friend SuccinctSet operator&(SuccinctSet a, const SuccinctSet& b) { return a &= b; }
  friend SuccinctSet operator-(SuccinctSet a, const SuccinctSet& b) { return a -= b; }

  bool operator==(const SuccinctSet& other) const = default;

  // Smallest member, or capacity() when empty.
  ElementId first() const noexcept;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int tz = std::countr_zero(bits);
        fn(static_cast<ElementId>(w * kWordBits + static_cast<std::size_t>(tz)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<ElementId> to_vector() const;

 private:
  void check_same_capacity(const SuccinctSet& other) const;

  std::size_t capacity_ = 0;
  std::vector<Word> words_;
};

inline std::size_t set_intersection_count(const SuccinctSet& a, const SuccinctSet& b) {
  return a.intersection_count(b);
}
inline void set_difference_inplace(SuccinctSet& target, const SuccinctSet& remove) {
  target -= remove;
}
inline bool is_subset(const SuccinctSet& a, const SuccinctSet& b) {
  return a.is_subset_of(b);
}

}  // namespace segcover
