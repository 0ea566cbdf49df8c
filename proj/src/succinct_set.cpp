#include "segcover/succinct_set.hpp"

#include <string>

#include "segcover/error.hpp"

namespace segcover {
namespace {

std::size_t word_count(std::size_t capacity) {
  return (capacity + SuccinctSet::kWordBits - 1) / SuccinctSet::kWordBits;
}

}  // namespace

SuccinctSet::SuccinctSet(std::size_t capacity)
    : capacity_(capacity), words_(word_count(capacity), 0) {}

SuccinctSet SuccinctSet::full(std::size_t capacity) {
  SuccinctSet s(capacity);
  for (auto& w : s.words_) w = ~Word{0};
  if (const std::size_t tail = capacity % kWordBits; tail != 0) {
    s.words_.back() = (Word{1} << tail) - 1;
  }
  return s;
}

SuccinctSet SuccinctSet::from_elements(std::size_t capacity,
                                       std::span<const ElementId> elements) {
  SuccinctSet s(capacity);
  for (const ElementId e : elements) s.set(e);
  return s;
}

void SuccinctSet::set(ElementId e) {
  if (e >= capacity_) {
    throw UsageError("element " + std::to_string(e) + " out of range for capacity " +
                     std::to_string(capacity_));
  }
  words_[e / kWordBits] |= Word{1} << (e % kWordBits);
}

void SuccinctSet::reset(ElementId e) {
  if (e >= capacity_) {
    throw UsageError("element " + std::to_string(e) + " out of range for capacity " +
                     std::to_string(capacity_));
  }
  words_[e / kWordBits] &= ~(Word{1} << (e % kWordBits));
}

void SuccinctSet::clear() noexcept {
  for (auto& w : words_) w = 0;
}

std::size_t SuccinctSet::count() const noexcept {
  std::size_t total = 0;
  for (const Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool SuccinctSet::empty() const noexcept {
  for (const Word w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void SuccinctSet::check_same_capacity(const SuccinctSet& other) const {
  if (capacity_ != other.capacity_) {
    throw UsageError("succinct set capacity mismatch: " + std::to_string(capacity_) +
                     " vs " + std::to_string(other.capacity_));
  }
}

std::size_t SuccinctSet::intersection_count(const SuccinctSet& other) const {
  check_same_capacity(other);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

bool SuccinctSet::intersects(const SuccinctSet& other) const {
  check_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool SuccinctSet::is_subset_of(const SuccinctSet& other) const {
  check_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

SuccinctSet& SuccinctSet::operator|=(const SuccinctSet& other) {
  check_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

SuccinctSet& SuccinctSet::operator&=(const SuccinctSet& other) {
  check_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

SuccinctSet& SuccinctSet::operator-=(const SuccinctSet& other) {
  check_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ElementId SuccinctSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<ElementId>(w * kWordBits +
                                    static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
  }
  return static_cast<ElementId>(capacity_);
}

std::vector<ElementId> SuccinctSet::to_vector() const {
  std::vector<ElementId> out;
  out.reserve(count());
  for_each([&](ElementId e) { out.push_back(e); });
  return out;
}

}  // namespace segcover
