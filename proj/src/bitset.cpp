#include "hyperop/bitset.hpp"

#include <cassert>

namespace hyperop {

BitSet BitSet::full(std::size_t size) {
  BitSet b(size);
  for (auto& w : b.words_) w = ~Word{0};
  b.trim();
  return b;
}

BitSet BitSet::fromPattern(std::size_t size, std::uint64_t pattern) {
  assert(size <= kWordBits);
  BitSet b(size);
  if (!b.words_.empty()) b.words_[0] = pattern;
  b.trim();
  return b;
}

void BitSet::trim() {
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

std::size_t BitSet::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitSet::none() const {
  for (Word w : words_)
    if (w) return false;
  return true;
}

bool BitSet::isSubsetOf(const BitSet& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool BitSet::intersects(const BitSet& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

BitSet& BitSet::operator&=(const BitSet& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitSet& BitSet::operator|=(const BitSet& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitSet& BitSet::operator-=(const BitSet& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

BitSet BitSet::operator~() const {
  BitSet b = *this;
  for (auto& w : b.words_) w = ~w;
  b.trim();
  return b;
}

std::uint64_t BitSet::pattern() const {
  assert(size_ <= kWordBits);
  return words_.empty() ? 0 : words_[0];
}

std::vector<std::size_t> BitSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  forEach([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t BitSet::hash() const {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ size_;
  for (Word w : words_) {
    h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering BitSet::operator<=>(const BitSet& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  // Most significant word first so fromPattern(...) ordering matches integer order.
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace hyperop
