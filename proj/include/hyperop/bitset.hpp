#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hyperop {

/// Fixed-size bitset with runtime width. Used both for vertex masks of
/// simplices and for face-index sets of hypergraphs; a width of at most 64
/// occupies a single word.
class BitSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitSet() = default;
  explicit BitSet(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static BitSet full(std::size_t size);
  /// Bits 0..size-1 taken from the low bits of `pattern`; requires size <= 64.
  static BitSet fromPattern(std::size_t size, std::uint64_t pattern);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }
  bool all() const { return count() == size_; }

  bool isSubsetOf(const BitSet& other) const;
  bool intersects(const BitSet& other) const;

  BitSet& operator&=(const BitSet& other);
  BitSet& operator|=(const BitSet& other);
  BitSet& operator-=(const BitSet& other);
  BitSet operator~() const;

  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

  /// Low 64 bits as an integer pattern; requires size <= 64.
  std::uint64_t pattern() const;

  template <typename F>
  void forEach(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(w * kWordBits + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const;
  std::size_t hash() const;

  bool operator==(const BitSet&) const = default;
  std::strong_ordering operator<=>(const BitSet& other) const;

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace hyperop

template <>
struct std::hash<hyperop::BitSet> {
  std::size_t operator()(const hyperop::BitSet& b) const noexcept { return b.hash(); }
};
