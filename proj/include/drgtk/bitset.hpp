#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace drgtk {

/// Fixed-length bit row. Length is chosen at construction and never changes;
/// binary operations require equal lengths.
class BitRow {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitRow() = default;
  explicit BitRow(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static BitRow full(std::size_t size) {
    BitRow row(size);
    for (std::size_t i = 0; i < size; ++i) row.set(i);
    return row;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool none() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }
  bool any() const { return !none(); }

  /// |this ∩ other| without materializing the intersection.
  std::size_t intersection_count(const BitRow& other) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return total;
  }

  bool intersects(const BitRow& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const BitRow& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  BitRow& operator&=(const BitRow& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  BitRow& operator|=(const BitRow& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  /// this &= ~other
  BitRow& subtract(const BitRow& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend BitRow operator&(BitRow a, const BitRow& b) { return a &= b; }
  friend BitRow operator|(BitRow a, const BitRow& b) { return a |= b; }
  friend bool operator==(const BitRow&, const BitRow&) = default;
  friend auto operator<=>(const BitRow& a, const BitRow& b) {
    // lexicographic on set bits read from index 0 upward
    for (std::size_t i = 0; i < a.words_.size() && i < b.words_.size(); ++i) {
      if (a.words_[i] != b.words_[i]) {
        Word diff = a.words_[i] ^ b.words_[i];
        Word low = diff & (~diff + 1);
        return (a.words_[i] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    return a.size_ <=> b.size_;
  }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const { return next(0); }

  /// Index of the lowest set bit at position >= from, or size() when none.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace drgtk
