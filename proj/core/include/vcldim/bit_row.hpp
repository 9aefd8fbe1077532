#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace vcldim {

// Fixed-width bitset backed by 64-bit words. Bits past size() are always zero,
// so word-wise equality, hashing and popcount need no masking.
class BitRow {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitRow() = default;
  explicit BitRow(std::size_t size, bool value = false)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, value ? ~Word{0} : Word{0}) {
    trim();
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool any() const {
    for (Word w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  // Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  // Calls f(i) for every set bit in increasing order.
  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  BitRow& operator&=(const BitRow& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitRow& operator|=(const BitRow& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // this &= ~o
  BitRow& subtract(const BitRow& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend BitRow operator&(BitRow a, const BitRow& b) { return a &= b; }
  friend BitRow operator|(BitRow a, const BitRow& b) { return a |= b; }

  std::size_t and_count(const BitRow& o) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    }
    return n;
  }
  // True iff every bit of *this is also set in o.
  bool is_subset_of(const BitRow& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }

  std::span<const Word> words() const { return words_; }

  friend bool operator==(const BitRow&, const BitRow&) = default;

  std::size_t hash() const {
    std::size_t h = size_ * 0x9E3779B97F4A7C15ULL;
    for (Word w : words_) {
      h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  void trim() {
    if (size_ % kWordBits != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitRowHash {
  std::size_t operator()(const BitRow& r) const { return r.hash(); }
};

// Row-major bit matrix; every row has `cols` bits.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitRow(cols)) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  const BitRow& row(std::size_t r) const { return rows_[r]; }
  BitRow& row(std::size_t r) { return rows_[r]; }

  // Column c as a bitset over rows.
  BitRow column(std::size_t c) const {
    BitRow out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].test(c)) out.set(r);
    }
    return out;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.count();
    return n;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitRow> rows_;
};

}  // namespace vcldim
