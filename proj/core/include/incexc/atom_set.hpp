#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace incexc {

/// Fixed-size dynamic bitset over 64-bit words. Used for events (sets of
/// atoms) and for atom signatures (sets of events).
class AtomSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  AtomSet() = default;
  explicit AtomSet(std::size_t size) : size_(size), words_(word_count(size), 0) {}
  static AtomSet full(std::size_t size);
  static AtomSet from_indices(std::size_t size, std::span<const std::size_t> indices);

  static std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

  std::size_t size() const { return size_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const;
  bool none() const;
  std::vector<std::size_t> indices() const;

  AtomSet& operator&=(const AtomSet& o);
  AtomSet& operator|=(const AtomSet& o);
  friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
  friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }

  /// out = a & b, without allocating when out already has the right size.
  static void intersect_into(const AtomSet& a, const AtomSet& b, AtomSet& out);

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const AtomSet& a, const AtomSet& b) = default;
  friend auto operator<=>(const AtomSet& a, const AtomSet& b) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct AtomSetHash {
  std::size_t operator()(const AtomSet& s) const noexcept;
};

}  // namespace incexc
