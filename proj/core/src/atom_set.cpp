#include "incexc/atom_set.hpp"

#include <cassert>

#include "incexc/error.hpp"

namespace incexc {

AtomSet AtomSet::full(std::size_t size) {
  AtomSet s(size);
  for (auto& w : s.words_) w = ~Word{0};
  if (const std::size_t tail = size % kWordBits; tail != 0) {
    s.words_.back() = (Word{1} << tail) - 1;
  }
  return s;
}

AtomSet AtomSet::from_indices(std::size_t size, std::span<const std::size_t> indices) {
  AtomSet s(size);
  for (std::size_t i : indices) {
    if (i >= size) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "index " + std::to_string(i) + " out of range for set of size " + std::to_string(size));
    }
    s.set(i);
  }
  return s;
}

std::size_t AtomSet::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool AtomSet::none() const {
  for (Word w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<std::size_t> AtomSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

AtomSet& AtomSet::operator&=(const AtomSet& o) {
  assert(size_ == o.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

AtomSet& AtomSet::operator|=(const AtomSet& o) {
  assert(size_ == o.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

void AtomSet::intersect_into(const AtomSet& a, const AtomSet& b, AtomSet& out) {
  assert(a.size_ == b.size_);
  if (out.size_ != a.size_) out = AtomSet(a.size_);
  for (std::size_t i = 0; i < a.words_.size(); ++i) out.words_[i] = a.words_[i] & b.words_[i];
}

std::size_t AtomSetHash::operator()(const AtomSet& s) const noexcept {
  // FNV-1a over words
  std::size_t h = 1469598103934665603ULL;
  for (auto w : s.words()) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ULL;
  }
  return h ^ s.size();
}

}  // namespace incexc
