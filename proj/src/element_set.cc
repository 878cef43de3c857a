#include "mhs/element_set.h"

#include <algorithm>
#include <cassert>

namespace mhs {

ElementSet::ElementSet(std::size_t universe_size,
                       std::span<const Element> elements)
    : ElementSet(universe_size) {
  for (Element e : elements) {
    assert(e < universe_size);
    insert(e);
  }
}

ElementSet ElementSet::Full(std::size_t universe_size) {
  ElementSet s(universe_size);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (const std::size_t tail = universe_size % 64; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool ElementSet::intersects(const ElementSet& other) const {
  assert(universe_size_ == other.universe_size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  assert(universe_size_ == other.universe_size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::size_t ElementSet::intersection_count(const ElementSet& other) const {
  assert(universe_size_ == other.universe_size_);
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return n;
}

std::size_t ElementSet::find_next(std::size_t from) const {
  if (from >= universe_size_) return kNpos;
  std::size_t w = from >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return kNpos;
    bits = words_[w];
  }
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  assert(universe_size_ == other.universe_size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  assert(universe_size_ == other.universe_size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  assert(universe_size_ == other.universe_size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ElementSet ElementSet::Resized(std::size_t universe_size) const {
  ElementSet out(universe_size);
  for_each([&](Element e) {
    if (e < universe_size) out.insert(e);
  });
  return out;
}

std::size_t ElementSet::hash() const {
  // FNV-1a over the words.
  std::uint64_t h = 14695981039346656037ULL;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string ElementSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Element e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  out += '}';
  return out;
}

bool CanonicalLess(const ElementSet& a, const ElementSet& b) {
  // Find the lowest element in exactly one of the two sets. Below it the
  // sorted lists agree; the set holding it is smaller unless the other
  // list has already ended.
  const std::size_t words = std::max(a.words_.size(), b.words_.size());
  auto word = [](const ElementSet& s, std::size_t i) {
    return i < s.words_.size() ? s.words_[i] : std::uint64_t{0};
  };
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t diff = word(a, w) ^ word(b, w);
    if (diff == 0) continue;
    const std::size_t e = w * 64 + static_cast<std::size_t>(std::countr_zero(diff));
    const bool in_a = ((word(a, w) >> (e & 63)) & 1U) != 0;
    const ElementSet& other = in_a ? b : a;
    const bool other_continues = other.find_next(e + 1) != ElementSet::kNpos;
    return in_a == other_continues;
  }
  return false;
}

bool CardinalityLess(const ElementSet& a, const ElementSet& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  return CanonicalLess(a, b);
}

}  // namespace mhs
