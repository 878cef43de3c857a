#ifndef MHS_ELEMENT_SET_H_
#define MHS_ELEMENT_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mhs {

using Element = std::uint32_t;

// A subset of the universe {0, ..., universe_size - 1} stored as a dense
// bit vector. Binary operations require both operands to share the same
// universe size; use Resized() to lift a set into a larger universe.
class ElementSet {
 public:
  static constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

  ElementSet() = default;
  explicit ElementSet(std::size_t universe_size)
      : universe_size_(universe_size), words_(WordCount(universe_size), 0) {}
  ElementSet(std::size_t universe_size, std::span<const Element> elements);
  ElementSet(std::size_t universe_size, std::initializer_list<Element> elements)
      : ElementSet(universe_size,
                   std::span<const Element>(elements.begin(), elements.size())) {}

  // Every element of the universe.
  static ElementSet Full(std::size_t universe_size);

  std::size_t universe_size() const { return universe_size_; }

  bool contains(Element e) const {
    return (words_[e >> 6] >> (e & 63)) & 1U;
  }
  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t count() const;
  bool empty() const;

  bool intersects(const ElementSet& other) const;
  bool is_subset_of(const ElementSet& other) const;
  bool is_proper_subset_of(const ElementSet& other) const {
    return is_subset_of(other) && count() < other.count();
  }
  // Number of elements shared with `other`.
  std::size_t intersection_count(const ElementSet& other) const;

  // Smallest element >= `from`, or kNpos.
  std::size_t find_next(std::size_t from) const;
  std::size_t find_first() const { return find_next(0); }

  // Visits elements in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(static_cast<Element>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> elements() const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  // Set difference.
  ElementSet& operator-=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet Resized(std::size_t universe_size) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

  std::size_t hash() const;

  // "{1,2,5}"
  std::string ToString() const;

 private:
  friend bool CanonicalLess(const ElementSet& a, const ElementSet& b);

  static std::size_t WordCount(std::size_t bits) { return (bits + 63) / 64; }

  std::size_t universe_size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Total order matching lexicographic comparison of the ascending element
// lists, so {1,2} < {1,3} < {3}. This is the canonical output order.
bool CanonicalLess(const ElementSet& a, const ElementSet& b);

// Orders by cardinality first, then canonically.
bool CardinalityLess(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace mhs

template <>
struct std::hash<mhs::ElementSet> {
  std::size_t operator()(const mhs::ElementSet& s) const { return s.hash(); }
};

#endif  // MHS_ELEMENT_SET_H_
