#include "mhs/generators.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "mhs/errors.h"

namespace mhs {

SetFamily MatchingGraph(std::size_t n) {
  const std::size_t m = 2 * n;
  std::vector<ElementSet> sets;
  sets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    sets.push_back(ElementSet(m, {static_cast<Element>(2 * i), static_cast<Element>(2 * i + 1)}));
  }
  return SetFamily(m, std::move(sets));
}

namespace {

// Uniform draw from [0, bound) by rejection, so seeded families do not depend
// on the standard library's distribution algorithms.
std::uint64_t Draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

SetFamily RandomFamily(const RandomFamilySpec& spec) {
  if (spec.min_set_size < 1 || spec.min_set_size > spec.max_set_size ||
      spec.max_set_size > spec.universe_size) {
    throw ValidationError("random family needs 1 <= min <= max <= universe size");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<Element> pool(spec.universe_size);

  std::vector<ElementSet> sets;
  sets.reserve(spec.set_count);
  for (std::size_t i = 0; i < spec.set_count; ++i) {
    const std::size_t size =
        spec.min_set_size + Draw(rng, spec.max_set_size - spec.min_set_size + 1);
    std::iota(pool.begin(), pool.end(), Element{0});
    // Partial Fisher-Yates: the first `size` slots become the sample.
    for (std::size_t k = 0; k < size; ++k) {
      std::swap(pool[k], pool[k + Draw(rng, pool.size() - k)]);
    }
    sets.push_back(ElementSet(spec.universe_size, std::span(pool.data(), size)));
  }
  return SetFamily(spec.universe_size, std::move(sets));
}

namespace {

std::uint64_t ParseNumber(const std::string& token) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ValidationError("not a non-negative integer: '" + token + "'");
  }
  return value;
}

}  // namespace

SetFamily GenerateFromArgs(const std::vector<std::string>& args) {
  if (args.size() == 2 && args[0] == "matching") {
    return MatchingGraph(ParseNumber(args[1]));
  }
  if (args.size() == 6 && args[0] == "random") {
    return RandomFamily(RandomFamilySpec{ParseNumber(args[1]), ParseNumber(args[2]),
                                         ParseNumber(args[3]), ParseNumber(args[4]),
                                         ParseNumber(args[5])});
  }
  throw ValidationError("expected 'matching N' or 'random M N MIN MAX SEED'");
}

}  // namespace mhs
