#include "mhs/oracle.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "mhs/errors.h"

namespace mhs {

namespace {

void CheckLimit(const SetFamily& family, std::size_t limit) {
  if (family.universe_size() > limit || family.universe_size() > 31) {
    throw OracleLimitError("universe size " + std::to_string(family.universe_size()) +
                           " exceeds oracle limit " + std::to_string(limit));
  }
}

std::uint32_t ToMask(const ElementSet& s) {
  std::uint32_t mask = 0;
  s.for_each([&](Element e) { mask |= std::uint32_t{1} << e; });
  return mask;
}

ElementSet FromMask(std::uint32_t mask, std::size_t m) {
  ElementSet s(m);
  for (Element e = 0; e < m; ++e) {
    if ((mask >> e) & 1U) s.insert(e);
  }
  return s;
}

}  // namespace

MhsCollection BruteForceMhs(const SetFamily& family, const Cutoff& cutoff,
                            std::size_t limit) {
  CheckLimit(family, limit);
  if (auto degenerate = DegenerateResult(family, cutoff)) {
    if (!WithinCutoff(0, cutoff)) degenerate->sets.clear();
    return *degenerate;
  }
  const std::size_t m = family.universe_size();
  std::vector<std::uint32_t> set_masks;
  set_masks.reserve(family.size());
  for (const ElementSet& s : family) set_masks.push_back(ToMask(s));

  MhsCollection out;
  out.source_fingerprint = family.fingerprint();
  out.universe_size = m;
  out.complete = !cutoff.has_value();

  std::vector<std::uint32_t> kept;
  const std::size_t max_size = std::min(m, cutoff.value_or(m));
  for (std::size_t k = 1; k <= max_size; ++k) {
    // Gosper's hack over all k-subsets of m bits.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t end = std::uint64_t{1} << m;
    while (mask < end) {
      const auto candidate = static_cast<std::uint32_t>(mask);
      const bool hits = std::all_of(set_masks.begin(), set_masks.end(),
                                    [&](std::uint32_t s) { return (s & candidate) != 0; });
      if (hits && std::none_of(kept.begin(), kept.end(), [&](std::uint32_t t) {
            return (t & ~candidate) == 0;
          })) {
        kept.push_back(candidate);
      }
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  out.sets.reserve(kept.size());
  for (std::uint32_t t : kept) out.sets.push_back(FromMask(t, m));
  out.Canonicalize();
  return out;
}

DualityVerdict CheckDuality(const SetFamily& h, const SetFamily& g, std::size_t limit) {
  CheckLimit(g, limit);
  const MhsCollection tr = BruteForceMhs(h, std::nullopt, limit);
  const std::size_t m = std::max(h.universe_size(), g.universe_size());

  std::unordered_set<ElementSet> expected;
  for (const ElementSet& t : tr.sets) expected.insert(t.Resized(m));

  std::vector<ElementSet> lifted;
  for (const ElementSet& s : g) lifted.push_back(s.Resized(m));
  std::vector<ElementSet> g_min = Minimize(std::move(lifted));
  SortCanonical(g_min);

  DualityVerdict verdict;
  std::unordered_set<ElementSet> present;
  for (const ElementSet& member : g_min) {
    present.insert(member);
    if (expected.contains(member)) continue;
    verdict.equal = false;
    verdict.witness = member;
    verdict.kind = IsHitting(h, member.Resized(h.universe_size()))
                       ? WitnessKind::kNotMinimal
                       : WitnessKind::kNotHitting;
    return verdict;
  }
  for (const ElementSet& t : tr.sets) {
    ElementSet lifted_t = t.Resized(m);
    if (!present.contains(lifted_t)) {
      verdict.equal = false;
      verdict.witness = std::move(lifted_t);
      verdict.kind = WitnessKind::kMissing;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace mhs
