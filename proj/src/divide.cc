#include "mhs/divide.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "mhs/errors.h"

namespace mhs {

namespace {

using Budget = std::optional<std::size_t>;

Budget Spend(const Budget& budget) {
  return budget ? Budget(*budget - 1) : std::nullopt;
}

// Occurrence count of every element, over a universe of m.
std::vector<std::size_t> Frequencies(const std::vector<ElementSet>& sets, std::size_t m) {
  std::vector<std::size_t> freq(m, 0);
  for (const ElementSet& s : sets) s.for_each([&](Element e) { ++freq[e]; });
  return freq;
}

std::vector<ElementSet> BoolRecurse(std::vector<ElementSet> sets, const Budget& budget,
                                    std::size_t m) {
  sets = Minimize(std::move(sets));
  if (sets.empty()) return {ElementSet(m)};
  if (sets.front().empty()) return {};
  if (budget && *budget == 0) return {};

  if (sets.size() == 1) {
    std::vector<ElementSet> out;
    sets.front().for_each([&](Element e) { out.push_back(ElementSet(m, {e})); });
    return out;
  }

  ElementSet common = sets.front();
  for (const ElementSet& s : sets) common &= s;
  if (const std::size_t e = common.find_first(); e != ElementSet::kNpos) {
    const auto elem = static_cast<Element>(e);
    for (ElementSet& s : sets) s.erase(elem);
    std::vector<ElementSet> out = BoolRecurse(std::move(sets), budget, m);
    out.push_back(ElementSet(m, {elem}));
    return out;
  }

  // Minimized and sorted by size, so a singleton is first and no other set
  // contains its element.
  if (sets.front().count() == 1) {
    const auto elem = static_cast<Element>(sets.front().find_first());
    sets.erase(sets.begin());
    std::vector<ElementSet> out = BoolRecurse(std::move(sets), Spend(budget), m);
    for (ElementSet& t : out) t.insert(elem);
    return out;
  }

  const std::vector<std::size_t> freq = Frequencies(sets, m);
  const auto split = static_cast<Element>(
      std::max_element(freq.begin(), freq.end()) - freq.begin());
  std::vector<ElementSet> avoiding;
  std::vector<ElementSet> deleted;
  for (const ElementSet& s : sets) {
    if (s.contains(split)) {
      ElementSet reduced = s;
      reduced.erase(split);
      deleted.push_back(std::move(reduced));
    } else {
      avoiding.push_back(s);
      deleted.push_back(s);
    }
  }
  std::vector<ElementSet> with_split = BoolRecurse(std::move(avoiding), Spend(budget), m);
  for (ElementSet& t : with_split) t.insert(split);
  std::vector<ElementSet> without_split = BoolRecurse(std::move(deleted), budget, m);
  for (ElementSet& t : with_split) without_split.push_back(std::move(t));
  return Minimize(std::move(without_split));
}

class StaccatoSearch {
 public:
  StaccatoSearch(std::size_t m, const StaccatoOptions& options) : m_(m), options_(options) {}

  void Run(std::vector<ElementSet> sets) { Recurse(std::move(sets), ElementSet(m_), options_.cutoff); }

  bool stopped() const { return stopped_; }
  std::vector<ElementSet> Take() { return std::move(found_); }

 private:
  void Recurse(std::vector<ElementSet> sets, const ElementSet& prefix, const Budget& budget) {
    if (stopped_) return;
    if (sets.empty()) {
      found_.push_back(prefix);
      if (options_.max_results && found_.size() >= *options_.max_results) stopped_ = true;
      return;
    }
    if (budget && *budget == 0) return;
    if (std::any_of(sets.begin(), sets.end(), [](const ElementSet& s) { return s.empty(); })) {
      return;
    }

    const std::vector<std::size_t> freq = Frequencies(sets, m_);
    std::vector<Element> ranked;
    for (Element e = 0; e < m_; ++e) {
      if (freq[e] > 0) ranked.push_back(e);
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [&](Element a, Element b) { return freq[a] > freq[b]; });
    const auto explored = std::max<std::size_t>(
        1, static_cast<std::size_t>(
               std::ceil(options_.rank_fraction * static_cast<double>(ranked.size()) - 1e-9)));

    for (std::size_t i = 0; i < std::min(explored, ranked.size()) && !stopped_; ++i) {
      const Element j = ranked[i];
      std::vector<ElementSet> missed;
      for (const ElementSet& s : sets) {
        if (!s.contains(j)) missed.push_back(s);
      }
      ElementSet grown = prefix;
      grown.insert(j);
      Recurse(std::move(missed), grown, Spend(budget));

      // Later branches may not use j.
      bool exhausted = false;
      for (ElementSet& s : sets) {
        s.erase(j);
        exhausted = exhausted || s.empty();
      }
      if (exhausted) break;
    }
  }

  std::size_t m_;
  const StaccatoOptions& options_;
  std::vector<ElementSet> found_;
  bool stopped_ = false;
};

MhsCollection Wrap(const SetFamily& family, bool complete, std::vector<ElementSet> sets) {
  MhsCollection out;
  out.source_fingerprint = family.fingerprint();
  out.universe_size = family.universe_size();
  out.complete = complete;
  out.sets = std::move(sets);
  out.Canonicalize();
  return out;
}

}  // namespace

MhsCollection BoolAlgorithm(const SetFamily& family, const Cutoff& cutoff) {
  if (auto degenerate = DegenerateResult(family, cutoff)) {
    if (!WithinCutoff(0, cutoff)) degenerate->sets.clear();
    return *degenerate;
  }
  return Wrap(family, !cutoff.has_value(),
              BoolRecurse(family.sets(), cutoff, family.universe_size()));
}

MhsCollection Staccato(const SetFamily& family, const StaccatoOptions& options) {
  if (!(options.rank_fraction > 0.0 && options.rank_fraction <= 1.0)) {
    throw ValidationError("rank_fraction must lie in (0, 1]");
  }
  if (options.max_results && *options.max_results == 0) {
    throw ValidationError("max_results must be positive");
  }
  if (auto degenerate = DegenerateResult(family, options.cutoff)) {
    if (!WithinCutoff(0, options.cutoff)) degenerate->sets.clear();
    return *degenerate;
  }
  StaccatoSearch search(family.universe_size(), options);
  search.Run(family.sets());
  const bool complete =
      !options.cutoff && options.rank_fraction >= 1.0 && !search.stopped();
  return Wrap(family, complete, Minimize(search.Take()));
}

}  // namespace mhs
