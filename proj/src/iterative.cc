#include "mhs/iterative.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

namespace mhs {

namespace {

MhsCollection Finish(const SetFamily& family, const Cutoff& cutoff,
                     std::vector<ElementSet> sets) {
  MhsCollection out;
  out.source_fingerprint = family.fingerprint();
  out.universe_size = family.universe_size();
  out.complete = !cutoff.has_value();
  out.sets = std::move(sets);
  out.Canonicalize();
  return out;
}

bool ContainsEmitted(const std::vector<ElementSet>& emitted, const ElementSet& path) {
  return std::any_of(emitted.begin(), emitted.end(),
                     [&](const ElementSet& t) { return t.is_subset_of(path); });
}

std::optional<std::size_t> FirstUnhit(const SetFamily& family, const ElementSet& path) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!family[i].intersects(path)) return i;
  }
  return std::nullopt;
}

}  // namespace

MhsCollection Berge(const SetFamily& family, const Cutoff& cutoff, SetOrder order) {
  if (auto degenerate = DegenerateResult(family, cutoff)) {
    if (!WithinCutoff(0, cutoff)) degenerate->sets.clear();
    return *degenerate;
  }
  std::vector<std::size_t> sequence(family.size());
  std::iota(sequence.begin(), sequence.end(), 0);
  if (order == SetOrder::kAscendingSize) {
    std::stable_sort(sequence.begin(), sequence.end(), [&](std::size_t a, std::size_t b) {
      return family[a].count() < family[b].count();
    });
  }

  std::vector<ElementSet> transversals{ElementSet(family.universe_size())};
  for (std::size_t index : sequence) {
    const ElementSet& s = family[index];
    std::vector<ElementSet> next;
    for (const ElementSet& t : transversals) {
      // t ∪ {e} for e ∈ t ∩ s is t itself; every other extension contains it.
      if (t.intersects(s)) {
        next.push_back(t);
        continue;
      }
      if (!WithinCutoff(t.count() + 1, cutoff)) continue;
      s.for_each([&](Element e) {
        ElementSet grown = t;
        grown.insert(e);
        next.push_back(std::move(grown));
      });
    }
    transversals = Minimize(std::move(next));
    if (transversals.empty()) break;
  }
  return Finish(family, cutoff, std::move(transversals));
}

MhsCollection Hst(const SetFamily& family, const Cutoff& cutoff) {
  if (auto degenerate = DegenerateResult(family, cutoff)) {
    if (!WithinCutoff(0, cutoff)) degenerate->sets.clear();
    return *degenerate;
  }
  struct Node {
    ElementSet path;
    ElementSet forbidden;
  };
  const std::size_t m = family.universe_size();
  std::vector<ElementSet> emitted;
  std::vector<Node> level{{ElementSet(m), ElementSet(m)}};
  for (std::size_t depth = 0; !level.empty(); ++depth) {
    std::vector<Node> next;
    for (Node& node : level) {
      if (ContainsEmitted(emitted, node.path)) continue;
      const std::optional<std::size_t> label = FirstUnhit(family, node.path);
      if (!label) {
        emitted.push_back(node.path);
        continue;
      }
      if (!WithinCutoff(depth + 1, cutoff)) continue;
      ElementSet forbidden = node.forbidden;
      (family[*label] - node.forbidden).for_each([&](Element e) {
        Node child{node.path, forbidden};
        child.path.insert(e);
        next.push_back(std::move(child));
        forbidden.insert(e);
      });
    }
    level = std::move(next);
  }
  return Finish(family, cutoff, std::move(emitted));
}

namespace {

class HsDagSearch {
 public:
  HsDagSearch(const SetFamily& family, const Cutoff& cutoff)
      : family_(family), cutoff_(cutoff) {}

  std::vector<ElementSet> Run() {
    std::vector<std::size_t> level{NewNode(ElementSet(family_.universe_size()))};
    for (std::size_t depth = 0; !level.empty(); ++depth) {
      std::vector<std::size_t> next;
      for (std::size_t id : level) {
        if (nodes_[id].alive) Process(id, depth, next);
      }
      level = std::move(next);
    }
    return std::move(emitted_);
  }

 private:
  struct Node {
    ElementSet path;
    std::optional<std::size_t> label;
    std::vector<std::pair<Element, std::size_t>> children;
    std::size_t parents = 0;
    bool alive = true;
  };

  std::size_t NewNode(ElementSet path) {
    const std::size_t id = nodes_.size();
    by_path_.emplace(path, id);
    nodes_.push_back(Node{std::move(path), std::nullopt, {}, 0, true});
    return id;
  }

  void Process(std::size_t id, std::size_t depth, std::vector<std::size_t>& next) {
    if (ContainsEmitted(emitted_, nodes_[id].path)) return;

    // Reuse an earlier label disjoint from the path before looking further.
    std::optional<std::size_t> label;
    for (std::size_t used : used_labels_) {
      if (!family_[used].intersects(nodes_[id].path)) {
        label = used;
        break;
      }
    }
    if (!label) {
      label = FirstUnhit(family_, nodes_[id].path);
      if (!label) {
        emitted_.push_back(nodes_[id].path);
        return;
      }
      Prune(*label);
      if (!nodes_[id].alive) return;
      used_labels_.push_back(*label);
    }
    Label(id, *label);
    if (!WithinCutoff(depth + 1, cutoff_)) return;

    family_[*label].for_each([&](Element e) {
      ElementSet path = nodes_[id].path;
      path.insert(e);
      std::size_t child;
      if (auto it = by_path_.find(path); it != by_path_.end()) {
        child = it->second;
      } else {
        child = NewNode(std::move(path));
        next.push_back(child);
      }
      nodes_[id].children.emplace_back(e, child);
      ++nodes_[child].parents;
    });
  }

  void Label(std::size_t id, std::size_t label) {
    nodes_[id].label = label;
    labelled_.push_back(id);
  }

  // A new label that is a proper subset of an existing node's label makes
  // the edges for the difference redundant whenever the node's path does
  // not already hit the new label.
  void Prune(std::size_t new_label) {
    const ElementSet& small = family_[new_label];
    for (std::size_t id : labelled_) {
      Node& node = nodes_[id];
      if (!node.alive || !node.label) continue;
      const ElementSet& big = family_[*node.label];
      if (!small.is_proper_subset_of(big) || small.intersects(node.path)) continue;
      node.label = new_label;
      std::vector<std::pair<Element, std::size_t>> kept;
      std::vector<std::size_t> detached;
      for (const auto& [e, child] : node.children) {
        if (small.contains(e)) {
          kept.emplace_back(e, child);
        } else {
          detached.push_back(child);
        }
      }
      node.children = std::move(kept);
      for (std::size_t child : detached) Detach(child);
    }
    std::erase_if(used_labels_, [&](std::size_t used) {
      return small.is_proper_subset_of(family_[used]);
    });
  }

  void Detach(std::size_t id) {
    Node& node = nodes_[id];
    if (!node.alive || --node.parents > 0) return;
    node.alive = false;
    by_path_.erase(node.path);
    const auto children = std::move(node.children);
    for (const auto& [e, child] : children) Detach(child);
  }

  const SetFamily& family_;
  Cutoff cutoff_;
  std::vector<Node> nodes_;
  std::unordered_map<ElementSet, std::size_t> by_path_;
  std::vector<std::size_t> used_labels_;
  std::vector<std::size_t> labelled_;
  std::vector<ElementSet> emitted_;
};

}  // namespace

MhsCollection HsDag(const SetFamily& family, const Cutoff& cutoff) {
  if (auto degenerate = DegenerateResult(family, cutoff)) {
    if (!WithinCutoff(0, cutoff)) degenerate->sets.clear();
    return *degenerate;
  }
  return Finish(family, cutoff, HsDagSearch(family, cutoff).Run());
}

}  // namespace mhs
