#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mhs/enumerate.h"
#include "mhs/errors.h"
#include "mhs/generators.h"
#include "mhs/oracle.h"
#include "mhs/set_family.h"

namespace py = pybind11;

namespace {

using Lists = std::vector<std::vector<std::int64_t>>;

Lists ToLists(std::vector<mhs::ElementSet> sets) {
  mhs::SortCanonical(sets);
  Lists out;
  out.reserve(sets.size());
  for (const mhs::ElementSet& s : sets) {
    const auto elements = s.elements();
    out.emplace_back(elements.begin(), elements.end());
  }
  return out;
}

mhs::Algorithm AlgorithmFromName(const std::string& name) {
  const auto algorithm = mhs::ParseAlgorithm(name);
  if (!algorithm) {
    throw mhs::ValidationError("unknown algorithm '" + name +
                               "'; valid names: " + mhs::AlgorithmNameList());
  }
  return *algorithm;
}

py::object Enumerate(const Lists& sets, const std::string& algorithm,
                     std::optional<std::size_t> cutoff, std::size_t threads, bool count_only,
                     bool condense, std::optional<std::size_t> universe_size) {
  const mhs::SetFamily family = mhs::MakeFamily(sets, universe_size);
  mhs::EnumerationRequest request;
  request.algorithm = AlgorithmFromName(algorithm);
  request.cutoff = cutoff;
  request.threads = threads;
  request.condense = condense;
  request.mode = count_only ? mhs::OutputMode::kCountOnly : mhs::OutputMode::kList;
  mhs::EnumerationOutcome outcome;
  {
    py::gil_scoped_release release;
    outcome = mhs::Enumerate(family, request);
  }
  if (count_only) return py::int_(outcome.count);
  return py::cast(ToLists(std::move(outcome.collection.sets)));
}

Lists BruteForce(const Lists& sets, std::optional<std::size_t> cutoff,
                 std::optional<std::size_t> universe_size) {
  return ToLists(mhs::BruteForceMhs(mhs::MakeFamily(sets, universe_size), cutoff).sets);
}

Lists Minimize(const Lists& sets) {
  return ToLists(mhs::Minimize(mhs::MakeFamily(sets).sets()));
}

bool IsHitting(const Lists& sets, const std::vector<std::int64_t>& candidate) {
  std::int64_t m = 0;
  for (const auto& s : sets) {
    for (std::int64_t e : s) m = std::max(m, e + 1);
  }
  for (std::int64_t e : candidate) m = std::max(m, e + 1);
  const mhs::SetFamily family = mhs::MakeFamily(sets, static_cast<std::size_t>(m));
  return mhs::IsHitting(family, mhs::MakeFamily({candidate}, family.universe_size())[0]);
}

py::tuple CheckDuality(const Lists& h, const Lists& g) {
  std::size_t m = 0;
  for (const Lists* family : {&h, &g}) {
    for (const auto& s : *family) {
      for (std::int64_t e : s) m = std::max<std::size_t>(m, static_cast<std::size_t>(e + 1));
    }
  }
  const mhs::DualityVerdict verdict =
      mhs::CheckDuality(mhs::MakeFamily(h, m), mhs::MakeFamily(g, m));
  py::object witness = py::none();
  py::object kind = py::none();
  if (verdict.witness) {
    const auto elements = verdict.witness->elements();
    witness = py::cast(std::vector<std::int64_t>(elements.begin(), elements.end()));
  }
  if (verdict.kind) {
    switch (*verdict.kind) {
      case mhs::WitnessKind::kNotHitting:
        kind = py::str("not_hitting");
        break;
      case mhs::WitnessKind::kNotMinimal:
        kind = py::str("not_minimal");
        break;
      case mhs::WitnessKind::kMissing:
        kind = py::str("missing");
        break;
    }
  }
  return py::make_tuple(verdict.equal, witness, kind);
}

py::tuple Condense(const Lists& sets) {
  const auto [condensed, map] = mhs::Condense(mhs::MakeFamily(sets));
  Lists groups;
  for (const auto& group : map.groups()) groups.emplace_back(group.begin(), group.end());
  Lists family;
  for (const auto& s : condensed.ToLists()) family.emplace_back(s.begin(), s.end());
  return py::make_tuple(family, groups);
}

Lists Expand(const Lists& condensed, const Lists& groups) {
  std::size_t m = 0;
  std::vector<std::vector<mhs::Element>> classes;
  for (const auto& group : groups) {
    std::vector<mhs::Element>& cls = classes.emplace_back();
    for (std::int64_t e : group) {
      if (e < 0) throw mhs::ValidationError("negative element in group");
      cls.push_back(static_cast<mhs::Element>(e));
      m = std::max<std::size_t>(m, static_cast<std::size_t>(e + 1));
    }
  }
  const mhs::ElementGroupMap map(m, std::move(classes));
  mhs::MhsCollection collection;
  collection.universe_size = m;
  collection.sets = mhs::MakeFamily(condensed, m).sets();
  return ToLists(mhs::Expand(collection, map).sets);
}

Lists FamilyLists(const mhs::SetFamily& family) {
  Lists out;
  for (const auto& s : family.ToLists()) out.emplace_back(s.begin(), s.end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_mhs, m) {
  m.doc() = "Minimal hitting set enumeration";

  py::register_exception<mhs::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<mhs::OracleLimitError>(m, "OracleLimitError", PyExc_ValueError);
  py::register_exception<mhs::ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("algorithms", [] {
    std::vector<std::string> names;
    for (mhs::Algorithm a : mhs::AllAlgorithms()) names.emplace_back(mhs::AlgorithmName(a));
    return names;
  });
  m.def("enumerate", &Enumerate, py::arg("sets"), py::arg("algorithm") = "mmcs",
        py::arg("cutoff") = py::none(), py::arg("threads") = 1, py::arg("count_only") = false,
        py::arg("condense") = false, py::arg("universe_size") = py::none(),
        "Minimal hitting sets in canonical order, or their number with count_only.");
  m.def("brute_force", &BruteForce, py::arg("sets"), py::arg("cutoff") = py::none(),
        py::arg("universe_size") = py::none());
  m.def("minimize", &Minimize, py::arg("sets"));
  m.def("is_hitting", &IsHitting, py::arg("sets"), py::arg("candidate"));
  m.def("check_duality", &CheckDuality, py::arg("h"), py::arg("g"),
        "(equal, witness, kind) for g against the transversal of h.");
  m.def("condense", &Condense, py::arg("sets"),
        "(condensed sets, element groups); each group is represented by its first element.");
  m.def("expand", &Expand, py::arg("condensed"), py::arg("groups"));
  m.def("matching_graph", [](std::size_t n) { return FamilyLists(mhs::MatchingGraph(n)); },
        py::arg("n"));
  m.def(
      "random_family",
      [](std::size_t universe_size, std::size_t set_count, std::size_t min_size,
         std::size_t max_size, std::uint64_t seed) {
        return FamilyLists(
            mhs::RandomFamily({universe_size, set_count, min_size, max_size, seed}));
      },
      py::arg("universe_size"), py::arg("set_count"), py::arg("min_size"), py::arg("max_size"),
      py::arg("seed"));
}
