#include "mhs/io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "mhs/errors.h"

namespace mhs {

namespace {

using OrderedJson = nlohmann::ordered_json;

SetFamily ParseJson(std::string_view text) {
  OrderedJson doc;
  try {
    doc = OrderedJson::parse(text);
  } catch (const OrderedJson::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("json: top level must be an object");
  if (!doc.contains("sets")) throw ParseError("json: missing key \"sets\"");
  const OrderedJson& sets = doc["sets"];
  if (!sets.is_array()) throw ParseError("json: \"sets\" must be an array");

  std::optional<std::size_t> universe;
  if (doc.contains("universe_size")) {
    const OrderedJson& u = doc["universe_size"];
    if (!u.is_number_integer() || u.get<std::int64_t>() < 0) {
      throw ParseError("json: \"universe_size\" must be a non-negative integer");
    }
    universe = u.get<std::size_t>();
  }

  std::vector<std::vector<std::int64_t>> raw;
  raw.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!sets[i].is_array()) {
      throw ParseError("json: sets[" + std::to_string(i) + "] must be an array");
    }
    std::vector<std::int64_t>& out = raw.emplace_back();
    for (std::size_t k = 0; k < sets[i].size(); ++k) {
      const OrderedJson& v = sets[i][k];
      const std::string where = "json: sets[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      if (!v.is_number_integer()) throw ParseError(where + ": not an integer");
      const std::int64_t e = v.get<std::int64_t>();
      if (e < 0) throw ParseError(where + ": negative index " + std::to_string(e));
      if (universe && static_cast<std::uint64_t>(e) >= *universe) {
        throw ParseError(where + ": index " + std::to_string(e) + " >= universe_size " +
                         std::to_string(*universe));
      }
      out.push_back(e);
    }
  }
  return MakeFamily(raw, universe);
}

SetFamily ParseDat(std::string_view text) {
  std::vector<std::vector<std::int64_t>> raw;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    std::vector<std::int64_t> set;
    std::size_t pos = 0;
    while (true) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos == line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      const std::string_view token = line.substr(pos, end - pos);
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      const std::string where =
          "dat: line " + std::to_string(line_no) + ", column " + std::to_string(pos + 1);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(where + ": not an integer: '" + std::string(token) + "'");
      }
      if (value < 0) throw ParseError(where + ": negative index " + std::to_string(value));
      set.push_back(value);
      pos = end;
    }
    if (!set.empty()) raw.push_back(std::move(set));
  }
  return MakeFamily(raw);
}

std::string DatLines(const std::vector<ElementSet>& sets) {
  std::string out;
  for (const ElementSet& s : sets) {
    bool first = true;
    s.for_each([&](Element e) {
      if (!first) out += ' ';
      out += std::to_string(e);
      first = false;
    });
    out += '\n';
  }
  return out;
}

OrderedJson SetsJson(const std::vector<ElementSet>& sets) {
  OrderedJson arr = OrderedJson::array();
  for (const ElementSet& s : sets) arr.push_back(s.elements());
  return arr;
}

}  // namespace

std::optional<FileFormat> ParseFormat(std::string_view name) {
  if (name == "json") return FileFormat::kJson;
  if (name == "dat") return FileFormat::kDat;
  return std::nullopt;
}

FileFormat FormatFromPath(const std::filesystem::path& path) {
  return path.extension() == ".dat" ? FileFormat::kDat : FileFormat::kJson;
}

SetFamily ParseFamily(std::string_view text, FileFormat format) {
  return format == FileFormat::kJson ? ParseJson(text) : ParseDat(text);
}

SetFamily ReadFamily(const std::filesystem::path& path, FileFormat format) {
  return ParseFamily(ReadTextFile(path), format);
}

std::string FormatFamily(const SetFamily& family, FileFormat format) {
  if (format == FileFormat::kDat) return DatLines(family.sets());
  OrderedJson doc;
  doc["universe_size"] = family.universe_size();
  doc["sets"] = SetsJson(family.sets());
  return doc.dump() + "\n";
}

void WriteFamily(const std::filesystem::path& path, FileFormat format, const SetFamily& family) {
  WriteTextFile(path, FormatFamily(family, format));
}

std::string FormatCollection(const MhsCollection& collection, FileFormat format) {
  std::vector<ElementSet> sets = collection.sets;
  SortCanonical(sets);
  if (format == FileFormat::kDat) return DatLines(sets);
  OrderedJson doc;
  doc["sets"] = SetsJson(sets);
  doc["complete"] = collection.complete;
  return doc.dump() + "\n";
}

void WriteCollection(const std::filesystem::path& path, FileFormat format,
                     const MhsCollection& collection) {
  WriteTextFile(path, FormatCollection(collection, format));
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace mhs
