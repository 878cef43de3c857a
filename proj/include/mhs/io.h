#ifndef MHS_IO_H_
#define MHS_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "mhs/set_family.h"

namespace mhs {

// json: {"universe_size": m, "sets": [[...], ...]}; universe_size optional.
// dat:  one set per line, whitespace-separated indices, blank lines ignored.
enum class FileFormat { kJson, kDat };

std::optional<FileFormat> ParseFormat(std::string_view name);
// ".dat" selects dat, anything else json.
FileFormat FormatFromPath(const std::filesystem::path& path);

// Throws ParseError naming the line or position of the first problem.
SetFamily ParseFamily(std::string_view text, FileFormat format);
SetFamily ReadFamily(const std::filesystem::path& path, FileFormat format);

std::string FormatFamily(const SetFamily& family, FileFormat format);
void WriteFamily(const std::filesystem::path& path, FileFormat format, const SetFamily& family);

// Canonical text: elements ascending within a set, sets in ascending
// lexicographic order. json: {"sets": [...], "complete": bool}.
std::string FormatCollection(const MhsCollection& collection, FileFormat format);
// Throws Error if the file cannot be written.
void WriteCollection(const std::filesystem::path& path, FileFormat format,
                     const MhsCollection& collection);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace mhs

#endif  // MHS_IO_H_
