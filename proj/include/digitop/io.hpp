#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "digitop/space.hpp"

namespace digitop {

// A space plus document metadata. Round-trip stable for both formats.
struct SpaceDocument {
  int format_version = 1;
  DigitalSpace space;
  std::optional<std::string> name;

  bool operator==(const SpaceDocument&) const = default;
};

enum class FileFormat { text, json };

// Text grammar, one item per line:
//   # comment to end of line        (a leading `# name: <text>` names the doc)
//   v <label>                       declares a point
//   e <label> <label>               declares an edge, auto-declaring labels
// Blank lines are ignored; duplicate edges are ignored with a warning.
SpaceDocument parse_text(std::istream& in,
                         std::vector<std::string>* warnings = nullptr);
SpaceDocument parse_text(const std::string& text,
                         std::vector<std::string>* warnings = nullptr);

// Isolated points first as `v` lines in label order, then edges as `e`
// lines in lexicographic pair order. Bit-exact for a given document.
std::string serialize_text(const SpaceDocument& doc);

// JSON mirror: {"format_version":1,"name":...,"points":[...],"edges":[["a","b"],...]}
SpaceDocument parse_json(std::istream& in,
                         std::vector<std::string>* warnings = nullptr);
SpaceDocument parse_json(const std::string& text,
                         std::vector<std::string>* warnings = nullptr);
std::string serialize_json(const SpaceDocument& doc);

// Undirected DOT, nodes and edges in the serialize_text order.
std::string export_dot(const SpaceDocument& doc);

FileFormat detect_format(const std::string& path);  // *.json -> json, else text

SpaceDocument load_space_file(const std::string& path,
                              std::optional<FileFormat> format = std::nullopt,
                              std::vector<std::string>* warnings = nullptr);

// Writes through a temp file and renames, so a failed write never leaves a
// partial document behind.
void save_space_file(const std::string& path, const SpaceDocument& doc,
                     std::optional<FileFormat> format = std::nullopt);

void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace digitop
