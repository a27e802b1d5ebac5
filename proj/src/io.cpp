#include "digitop/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace digitop {

namespace {

constexpr const char* kNamePrefix = "# name: ";

struct SpaceAssembler {
  std::set<std::string> points;
  std::set<std::pair<std::string, std::string>> edges;
  std::vector<std::string>* warnings;

  void add_point(const std::string& label) { points.insert(label); }

  void add_edge(const std::string& a, const std::string& b,
                const std::string& where) {
    if (a == b)
      fail(ErrorCode::parse_error, where + ": self-loop at " + a);
    points.insert(a);
    points.insert(b);
    auto edge = std::minmax(a, b);
    if (!edges.emplace(edge.first, edge.second).second && warnings)
      warnings->push_back(where + ": duplicate edge " + edge.first + " " +
                          edge.second + " ignored");
  }

  DigitalSpace finish() const {
    return DigitalSpace::build(
        std::vector<std::string>(points.begin(), points.end()),
        std::vector<std::pair<std::string, std::string>>(edges.begin(),
                                                         edges.end()));
  }
};

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(std::move(t));
  return tokens;
}

}  // namespace

SpaceDocument parse_text(std::istream& in, std::vector<std::string>* warnings) {
  SpaceAssembler assembler{{}, {}, warnings};
  SpaceDocument doc;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no);
    if (!doc.name && line.rfind(kNamePrefix, 0) == 0) {
      doc.name = line.substr(std::string(kNamePrefix).size());
      continue;
    }
    // `#` opens a comment only at line start or after whitespace, so labels
    // may themselves contain the character
    std::size_t hash = std::string::npos;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '#' &&
          (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
        hash = i;
        break;
      }
    }
    const std::string body = hash == std::string::npos ? line : line.substr(0, hash);
    const auto tokens = tokenize(body);
    if (tokens.empty()) continue;
    if (tokens[0] == "v") {
      if (tokens.size() != 2)
        fail(ErrorCode::parse_error, where + ": expected `v <label>`");
      assembler.add_point(tokens[1]);
    } else if (tokens[0] == "e") {
      if (tokens.size() != 3)
        fail(ErrorCode::parse_error, where + ": expected `e <label> <label>`");
      assembler.add_edge(tokens[1], tokens[2], where);
    } else {
      fail(ErrorCode::parse_error, where + ": unknown directive `" + tokens[0] + "`");
    }
  }
  doc.space = assembler.finish();
  return doc;
}

SpaceDocument parse_text(const std::string& text,
                         std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_text(in, warnings);
}

std::string serialize_text(const SpaceDocument& doc) {
  std::string out;
  if (doc.name) out += std::string(kNamePrefix) + *doc.name + "\n";
  const auto& space = doc.space;
  for (std::size_t i = 0; i < space.point_count(); ++i) {
    if (space.degree_at(i) == 0) out += "v " + space.label_at(i) + "\n";
  }
  for (const auto& [a, b] : space.edge_list()) out += "e " + a + " " + b + "\n";
  return out;
}

namespace {

using nlohmann::ordered_json;

}  // namespace

SpaceDocument parse_json(std::istream& in, std::vector<std::string>* warnings) {
  ordered_json data;
  try {
    data = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!data.is_object())
    fail(ErrorCode::parse_error, "top-level JSON value must be an object");
  SpaceDocument doc;
  if (data.contains("format_version")) {
    if (!data["format_version"].is_number_integer() ||
        data["format_version"].get<int>() != 1)
      fail(ErrorCode::parse_error, "unsupported format_version");
  }
  if (data.contains("name")) {
    if (!data["name"].is_string())
      fail(ErrorCode::parse_error, "name must be a string");
    doc.name = data["name"].get<std::string>();
  }
  SpaceAssembler assembler{{}, {}, warnings};
  if (data.contains("points")) {
    if (!data["points"].is_array())
      fail(ErrorCode::parse_error, "points must be an array");
    for (const auto& p : data["points"]) {
      if (!p.is_string())
        fail(ErrorCode::parse_error, "points must be strings");
      assembler.add_point(p.get<std::string>());
    }
  }
  if (data.contains("edges")) {
    if (!data["edges"].is_array())
      fail(ErrorCode::parse_error, "edges must be an array");
    std::size_t index = 0;
    for (const auto& e : data["edges"]) {
      const std::string where = "edges[" + std::to_string(index++) + "]";
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        fail(ErrorCode::parse_error, where + ": expected [\"a\",\"b\"]");
      assembler.add_edge(e[0].get<std::string>(), e[1].get<std::string>(), where);
    }
  }
  doc.space = assembler.finish();
  return doc;
}

SpaceDocument parse_json(const std::string& text,
                         std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_json(in, warnings);
}

std::string serialize_json(const SpaceDocument& doc) {
  ordered_json data;
  data["format_version"] = doc.format_version;
  if (doc.name) data["name"] = *doc.name;
  data["points"] = doc.space.labels();
  auto edges = ordered_json::array();
  for (const auto& [a, b] : doc.space.edge_list())
    edges.push_back(ordered_json::array({a, b}));
  data["edges"] = std::move(edges);
  return data.dump(2) + "\n";
}

namespace {

std::string dot_quote(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string export_dot(const SpaceDocument& doc) {
  std::string out = "graph ";
  out += doc.name ? dot_quote(*doc.name) : "G";
  out += " {\n";
  const auto& space = doc.space;
  for (std::size_t i = 0; i < space.point_count(); ++i) {
    if (space.degree_at(i) == 0) out += "  " + dot_quote(space.label_at(i)) + ";\n";
  }
  for (const auto& [a, b] : space.edge_list())
    out += "  " + dot_quote(a) + " -- " + dot_quote(b) + ";\n";
  out += "}\n";
  return out;
}

FileFormat detect_format(const std::string& path) {
  const auto ext = std::filesystem::path(path).extension().string();
  return ext == ".json" ? FileFormat::json : FileFormat::text;
}

SpaceDocument load_space_file(const std::string& path,
                              std::optional<FileFormat> format,
                              std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse_error, "cannot open " + path);
  const FileFormat f = format.value_or(detect_format(path));
  return f == FileFormat::json ? parse_json(in, warnings)
                               : parse_text(in, warnings);
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::parse_error, "cannot write " + tmp);
    out << content;
    if (!out) fail(ErrorCode::parse_error, "write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

void save_space_file(const std::string& path, const SpaceDocument& doc,
                     std::optional<FileFormat> format) {
  const FileFormat f = format.value_or(detect_format(path));
  write_file_atomic(
      path, f == FileFormat::json ? serialize_json(doc) : serialize_text(doc));
}

}  // namespace digitop
