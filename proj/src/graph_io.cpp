// Copyright 2026 The matchstick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matchstick/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "matchstick/error.hpp"

namespace matchstick {

namespace {

constexpr std::string_view kMagic = "msgraph";

std::string escape(std::string_view s, bool key) {
  std::string out;
  for (char c : s) {
    if (c == '\\') {
      out += "\\\\";
    } else if (c == '\n') {
      out += "\\n";
    } else if (key && c == ' ') {
      out += "\\s";
    } else {
      out += c;
    }
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool next_line(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    const std::size_t end = text_.find('\n', pos_);
    const std::size_t stop = end == std::string_view::npos ? text_.size() : end;
    line = text_.substr(pos_, stop - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = stop + 1;
    ++line_no_;
    return true;
  }

  std::string_view require_line(const char* what) {
    std::string_view line;
    if (!next_line(line)) fail(std::string("unexpected end of file, expected ") + what);
    return line;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no_) + ": " + message);
  }

  std::vector<std::string_view> fields(std::string_view line, std::size_t expected,
                                       const char* what) const {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && line[i] == ' ') ++i;
      if (i >= line.size()) break;
      std::size_t j = line.find(' ', i);
      if (j == std::string_view::npos) j = line.size();
      out.push_back(line.substr(i, j - i));
      i = j;
    }
    if (out.size() != expected) {
      fail(std::string(what) + ": expected " + std::to_string(expected) + " fields, got " +
           std::to_string(out.size()));
    }
    return out;
  }

  std::size_t number(std::string_view field, const char* what) const {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      fail(std::string("invalid ") + what + " '" + std::string(field) + "'");
    }
    return value;
  }

  std::size_t section(std::string_view name) {
    const auto f = fields(require_line(std::string(name).c_str()), 2, "section header");
    if (f[0] != name) fail("expected section '" + std::string(name) + "', got '" + std::string(f[0]) + "'");
    return number(f[1], "count");
  }

  std::string unescape(std::string_view s) const {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '\\') {
        out += s[i];
        continue;
      }
      if (++i >= s.size()) fail("dangling escape");
      switch (s[i]) {
        case '\\': out += '\\'; break;
        case 'n': out += '\n'; break;
        case 's': out += ' '; break;
        default: fail(std::string("unknown escape \\") + s[i]);
      }
    }
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

unsigned read_header(Reader& in) {
  const auto magic = in.fields(in.require_line("header"), 2, "header");
  if (magic[0] != kMagic) in.fail("not a graph file (missing 'msgraph' header)");
  const std::size_t version = in.number(magic[1], "version");
  if (version != static_cast<std::size_t>(kGraphFormatVersion)) {
    throw Error(ErrorCode::VersionError, "unsupported graph format version " +
                                             std::to_string(version) + " (expected " +
                                             std::to_string(kGraphFormatVersion) + ")");
  }
  return static_cast<unsigned>(in.section("precision"));
}

}  // namespace

std::string format_graph(const UnitGraph& g) {
  std::ostringstream os;
  os << kMagic << " " << kGraphFormatVersion << "\n";
  os << "precision " << precision() << "\n";
  os << "vertices " << g.vertices.size() << "\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    os << i << " " << format_lossless(g.vertices[i].x) << " " << format_lossless(g.vertices[i].y) << "\n";
  }
  os << "edges " << g.edges.size() << "\n";
  for (const Edge& e : g.edges) os << e.u << " " << e.v << "\n";
  os << "triangles " << g.triangles.size() << "\n";
  for (const Triangle& t : g.triangles) os << t[0] << " " << t[1] << " " << t[2] << "\n";
  os << "labels " << g.labels.size() << "\n";
  for (const auto& [name, v] : g.labels) os << escape(name, true) << " " << v << "\n";
  os << "meta " << g.meta.size() << "\n";
  for (const auto& [key, value] : g.meta) os << escape(key, true) << " " << escape(value, false) << "\n";
  os << "end\n";
  return os.str();
}

unsigned peek_precision(std::string_view text) {
  Reader in(text);
  return read_header(in);
}

GraphDocument parse_graph(std::string_view text) {
  Reader in(text);
  GraphDocument doc;
  doc.precision = read_header(in);
  UnitGraph& g = doc.graph;

  const std::size_t nv = in.section("vertices");
  for (std::size_t i = 0; i < nv; ++i) {
    const auto f = in.fields(in.require_line("vertex"), 3, "vertex");
    if (in.number(f[0], "vertex id") != i) in.fail("vertex ids must be consecutive from 0");
    try {
      g.vertices.push_back({parse_scalar(f[1]), parse_scalar(f[2])});
    } catch (const std::exception&) {
      in.fail("invalid coordinate");
    }
  }
  const std::size_t ne = in.section("edges");
  for (std::size_t i = 0; i < ne; ++i) {
    const auto f = in.fields(in.require_line("edge"), 2, "edge");
    g.edges.emplace_back(in.number(f[0], "vertex id"), in.number(f[1], "vertex id"));
  }
  const std::size_t nt = in.section("triangles");
  for (std::size_t i = 0; i < nt; ++i) {
    const auto f = in.fields(in.require_line("triangle"), 3, "triangle");
    g.triangles.push_back(make_triangle(in.number(f[0], "vertex id"), in.number(f[1], "vertex id"),
                                        in.number(f[2], "vertex id")));
  }
  const std::size_t nl = in.section("labels");
  for (std::size_t i = 0; i < nl; ++i) {
    const auto f = in.fields(in.require_line("label"), 2, "label");
    g.labels[in.unescape(f[0])] = in.number(f[1], "vertex id");
  }
  const std::size_t nm = in.section("meta");
  for (std::size_t i = 0; i < nm; ++i) {
    const std::string_view line = in.require_line("meta entry");
    const std::size_t space = line.find(' ');
    if (space == std::string_view::npos || space == 0) in.fail("meta entry needs a key and a value");
    g.meta[in.unescape(line.substr(0, space))] = in.unescape(line.substr(space + 1));
  }
  std::string_view line;
  if (!in.next_line(line) || line != "end") in.fail("expected 'end'");
  while (in.next_line(line)) {
    if (!line.empty()) in.fail("content after 'end'");
  }

  for (const auto& [name, v] : g.labels) {
    if (v >= g.vertices.size()) in.fail("label '" + name + "' refers to a missing vertex");
  }
  g.canonicalize();
  try {
    validate(g);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return doc;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_graph(const UnitGraph& g, const std::filesystem::path& path) {
  write_text_file(path, format_graph(g));
}

UnitGraph read_graph(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path)).graph;
}

}  // namespace matchstick
