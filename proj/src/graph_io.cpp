// Copyright 2026 The metricdim Authors
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

#include "metricdim/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace metricdim {

namespace {

constexpr char kGraph6Header[] = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view token, long long& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

bool is_graph6_char(char c) { return c >= 63 && c <= 126; }

bool looks_like_graph6(std::string_view line) {
  if (line.starts_with(kGraph6Header)) return true;
  for (char c : line) {
    if (!is_graph6_char(c)) return false;
  }
  return !line.empty();
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(sizeof(kGraph6Header) - 1);
  if (line.empty()) throw FormatError(1, "empty graph6 string");
  for (char c : line) {
    if (!is_graph6_char(c)) {
      throw FormatError(1, "invalid graph6 character '" + std::string(1, c) + "'");
    }
  }
  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto read_group = [&](int count) {
    if (pos + count > line.size()) throw FormatError(1, "truncated graph6 size field");
    for (int k = 0; k < count; ++k) n = (n << 6) | static_cast<std::uint64_t>(line[pos++] - 63);
  };
  if (line[0] != 126) {
    n = static_cast<std::uint64_t>(line[0] - 63);
    pos = 1;
  } else if (line.size() > 1 && line[1] != 126) {
    pos = 1;
    read_group(3);
  } else {
    pos = 2;
    read_group(6);
  }
  if (n > 1000000) throw FormatError(1, "graph6 vertex count too large");
  const std::uint64_t bit_count = n * (n > 0 ? n - 1 : 0) / 2;
  const std::uint64_t expected = (bit_count + 5) / 6;
  if (line.size() - pos != expected) {
    throw FormatError(1, "graph6 body has " + std::to_string(line.size() - pos) +
                             " bytes, expected " + std::to_string(expected));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const int last = line.back() - 63;
    if ((last & ((1 << (6 - bit_count % 6)) - 1)) != 0) {
      throw FormatError(1, "graph6 padding bits must be zero");
    }
  }
  return build_graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph from_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<std::pair<Vertex, Vertex>> edges;
  long long declared_n = -1;
  long long max_id = -1;
  bool seen_content = false;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const int line_no = static_cast<int>(idx) + 1;
    const std::string_view line = trim(lines[idx]);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (!seen_content && tokens.size() == 2 && tokens[0] == "n") {
      seen_content = true;
      if (!parse_int(tokens[1], declared_n) || declared_n < 0 || declared_n > 1000000) {
        throw FormatError(line_no, "bad vertex count '" + std::string(tokens[1]) + "'");
      }
      continue;
    }
    seen_content = true;
    long long a = 0, b = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b) ||
        a < 0 || b < 0 || a > 1000000 || b > 1000000) {
      throw FormatError(line_no, "expected two non-negative vertex ids, got '" +
                                     std::string(line) + "'");
    }
    max_id = std::max({max_id, a, b});
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  const long long n = declared_n >= 0 ? declared_n : max_id + 1;
  try {
    return build_graph(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw FormatError(0, e.what());
  }
}

GraphFormat detect_format(std::string_view text) {
  for (std::string_view raw : split_lines(text)) {
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    return looks_like_graph6(line) ? GraphFormat::kGraph6 : GraphFormat::kEdgeList;
  }
  return GraphFormat::kEdgeList;
}

std::vector<Graph> parse_graphs(std::string_view text) {
  if (detect_format(text) == GraphFormat::kEdgeList) return {from_edge_list(text)};
  std::vector<Graph> graphs;
  const auto lines = split_lines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::string_view line = trim(lines[idx]);
    if (line.empty() || line.front() == '#') continue;
    try {
      graphs.push_back(from_graph6(line));
    } catch (const FormatError& e) {
      throw FormatError(static_cast<int>(idx) + 1, e.what());
    } catch (const GraphError& e) {
      throw FormatError(static_cast<int>(idx) + 1, e.what());
    }
  }
  return graphs;
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graphs(buffer.str());
}

}  // namespace metricdim
