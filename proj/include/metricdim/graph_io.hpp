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

#ifndef METRICDIM_GRAPH_IO_HPP
#define METRICDIM_GRAPH_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

enum class GraphFormat { kEdgeList, kGraph6 };

// graph6: N(n) followed by the upper triangle in column order
// x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per byte, each byte + 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

// Edge list: optional "n <count>" line, then "a b" per edge; '#' starts a
// comment line. Writing always emits the "n" line and edges in sorted order.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

/// Guess the format from the first meaningful line.
GraphFormat detect_format(std::string_view text);

/// Parse a whole document: one graph for edge lists, one per line for graph6.
std::vector<Graph> parse_graphs(std::string_view text);

/// Reads and parses a file. Throws FormatError (line 0) if it cannot be opened.
std::vector<Graph> read_graph_file(const std::string& path);

}  // namespace metricdim

#endif  // METRICDIM_GRAPH_IO_HPP
