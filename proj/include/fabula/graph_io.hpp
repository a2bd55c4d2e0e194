// Copyright 2026 The Fabula Authors
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

#ifndef FABULA_GRAPH_IO_HPP_
#define FABULA_GRAPH_IO_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "fabula/types.hpp"

namespace fabula {

enum class GraphFormat { Gexf, GraphML, Dot, Json };

// Parses "gexf" | "graphml" | "dot" | "json"; throws UnsupportedFormat.
GraphFormat graph_format_from(std::string_view name);
std::string_view to_string(GraphFormat format);

// Visual attributes: vertex size and color position follow degree, edge
// thickness and color position follow weight. All maps are affine and
// monotone in their source quantity; ramp positions are in [0, 1].
struct NetworkStyle {
  std::map<int, double> vertex_size;
  std::map<int, double> vertex_color;
  std::map<std::pair<int, int>, double> edge_thickness;
  std::map<std::pair<int, int>, double> edge_color;
};

NetworkStyle compute_style(const CharacterNetwork& network);

// Ramp position -> RGB on a blue-to-crimson ramp.
void style_rgb(double position, int* r, int* g, int* b);

// Serializes a static or dynamic network.
//   gexf     GEXF 1.3; dynamic networks use integer intervals, one per slice
//   graphml  weight / canonical-name attributes (static; dynamic flattens
//            slices into per-interval attributes)
//   dot      undirected graph with weight attributes
//   json     the stable schema documented in the README
// `styled` adds the visual attributes. Output is deterministic byte-for-byte.
// Throws SerializationError on invariant violations.
std::string export_network(const NetworkArtifact& network, GraphFormat format,
                           bool styled = false);

// Reads back a GEXF document produced by export_network; the result compares
// equal to the original network, slice boundaries included.
// Throws SerializationError on malformed input.
NetworkArtifact import_gexf(std::string_view gexf);

// Reads back the JSON schema. Throws SerializationError.
NetworkArtifact import_json(std::string_view json_text);

}  // namespace fabula

#endif  // FABULA_GRAPH_IO_HPP_
