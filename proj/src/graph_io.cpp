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

#include "fabula/graph_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "fabula/errors.hpp"
#include "xml.hpp"

namespace fabula {
namespace {

using nlohmann::ordered_json;

constexpr double kMinVertexSize = 4.0;
constexpr double kMaxVertexSize = 20.0;
constexpr double kMinEdgeThickness = 1.0;
constexpr double kMaxEdgeThickness = 6.0;

void check_network(const CharacterNetwork& net) {
  for (const auto& e : net.edges) {
    if (e.a >= e.b)
      throw SerializationError("edge endpoints must satisfy a < b");
    if (e.weight < 1) throw SerializationError("edge weight must be >= 1");
  }
}

}  // namespace

GraphFormat graph_format_from(std::string_view name) {
  if (name == "gexf") return GraphFormat::Gexf;
  if (name == "graphml") return GraphFormat::GraphML;
  if (name == "dot") return GraphFormat::Dot;
  if (name == "json") return GraphFormat::Json;
  throw UnsupportedFormat("unsupported graph format '" + std::string(name) +
                          "' (expected gexf, graphml, dot or json)");
}

std::string_view to_string(GraphFormat format) {
  switch (format) {
    case GraphFormat::Gexf:
      return "gexf";
    case GraphFormat::GraphML:
      return "graphml";
    case GraphFormat::Dot:
      return "dot";
    case GraphFormat::Json:
      return "json";
  }
  return "json";
}

NetworkStyle compute_style(const CharacterNetwork& network) {
  NetworkStyle style;
  if (!network.vertices.empty()) {
    int dmin = network.vertices.front().degree;
    int dmax = dmin;
    for (const auto& v : network.vertices) {
      dmin = std::min(dmin, v.degree);
      dmax = std::max(dmax, v.degree);
    }
    for (const auto& v : network.vertices) {
      double t = dmax == dmin
                     ? 0.5
                     : static_cast<double>(v.degree - dmin) / (dmax - dmin);
      style.vertex_size[v.id] =
          kMinVertexSize + t * (kMaxVertexSize - kMinVertexSize);
      style.vertex_color[v.id] = t;
    }
  }
  if (!network.edges.empty()) {
    int wmin = network.edges.front().weight;
    int wmax = wmin;
    for (const auto& e : network.edges) {
      wmin = std::min(wmin, e.weight);
      wmax = std::max(wmax, e.weight);
    }
    for (const auto& e : network.edges) {
      double t = wmax == wmin
                     ? 0.5
                     : static_cast<double>(e.weight - wmin) / (wmax - wmin);
      style.edge_thickness[{e.a, e.b}] =
          kMinEdgeThickness + t * (kMaxEdgeThickness - kMinEdgeThickness);
      style.edge_color[{e.a, e.b}] = t;
    }
  }
  return style;
}

void style_rgb(double position, int* r, int* g, int* b) {
  // steel blue -> crimson
  *r = static_cast<int>(70 + position * (220 - 70));
  *g = static_cast<int>(130 + position * (20 - 130));
  *b = static_cast<int>(180 + position * (60 - 180));
}

// --- GEXF --------------------------------------------------------------------

namespace {

void write_gexf_node_attrs(xml::Writer& w) {
  w.open("attributes");
  w.attr("class", "node");
  w.open("attribute");
  w.attr("id", "mentions");
  w.attr("title", "mentions");
  w.attr("type", "integer");
  w.close();
  w.open("attribute");
  w.attr("id", "degree");
  w.attr("title", "degree");
  w.attr("type", "integer");
  w.close();
  w.close();
}

void write_viz_color(xml::Writer& w, double position) {
  int r, g, b;
  style_rgb(position, &r, &g, &b);
  w.open("viz:color");
  w.attr("r", r);
  w.attr("g", g);
  w.attr("b", b);
  w.close();
}

std::string export_gexf_static(const CharacterNetwork& net, bool styled) {
  check_network(net);
  NetworkStyle style;
  if (styled) style = compute_style(net);

  xml::Writer w;
  w.open("gexf");
  w.attr("xmlns", "http://gexf.net/1.3");
  if (styled) w.attr("xmlns:viz", "http://gexf.net/1.3/viz");
  w.attr("version", "1.3");
  w.open("meta");
  w.open("creator");
  w.text("fabula");
  w.close();
  w.close();
  w.open("graph");
  w.attr("defaultedgetype", "undirected");
  w.attr("mode", "static");
  write_gexf_node_attrs(w);

  w.open("nodes");
  w.attr("count", static_cast<int>(net.vertices.size()));
  for (const auto& v : net.vertices) {
    w.open("node");
    w.attr("id", v.id);
    w.attr("label", v.canonical);
    w.open("attvalues");
    w.open("attvalue");
    w.attr("for", "mentions");
    w.attr("value", v.mention_count);
    w.close();
    w.open("attvalue");
    w.attr("for", "degree");
    w.attr("value", v.degree);
    w.close();
    w.close();
    if (styled) {
      w.open("viz:size");
      w.attr("value", style.vertex_size.at(v.id));
      w.close();
      write_viz_color(w, style.vertex_color.at(v.id));
    }
    w.close();
  }
  w.close();

  w.open("edges");
  w.attr("count", static_cast<int>(net.edges.size()));
  int edge_id = 0;
  for (const auto& e : net.edges) {
    w.open("edge");
    w.attr("id", edge_id++);
    w.attr("source", e.a);
    w.attr("target", e.b);
    w.attr("weight", e.weight);
    if (styled) {
      w.open("viz:thickness");
      w.attr("value", style.edge_thickness.at({e.a, e.b}));
      w.close();
      write_viz_color(w, style.edge_color.at({e.a, e.b}));
    }
    w.close();
  }
  w.close();
  w.close();  // graph
  w.close();  // gexf
  return w.take();
}

std::string export_gexf_dynamic(const DynamicNetwork& net, bool styled) {
  // Vertex presence is written as spells, per-slice attributes as dynamic
  // attvalues, per-slice edges as interval edges. The window list lives in
  // meta/description so empty slices survive a round trip.
  struct NodeInfo {
    std::string label;
    std::vector<const NetworkSlice*> slices;
    std::vector<const NetworkVertex*> vertices;
  };
  std::map<int, NodeInfo> nodes;
  for (const auto& slice : net.slices) {
    check_network(slice.graph);
    for (const auto& v : slice.graph.vertices) {
      NodeInfo& info = nodes[v.id];
      info.label = v.canonical;
      info.slices.push_back(&slice);
      info.vertices.push_back(&v);
    }
  }
  std::map<const NetworkSlice*, NetworkStyle> styles;
  if (styled)
    for (const auto& slice : net.slices)
      styles[&slice] = compute_style(slice.graph);

  xml::Writer w;
  w.open("gexf");
  w.attr("xmlns", "http://gexf.net/1.3");
  if (styled) w.attr("xmlns:viz", "http://gexf.net/1.3/viz");
  w.attr("version", "1.3");
  w.open("meta");
  w.open("creator");
  w.text("fabula");
  w.close();
  std::string windows;
  for (const auto& slice : net.slices) {
    if (!windows.empty()) windows += ' ';
    windows += std::to_string(slice.window_start) + ":" +
               std::to_string(slice.window_end);
  }
  w.open("description");
  w.text("windows=" + windows);
  w.close();
  w.close();

  w.open("graph");
  w.attr("defaultedgetype", "undirected");
  w.attr("mode", "dynamic");
  w.attr("timeformat", "integer");
  w.attr("timerepresentation", "interval");
  write_gexf_node_attrs(w);

  w.open("nodes");
  w.attr("count", static_cast<int>(nodes.size()));
  for (const auto& [id, info] : nodes) {
    w.open("node");
    w.attr("id", id);
    w.attr("label", info.label);
    w.open("spells");
    for (const auto* slice : info.slices) {
      w.open("spell");
      w.attr("start", slice->window_start);
      w.attr("end", slice->window_end);
      w.close();
    }
    w.close();
    w.open("attvalues");
    for (std::size_t k = 0; k < info.slices.size(); ++k) {
      w.open("attvalue");
      w.attr("for", "mentions");
      w.attr("value", info.vertices[k]->mention_count);
      w.attr("start", info.slices[k]->window_start);
      w.attr("end", info.slices[k]->window_end);
      w.close();
      w.open("attvalue");
      w.attr("for", "degree");
      w.attr("value", info.vertices[k]->degree);
      w.attr("start", info.slices[k]->window_start);
      w.attr("end", info.slices[k]->window_end);
      w.close();
    }
    w.close();
    w.close();
  }
  w.close();

  w.open("edges");
  int total_edges = 0;
  for (const auto& slice : net.slices)
    total_edges += static_cast<int>(slice.graph.edges.size());
  w.attr("count", total_edges);
  int edge_id = 0;
  for (const auto& slice : net.slices) {
    for (const auto& e : slice.graph.edges) {
      w.open("edge");
      w.attr("id", edge_id++);
      w.attr("source", e.a);
      w.attr("target", e.b);
      w.attr("weight", e.weight);
      w.attr("start", slice.window_start);
      w.attr("end", slice.window_end);
      if (styled) {
        const NetworkStyle& style = styles[&slice];
        w.open("viz:thickness");
        w.attr("value", style.edge_thickness.at({e.a, e.b}));
        w.close();
        write_viz_color(w, style.edge_color.at({e.a, e.b}));
      }
      w.close();
    }
  }
  w.close();
  w.close();  // graph
  w.close();  // gexf
  return w.take();
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw SerializationError("gexf: bad " + std::string(what) + " value '" +
                             s + "'");
  }
}

}  // namespace

NetworkArtifact import_gexf(std::string_view gexf) {
  xml::Node root = xml::parse(gexf);
  if (root.name != "gexf") throw SerializationError("gexf: missing root");
  const xml::Node* graph = root.child("graph");
  if (!graph) throw SerializationError("gexf: missing <graph>");
  const bool dynamic = graph->attr("mode", "static") == "dynamic";
  const xml::Node* nodes = graph->child("nodes");
  const xml::Node* edges = graph->child("edges");

  auto attvalue_plain = [&](const xml::Node& node, const std::string& key,
                            int fallback) {
    const xml::Node* values = node.child("attvalues");
    if (!values) return fallback;
    for (const auto* av : values->children_named("attvalue"))
      if (av->attr("for") == key && !av->has_attr("start"))
        return parse_int(av->attr("value"), "attvalue");
    return fallback;
  };

  if (!dynamic) {
    CharacterNetwork net;
    if (nodes)
      for (const auto* n : nodes->children_named("node")) {
        NetworkVertex v;
        v.id = parse_int(n->attr("id"), "node id");
        v.canonical = n->attr("label");
        v.mention_count = attvalue_plain(*n, "mentions", 0);
        v.degree = attvalue_plain(*n, "degree", 0);
        net.vertices.push_back(std::move(v));
      }
    if (edges)
      for (const auto* e : edges->children_named("edge")) {
        NetworkEdge edge;
        edge.a = parse_int(e->attr("source"), "edge source");
        edge.b = parse_int(e->attr("target"), "edge target");
        edge.weight = parse_int(e->attr("weight", "1"), "edge weight");
        if (edge.a > edge.b) std::swap(edge.a, edge.b);
        net.edges.push_back(edge);
      }
    std::sort(net.vertices.begin(), net.vertices.end(),
              [](const NetworkVertex& a, const NetworkVertex& b) {
                return a.id < b.id;
              });
    std::sort(net.edges.begin(), net.edges.end());
    return NetworkArtifact{net};
  }

  // Dynamic: slice layout comes from the meta description.
  DynamicNetwork net;
  const xml::Node* meta = root.child("meta");
  const xml::Node* description = meta ? meta->child("description") : nullptr;
  if (!description)
    throw SerializationError("gexf: dynamic graph without window description");
  std::string desc = description->text;
  const std::string prefix = "windows=";
  if (desc.rfind(prefix, 0) != 0)
    throw SerializationError("gexf: malformed window description");
  std::map<std::pair<int, int>, int> slice_index;
  std::istringstream stream(desc.substr(prefix.size()));
  std::string item;
  while (stream >> item) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw SerializationError("gexf: malformed window '" + item + "'");
    NetworkSlice slice;
    slice.window_start = parse_int(item.substr(0, colon), "window start");
    slice.window_end = parse_int(item.substr(colon + 1), "window end");
    slice_index[{slice.window_start, slice.window_end}] =
        static_cast<int>(net.slices.size());
    net.slices.push_back(std::move(slice));
  }

  auto slice_for = [&](const xml::Node& node) -> int {
    int start = parse_int(node.attr("start"), "interval start");
    int end = parse_int(node.attr("end"), "interval end");
    auto it = slice_index.find({start, end});
    if (it == slice_index.end())
      throw SerializationError("gexf: interval does not match any window");
    return it->second;
  };

  if (nodes)
    for (const auto* n : nodes->children_named("node")) {
      int id = parse_int(n->attr("id"), "node id");
      std::string label = n->attr("label");
      const xml::Node* spells = n->child("spells");
      if (!spells) continue;
      std::map<int, NetworkVertex> per_slice;
      for (const auto* spell : spells->children_named("spell")) {
        int k = slice_for(*spell);
        NetworkVertex v;
        v.id = id;
        v.canonical = label;
        per_slice[k] = v;
      }
      const xml::Node* values = n->child("attvalues");
      if (values)
        for (const auto* av : values->children_named("attvalue")) {
          if (!av->has_attr("start")) continue;
          int k = slice_for(*av);
          auto it = per_slice.find(k);
          if (it == per_slice.end()) continue;
          int value = parse_int(av->attr("value"), "attvalue");
          if (av->attr("for") == "mentions")
            it->second.mention_count = value;
          else if (av->attr("for") == "degree")
            it->second.degree = value;
        }
      for (auto& [k, v] : per_slice)
        net.slices[k].graph.vertices.push_back(std::move(v));
    }
  if (edges)
    for (const auto* e : edges->children_named("edge")) {
      int k = slice_for(*e);
      NetworkEdge edge;
      edge.a = parse_int(e->attr("source"), "edge source");
      edge.b = parse_int(e->attr("target"), "edge target");
      edge.weight = parse_int(e->attr("weight", "1"), "edge weight");
      if (edge.a > edge.b) std::swap(edge.a, edge.b);
      net.slices[k].graph.edges.push_back(edge);
    }

  for (auto& slice : net.slices) {
    std::sort(slice.graph.vertices.begin(), slice.graph.vertices.end(),
              [](const NetworkVertex& a, const NetworkVertex& b) {
                return a.id < b.id;
              });
    std::sort(slice.graph.edges.begin(), slice.graph.edges.end());
  }
  return NetworkArtifact{net};
}

// --- JSON --------------------------------------------------------------------

namespace {

ordered_json network_json(const CharacterNetwork& net, bool styled) {
  check_network(net);
  NetworkStyle style;
  if (styled) style = compute_style(net);
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (const auto& v : net.vertices) {
    ordered_json vertex;
    vertex["id"] = v.id;
    vertex["canonical"] = v.canonical;
    vertex["mentions"] = v.mention_count;
    vertex["degree"] = v.degree;
    if (styled) {
      vertex["size"] = style.vertex_size.at(v.id);
      vertex["color"] = style.vertex_color.at(v.id);
    }
    doc["vertices"].push_back(std::move(vertex));
  }
  doc["edges"] = ordered_json::array();
  for (const auto& e : net.edges) {
    ordered_json edge;
    edge["source"] = e.a;
    edge["target"] = e.b;
    edge["weight"] = e.weight;
    if (styled) {
      edge["thickness"] = style.edge_thickness.at({e.a, e.b});
      edge["color"] = style.edge_color.at({e.a, e.b});
    }
    doc["edges"].push_back(std::move(edge));
  }
  return doc;
}

std::string export_json(const NetworkArtifact& artifact, bool styled) {
  ordered_json doc;
  doc["schema"] = "fabula-network/1";
  if (artifact.is_dynamic()) {
    doc["kind"] = "dynamic";
    doc["slices"] = ordered_json::array();
    for (const auto& slice : artifact.dynamic_network().slices) {
      ordered_json s = network_json(slice.graph, styled);
      ordered_json wrapped;
      wrapped["start"] = slice.window_start;
      wrapped["end"] = slice.window_end;
      wrapped["vertices"] = std::move(s["vertices"]);
      wrapped["edges"] = std::move(s["edges"]);
      doc["slices"].push_back(std::move(wrapped));
    }
  } else {
    doc["kind"] = "static";
    ordered_json s = network_json(artifact.static_network(), styled);
    doc["vertices"] = std::move(s["vertices"]);
    doc["edges"] = std::move(s["edges"]);
  }
  return doc.dump(2) + "\n";
}

CharacterNetwork network_from_json(const nlohmann::json& doc) {
  CharacterNetwork net;
  for (const auto& v : doc.value("vertices", nlohmann::json::array())) {
    NetworkVertex vertex;
    vertex.id = v.at("id").get<int>();
    vertex.canonical = v.value("canonical", "");
    vertex.mention_count = v.value("mentions", 0);
    vertex.degree = v.value("degree", 0);
    net.vertices.push_back(std::move(vertex));
  }
  for (const auto& e : doc.value("edges", nlohmann::json::array())) {
    NetworkEdge edge;
    edge.a = e.at("source").get<int>();
    edge.b = e.at("target").get<int>();
    edge.weight = e.value("weight", 1);
    if (edge.a > edge.b) std::swap(edge.a, edge.b);
    net.edges.push_back(edge);
  }
  std::sort(net.vertices.begin(), net.vertices.end(),
            [](const NetworkVertex& a, const NetworkVertex& b) {
              return a.id < b.id;
            });
  std::sort(net.edges.begin(), net.edges.end());
  return net;
}

}  // namespace

NetworkArtifact import_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SerializationError(std::string("json: ") + e.what());
  }
  try {
    if (doc.value("schema", "") != "fabula-network/1")
      throw SerializationError("json: unknown or missing schema");
    if (doc.value("kind", "static") == "dynamic") {
      DynamicNetwork net;
      for (const auto& s : doc.value("slices", nlohmann::json::array())) {
        NetworkSlice slice;
        slice.window_start = s.at("start").get<int>();
        slice.window_end = s.at("end").get<int>();
        slice.graph = network_from_json(s);
        net.slices.push_back(std::move(slice));
      }
      return NetworkArtifact{net};
    }
    return NetworkArtifact{network_from_json(doc)};
  } catch (const nlohmann::json::exception& e) {
    throw SerializationError(std::string("json: ") + e.what());
  }
}

// --- GraphML and DOT ----------------------------------------------------------

namespace {

void write_graphml_keys(xml::Writer& w, bool styled) {
  auto key = [&](const char* id, const char* domain, const char* type) {
    w.open("key");
    w.attr("id", id);
    w.attr("for", domain);
    w.attr("attr.name", id);
    w.attr("attr.type", type);
    w.close();
  };
  key("canonical", "node", "string");
  key("mentions", "node", "int");
  key("degree", "node", "int");
  key("weight", "edge", "int");
  key("window_start", "graph", "int");
  key("window_end", "graph", "int");
  if (styled) {
    key("size", "node", "double");
    key("color", "node", "double");
    key("thickness", "edge", "double");
    key("edge_color", "edge", "double");
  }
}

void write_graphml_graph(xml::Writer& w, const CharacterNetwork& net,
                         const std::string& id, bool styled,
                         const NetworkSlice* slice) {
  check_network(net);
  NetworkStyle style;
  if (styled) style = compute_style(net);
  w.open("graph");
  w.attr("id", id);
  w.attr("edgedefault", "undirected");
  auto data = [&](const char* key, const std::string& value) {
    w.open("data");
    w.attr("key", key);
    w.text(value);
    w.close();
  };
  if (slice) {
    data("window_start", std::to_string(slice->window_start));
    data("window_end", std::to_string(slice->window_end));
  }
  for (const auto& v : net.vertices) {
    w.open("node");
    w.attr("id", "n" + std::to_string(v.id));
    data("canonical", v.canonical);
    data("mentions", std::to_string(v.mention_count));
    data("degree", std::to_string(v.degree));
    if (styled) {
      data("size", xml::format_double(style.vertex_size.at(v.id)));
      data("color", xml::format_double(style.vertex_color.at(v.id)));
    }
    w.close();
  }
  int edge_id = 0;
  for (const auto& e : net.edges) {
    w.open("edge");
    w.attr("id", id + "e" + std::to_string(edge_id++));
    w.attr("source", "n" + std::to_string(e.a));
    w.attr("target", "n" + std::to_string(e.b));
    data("weight", std::to_string(e.weight));
    if (styled) {
      data("thickness", xml::format_double(style.edge_thickness.at({e.a, e.b})));
      data("edge_color", xml::format_double(style.edge_color.at({e.a, e.b})));
    }
    w.close();
  }
  w.close();
}

std::string export_graphml(const NetworkArtifact& artifact, bool styled) {
  xml::Writer w;
  w.open("graphml");
  w.attr("xmlns", "http://graphml.graphdrawing.org/xmlns");
  write_graphml_keys(w, styled);
  if (artifact.is_dynamic()) {
    int k = 0;
    for (const auto& slice : artifact.dynamic_network().slices)
      write_graphml_graph(w, slice.graph, "slice" + std::to_string(k++),
                          styled, &slice);
  } else {
    write_graphml_graph(w, artifact.static_network(), "G", styled, nullptr);
  }
  w.close();
  return w.take();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void write_dot_graph(std::ostringstream& out, const CharacterNetwork& net,
                     const std::string& name, bool styled,
                     const NetworkSlice* slice) {
  check_network(net);
  NetworkStyle style;
  if (styled) style = compute_style(net);
  out << "graph " << name << " {\n";
  if (slice)
    out << "  // window [" << slice->window_start << ", " << slice->window_end
        << ")\n";
  for (const auto& v : net.vertices) {
    out << "  n" << v.id << " [label=\"" << dot_escape(v.canonical)
        << "\", mentions=" << v.mention_count << ", degree=" << v.degree;
    if (styled) {
      int r, g, b;
      style_rgb(style.vertex_color.at(v.id), &r, &g, &b);
      char color[16];
      std::snprintf(color, sizeof(color), "#%02x%02x%02x", r, g, b);
      out << ", width=" << xml::format_double(style.vertex_size.at(v.id) / 10.0)
          << ", style=filled, fillcolor=\"" << color << "\"";
    }
    out << "];\n";
  }
  for (const auto& e : net.edges) {
    out << "  n" << e.a << " -- n" << e.b << " [weight=" << e.weight;
    if (styled)
      out << ", penwidth="
          << xml::format_double(style.edge_thickness.at({e.a, e.b}));
    out << "];\n";
  }
  out << "}\n";
}

std::string export_dot(const NetworkArtifact& artifact, bool styled) {
  std::ostringstream out;
  if (artifact.is_dynamic()) {
    int k = 0;
    for (const auto& slice : artifact.dynamic_network().slices)
      write_dot_graph(out, slice.graph, "slice" + std::to_string(k++), styled,
                      &slice);
  } else {
    write_dot_graph(out, artifact.static_network(), "character_network",
                    styled, nullptr);
  }
  return out.str();
}

}  // namespace

std::string export_network(const NetworkArtifact& network, GraphFormat format,
                           bool styled) {
  switch (format) {
    case GraphFormat::Gexf:
      return network.is_dynamic()
                 ? export_gexf_dynamic(network.dynamic_network(), styled)
                 : export_gexf_static(network.static_network(), styled);
    case GraphFormat::GraphML:
      return export_graphml(network, styled);
    case GraphFormat::Dot:
      return export_dot(network, styled);
    case GraphFormat::Json:
      return export_json(network, styled);
  }
  throw UnsupportedFormat("unsupported graph format");
}

}  // namespace fabula
