#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "observa/colored_digraph.hpp"

namespace observa {

enum class GraphFormat { json, dot };

/// Malformed input. location() is "line L, column C" for syntax errors and a
/// field path such as "edges[3][1]" for schema errors.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::string location)
        : std::runtime_error(location.empty() ? message : location + ": " + message),
          location_(std::move(location)) {}

    const std::string& location() const { return location_; }

private:
    std::string location_;
};

// JSON document:
//   {"nodes": [..], "colors": [..], "edges": [[from, to, color], ..],
//    "unobservable": [[from, to], ..], "node_colors": {node: color}}
// All references are labels. A two-element edge is an unobservable edge,
// unless "node_colors" is present, in which case it takes the color of its
// target node. Documents with no colors carry their uncolored edges in
// "edges" as pairs.
ColoredDigraph graph_from_json(const nlohmann::json& document);
nlohmann::json graph_to_json(const ColoredDigraph& graph);

// DOT: a digraph whose edges carry label="<color>"; unlabeled edges are
// unobservable. The color order is kept in a "// colors: [..]" comment.
ColoredDigraph graph_from_dot(std::string_view text);
std::string graph_to_dot(const ColoredDigraph& graph);

ColoredDigraph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const ColoredDigraph& graph, GraphFormat format);

/// JSON when the first non-blank character is '{', DOT otherwise.
GraphFormat detect_format(std::string_view text);

nlohmann::json parse_json_text(std::string_view text);

}  // namespace observa
