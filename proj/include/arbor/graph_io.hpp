#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/digraph.hpp"

namespace arbor {

struct EdgeRecord {
  std::string from;
  std::string to;
  std::optional<std::string> weight;  // "a" or "a/b"
  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// JSON graph file:
///   { "vertices": ["v1", ...],            (optional)
///     "edges": [ {"from": "v1", "to": "v2", "weight": "3/2"}, ... ] }
/// Without "vertices", labels are taken from edge endpoints in first-seen order.
struct GraphDocument {
  std::optional<std::vector<std::string>> vertices;
  std::vector<EdgeRecord> edges;
  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// Throws Error(ParseError) with the offending field in the message.
GraphDocument parse_document(std::string_view text);

/// Builds the graph; construction errors keep their kind and gain an
/// "edges[k]" location prefix.
Digraph to_digraph(const GraphDocument& doc);

Digraph parse_graph(std::string_view text);

std::string serialize(const GraphDocument& doc);

/// Weight grammar: digits, or digits "/" positive digits.
Rational parse_weight(std::string_view text);

}  // namespace arbor
