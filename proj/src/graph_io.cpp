#include "arbor/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "arbor/error.hpp"
#include "json.hpp"

namespace arbor {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

std::string require_string(const Json& node, const std::string& where) {
  if (!node.is_string()) fail(where, "expected a string");
  return node.get<std::string>();
}

bool digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

}  // namespace

Rational parse_weight(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!digits(num) ||
      (slash != std::string_view::npos && !digits(text.substr(slash + 1)))) {
    throw Error(ErrorKind::ParseError, "weight '" + std::string(text) +
                                           "' is not of the form N or N/D");
  }
  return parse_rational(text);
}

GraphDocument parse_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!root.is_object()) fail("document", "expected a JSON object");

  GraphDocument doc;
  for (const auto& [key, value] : root.items()) {
    if (key != "vertices" && key != "edges") fail("document", "unknown field '" + key + "'");
  }
  if (root.contains("vertices")) {
    const Json& vs = root["vertices"];
    if (!vs.is_array()) fail("vertices", "expected an array");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      labels.push_back(require_string(vs[i], "vertices[" + std::to_string(i) + "]"));
    }
    doc.vertices = std::move(labels);
  }
  if (!root.contains("edges")) fail("document", "missing field 'edges'");
  const Json& es = root["edges"];
  if (!es.is_array()) fail("edges", "expected an array");
  for (std::size_t k = 0; k < es.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const Json& e = es[k];
    if (!e.is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : e.items()) {
      if (key != "from" && key != "to" && key != "weight") {
        fail(where, "unknown field '" + key + "'");
      }
    }
    if (!e.contains("from")) fail(where, "missing field 'from'");
    if (!e.contains("to")) fail(where, "missing field 'to'");
    EdgeRecord rec{require_string(e["from"], where + ".from"),
                   require_string(e["to"], where + ".to"), std::nullopt};
    if (e.contains("weight")) {
      const Json& w = e["weight"];
      if (w.is_number_unsigned()) {
        rec.weight = std::to_string(w.get<std::uint64_t>());
      } else {
        rec.weight = require_string(w, where + ".weight");
      }
    }
    doc.edges.push_back(std::move(rec));
  }
  return doc;
}

Digraph to_digraph(const GraphDocument& doc) {
  std::vector<std::string> labels;
  if (doc.vertices) {
    labels = *doc.vertices;
  } else {
    std::set<std::string> seen;
    for (const EdgeRecord& e : doc.edges) {
      for (const std::string& l : {e.from, e.to}) {
        if (seen.insert(l).second) labels.push_back(l);
      }
    }
  }
  std::vector<EdgeSpec> specs;
  specs.reserve(doc.edges.size());
  for (std::size_t k = 0; k < doc.edges.size(); ++k) {
    const EdgeRecord& e = doc.edges[k];
    EdgeSpec spec{e.from, e.to, std::nullopt};
    if (e.weight) {
      try {
        spec.weight = parse_weight(*e.weight);
      } catch (const Error& err) {
        throw Error(err.kind(), "edges[" + std::to_string(k) + "].weight: " + err.what());
      }
    }
    specs.push_back(std::move(spec));
  }
  try {
    return Digraph::build(std::move(labels), specs);
  } catch (const Error& err) {
    throw Error(err.kind(), std::string("graph: ") + err.what());
  }
}

Digraph parse_graph(std::string_view text) { return to_digraph(parse_document(text)); }

std::string serialize(const GraphDocument& doc) {
  Json root = Json::object();
  if (doc.vertices) root["vertices"] = *doc.vertices;
  Json edges = Json::array();
  for (const EdgeRecord& e : doc.edges) {
    Json rec = {{"from", e.from}, {"to", e.to}};
    if (e.weight) rec["weight"] = *e.weight;
    edges.push_back(std::move(rec));
  }
  root["edges"] = std::move(edges);
  return root.dump(2) + "\n";
}

}  // namespace arbor
