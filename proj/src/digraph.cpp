#include "arbor/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "arbor/error.hpp"

namespace arbor {

std::string_view to_string(Mode mode) {
  return mode == Mode::Outgoing ? "outgoing" : "incoming";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "outgoing") return Mode::Outgoing;
  if (text == "incoming") return Mode::Incoming;
  return std::nullopt;
}

EdgeSubset::EdgeSubset(std::vector<std::size_t> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw Error(ErrorKind::IndexOutOfRange, "edge subset contains a repeated id");
  }
}

bool EdgeSubset::contains(std::size_t id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::string to_string(const EdgeSubset& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += "e" + std::to_string(s.ids()[k] + 1);
  }
  return out + "}";
}

Digraph Digraph::build(std::vector<std::string> labels, const std::vector<EdgeSpec>& edges) {
  if (labels.empty()) throw Error(ErrorKind::EmptyGraph, "graph needs at least one vertex");
  Digraph g;
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw Error(ErrorKind::ParseError, "vertex label must be nonempty");
    if (!index.emplace(labels[i], i).second) {
      throw Error(ErrorKind::DuplicateLabel, "duplicate vertex label '" + labels[i] + "'");
    }
  }
  g.labels_ = std::move(labels);

  auto lookup = [&](const std::string& label, std::size_t k) {
    auto it = index.find(label);
    if (it == index.end()) {
      throw Error(ErrorKind::UnknownEndpoint,
                  "edge e" + std::to_string(k + 1) + " references unknown vertex '" + label + "'");
    }
    return VertexId{it->second};
  };

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const EdgeSpec& spec = edges[k];
    Edge e{k, lookup(spec.from, k), lookup(spec.to, k), spec.weight.value_or(Rational(1))};
    const std::string name = "edge e" + std::to_string(k + 1);
    if (e.from == e.to) throw Error(ErrorKind::SelfLoop, name + " is a self-loop on '" + spec.from + "'");
    if (e.weight <= 0) {
      throw Error(ErrorKind::NonPositiveWeight,
                  name + " has non-positive weight " + to_string(e.weight));
    }
    if (!seen.emplace(e.from.index, e.to.index).second) {
      throw Error(ErrorKind::ParallelEdge,
                  name + " duplicates " + spec.from + "->" + spec.to);
    }
    g.weighted_ = g.weighted_ || spec.weight.has_value();
    g.edges_.push_back(std::move(e));
  }
  return g;
}

std::optional<VertexId> Digraph::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return VertexId{static_cast<std::size_t>(it - labels_.begin())};
}

VertexId Digraph::vertex(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorKind::UnknownEndpoint, "unknown vertex '" + std::string(label) + "'");
}

std::vector<Rational> Digraph::weights() const {
  std::vector<Rational> w;
  w.reserve(edges_.size());
  for (const Edge& e : edges_) w.push_back(e.weight);
  return w;
}

Digraph Digraph::reversed() const {
  Digraph g = *this;
  for (Edge& e : g.edges_) std::swap(e.from, e.to);
  return g;
}

namespace {

void check_subset(const Digraph& g, const EdgeSubset& s) {
  if (!s.empty() && s.ids().back() >= g.edge_count()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "edge id e" + std::to_string(s.ids().back() + 1) + " not in graph");
  }
}

void check_vertex(const Digraph& g, VertexId v) {
  if (v.index >= g.vertex_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex index " + std::to_string(v.index) +
                                                " out of range");
  }
}

// Adjacency lists over the chosen edges.
std::vector<std::vector<std::size_t>> successors(const Digraph& g, const EdgeSubset* restrict,
                                                 bool reverse = false) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  auto add = [&](const Edge& e) {
    if (reverse) {
      adj[e.to.index].push_back(e.from.index);
    } else {
      adj[e.from.index].push_back(e.to.index);
    }
  };
  if (restrict) {
    for (std::size_t id : *restrict) add(g.edge(id));
  } else {
    for (const Edge& e : g.edges()) add(e);
  }
  return adj;
}

std::size_t reach_count(const std::vector<std::vector<std::size_t>>& adj, std::size_t start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

std::size_t degree(const Digraph& g, VertexId v, Side side, const EdgeSubset* restrict) {
  check_vertex(g, v);
  auto touches = [&](const Edge& e) { return (side == Side::In ? e.to : e.from) == v; };
  std::size_t count = 0;
  if (restrict) {
    check_subset(g, *restrict);
    for (std::size_t id : *restrict) count += touches(g.edge(id)) ? 1 : 0;
  } else {
    for (const Edge& e : g.edges()) count += touches(e) ? 1 : 0;
  }
  return count;
}

bool has_directed_cycle(const Digraph& g, const EdgeSubset& restrict) {
  check_subset(g, restrict);
  const auto adj = successors(g, &restrict);
  enum Color : unsigned char { White, Grey, Black };
  std::vector<Color> color(g.vertex_count(), White);
  // Iterative DFS; a grey successor closes a cycle.
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != White) continue;
    color[s] = Grey;
    stack.emplace_back(s, 0);
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < adj[u].size()) {
        const std::size_t w = adj[u][next++];
        if (color[w] == Grey) return true;
        if (color[w] == White) {
          color[w] = Grey;
          stack.emplace_back(w, 0);
        }
      } else {
        color[u] = Black;
        stack.pop_back();
      }
    }
  }
  return false;
}

bool is_strongly_connected(const Digraph& g) {
  const std::size_t p = g.vertex_count();
  return reach_count(successors(g, nullptr), 0) == p &&
         reach_count(successors(g, nullptr, true), 0) == p;
}

std::string_view to_string(TreeClassification::Outcome outcome) {
  switch (outcome) {
    case TreeClassification::Outcome::Tree: return "Tree";
    case TreeClassification::Outcome::BadNonRootDegree: return "BadNonRootDegree";
    case TreeClassification::Outcome::RootHasWrongDegree: return "RootHasWrongDegree";
    case TreeClassification::Outcome::ContainsCycle: return "ContainsCycle";
  }
  return "Unknown";
}

std::string describe(const Digraph& g, const TreeClassification& c) {
  std::string out(to_string(c.outcome));
  if (c.vertex) out += "(" + g.label(*c.vertex) + ")";
  return out;
}

TreeClassification classify_spanning_tree(const Digraph& g, const EdgeSubset& s,
                                          VertexId root, Mode mode) {
  check_vertex(g, root);
  check_subset(g, s);
  if (s.size() + 1 != g.vertex_count()) {
    throw Error(ErrorKind::WrongSubsetSize,
                "subset has " + std::to_string(s.size()) + " edges, expected " +
                    std::to_string(g.vertex_count() - 1));
  }
  // Outgoing trees constrain in-degrees, incoming trees out-degrees.
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (std::size_t id : s) {
    const Edge& e = g.edge(id);
    ++deg[(mode == Mode::Outgoing ? e.to : e.from).index];
  }
  using Outcome = TreeClassification::Outcome;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (i != root.index && deg[i] != 1) return {Outcome::BadNonRootDegree, VertexId{i}};
  }
  if (deg[root.index] != 0) return {Outcome::RootHasWrongDegree, std::nullopt};
  if (has_directed_cycle(g, s)) return {Outcome::ContainsCycle, std::nullopt};
  return {Outcome::Tree, std::nullopt};
}

}  // namespace arbor
