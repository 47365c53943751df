#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/rational.hpp"

namespace arbor {

/// Position of a vertex in its graph's vertex list.
struct VertexId {
  std::size_t index = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct Edge {
  std::size_t id = 0;  // 0-based; rendered as e{id+1}
  VertexId from;
  VertexId to;
  Rational weight{1};
};

struct EdgeSpec {
  std::string from;
  std::string to;
  std::optional<Rational> weight;  // absent means 1
};

enum class Side { In, Out };

/// Orientation of a spanning tree: outgoing trees have every non-root vertex
/// with in-degree 1, incoming trees use out-degree.
enum class Mode { Outgoing, Incoming };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

/// Strictly ascending set of edge ids.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  /// Sorts; throws Error(IndexOutOfRange) on duplicates.
  explicit EdgeSubset(std::vector<std::size_t> ids);

  const std::vector<std::size_t>& ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(std::size_t id) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
  friend auto operator<=>(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  std::vector<std::size_t> ids_;
};

/// "{e1,e4}"
std::string to_string(const EdgeSubset& s);

/// Simple weighted digraph: no self-loops, at most one edge per ordered pair.
/// Immutable after construction.
class Digraph {
 public:
  /// Validates and builds. Vertices and edges keep input order.
  static Digraph build(std::vector<std::string> labels, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool weighted() const noexcept { return weighted_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v.index); }
  std::optional<VertexId> find(std::string_view label) const;
  /// Throws Error(UnknownEndpoint) if absent.
  VertexId vertex(std::string_view label) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }
  std::vector<Rational> weights() const;

  /// Same vertices, every edge flipped; edge ids and weights are kept.
  Digraph reversed() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  bool weighted_ = false;
};

/// Edges pointing to v (In) or from v (Out), optionally restricted to a subset.
std::size_t degree(const Digraph& g, VertexId v, Side side,
                   const EdgeSubset* restrict = nullptr);

/// True iff the spanning subgraph with edge set `restrict` has a directed cycle.
bool has_directed_cycle(const Digraph& g, const EdgeSubset& restrict);

bool is_strongly_connected(const Digraph& g);

struct TreeClassification {
  enum class Outcome { Tree, BadNonRootDegree, RootHasWrongDegree, ContainsCycle };

  Outcome outcome = Outcome::Tree;
  std::optional<VertexId> vertex;  // set for BadNonRootDegree

  bool is_tree() const noexcept { return outcome == Outcome::Tree; }
  friend bool operator==(const TreeClassification&, const TreeClassification&) = default;
};

std::string_view to_string(TreeClassification::Outcome outcome);
std::string describe(const Digraph& g, const TreeClassification& c);

/// Checks the three defining conditions of a rooted spanning tree and reports
/// the first failure in the order: non-root degree, root degree, cycle.
/// Throws Error(WrongSubsetSize) unless |s| = p - 1.
TreeClassification classify_spanning_tree(const Digraph& g, const EdgeSubset& s,
                                          VertexId root, Mode mode);

}  // namespace arbor
