#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pathalg {

using VertexIdx = std::uint32_t;
using EdgeIdx = std::uint32_t;

inline constexpr EdgeIdx kNoEdge = static_cast<EdgeIdx>(-1);

/// Unvalidated graph description, as read from a file or produced by a generator.
struct RawGraph {
  struct Vertex {
    std::string id;
    int level = 0;
  };
  struct Edge {
    std::string id;
    std::string tail;
    std::string head;
  };
  struct Chosen {
    std::string vertex;
    std::string edge;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Chosen> chosen;
};

/// A nonempty chain of edges e_1 ... e_k with t(e_{i+1}) = h(e_i).
struct Path {
  std::vector<EdgeIdx> edges;
  VertexIdx tail = 0;
  VertexIdx head = 0;

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

namespace detail {
struct GraphData;
}

/// Immutable layered graph with a unique level-0 vertex and a chosen out-edge
/// for every other vertex.
///
/// Vertices and edges are indexed in lexicographic order of their ids, so
/// every index-based ordering in the library is the id ordering. Copies share
/// the underlying data; two handles are the "same graph" for algebra purposes
/// iff they share data (see same_as).
class LayeredGraph {
 public:
  LayeredGraph() = default;

  /// Validates a raw description. Missing chosen entries default to the
  /// out-edge with the smallest id.
  static LayeredGraph validate(const RawGraph& raw);

  bool empty() const { return data_ == nullptr; }

  std::size_t vertex_count() const;
  std::size_t edge_count() const;
  int max_level() const;
  VertexIdx star() const;

  const std::string& vertex_id(VertexIdx v) const;
  const std::string& edge_id(EdgeIdx e) const;
  int level(VertexIdx v) const;
  int edge_level(EdgeIdx e) const;
  VertexIdx tail(EdgeIdx e) const;
  VertexIdx head(EdgeIdx e) const;
  /// e_v; kNoEdge for the minimal vertex.
  EdgeIdx chosen(VertexIdx v) const;
  std::span<const EdgeIdx> out_edges(VertexIdx v) const;
  std::span<const VertexIdx> vertices_at_level(int level) const;

  /// Throws UnknownVertex / UnknownEdge.
  VertexIdx vertex(const std::string& id) const;
  EdgeIdx edge(const std::string& id) const;
  std::optional<VertexIdx> find_vertex(const std::string& id) const;
  std::optional<EdgeIdx> find_edge(const std::string& id) const;

  /// pi_v; std::nullopt for the minimal vertex.
  std::optional<Path> canonical_path(VertexIdx v) const;
  /// v > w: a path of length >= 1 leads from v to w.
  bool reachable(VertexIdx v, VertexIdx w) const;
  /// (v,k) |= (u,l): v > u and level(u) = level(v) - k. Independent of l.
  bool composable(VertexIdx v, int k, VertexIdx u, int l) const;
  /// Every path from v to w, ordered lexicographically by edge index sequence.
  std::vector<Path> all_paths(VertexIdx v, VertexIdx w) const;
  /// Checks chaining; throws InvalidPath.
  Path make_path(std::span<const EdgeIdx> edges) const;

  /// Same vertices and edges, chosen edge replaced by the out-edge with the
  /// largest id.
  LayeredGraph with_alternate_chosen() const;
  LayeredGraph with_chosen(const std::map<std::string, std::string>& chosen) const;

  RawGraph raw() const;

  bool same_as(const LayeredGraph& other) const { return data_ == other.data_; }
  /// Structural equality (ids, levels, endpoints, chosen map).
  friend bool operator==(const LayeredGraph& a, const LayeredGraph& b);

 private:
  explicit LayeredGraph(std::shared_ptr<const detail::GraphData> data) : data_(std::move(data)) {}
  const detail::GraphData& data() const;
  void check_vertex(VertexIdx v) const;

  std::shared_ptr<const detail::GraphData> data_;
};

}  // namespace pathalg
