#include "pathalg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "pathalg/error.hpp"

namespace pathalg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::NoUniqueMin: return "NoUniqueMin";
    case ErrorKind::DeadVertex: return "DeadVertex";
    case ErrorKind::BadChosen: return "BadChosen";
    case ErrorKind::DanglingRef: return "DanglingRef";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::BadMultiplicity: return "BadMultiplicity";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::MixedGraph: return "MixedGraph";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
  }
  return "Error";
}

ErrorClass classify(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownSymbol:
      return ErrorClass::Parse;
    case ErrorKind::LimitExceeded:
    case ErrorKind::BoundTooLarge:
      return ErrorClass::Resource;
    default:
      return ErrorClass::Validation;
  }
}

namespace detail {

struct GraphData {
  std::vector<std::string> vertex_ids;
  std::vector<int> levels;
  std::vector<std::string> edge_ids;
  std::vector<VertexIdx> tails;
  std::vector<VertexIdx> heads;
  std::vector<EdgeIdx> chosen;
  std::vector<std::vector<EdgeIdx>> out;
  std::vector<std::vector<VertexIdx>> by_level;
  // reach[v][w] != 0 iff v > w
  std::vector<std::vector<char>> reach;
  std::unordered_map<std::string, VertexIdx> vertex_index;
  std::unordered_map<std::string, EdgeIdx> edge_index;
  VertexIdx star = 0;
  int max_level = 0;
};

}  // namespace detail

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace

LayeredGraph LayeredGraph::validate(const RawGraph& raw) {
  auto d = std::make_shared<detail::GraphData>();

  std::vector<const RawGraph::Vertex*> vs;
  for (const auto& v : raw.vertices) vs.push_back(&v);
  std::sort(vs.begin(), vs.end(), [](auto* a, auto* b) { return a->id < b->id; });
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0 && vs[i]->id == vs[i - 1]->id) fail(ErrorKind::DuplicateId, "vertex '" + vs[i]->id + "'");
    if (vs[i]->level < 0) fail(ErrorKind::LevelMismatch, "vertex '" + vs[i]->id + "' has negative level");
    d->vertex_index.emplace(vs[i]->id, static_cast<VertexIdx>(i));
    d->vertex_ids.push_back(vs[i]->id);
    d->levels.push_back(vs[i]->level);
  }

  std::vector<const RawGraph::Edge*> es;
  for (const auto& e : raw.edges) es.push_back(&e);
  std::sort(es.begin(), es.end(), [](auto* a, auto* b) { return a->id < b->id; });
  const auto lookup = [&](const std::string& id, const std::string& edge) {
    auto it = d->vertex_index.find(id);
    if (it == d->vertex_index.end())
      fail(ErrorKind::DanglingRef, "edge '" + edge + "' refers to undeclared vertex '" + id + "'");
    return it->second;
  };
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i > 0 && es[i]->id == es[i - 1]->id) fail(ErrorKind::DuplicateId, "edge '" + es[i]->id + "'");
    if (d->vertex_index.count(es[i]->id) != 0)
      fail(ErrorKind::DuplicateId, "'" + es[i]->id + "' names both a vertex and an edge");
    const VertexIdx t = lookup(es[i]->tail, es[i]->id);
    const VertexIdx h = lookup(es[i]->head, es[i]->id);
    if (d->levels[t] != d->levels[h] + 1)
      fail(ErrorKind::LevelMismatch, "edge '" + es[i]->id + "' goes from level " +
                                         std::to_string(d->levels[t]) + " to level " +
                                         std::to_string(d->levels[h]));
    d->edge_index.emplace(es[i]->id, static_cast<EdgeIdx>(i));
    d->edge_ids.push_back(es[i]->id);
    d->tails.push_back(t);
    d->heads.push_back(h);
  }

  const std::size_t nv = d->vertex_ids.size();
  std::size_t minimal = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    if (d->levels[v] == 0) {
      ++minimal;
      d->star = static_cast<VertexIdx>(v);
    }
  }
  if (minimal != 1)
    fail(ErrorKind::NoUniqueMin, "expected exactly one level-0 vertex, found " + std::to_string(minimal));

  d->max_level = nv == 0 ? 0 : *std::max_element(d->levels.begin(), d->levels.end());
  d->out.assign(nv, {});
  for (EdgeIdx e = 0; e < d->edge_ids.size(); ++e) d->out[d->tails[e]].push_back(e);
  d->by_level.assign(static_cast<std::size_t>(d->max_level) + 1, {});
  for (VertexIdx v = 0; v < nv; ++v) d->by_level[static_cast<std::size_t>(d->levels[v])].push_back(v);

  d->chosen.assign(nv, kNoEdge);
  for (VertexIdx v = 0; v < nv; ++v) {
    if (d->levels[v] == 0) continue;
    if (d->out[v].empty()) fail(ErrorKind::DeadVertex, "vertex '" + d->vertex_ids[v] + "' has no outgoing edge");
    d->chosen[v] = d->out[v].front();
  }
  std::vector<char> seen(nv, 0);
  for (const auto& c : raw.chosen) {
    auto vit = d->vertex_index.find(c.vertex);
    if (vit == d->vertex_index.end())
      fail(ErrorKind::DanglingRef, "chosen entry for undeclared vertex '" + c.vertex + "'");
    auto eit = d->edge_index.find(c.edge);
    if (eit == d->edge_index.end())
      fail(ErrorKind::BadChosen, "chosen edge '" + c.edge + "' is not an edge");
    if (seen[vit->second]++)
      fail(ErrorKind::DuplicateId, "two chosen entries for vertex '" + c.vertex + "'");
    if (d->tails[eit->second] != vit->second)
      fail(ErrorKind::BadChosen, "edge '" + c.edge + "' does not start at '" + c.vertex + "'");
    d->chosen[vit->second] = eit->second;
  }

  // Reachability, lowest level first.
  d->reach.assign(nv, std::vector<char>(nv, 0));
  for (const auto& layer : d->by_level) {
    for (VertexIdx v : layer) {
      for (EdgeIdx e : d->out[v]) {
        const VertexIdx h = d->heads[e];
        d->reach[v][h] = 1;
        for (std::size_t w = 0; w < nv; ++w)
          if (d->reach[h][w]) d->reach[v][w] = 1;
      }
    }
  }

  return LayeredGraph(std::move(d));
}

const detail::GraphData& LayeredGraph::data() const {
  if (!data_) throw std::logic_error("use of an empty LayeredGraph handle");
  return *data_;
}

void LayeredGraph::check_vertex(VertexIdx v) const {
  if (v >= data().vertex_ids.size()) fail(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v));
}

std::size_t LayeredGraph::vertex_count() const { return data().vertex_ids.size(); }
std::size_t LayeredGraph::edge_count() const { return data().edge_ids.size(); }
int LayeredGraph::max_level() const { return data().max_level; }
VertexIdx LayeredGraph::star() const { return data().star; }
const std::string& LayeredGraph::vertex_id(VertexIdx v) const {
  check_vertex(v);
  return data().vertex_ids[v];
}
const std::string& LayeredGraph::edge_id(EdgeIdx e) const {
  if (e >= edge_count()) fail(ErrorKind::UnknownEdge, "edge index " + std::to_string(e));
  return data().edge_ids[e];
}
int LayeredGraph::level(VertexIdx v) const {
  check_vertex(v);
  return data().levels[v];
}
int LayeredGraph::edge_level(EdgeIdx e) const { return data().levels[tail(e)]; }
VertexIdx LayeredGraph::tail(EdgeIdx e) const {
  if (e >= edge_count()) fail(ErrorKind::UnknownEdge, "edge index " + std::to_string(e));
  return data().tails[e];
}
VertexIdx LayeredGraph::head(EdgeIdx e) const {
  if (e >= edge_count()) fail(ErrorKind::UnknownEdge, "edge index " + std::to_string(e));
  return data().heads[e];
}
EdgeIdx LayeredGraph::chosen(VertexIdx v) const {
  check_vertex(v);
  return data().chosen[v];
}
std::span<const EdgeIdx> LayeredGraph::out_edges(VertexIdx v) const {
  check_vertex(v);
  return data().out[v];
}
std::span<const VertexIdx> LayeredGraph::vertices_at_level(int level) const {
  if (level < 0 || level > max_level()) return {};
  return data().by_level[static_cast<std::size_t>(level)];
}

std::optional<VertexIdx> LayeredGraph::find_vertex(const std::string& id) const {
  auto it = data().vertex_index.find(id);
  if (it == data().vertex_index.end()) return std::nullopt;
  return it->second;
}
std::optional<EdgeIdx> LayeredGraph::find_edge(const std::string& id) const {
  auto it = data().edge_index.find(id);
  if (it == data().edge_index.end()) return std::nullopt;
  return it->second;
}
VertexIdx LayeredGraph::vertex(const std::string& id) const {
  if (auto v = find_vertex(id)) return *v;
  fail(ErrorKind::UnknownVertex, "'" + id + "'");
}
EdgeIdx LayeredGraph::edge(const std::string& id) const {
  if (auto e = find_edge(id)) return *e;
  fail(ErrorKind::UnknownEdge, "'" + id + "'");
}

std::optional<Path> LayeredGraph::canonical_path(VertexIdx v) const {
  check_vertex(v);
  if (level(v) == 0) return std::nullopt;
  Path p;
  p.tail = v;
  VertexIdx cur = v;
  while (level(cur) > 0) {
    const EdgeIdx e = chosen(cur);
    p.edges.push_back(e);
    cur = head(e);
  }
  p.head = cur;
  return p;
}

bool LayeredGraph::reachable(VertexIdx v, VertexIdx w) const {
  check_vertex(v);
  check_vertex(w);
  return data().reach[v][w] != 0;
}

bool LayeredGraph::composable(VertexIdx v, int k, VertexIdx u, int l) const {
  check_vertex(v);
  check_vertex(u);
  if (k < 0 || k > level(v) || l < 0 || l > level(u))
    fail(ErrorKind::BadMultiplicity, "pair multiplicity out of range");
  return reachable(v, u) && level(u) == level(v) - k;
}

std::vector<Path> LayeredGraph::all_paths(VertexIdx v, VertexIdx w) const {
  check_vertex(v);
  check_vertex(w);
  std::vector<Path> result;
  if (!reachable(v, w)) return result;
  std::vector<EdgeIdx> stack;
  const auto dfs = [&](auto&& self, VertexIdx cur) -> void {
    if (cur == w) {
      result.push_back(Path{stack, v, w});
      return;
    }
    for (EdgeIdx e : out_edges(cur)) {
      const VertexIdx h = head(e);
      if (h != w && !reachable(h, w)) continue;
      stack.push_back(e);
      self(self, h);
      stack.pop_back();
    }
  };
  dfs(dfs, v);
  return result;
}

Path LayeredGraph::make_path(std::span<const EdgeIdx> edges) const {
  if (edges.empty()) fail(ErrorKind::InvalidPath, "a path needs at least one edge");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] >= edge_count()) fail(ErrorKind::InvalidPath, "unknown edge index");
    if (i > 0 && tail(edges[i]) != head(edges[i - 1]))
      fail(ErrorKind::InvalidPath, "edge '" + edge_id(edges[i]) + "' does not continue the path");
  }
  return Path{std::vector<EdgeIdx>(edges.begin(), edges.end()), tail(edges.front()), head(edges.back())};
}

RawGraph LayeredGraph::raw() const {
  const auto& d = data();
  RawGraph r;
  for (std::size_t v = 0; v < d.vertex_ids.size(); ++v) r.vertices.push_back({d.vertex_ids[v], d.levels[v]});
  for (std::size_t e = 0; e < d.edge_ids.size(); ++e)
    r.edges.push_back({d.edge_ids[e], d.vertex_ids[d.tails[e]], d.vertex_ids[d.heads[e]]});
  for (std::size_t v = 0; v < d.vertex_ids.size(); ++v)
    if (d.chosen[v] != kNoEdge) r.chosen.push_back({d.vertex_ids[v], d.edge_ids[d.chosen[v]]});
  return r;
}

LayeredGraph LayeredGraph::with_chosen(const std::map<std::string, std::string>& chosen) const {
  RawGraph r = raw();
  for (auto& c : r.chosen) {
    auto it = chosen.find(c.vertex);
    if (it != chosen.end()) c.edge = it->second;
  }
  return validate(r);
}

LayeredGraph LayeredGraph::with_alternate_chosen() const {
  std::map<std::string, std::string> alt;
  for (VertexIdx v = 0; v < vertex_count(); ++v) {
    if (level(v) == 0) continue;
    alt[vertex_id(v)] = edge_id(out_edges(v).back());
  }
  return with_chosen(alt);
}

bool operator==(const LayeredGraph& a, const LayeredGraph& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  const auto& x = *a.data_;
  const auto& y = *b.data_;
  return x.vertex_ids == y.vertex_ids && x.levels == y.levels && x.edge_ids == y.edge_ids &&
         x.tails == y.tails && x.heads == y.heads && x.chosen == y.chosen;
}

}  // namespace pathalg
