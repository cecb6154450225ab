#include "pathalg/relations.hpp"

#include <functional>
#include <set>

#include "pathalg/error.hpp"

namespace pathalg {

namespace {

// Sign-normalized term map: the first term (in map order) has positive sign.
NcPoly::Terms sign_key(const NcPoly& p) {
  NcPoly::Terms key = p.terms();
  if (!key.empty() && sgn(key.begin()->second) < 0)
    for (auto& [w, c] : key) c = -c;
  return key;
}

void add_eword(EWordCombination& out, EWord w, const Scalar& c, const LayeredGraph& g) {
  std::vector<VertexMult> kept;
  for (const auto& f : w.factors) {
    if (f.mult == 0) continue;
    if (f.mult > g.level(f.vertex)) return;
    kept.push_back(f);
  }
  w.factors = std::move(kept);
  auto [it, inserted] = out.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) out.erase(it);
  }
}

// Calls visit(parts) for every composition of `total` into parts >= 1
// (the empty composition when total == 0).
void for_each_composition(int total, std::vector<int>& parts,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (total == 0) {
    visit(parts);
    return;
  }
  for (int first = 1; first <= total; ++first) {
    parts.push_back(first);
    for_each_composition(total - first, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

std::vector<RelationGen> path_pair_relations(const LayeredGraph& g, PathPairOptions options) {
  std::vector<RelationGen> out;
  std::set<NcPoly::Terms> seen;
  for (VertexIdx v = 0; v < g.vertex_count(); ++v) {
    for (VertexIdx w = 0; w < g.vertex_count(); ++w) {
      if (options.restrict_to_star && w != g.star()) continue;
      if (!g.reachable(v, w)) continue;
      const auto paths = g.all_paths(v, w);
      for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
          for (int k = 1; k <= static_cast<int>(paths[i].length()); ++k) {
            NcPoly p = e_of_path(g, paths[i].edges, k) - e_of_path(g, paths[j].edges, k);
            if (p.is_zero()) continue;
            if (!seen.insert(sign_key(p)).second) continue;
            out.push_back({std::move(p), PathPairOrigin{paths[i], paths[j], k}});
          }
        }
      }
    }
  }
  return out;
}

std::vector<RelationGen> reduced_relations(const LayeredGraph& g) {
  std::vector<RelationGen> out;
  for (EdgeIdx f = 0; f < g.edge_count(); ++f) {
    NcPoly p = NcPoly::edge(g, f) - e_of_vertex(g, g.tail(f), 1) + e_of_vertex(g, g.head(f), 1);
    if (!p.is_zero()) out.push_back({std::move(p), EdgeOrigin{f}});
  }
  for (VertexIdx v = 0; v < g.vertex_count(); ++v) {
    std::set<VertexIdx> covers;
    for (EdgeIdx f : g.out_edges(v)) covers.insert(g.head(f));
    for (VertexIdx u : covers) {
      if (g.level(u) == 0) continue;
      const NcPoly eu1 = e_of_vertex(g, u, 1);
      const NcPoly ev1 = e_of_vertex(g, v, 1);
      for (int k = 1; k <= g.level(u); ++k) {
        const NcPoly euk = e_of_vertex(g, u, k);
        NcPoly p = ev1 * euk - e_of_vertex(g, v, k + 1) + e_of_vertex(g, u, k + 1) - eu1 * euk;
        if (!p.is_zero()) out.push_back({std::move(p), CoverOrigin{v, u, k}});
      }
    }
  }
  return out;
}

EWordCombination product_correction_terms(const LayeredGraph& g, VertexIdx v, VertexIdx u, int k, int l) {
  if (!g.reachable(v, u) || g.level(v) - g.level(u) != k)
    throw Error(ErrorKind::NotComposable, "E(" + g.vertex_id(v) + "," + g.vertex_id(u) + "," +
                                              std::to_string(k) + ",...) needs v > u with |v| - |u| = k");
  if (l < 0) throw Error(ErrorKind::BadMultiplicity, "negative l in E(v,u,k,l)");
  EWordCombination out;
  std::vector<int> middle;
  for (int i0 = 0; i0 < k; ++i0) {
    for (int s = 0; s <= k - i0; ++s) {
      for_each_composition(s, middle, [&](const std::vector<int>& parts) {
        const int last = k + l - i0 - s;
        EWord w;
        w.factors.push_back({v, i0});
        for (int p : parts) w.factors.push_back({u, p});
        w.factors.push_back({u, last});
        add_eword(out, std::move(w), parts.size() % 2 == 0 ? Scalar(1) : Scalar(-1), g);
      });
    }
  }
  return out;
}

NcPoly product_correction(const LayeredGraph& g, VertexIdx v, VertexIdx u, int k, int l) {
  return eword_to_poly(g, product_correction_terms(g, v, u, k, l));
}

EWordCombination transfer_coefficient_terms(const LayeredGraph& g, VertexIdx v, VertexIdx u, int j) {
  if (!g.reachable(v, u))
    throw Error(ErrorKind::NotComposable, "H(" + g.vertex_id(v) + "," + g.vertex_id(u) + ",...) needs v > u");
  if (j < 0) throw Error(ErrorKind::BadMultiplicity, "negative j in H(v,u,j)");
  EWordCombination out;
  std::vector<int> parts_buf;
  for (int i0 = 0; i0 <= j; ++i0) {
    for_each_composition(j - i0, parts_buf, [&](const std::vector<int>& parts) {
      EWord w;
      w.factors.push_back({v, i0});
      for (int p : parts) w.factors.push_back({u, p});
      add_eword(out, std::move(w), (j + static_cast<int>(parts.size())) % 2 == 0 ? Scalar(1) : Scalar(-1), g);
    });
  }
  return out;
}

NcPoly transfer_coefficient(const LayeredGraph& g, VertexIdx v, VertexIdx u, int j) {
  return eword_to_poly(g, transfer_coefficient_terms(g, v, u, j));
}

namespace {

std::string render_path(const LayeredGraph& g, const Path& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ",";
    out += g.edge_id(p.edges[i]);
  }
  return out + ")";
}

}  // namespace

std::string render(const LayeredGraph& g, const RelationGen& r) {
  std::string tag = std::visit(
      [&](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, PathPairOrigin>) {
          return "path-pair " + render_path(g, o.first) + " " + render_path(g, o.second) + " k=" + std::to_string(o.k);
        } else if constexpr (std::is_same_v<T, EdgeOrigin>) {
          return "edge " + g.edge_id(o.edge);
        } else {
          return "cover " + g.vertex_id(o.v) + " > " + g.vertex_id(o.u) + " k=" + std::to_string(o.k);
        }
      },
      r.origin);
  return "[" + tag + "] " + render(r.poly);
}

}  // namespace pathalg
