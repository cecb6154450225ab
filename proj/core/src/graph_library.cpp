#include "pathalg/graph_library.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pathalg/error.hpp"

namespace pathalg {

namespace {

[[noreturn]] void limit(const std::string& msg) { throw Error(ErrorKind::LimitExceeded, msg); }

std::string padded(std::size_t i, std::size_t count) {
  const std::size_t width = std::to_string(count).size();
  std::string s = std::to_string(i);
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

// Adds edges named prefix + index, ordered by (tail id, head id).
void add_cover_edges(RawGraph& raw, std::set<std::pair<std::string, std::string>> covers, const std::string& prefix) {
  std::size_t i = 1;
  for (const auto& [tail, head] : covers) raw.edges.push_back({prefix + padded(i++, covers.size()), tail, head});
}

}  // namespace

LayeredGraph boolean_lattice(int n) {
  if (n < 1 || n > LibraryLimits::kBooleanMaxN)
    limit("boolean lattice needs 1 <= n <= " + std::to_string(LibraryLimits::kBooleanMaxN));
  const auto subset_id = [n](unsigned mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 1; i <= n; ++i) {
      if (!(mask >> (i - 1) & 1U)) continue;
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  };
  RawGraph raw;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    raw.vertices.push_back({subset_id(mask), std::popcount(mask)});
    for (int i = 1; i <= n; ++i) {
      if (mask >> (i - 1) & 1U) continue;
      std::string id = "x";
      for (int j = 1; j <= n; ++j)
        if (mask >> (j - 1) & 1U) id += std::to_string(j);
      id += "_" + std::to_string(i);
      raw.edges.push_back({id, subset_id(mask | (1U << (i - 1))), subset_id(mask)});
    }
  }
  return LayeredGraph::validate(raw);
}

LayeredGraph chain(int n) {
  if (n < 1) limit("chain needs n >= 1");
  RawGraph raw;
  for (int i = 0; i <= n; ++i) raw.vertices.push_back({"v" + std::to_string(i), i});
  for (int i = 1; i <= n; ++i)
    raw.edges.push_back({"c" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i - 1)});
  return LayeredGraph::validate(raw);
}

LayeredGraph partition_lattice(int n) {
  if (n < 2 || n > LibraryLimits::kPartitionMaxN)
    limit("partition lattice needs 2 <= n <= " + std::to_string(LibraryLimits::kPartitionMaxN));
  using Blocks = std::vector<std::vector<int>>;
  const auto canonical = [](Blocks b) {
    for (auto& blk : b) std::sort(blk.begin(), blk.end());
    std::sort(b.begin(), b.end());
    return b;
  };
  const auto id_of = [](const Blocks& b) {
    std::string s;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += "|";
      for (int x : b[i]) s += std::to_string(x);
    }
    return s;
  };
  // All set partitions, grown element by element.
  std::vector<Blocks> parts{Blocks{}};
  for (int x = 1; x <= n; ++x) {
    std::vector<Blocks> next;
    for (const auto& p : parts) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        Blocks q = p;
        q[i].push_back(x);
        next.push_back(q);
      }
      Blocks q = p;
      q.push_back({x});
      next.push_back(q);
    }
    parts = std::move(next);
  }
  RawGraph raw;
  std::set<std::pair<std::string, std::string>> covers;
  for (const auto& p0 : parts) {
    const Blocks p = canonical(p0);
    raw.vertices.push_back({id_of(p), n - static_cast<int>(p.size())});
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        Blocks merged;
        for (std::size_t t = 0; t < p.size(); ++t)
          if (t != i && t != j) merged.push_back(p[t]);
        std::vector<int> joined = p[i];
        joined.insert(joined.end(), p[j].begin(), p[j].end());
        merged.push_back(joined);
        covers.insert({id_of(canonical(merged)), id_of(p)});
      }
    }
  }
  add_cover_edges(raw, std::move(covers), "p");
  return LayeredGraph::validate(raw);
}

LayeredGraph subspace_lattice(int q, int n) {
  if (q != 2 && q != 3) limit("subspace lattice supports q in {2,3}");
  if (n < 1 || n > LibraryLimits::kSubspaceMaxN)
    limit("subspace lattice needs 1 <= n <= " + std::to_string(LibraryLimits::kSubspaceMaxN));
  using Vec = std::vector<int>;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  const auto decode = [&](int code) {
    Vec v(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = code % q;
      code /= q;
    }
    return v;
  };
  const auto encode = [&](const Vec& v) {
    int code = 0;
    for (int x : v) code = code * q + x;
    return code;
  };
  const auto axpy = [&](int a, int c, int b) {  // a + c*b
    Vec va = decode(a), vb = decode(b);
    for (std::size_t i = 0; i < va.size(); ++i) va[i] = (va[i] + c * vb[i]) % q;
    return encode(va);
  };
  const auto inverse = [q](int x) {
    for (int y = 1; y < q; ++y)
      if (x * y % q == 1) return y;
    return 0;
  };
  using Space = std::set<int>;
  const auto span_with = [&](const Space& s, int x) {
    Space out;
    for (int a : s)
      for (int c = 0; c < q; ++c) out.insert(axpy(a, c, x));
    return out;
  };
  const auto rref_id = [&](const Space& s) {
    // Greedy basis, then reduced row echelon form over F_q.
    std::vector<Vec> rows;
    Space spanned{0};
    for (int x : s) {
      if (spanned.count(x)) continue;
      rows.push_back(decode(x));
      spanned = span_with(spanned, x);
    }
    std::size_t r = 0;
    for (int col = 0; col < n && r < rows.size(); ++col) {
      std::size_t piv = r;
      while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[r], rows[piv]);
      const int inv = inverse(rows[r][static_cast<std::size_t>(col)]);
      for (int& x : rows[r]) x = x * inv % q;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r) continue;
        const int f = rows[i][static_cast<std::size_t>(col)];
        for (std::size_t c = 0; c < rows[i].size(); ++c) rows[i][c] = ((rows[i][c] - f * rows[r][c]) % q + q) % q;
      }
      ++r;
    }
    std::string id = "<";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) id += "|";
      for (int x : rows[i]) id += std::to_string(x);
    }
    return id + ">";
  };
  const auto dimension = [q](const Space& s) {
    int d = 0;
    for (std::size_t size = s.size(); size > 1; size /= static_cast<std::size_t>(q)) ++d;
    return d;
  };

  std::set<Space> spaces{Space{0}};
  std::vector<Space> frontier{Space{0}};
  std::set<std::pair<std::string, std::string>> covers;
  while (!frontier.empty()) {
    std::vector<Space> next;
    for (const auto& s : frontier) {
      const std::string lower = rref_id(s);
      for (int x = 0; x < total; ++x) {
        if (s.count(x)) continue;
        Space bigger = span_with(s, x);
        covers.insert({rref_id(bigger), lower});
        if (spaces.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  RawGraph raw;
  for (const auto& s : spaces) raw.vertices.push_back({rref_id(s), dimension(s)});
  add_cover_edges(raw, std::move(covers), "s");
  return LayeredGraph::validate(raw);
}

LayeredGraph generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::Boolean: return boolean_lattice(spec.n);
    case Family::Chain: return chain(spec.n);
    case Family::Partition: return partition_lattice(spec.n);
    case Family::Subspace: return subspace_lattice(spec.q, spec.n);
    case Family::File: return load_graph(spec.file);
  }
  throw std::invalid_argument("unknown graph family");
}

RawGraph parse_raw_graph(std::string_view text) {
  RawGraph raw;
  std::set<std::string> vertex_ids, edge_ids, chosen_for;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  const auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0].front() == '#') continue;
    const std::string& d = tok[0];
    if (d == "vertex") {
      if (tok.size() != 3) fail("expected 'vertex <id> <level>'");
      int level = 0;
      std::size_t used = 0;
      try {
        level = std::stoi(tok[2], &used);
      } catch (const std::exception&) {
        fail("level '" + tok[2] + "' is not an integer");
      }
      if (used != tok[2].size() || level < 0) fail("level '" + tok[2] + "' is not a non-negative integer");
      if (!vertex_ids.insert(tok[1]).second) fail("duplicate vertex id '" + tok[1] + "'");
      raw.vertices.push_back({tok[1], level});
    } else if (d == "edge") {
      if (tok.size() != 4) fail("expected 'edge <id> <tail-id> <head-id>'");
      if (!edge_ids.insert(tok[1]).second) fail("duplicate edge id '" + tok[1] + "'");
      raw.edges.push_back({tok[1], tok[2], tok[3]});
    } else if (d == "chosen") {
      if (tok.size() != 3) fail("expected 'chosen <vertex-id> <edge-id>'");
      if (!chosen_for.insert(tok[1]).second) fail("duplicate chosen entry for '" + tok[1] + "'");
      raw.chosen.push_back({tok[1], tok[2]});
    } else {
      fail("unknown directive '" + d + "'");
    }
  }
  return raw;
}

LayeredGraph parse_graph(std::string_view text) { return LayeredGraph::validate(parse_raw_graph(text)); }

LayeredGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string save_graph(const LayeredGraph& g) {
  std::ostringstream out;
  out << "# layered graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, max level "
      << g.max_level() << "\n";
  for (int lvl = 0; lvl <= g.max_level(); ++lvl)
    for (VertexIdx v : g.vertices_at_level(lvl)) out << "vertex " << g.vertex_id(v) << " " << lvl << "\n";
  for (int lvl = 1; lvl <= g.max_level(); ++lvl)
    for (VertexIdx v : g.vertices_at_level(lvl))
      for (EdgeIdx e : g.out_edges(v))
        out << "edge " << g.edge_id(e) << " " << g.vertex_id(v) << " " << g.vertex_id(g.head(e)) << "\n";
  for (int lvl = 1; lvl <= g.max_level(); ++lvl)
    for (VertexIdx v : g.vertices_at_level(lvl)) out << "chosen " << g.vertex_id(v) << " " << g.edge_id(g.chosen(v)) << "\n";
  return out.str();
}

void save_graph(const LayeredGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path.string() + "'");
  out << save_graph(g);
}

}  // namespace pathalg
