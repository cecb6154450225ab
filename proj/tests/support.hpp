#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pathalg/graph.hpp"
#include "pathalg/graph_library.hpp"
#include "pathalg/ncpoly.hpp"
#include "pathalg/pairs.hpp"

namespace testing {

using namespace pathalg;

inline const char* const kBoolean2 = R"(vertex * 0
vertex {1} 1
vertex {2} 1
vertex {12} 2
edge a1 {1} *
edge a2 {2} *
edge b1 {12} {1}
edge b2 {12} {2}
)";

inline const LayeredGraph& boolean2() {
  static const LayeredGraph g = parse_graph(kBoolean2);
  return g;
}

inline NcPoly edge(const LayeredGraph& g, const std::string& id) { return NcPoly::edge(g, g.edge(id)); }

inline NcPoly word(const LayeredGraph& g, const std::vector<std::string>& ids) {
  Word w;
  for (const auto& id : ids) w.push_back(g.edge(id));
  return NcPoly::word(g, w);
}

inline PairSeq seq(const LayeredGraph& g, std::vector<std::pair<std::string, int>> pairs) {
  PairSeq s;
  for (const auto& [v, m] : pairs) s.pairs.push_back({g.vertex(v), m});
  return s;
}

// The graphs the algebraic properties are checked on.
inline std::vector<std::pair<std::string, LayeredGraph>> graph_set() {
  return {{"boolean2", boolean2()},
          {"boolean3", boolean_lattice(3)},
          {"chain4", chain(4)},
          {"partition3", partition_lattice(3)},
          {"subspace22", subspace_lattice(2, 2)}};
}

// e(pi,k) as the sum of all length-k subwords of pi in order; no polynomial
// multiplication involved.
inline NcPoly subword_sum(const LayeredGraph& g, const std::vector<EdgeIdx>& path, int k) {
  NcPoly out;
  const int n = static_cast<int>(path.size());
  if (k == 0) return NcPoly::one();
  if (k > n) return out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    Word w;
    for (int i = 0; i < n; ++i)
      if (mask[i]) w.push_back(path[i]);
    out += NcPoly::word(g, w);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

// v > w by breadth-first search over the raw edge list.
inline bool reaches(const RawGraph& raw, const std::string& v, const std::string& w) {
  std::set<std::string> seen;
  std::vector<std::string> frontier{v};
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const auto& x : frontier)
      for (const auto& e : raw.edges)
        if (e.tail == x && seen.insert(e.head).second) next.push_back(e.head);
    frontier = std::move(next);
  }
  return seen.count(w) > 0;
}

// Every sequence of (vertex, mult) pairs with total level <= max_level and no
// composable neighbours, found by filtering all sequences.
inline std::set<std::vector<std::pair<std::string, int>>> brute_basis(const RawGraph& raw, int max_level) {
  std::map<std::string, int> level;
  for (const auto& v : raw.vertices) level[v.id] = v.level;
  std::vector<std::pair<std::string, int>> pairs;
  for (const auto& [id, l] : level)
    for (int m = 1; m <= l; ++m) pairs.emplace_back(id, m);
  const auto weight = [&](const std::pair<std::string, int>& p) {
    return p.second * level[p.first] - p.second * (p.second - 1) / 2;
  };
  std::set<std::vector<std::pair<std::string, int>>> out;
  std::vector<std::vector<std::pair<std::string, int>>> layer{{}};
  while (!layer.empty()) {
    std::vector<std::vector<std::pair<std::string, int>>> next;
    for (const auto& s : layer) {
      int total = 0;
      for (const auto& p : s) total += weight(p);
      if (total > max_level) continue;
      bool ok = true;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const auto& [v, k] = s[i];
        const auto& [u, l] = s[i + 1];
        if (reaches(raw, v, u) && level[u] == level[v] - k) ok = false;
      }
      if (ok) out.insert(s);
      for (const auto& p : pairs) {
        auto t = s;
        t.push_back(p);
        next.push_back(std::move(t));
      }
    }
    layer = std::move(next);
  }
  return out;
}

// Rank over Q by textbook Gaussian elimination on a dense matrix.
inline std::size_t dense_rank(std::vector<std::vector<Scalar>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Scalar f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Random polynomial of level <= max_level with small integer coefficients.
inline NcPoly random_poly(const LayeredGraph& g, std::mt19937& rng, int max_level, int terms) {
  NcPoly out;
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<EdgeIdx> pick(0, static_cast<EdgeIdx>(g.edge_count() - 1));
  std::uniform_int_distribution<int> budget_dist(0, max_level);
  for (int t = 0; t < terms; ++t) {
    int budget = budget_dist(rng);
    Word w;
    for (int tries = 0; tries < 8 && budget > 0; ++tries) {
      const EdgeIdx e = pick(rng);
      if (g.edge_level(e) > budget) continue;
      budget -= g.edge_level(e);
      w.push_back(e);
    }
    out += NcPoly::word(g, w, coeff(rng));
  }
  return out;
}

}  // namespace testing
