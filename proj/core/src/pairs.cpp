#include "pathalg/pairs.hpp"

#include "pathalg/error.hpp"

namespace pathalg {

PairSeq PairSeq::suffix(std::size_t from) const {
  if (from >= pairs.size()) return {};
  return PairSeq{std::vector<VertexMult>(pairs.begin() + static_cast<std::ptrdiff_t>(from), pairs.end())};
}

int pair_level(const LayeredGraph& g, VertexMult p) {
  return p.mult * g.level(p.vertex) - p.mult * (p.mult - 1) / 2;
}

int seq_level(const LayeredGraph& g, const PairSeq& s) {
  int total = 0;
  for (const auto& p : s.pairs) total += pair_level(g, p);
  return total;
}

void check_pairs(const LayeredGraph& g, const PairSeq& s) {
  for (const auto& p : s.pairs)
    if (p.mult < 1 || p.mult > g.level(p.vertex))
      throw Error(ErrorKind::BadMultiplicity,
                  "pair (" + g.vertex_id(p.vertex) + ":" + std::to_string(p.mult) + ") out of range");
}

bool is_basis_seq(const LayeredGraph& g, const PairSeq& s) {
  for (std::size_t i = 0; i + 1 < s.pairs.size(); ++i) {
    const auto& a = s.pairs[i];
    const auto& b = s.pairs[i + 1];
    if (g.composable(a.vertex, a.mult, b.vertex, b.mult)) return false;
  }
  return true;
}

bool graded_seq_less(const LayeredGraph& g, const PairSeq& a, const PairSeq& b) {
  const int la = seq_level(g, a);
  const int lb = seq_level(g, b);
  if (la != lb) return la < lb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string render(const LayeredGraph& g, const PairSeq& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    if (i) out += ", ";
    out += g.vertex_id(s.pairs[i].vertex) + ":" + std::to_string(s.pairs[i].mult);
  }
  return out + ")";
}

NcPoly eword_to_poly(const LayeredGraph& g, const EWord& w) {
  NcPoly out = NcPoly::one();
  for (const auto& f : w.factors) {
    if (f.mult < 0 || f.mult > g.level(f.vertex))
      throw Error(ErrorKind::BadMultiplicity,
                  "factor e(" + g.vertex_id(f.vertex) + "," + std::to_string(f.mult) + ") out of range");
    out = out * e_of_vertex(g, f.vertex, f.mult);
  }
  return out;
}

NcPoly eword_to_poly(const LayeredGraph& g, const EWordCombination& combination) {
  NcPoly out;
  for (const auto& [w, c] : combination) out += c * eword_to_poly(g, w);
  return out;
}

}  // namespace pathalg
