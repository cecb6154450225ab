#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "pathalg/graph.hpp"
#include "pathalg/ncpoly.hpp"

namespace pathalg {

/// A vertex with a multiplicity, standing for e(vertex, mult).
struct VertexMult {
  VertexIdx vertex = 0;
  int mult = 0;

  friend auto operator<=>(const VertexMult&, const VertexMult&) = default;
};

/// Sequence ((b_1,m_1),...,(b_k,m_k)) with 1 <= m_i <= |b_i|. Members of the
/// basis additionally have no composable adjacent pair.
struct PairSeq {
  std::vector<VertexMult> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  /// Suffix starting at 0-based position `from`.
  PairSeq suffix(std::size_t from) const;

  friend auto operator<=>(const PairSeq&, const PairSeq&) = default;
};

/// Product e(b_1,m_1) ... e(b_k,m_k) in T(E); no basis condition.
struct EWord {
  std::vector<VertexMult> factors;

  friend auto operator<=>(const EWord&, const EWord&) = default;
};

/// Finite linear combination of EWords.
using EWordCombination = std::map<EWord, Scalar>;

/// m|b| - m(m-1)/2, the filtration level of e(b,m).
int pair_level(const LayeredGraph& g, VertexMult p);
int seq_level(const LayeredGraph& g, const PairSeq& s);

/// Throws BadMultiplicity unless 1 <= m_i <= |b_i| for every pair.
void check_pairs(const LayeredGraph& g, const PairSeq& s);
/// True iff no adjacent pair is composable.
bool is_basis_seq(const LayeredGraph& g, const PairSeq& s);

/// Graded order: level, then length, then pairwise (vertex id, multiplicity).
bool graded_seq_less(const LayeredGraph& g, const PairSeq& a, const PairSeq& b);

/// "(v:m, v:m)"; "()" for the empty sequence.
std::string render(const LayeredGraph& g, const PairSeq& s);

/// Expands e(b_1,m_1) ... e(b_k,m_k) into T(E). Throws BadMultiplicity for
/// m_i < 0 or m_i > |b_i|.
NcPoly eword_to_poly(const LayeredGraph& g, const EWord& w);
NcPoly eword_to_poly(const LayeredGraph& g, const EWordCombination& combination);

}  // namespace pathalg
