#pragma once

#include <map>
#include <string>
#include <tuple>

#include "pathalg/graph.hpp"
#include "pathalg/ncpoly.hpp"
#include "pathalg/pairs.hpp"

namespace pathalg {

/// Element of the module B: a finite combination of basis sequences
/// (sequences with no composable adjacent pair). Like NcPoly, a vector holding
/// only the empty sequence carries no graph.
class BVector {
 public:
  using Terms = std::map<PairSeq, Scalar>;

  BVector() = default;

  /// 1 times the empty sequence.
  static BVector unit() { return from_terms({}, Terms{{PairSeq{}, Scalar(1)}}); }
  /// c times a basis sequence; throws BadMultiplicity when b has a composable adjacent pair.
  static BVector basis(const LayeredGraph& g, PairSeq b, const Scalar& c = 1);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const LayeredGraph& graph() const { return graph_; }
  Scalar coefficient(const PairSeq& b) const;
  /// Largest key level; minus infinity for zero.
  FiltrationLevel level() const;

  void add_term(const PairSeq& b, const Scalar& c);
  BVector& operator+=(const BVector& other);
  BVector& operator-=(const BVector& other);
  BVector& operator*=(const Scalar& s);
  friend BVector operator+(BVector a, const BVector& b) { return a += b; }
  friend BVector operator-(BVector a, const BVector& b) { return a -= b; }
  friend BVector operator*(const Scalar& s, BVector a) { return a *= s; }

  friend bool operator==(const BVector& a, const BVector& b) { return a.terms_ == b.terms_; }

 private:
  friend class Reducer;
  static BVector from_terms(const LayeredGraph& g, Terms terms);
  void adopt_graph(const LayeredGraph& other);

  LayeredGraph graph_;
  Terms terms_;
};

/// "c·[(v:m, ...)] + ..." in graded sequence order; "0" for zero.
std::string render(const BVector& x);

/// The re-expansion sum_b c_b e(b) of a module element back into T(E).
NcPoly to_poly(const LayeredGraph& g, const BVector& x);

/// Computes the T(E)-action on B and the resulting normal forms.
///
/// e(v,k) acts on a basis sequence b by
///   (v, k + m_1 + ... + m_{z-1}) o b^z  -  sum_{j<z} E(v, b_j, k + m_1 + ... + m_{j-1}, m_j) b^{j+1}
/// where z is the first position at which the running pair stops composing.
/// Each recursive call has a strictly smaller |e(v,k)| + |b|, so the recursion
/// is well-founded. An edge f acts as e(t(f),1) - e(h(f),1).
///
/// Results of act_e on basis sequences are memoized; a Reducer is therefore
/// not safe for concurrent use. Use one per thread.
class Reducer {
 public:
  explicit Reducer(LayeredGraph g);

  const LayeredGraph& graph() const { return g_; }

  /// 1-based position z(v,k,b); b.size() + 1 when every position composes.
  int z_index(VertexIdx v, int k, const PairSeq& b) const;

  const BVector& act_e(VertexIdx v, int k, const PairSeq& b);
  BVector act_e(VertexIdx v, int k, const BVector& x);
  BVector act_edge(EdgeIdx f, const PairSeq& b);
  BVector act_edge(EdgeIdx f, const BVector& x);
  BVector act(const NcPoly& p, const BVector& x);
  BVector act(const EWord& w, const BVector& x);
  BVector act(const EWordCombination& p, const BVector& x);

  /// p acting on 1·(); the coordinates of p's class in the basis.
  BVector normal_form(const NcPoly& p);

  std::size_t cache_size() const { return act_cache_.size(); }

 private:
  const BVector& act_e_basis(VertexIdx v, int k, const PairSeq& b);
  const EWordCombination& correction(VertexIdx v, VertexIdx u, int k, int l);
  BVector act_word(const Word& w, const BVector& x);
  void check_graph(const LayeredGraph& other) const;

  LayeredGraph g_;
  BVector zero_;
  std::map<std::tuple<VertexIdx, int, PairSeq>, BVector> act_cache_;
  std::map<std::tuple<VertexIdx, VertexIdx, int, int>, EWordCombination> correction_cache_;
};

// One-shot conveniences; each builds a fresh Reducer.
int z_index(const LayeredGraph& g, VertexIdx v, int k, const PairSeq& b);
BVector act_e(const LayeredGraph& g, VertexIdx v, int k, const PairSeq& b);
BVector act_edge(const LayeredGraph& g, EdgeIdx f, const PairSeq& b);
BVector act_poly(const LayeredGraph& g, const NcPoly& p, const BVector& x);
BVector act_poly(const LayeredGraph& g, const EWordCombination& p, const BVector& x);
BVector normal_form(const LayeredGraph& g, const NcPoly& p);

/// e_{v^(0)} e_{v^(1)} ... e_{v^(k-1)}: the first k chosen edges along pi_v.
Word hat_word(const LayeredGraph& g, VertexIdx v, int k);
Word hat_word_of_seq(const LayeredGraph& g, const PairSeq& b);

}  // namespace pathalg
