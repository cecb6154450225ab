#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pathalg/graph.hpp"

namespace pathalg {

/// Exact rational scalar.
using Scalar = mpq_class;

/// A monomial e_1 ... e_r of the free algebra; the empty word is 1.
using Word = std::vector<EdgeIdx>;

/// Filtration level of an element of T(E). The zero element sits at minus
/// infinity, which is kept as an explicit state rather than a magic integer.
class FiltrationLevel {
 public:
  constexpr FiltrationLevel(int value) : value_(value), finite_(true) {}  // NOLINT(implicit)

  static constexpr FiltrationLevel minus_infinity() { return FiltrationLevel(); }

  constexpr bool is_minus_infinity() const { return !finite_; }
  /// Throws std::logic_error for minus infinity.
  int value() const;

  friend constexpr bool operator==(const FiltrationLevel& a, const FiltrationLevel& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const FiltrationLevel& a, const FiltrationLevel& b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  constexpr FiltrationLevel() = default;
  int value_ = 0;
  bool finite_ = false;
};

/// Sum of the edge levels of a word.
int word_level(const LayeredGraph& g, const Word& w);

/// Graded-lexicographic order on words: level, then length, then edge ids.
bool graded_word_less(const LayeredGraph& g, const Word& a, const Word& b);

/// Element of the free algebra T(E): a finite map word -> nonzero scalar.
///
/// A polynomial made only of constants carries no graph and combines with
/// polynomials over any graph; otherwise operands must come from the same
/// graph handle, or MixedGraph is thrown.
class NcPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  NcPoly() = default;
  explicit NcPoly(const Scalar& constant);

  static NcPoly one() { return NcPoly(Scalar(1)); }
  static NcPoly word(const LayeredGraph& g, Word w, const Scalar& coefficient = 1);
  static NcPoly edge(const LayeredGraph& g, EdgeIdx e) { return word(g, Word{e}); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const LayeredGraph& graph() const { return graph_; }
  Scalar coefficient(const Word& w) const;

  /// |a|: the largest word level present.
  FiltrationLevel level() const;

  /// Adds c * w in place (c may be zero; zero coefficients are pruned).
  void add_term(const Word& w, const Scalar& c);

  NcPoly& operator+=(const NcPoly& other);
  NcPoly& operator-=(const NcPoly& other);
  NcPoly& operator*=(const Scalar& s);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= Scalar(-1); }
  friend NcPoly operator*(const Scalar& s, NcPoly a) { return a *= s; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

  /// Equal term maps; graph handles are not compared.
  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

 private:
  void adopt_graph(const LayeredGraph& other);

  LayeredGraph graph_;
  Terms terms_;
};

NcPoly nc_add(const NcPoly& a, const NcPoly& b);
NcPoly nc_scale(const Scalar& s, const NcPoly& a);
NcPoly nc_mul(const NcPoly& a, const NcPoly& b);
FiltrationLevel filtration_level(const NcPoly& a);

/// "p" for integers, "p/q" otherwise.
std::string render_scalar(const Scalar& s);
/// Edge ids joined by a middle dot; "1" for the empty word.
std::string render_word(const LayeredGraph& g, const Word& w);
/// Terms in graded-lex word order, e.g. "a1 + b1 - 1/2·b1·a1"; "0" for zero.
std::string render(const NcPoly& p);

/// Polynomial in a central variable t with NcPoly coefficients, truncated
/// modulo t^(bound+1).
class PathPoly {
 public:
  PathPoly(int bound, NcPoly constant);
  /// Coefficients c_0, c_1, ...; entries past the bound are dropped.
  PathPoly(int bound, std::vector<NcPoly> coeffs);

  int bound() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^k; zero beyond the truncation bound.
  NcPoly coefficient(int k) const;

  friend PathPoly operator*(const PathPoly& a, const PathPoly& b);
  friend bool operator==(const PathPoly& a, const PathPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<NcPoly> coeffs_;
};

/// P_pi(t) = (1 - t e_1) ... (1 - t e_k) mod t^(n+1), n the graph's maximal
/// level. The empty edge sequence gives 1. Throws InvalidPath.
PathPoly path_poly(const LayeredGraph& g, std::span<const EdgeIdx> path);

/// e(pi,k) = (-1)^k [t^k] P_pi(t); zero for k > l(pi).
NcPoly e_of_path(const LayeredGraph& g, std::span<const EdgeIdx> path, int k);

/// e(v,k) = e(pi_v,k); e(v,0) = 1 and e(*,k) = 0 for k > 0.
NcPoly e_of_vertex(const LayeredGraph& g, VertexIdx v, int k);

}  // namespace pathalg
