#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pathalg/graph.hpp"
#include "pathalg/ncpoly.hpp"
#include "pathalg/pairs.hpp"

namespace pathalg {

/// e(pi_1,k) - e(pi_2,k) for two paths with common endpoints.
struct PathPairOrigin {
  Path first;
  Path second;
  int k = 0;
};

/// f - e(t(f),1) + e(h(f),1).
struct EdgeOrigin {
  EdgeIdx edge = 0;
};

/// e(v,1)e(u,k) - e(v,k+1) + e(u,k+1) - e(u,1)e(u,k) for a cover v > u.
struct CoverOrigin {
  VertexIdx v = 0;
  VertexIdx u = 0;
  int k = 0;
};

using RelationOrigin = std::variant<PathPairOrigin, EdgeOrigin, CoverOrigin>;

/// A generator of the defining ideal together with where it came from.
struct RelationGen {
  NcPoly poly;
  RelationOrigin origin;
};

struct PathPairOptions {
  /// Only pairs ending at the minimal vertex; these already generate the ideal.
  bool restrict_to_star = false;
};

/// The full defining family: every unordered pair of distinct paths with a
/// common tail and head, every 1 <= k <= length. Zero polynomials and
/// polynomials equal to an earlier one up to sign are skipped.
std::vector<RelationGen> path_pair_relations(const LayeredGraph& g, PathPairOptions options = {});

/// The smaller generating set: one element per non-chosen edge, and one per
/// cover v > u with |u| = |v| - 1 > 0 and 1 <= k <= |u|. Zeros are pruned.
std::vector<RelationGen> reduced_relations(const LayeredGraph& g);

/// Terms of E(v,u,k,l), the correction in
///   e(v,k) e(u,l) = e(v,k+l) - E(v,u,k,l)   (mod the ideal)
/// for v > u with |v| - |u| = k, enumerated over all composition tuples
/// (i_0, ..., i_{r+1}) with sign (-1)^r. Factors e(.,0) are dropped and
/// vanishing factors remove their term. Throws NotComposable.
EWordCombination product_correction_terms(const LayeredGraph& g, VertexIdx v, VertexIdx u, int k, int l);
NcPoly product_correction(const LayeredGraph& g, VertexIdx v, VertexIdx u, int k, int l);

/// Terms of H(v,u,j): the t^j coefficient of P_v(t) P_u(t)^{-1}, which is
/// congruent to the t^j coefficient of P_pi(t) for any path pi from v to u.
/// Throws NotComposable unless v > u.
EWordCombination transfer_coefficient_terms(const LayeredGraph& g, VertexIdx v, VertexIdx u, int j);
NcPoly transfer_coefficient(const LayeredGraph& g, VertexIdx v, VertexIdx u, int j);

/// "[tag] poly", e.g. "[edge b2] b2 - a1 + a2 - b1".
std::string render(const LayeredGraph& g, const RelationGen& r);

}  // namespace pathalg
