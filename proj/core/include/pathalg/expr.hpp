#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pathalg/graph.hpp"
#include "pathalg/ncpoly.hpp"

namespace pathalg {

struct Expr;

struct SumExpr {
  std::vector<Expr> terms;
  std::vector<int> signs;  // +1 or -1, parallel to terms
  friend bool operator==(const SumExpr&, const SumExpr&);
};

struct ProductExpr {
  std::vector<Expr> factors;
  friend bool operator==(const ProductExpr&, const ProductExpr&);
};

struct RationalExpr {
  Scalar value;
  friend bool operator==(const RationalExpr&, const RationalExpr&) = default;
};

struct EdgeExpr {
  EdgeIdx edge = 0;
  friend bool operator==(const EdgeExpr&, const EdgeExpr&) = default;
};

/// e(vertex, k)
struct CoefficientExpr {
  VertexIdx vertex = 0;
  int k = 0;
  friend bool operator==(const CoefficientExpr&, const CoefficientExpr&) = default;
};

/// E(v, u, k, l)
struct CorrectionExpr {
  VertexIdx v = 0;
  VertexIdx u = 0;
  int k = 0;
  int l = 0;
  friend bool operator==(const CorrectionExpr&, const CorrectionExpr&) = default;
};

/// Parsed edge expression. Nested sums and products are flattened while
/// parsing, so rendering and re-parsing reproduces the same tree.
struct Expr {
  std::variant<SumExpr, ProductExpr, RationalExpr, EdgeExpr, CoefficientExpr, CorrectionExpr> node;
  friend bool operator==(const Expr&, const Expr&);
};

/// Grammar (whitespace-insensitive):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'·') factor)*
///   factor := RATIONAL | EDGE | 'e(' VERTEX ',' INT ')'
///           | 'E(' VERTEX ',' VERTEX ',' INT ',' INT ')' | '(' expr ')'
/// Identifiers containing punctuation are written in double quotes.
/// Throws SyntaxError (with byte offset), UnknownSymbol, BadMultiplicity and
/// NotComposable.
Expr parse_expr(std::string_view text, const LayeredGraph& g);

/// Canonical text; parse_expr(render(e)) == e.
std::string render(const LayeredGraph& g, const Expr& e);

/// Expands e(v,k) and E(v,u,k,l) into T(E).
NcPoly lower(const LayeredGraph& g, const Expr& e);

}  // namespace pathalg
