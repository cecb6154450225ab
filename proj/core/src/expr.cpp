#include "pathalg/expr.hpp"

#include <cctype>
#include <limits>

#include "pathalg/error.hpp"
#include "pathalg/relations.hpp"

namespace pathalg {

bool operator==(const SumExpr& a, const SumExpr& b) { return a.signs == b.signs && a.terms == b.terms; }
bool operator==(const ProductExpr& a, const ProductExpr& b) { return a.factors == b.factors; }
bool operator==(const Expr& a, const Expr& b) { return a.node == b.node; }

namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";

enum class Tok { LParen, RParen, Comma, Plus, Minus, Times, Word, Quoted, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t pos = 0;
};

bool is_delimiter(std::string_view s, std::size_t i) {
  const char c = s[i];
  if (std::isspace(static_cast<unsigned char>(c))) return true;
  if (c == '(' || c == ')' || c == ',' || c == '+' || c == '-' || c == '*' || c == '"') return true;
  return s.substr(i, kMiddleDot.size()) == kMiddleDot;
}

bool is_rational_literal(std::string_view s) {
  const auto slash = s.find('/');
  const auto digits = [](std::string_view d) {
    if (d.empty()) return false;
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (slash == std::string_view::npos) return digits(s);
  return digits(s.substr(0, slash)) && digits(s.substr(slash + 1));
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    const auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), start});
      ++i;
    };
    switch (c) {
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case '+': single(Tok::Plus); continue;
      case '-': single(Tok::Minus); continue;
      case '*': single(Tok::Times); continue;
      default: break;
    }
    if (s.substr(i, kMiddleDot.size()) == kMiddleDot) {
      out.push_back({Tok::Times, std::string(kMiddleDot), start});
      i += kMiddleDot.size();
      continue;
    }
    if (c == '"') {
      const auto close = s.find('"', i + 1);
      if (close == std::string_view::npos)
        throw Error(ErrorKind::SyntaxError, "unterminated quote at offset " + std::to_string(start));
      out.push_back({Tok::Quoted, std::string(s.substr(i + 1, close - i - 1)), start});
      i = close + 1;
      continue;
    }
    while (i < s.size() && !is_delimiter(s, i)) ++i;
    out.push_back({Tok::Word, std::string(s.substr(start, i - start)), start});
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

void append_flattened(SumExpr& sum, Expr term, int sign) {
  if (auto* inner = std::get_if<SumExpr>(&term.node)) {
    for (std::size_t i = 0; i < inner->terms.size(); ++i)
      append_flattened(sum, std::move(inner->terms[i]), sign * inner->signs[i]);
    return;
  }
  sum.terms.push_back(std::move(term));
  sum.signs.push_back(sign);
}

class Parser {
 public:
  Parser(std::string_view text, const LayeredGraph& g) : tokens_(tokenize(text)), g_(g) {}

  Expr parse() {
    Expr e = expr();
    if (peek().kind != Tok::End) syntax("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void syntax(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, msg + " at offset " + std::to_string(peek().pos));
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) syntax(std::string("expected ") + what);
    ++pos_;
  }

  Expr expr() {
    SumExpr sum;
    int sign = 1;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) sign = next().kind == Tok::Minus ? -1 : 1;
    append_flattened(sum, term(), sign);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      sign = next().kind == Tok::Minus ? -1 : 1;
      append_flattened(sum, term(), sign);
    }
    if (sum.terms.size() == 1 && sum.signs[0] == 1) return std::move(sum.terms[0]);
    return Expr{std::move(sum)};
  }

  Expr term() {
    ProductExpr prod;
    const auto push = [&](Expr f) {
      if (auto* inner = std::get_if<ProductExpr>(&f.node)) {
        for (auto& x : inner->factors) prod.factors.push_back(std::move(x));
      } else {
        prod.factors.push_back(std::move(f));
      }
    };
    push(factor());
    while (peek().kind == Tok::Times) {
      ++pos_;
      push(factor());
    }
    if (prod.factors.size() == 1) return std::move(prod.factors[0]);
    return Expr{std::move(prod)};
  }

  Expr factor() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      ++pos_;
      Expr inner = expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Word && (t.text == "e" || t.text == "E") && tokens_[pos_ + 1].kind == Tok::LParen) {
      const bool big = t.text == "E";
      pos_ += 2;
      if (!big) {
        const VertexIdx v = vertex();
        expect(Tok::Comma, "','");
        const int k = integer();
        expect(Tok::RParen, "')'");
        return Expr{CoefficientExpr{v, k}};
      }
      const VertexIdx v = vertex();
      expect(Tok::Comma, "','");
      const VertexIdx u = vertex();
      expect(Tok::Comma, "','");
      const int k = integer();
      expect(Tok::Comma, "','");
      const int l = integer();
      expect(Tok::RParen, "')'");
      if (!g_.reachable(v, u) || g_.level(v) - g_.level(u) != k)
        throw Error(ErrorKind::NotComposable, "E(" + g_.vertex_id(v) + "," + g_.vertex_id(u) + "," +
                                                  std::to_string(k) + "," + std::to_string(l) +
                                                  ") needs v > u with |v| - |u| = k");
      return Expr{CorrectionExpr{v, u, k, l}};
    }
    if (t.kind == Tok::Word && is_rational_literal(t.text)) {
      ++pos_;
      Scalar value;
      if (value.set_str(t.text, 10) != 0 || value.get_den() == 0) syntax("bad rational '" + t.text + "'");
      value.canonicalize();
      return Expr{RationalExpr{value}};
    }
    if (t.kind == Tok::Word || t.kind == Tok::Quoted) {
      ++pos_;
      auto e = g_.find_edge(t.text);
      if (!e) throw Error(ErrorKind::UnknownSymbol, "no edge named '" + t.text + "'");
      return Expr{EdgeExpr{*e}};
    }
    syntax(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  VertexIdx vertex() {
    const Token& t = peek();
    const bool star = t.kind == Tok::Times && t.text == "*";
    if (t.kind != Tok::Word && t.kind != Tok::Quoted && !star) syntax("expected a vertex id");
    ++pos_;
    auto v = g_.find_vertex(t.text);
    if (!v) throw Error(ErrorKind::UnknownSymbol, "no vertex named '" + t.text + "'");
    return *v;
  }

  int integer() {
    const Token& t = peek();
    if (t.kind != Tok::Word || t.text.find('/') != std::string::npos || !is_rational_literal(t.text))
      syntax("expected a non-negative integer");
    ++pos_;
    if (t.text.size() > 9) throw Error(ErrorKind::BadMultiplicity, "integer '" + t.text + "' is too large");
    return std::stoi(t.text);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const LayeredGraph& g_;
};

std::string quote_if_needed(const std::string& id) {
  bool plain = !id.empty() && !is_rational_literal(id) && id != "e" && id != "E";
  for (std::size_t i = 0; plain && i < id.size(); ++i) plain = !is_delimiter(id, i);
  return plain ? id : "\"" + id + "\"";
}

std::string render_node(const LayeredGraph& g, const Expr& e, bool in_product) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SumExpr>) {
          std::string out;
          for (std::size_t i = 0; i < n.terms.size(); ++i) {
            if (i == 0) {
              if (n.signs[i] < 0) out += "-";
            } else {
              out += n.signs[i] < 0 ? " - " : " + ";
            }
            out += render_node(g, n.terms[i], false);
          }
          return in_product ? "(" + out + ")" : out;
        } else if constexpr (std::is_same_v<T, ProductExpr>) {
          std::string out;
          for (std::size_t i = 0; i < n.factors.size(); ++i) {
            if (i) out += "*";
            out += render_node(g, n.factors[i], true);
          }
          return out;
        } else if constexpr (std::is_same_v<T, RationalExpr>) {
          return render_scalar(n.value);
        } else if constexpr (std::is_same_v<T, EdgeExpr>) {
          return quote_if_needed(g.edge_id(n.edge));
        } else if constexpr (std::is_same_v<T, CoefficientExpr>) {
          return "e(" + quote_if_needed(g.vertex_id(n.vertex)) + "," + std::to_string(n.k) + ")";
        } else {
          return "E(" + quote_if_needed(g.vertex_id(n.v)) + "," + quote_if_needed(g.vertex_id(n.u)) + "," +
                 std::to_string(n.k) + "," + std::to_string(n.l) + ")";
        }
      },
      e.node);
}

}  // namespace

Expr parse_expr(std::string_view text, const LayeredGraph& g) { return Parser(text, g).parse(); }

std::string render(const LayeredGraph& g, const Expr& e) { return render_node(g, e, false); }

NcPoly lower(const LayeredGraph& g, const Expr& e) {
  return std::visit(
      [&](const auto& n) -> NcPoly {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SumExpr>) {
          NcPoly out;
          for (std::size_t i = 0; i < n.terms.size(); ++i) {
            if (n.signs[i] < 0)
              out -= lower(g, n.terms[i]);
            else
              out += lower(g, n.terms[i]);
          }
          return out;
        } else if constexpr (std::is_same_v<T, ProductExpr>) {
          NcPoly out = NcPoly::one();
          for (const auto& f : n.factors) out = out * lower(g, f);
          return out;
        } else if constexpr (std::is_same_v<T, RationalExpr>) {
          return NcPoly(n.value);
        } else if constexpr (std::is_same_v<T, EdgeExpr>) {
          return NcPoly::edge(g, n.edge);
        } else if constexpr (std::is_same_v<T, CoefficientExpr>) {
          return e_of_vertex(g, n.vertex, n.k);
        } else {
          return product_correction(g, n.v, n.u, n.k, n.l);
        }
      },
      e.node);
}

}  // namespace pathalg
