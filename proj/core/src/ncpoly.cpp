#include "pathalg/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "pathalg/error.hpp"

namespace pathalg {

int FiltrationLevel::value() const {
  if (!finite_) throw std::logic_error("filtration level of zero is minus infinity");
  return value_;
}

std::string FiltrationLevel::to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

int word_level(const LayeredGraph& g, const Word& w) {
  int total = 0;
  for (EdgeIdx e : w) total += g.edge_level(e);
  return total;
}

bool graded_word_less(const LayeredGraph& g, const Word& a, const Word& b) {
  if (a.empty() || b.empty()) {
    if (a.empty() != b.empty()) return a.empty();
    return false;
  }
  const int la = word_level(g, a);
  const int lb = word_level(g, b);
  if (la != lb) return la < lb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

NcPoly::NcPoly(const Scalar& constant) {
  if (sgn(constant) != 0) terms_.emplace(Word{}, constant);
}

NcPoly NcPoly::word(const LayeredGraph& g, Word w, const Scalar& coefficient) {
  NcPoly p;
  p.graph_ = g;
  for (EdgeIdx e : w) (void)g.edge_id(e);
  p.add_term(w, coefficient);
  return p;
}

Scalar NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

FiltrationLevel NcPoly::level() const {
  if (terms_.empty()) return FiltrationLevel::minus_infinity();
  int best = 0;
  for (const auto& [w, c] : terms_)
    if (!w.empty()) best = std::max(best, word_level(graph_, w));
  return best;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (sgn(c) == 0) return;
  if (!w.empty() && graph_.empty()) throw std::logic_error("NcPoly word term without a graph");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void NcPoly::adopt_graph(const LayeredGraph& other) {
  if (other.empty()) return;
  if (graph_.empty()) {
    graph_ = other;
    return;
  }
  if (!graph_.same_as(other)) throw Error(ErrorKind::MixedGraph, "polynomials over different graphs");
}

NcPoly& NcPoly::operator+=(const NcPoly& other) {
  adopt_graph(other.graph_);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other) {
  adopt_graph(other.graph_);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  out.adopt_graph(a.graph_);
  out.adopt_graph(b.graph_);
  Word buf;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      buf.assign(wa.begin(), wa.end());
      buf.insert(buf.end(), wb.begin(), wb.end());
      out.add_term(buf, ca * cb);
    }
  }
  return out;
}

NcPoly nc_add(const NcPoly& a, const NcPoly& b) { return a + b; }
NcPoly nc_scale(const Scalar& s, const NcPoly& a) { return s * a; }
NcPoly nc_mul(const NcPoly& a, const NcPoly& b) { return a * b; }
FiltrationLevel filtration_level(const NcPoly& a) { return a.level(); }

std::string render_scalar(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

std::string render_word(const LayeredGraph& g, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "·";
    out += g.edge_id(w[i]);
  }
  return out;
}

std::string render(const NcPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<const NcPoly::Terms::value_type*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](auto* x, auto* y) { return graded_word_less(p.graph(), x->first, y->first); });
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [w, c] = *terms[i];
    const bool negative = sgn(c) < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Scalar magnitude = abs(c);
    if (w.empty()) {
      out += render_scalar(magnitude);
    } else {
      if (magnitude != 1) out += render_scalar(magnitude) + "·";
      out += render_word(p.graph(), w);
    }
  }
  return out;
}

PathPoly::PathPoly(int bound, NcPoly constant) {
  if (bound < 0) throw std::invalid_argument("negative truncation bound");
  coeffs_.assign(static_cast<std::size_t>(bound) + 1, NcPoly());
  coeffs_[0] = std::move(constant);
}

NcPoly PathPoly::coefficient(int k) const {
  if (k < 0 || k > bound()) return NcPoly();
  return coeffs_[static_cast<std::size_t>(k)];
}

PathPoly::PathPoly(int bound, std::vector<NcPoly> coeffs) : PathPoly(bound, NcPoly()) {
  for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

PathPoly operator*(const PathPoly& a, const PathPoly& b) {
  const int n = std::min(a.bound(), b.bound());
  PathPoly out(n, NcPoly());
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

PathPoly path_poly(const LayeredGraph& g, std::span<const EdgeIdx> path) {
  const int n = g.max_level();
  PathPoly result(n, NcPoly::one());
  if (path.empty()) return result;
  (void)g.make_path(path);
  for (EdgeIdx e : path) result = result * PathPoly(n, {NcPoly::one(), NcPoly::word(g, Word{e}, Scalar(-1))});
  return result;
}

NcPoly e_of_path(const LayeredGraph& g, std::span<const EdgeIdx> path, int k) {
  if (k < 0) throw Error(ErrorKind::BadMultiplicity, "negative coefficient index");
  if (static_cast<std::size_t>(k) > path.size()) {
    if (!path.empty()) (void)g.make_path(path);
    return NcPoly();
  }
  NcPoly c = path_poly(g, path).coefficient(k);
  if (k % 2 == 1) c *= Scalar(-1);
  return c;
}

NcPoly e_of_vertex(const LayeredGraph& g, VertexIdx v, int k) {
  if (k < 0) throw Error(ErrorKind::BadMultiplicity, "negative coefficient index");
  const auto pi = g.canonical_path(v);
  if (k == 0) return NcPoly::one();
  if (!pi) return NcPoly();
  return e_of_path(g, pi->edges, k);
}

}  // namespace pathalg
