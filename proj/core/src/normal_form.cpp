#include "pathalg/normal_form.hpp"

#include <algorithm>

#include "pathalg/error.hpp"
#include "pathalg/relations.hpp"

namespace pathalg {

BVector BVector::from_terms(const LayeredGraph& g, Terms terms) {
  BVector x;
  x.graph_ = g;
  x.terms_ = std::move(terms);
  return x;
}

BVector BVector::basis(const LayeredGraph& g, PairSeq b, const Scalar& c) {
  check_pairs(g, b);
  if (!is_basis_seq(g, b))
    throw Error(ErrorKind::BadMultiplicity, render(g, b) + " has a composable adjacent pair");
  BVector x;
  x.graph_ = g;
  x.add_term(b, c);
  return x;
}

Scalar BVector::coefficient(const PairSeq& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar(0) : it->second;
}

FiltrationLevel BVector::level() const {
  if (terms_.empty()) return FiltrationLevel::minus_infinity();
  int best = 0;
  for (const auto& [b, c] : terms_)
    if (!b.empty()) best = std::max(best, seq_level(graph_, b));
  return best;
}

void BVector::add_term(const PairSeq& b, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void BVector::adopt_graph(const LayeredGraph& other) {
  if (other.empty()) return;
  if (graph_.empty()) {
    graph_ = other;
    return;
  }
  if (!graph_.same_as(other)) throw Error(ErrorKind::MixedGraph, "module elements over different graphs");
}

BVector& BVector::operator+=(const BVector& other) {
  adopt_graph(other.graph_);
  for (const auto& [b, c] : other.terms_) add_term(b, c);
  return *this;
}

BVector& BVector::operator-=(const BVector& other) {
  adopt_graph(other.graph_);
  for (const auto& [b, c] : other.terms_) add_term(b, -c);
  return *this;
}

BVector& BVector::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

std::string render(const BVector& x) {
  if (x.is_zero()) return "0";
  std::vector<const BVector::Terms::value_type*> terms;
  for (const auto& t : x.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](auto* a, auto* b) { return graded_seq_less(x.graph(), a->first, b->first); });
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [b, c] = *terms[i];
    const bool negative = sgn(c) < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += render_scalar(abs(c)) + "·[" + render(x.graph(), b) + "]";
  }
  return out;
}

NcPoly to_poly(const LayeredGraph& g, const BVector& x) {
  NcPoly out;
  for (const auto& [b, c] : x.terms()) out += c * eword_to_poly(g, EWord{b.pairs});
  return out;
}

Reducer::Reducer(LayeredGraph g) : g_(std::move(g)) {
  if (g_.empty()) throw std::invalid_argument("Reducer needs a graph");
  zero_ = BVector::from_terms(g_, {});
}

void Reducer::check_graph(const LayeredGraph& other) const {
  if (!other.empty() && !other.same_as(g_)) throw Error(ErrorKind::MixedGraph, "operand from a different graph");
}

int Reducer::z_index(VertexIdx v, int k, const PairSeq& b) const {
  if (k < 0 || k > g_.level(v)) throw Error(ErrorKind::BadMultiplicity, "k out of range for z-index");
  check_pairs(g_, b);
  int running = k;
  for (std::size_t j = 0; j < b.size(); ++j) {
    const auto& p = b.pairs[j];
    if (running > g_.level(v) || !g_.composable(v, running, p.vertex, p.mult)) return static_cast<int>(j) + 1;
    running += p.mult;
  }
  return static_cast<int>(b.size()) + 1;
}

const EWordCombination& Reducer::correction(VertexIdx v, VertexIdx u, int k, int l) {
  const auto key = std::make_tuple(v, u, k, l);
  auto it = correction_cache_.find(key);
  if (it != correction_cache_.end()) return it->second;
  return correction_cache_.emplace(key, product_correction_terms(g_, v, u, k, l)).first->second;
}

const BVector& Reducer::act_e_basis(VertexIdx v, int k, const PairSeq& b) {
  if (k > g_.level(v)) return zero_;
  auto key = std::make_tuple(v, k, b);
  if (auto it = act_cache_.find(key); it != act_cache_.end()) return it->second;

  BVector result = BVector::from_terms(g_, {});
  if (k == 0) {
    result.add_term(b, 1);
  } else {
    // Walk the composable prefix of b, accumulating the multiplicity on v.
    std::vector<int> running{k};
    std::size_t z = 0;
    while (z < b.size()) {
      const auto& p = b.pairs[z];
      const int cur = running.back();
      const bool composes = g_.reachable(v, p.vertex) && g_.level(p.vertex) == g_.level(v) - cur;
      if (!composes) break;
      running.push_back(cur + p.mult);
      ++z;
    }
    PairSeq lead;
    lead.pairs.reserve(b.size() - z + 1);
    lead.pairs.push_back({v, running.back()});
    lead.pairs.insert(lead.pairs.end(), b.pairs.begin() + static_cast<std::ptrdiff_t>(z), b.pairs.end());
    result.add_term(lead, 1);

    for (std::size_t j = 0; j < z; ++j) {
      const auto& p = b.pairs[j];
      // Copy: the recursive calls below may grow correction_cache_.
      const EWordCombination terms = correction(v, p.vertex, running[j], p.mult);
      if (terms.empty()) continue;
      BVector tail = BVector::from_terms(g_, {});
      tail.add_term(b.suffix(j + 1), 1);
      result -= act(terms, tail);
    }
  }
  return act_cache_.emplace(std::move(key), std::move(result)).first->second;
}

const BVector& Reducer::act_e(VertexIdx v, int k, const PairSeq& b) {
  (void)g_.level(v);
  if (k < 0) throw Error(ErrorKind::BadMultiplicity, "negative multiplicity");
  check_pairs(g_, b);
  if (!is_basis_seq(g_, b))
    throw Error(ErrorKind::BadMultiplicity, render(g_, b) + " has a composable adjacent pair");
  return act_e_basis(v, k, b);
}

BVector Reducer::act_e(VertexIdx v, int k, const BVector& x) {
  check_graph(x.graph());
  if (k < 0) throw Error(ErrorKind::BadMultiplicity, "negative multiplicity");
  (void)g_.level(v);
  BVector out = BVector::from_terms(g_, {});
  for (const auto& [b, c] : x.terms()) {
    const BVector& part = act_e_basis(v, k, b);
    for (const auto& [key, coeff] : part.terms()) out.add_term(key, c * coeff);
  }
  return out;
}

BVector Reducer::act_edge(EdgeIdx f, const PairSeq& b) {
  const VertexIdx t = g_.tail(f);
  const VertexIdx h = g_.head(f);
  BVector out = act_e(t, 1, b);
  out -= act_e_basis(h, 1, b);
  return out;
}

BVector Reducer::act_edge(EdgeIdx f, const BVector& x) {
  const VertexIdx t = g_.tail(f);
  const VertexIdx h = g_.head(f);
  BVector out = act_e(t, 1, x);
  out -= act_e(h, 1, x);
  return out;
}

BVector Reducer::act_word(const Word& w, const BVector& x) {
  BVector cur = x;
  for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = act_edge(*it, cur);
  return cur;
}

BVector Reducer::act(const NcPoly& p, const BVector& x) {
  check_graph(p.graph());
  check_graph(x.graph());
  BVector out = BVector::from_terms(g_, {});
  for (const auto& [w, c] : p.terms()) {
    BVector part = act_word(w, x);
    part *= c;
    out += part;
  }
  return out;
}

BVector Reducer::act(const EWord& w, const BVector& x) {
  BVector cur = x;
  for (auto it = w.factors.rbegin(); it != w.factors.rend() && !cur.is_zero(); ++it)
    cur = act_e(it->vertex, it->mult, cur);
  return cur;
}

BVector Reducer::act(const EWordCombination& p, const BVector& x) {
  BVector out = BVector::from_terms(g_, {});
  for (const auto& [w, c] : p) {
    BVector part = act(w, x);
    part *= c;
    out += part;
  }
  return out;
}

BVector Reducer::normal_form(const NcPoly& p) { return act(p, BVector::unit()); }

int z_index(const LayeredGraph& g, VertexIdx v, int k, const PairSeq& b) { return Reducer(g).z_index(v, k, b); }

BVector act_e(const LayeredGraph& g, VertexIdx v, int k, const PairSeq& b) {
  Reducer r(g);
  return r.act_e(v, k, b);
}

BVector act_edge(const LayeredGraph& g, EdgeIdx f, const PairSeq& b) {
  Reducer r(g);
  return r.act_edge(f, b);
}

BVector act_poly(const LayeredGraph& g, const NcPoly& p, const BVector& x) {
  Reducer r(g);
  return r.act(p, x);
}

BVector act_poly(const LayeredGraph& g, const EWordCombination& p, const BVector& x) {
  Reducer r(g);
  return r.act(p, x);
}

BVector normal_form(const LayeredGraph& g, const NcPoly& p) {
  Reducer r(g);
  return r.normal_form(p);
}

Word hat_word(const LayeredGraph& g, VertexIdx v, int k) {
  if (k < 1 || k > g.level(v)) throw Error(ErrorKind::BadMultiplicity, "hat word needs 1 <= k <= |v|");
  const auto pi = g.canonical_path(v);
  return Word(pi->edges.begin(), pi->edges.begin() + k);
}

Word hat_word_of_seq(const LayeredGraph& g, const PairSeq& b) {
  Word out;
  for (const auto& p : b.pairs) {
    const Word part = hat_word(g, p.vertex, p.mult);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace pathalg
