#include "pathalg/verification.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "pathalg/error.hpp"
#include "pathalg/normal_form.hpp"
#include "pathalg/relations.hpp"
#include "pathalg/sparse_echelon.hpp"

namespace pathalg {

namespace {

void check_max_level(int max_level) {
  if (max_level < 0) throw std::invalid_argument("max level must be non-negative");
}

std::vector<VertexMult> all_pairs(const LayeredGraph& g) {
  std::vector<VertexMult> out;
  for (VertexIdx v = 0; v < g.vertex_count(); ++v)
    for (int m = 1; m <= g.level(v); ++m) out.push_back({v, m});
  return out;
}

// Words of T(E) up to a level, with a fixed column per word. Columns run
// from the highest graded word down, so elimination clears leading words first.
struct WordSpace {
  std::vector<std::vector<Word>> by_level;
  std::vector<std::size_t> cumulative;
  std::map<Word, std::size_t> column;
};

WordSpace build_words(const LayeredGraph& g, int max_level, const VerifyLimits& limits) {
  std::vector<std::size_t> count(static_cast<std::size_t>(max_level) + 1, 0);
  count[0] = 1;
  std::size_t total = 1;
  for (int d = 1; d <= max_level; ++d) {
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
      const int l = g.edge_level(e);
      if (l <= d) count[d] += count[d - l];
      if (count[d] > limits.max_words) break;
    }
    total += count[d];
    if (total > limits.max_words)
      throw Error(ErrorKind::BoundTooLarge, "T(E) has more than " + std::to_string(limits.max_words) +
                                                " words of level <= " + std::to_string(d));
  }

  WordSpace ws;
  ws.by_level.resize(static_cast<std::size_t>(max_level) + 1);
  ws.by_level[0].push_back({});
  for (int d = 1; d <= max_level; ++d) {
    auto& out = ws.by_level[d];
    out.reserve(count[d]);
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
      const int l = g.edge_level(e);
      if (l > d) continue;
      for (const Word& rest : ws.by_level[d - l]) {
        Word w;
        w.reserve(rest.size() + 1);
        w.push_back(e);
        w.insert(w.end(), rest.begin(), rest.end());
        out.push_back(std::move(w));
      }
    }
  }
  std::vector<const Word*> all;
  for (const auto& level : ws.by_level) {
    ws.cumulative.push_back((ws.cumulative.empty() ? 0 : ws.cumulative.back()) + level.size());
    for (const auto& w : level) all.push_back(&w);
  }
  std::sort(all.begin(), all.end(), [&](const Word* a, const Word* b) { return graded_word_less(g, *a, *b); });
  for (std::size_t i = 0; i < all.size(); ++i) ws.column.emplace(*all[i], all.size() - 1 - i);
  return ws;
}

// Span of u*p*w over the generators p, grown one degree at a time.
class TruncatedSpan {
 public:
  TruncatedSpan(const LayeredGraph& g, const WordSpace& ws, const std::vector<NcPoly>& generators,
                const VerifyLimits& limits)
      : g_(g), ws_(ws), limits_(limits) {
    for (const auto& p : generators) {
      if (p.is_zero()) continue;
      gens_.push_back({&p, p.level().value()});
    }
  }

  void extend_to(int d) {
    for (const auto& [p, level] : gens_) {
      if (level > d) continue;
      for (int a = 0; a <= d - level; ++a) {
        const int b = d - level - a;
        for (const Word& u : ws_.by_level[a]) {
          for (const Word& w : ws_.by_level[b]) {
            if (++rows_ > limits_.max_rows)
              throw Error(ErrorKind::BoundTooLarge,
                          "more than " + std::to_string(limits_.max_rows) + " ideal products at degree " +
                              std::to_string(d));
            echelon_.insert(product_row(u, *p, w));
          }
        }
      }
    }
  }

  std::size_t rank() const { return echelon_.rank(); }

  bool contains(const NcPoly& p) const {
    SparseRowEchelon::RationalRow row;
    for (const auto& [w, c] : p.terms()) {
      auto it = ws_.column.find(w);
      if (it == ws_.column.end()) return false;
      row.emplace_back(it->second, c);
    }
    return echelon_.contains(SparseRowEchelon::integerize(std::move(row)));
  }

 private:
  SparseRowEchelon::Row product_row(const Word& u, const NcPoly& p, const Word& w) const {
    SparseRowEchelon::RationalRow row;
    row.reserve(p.size());
    Word buf;
    for (const auto& [t, c] : p.terms()) {
      buf.assign(u.begin(), u.end());
      buf.insert(buf.end(), t.begin(), t.end());
      buf.insert(buf.end(), w.begin(), w.end());
      row.emplace_back(ws_.column.at(buf), c);
    }
    return SparseRowEchelon::integerize(std::move(row));
  }

  const LayeredGraph& g_;
  const WordSpace& ws_;
  VerifyLimits limits_;
  std::vector<std::pair<const NcPoly*, int>> gens_;
  SparseRowEchelon echelon_;
  std::size_t rows_ = 0;
};

struct Failure {
  int degree = 0;
  std::string message;
};

// One elimination pass. With a reducer, also checks after each degree d that
// every word of level d is congruent to the re-expansion of its normal form.
std::vector<DegreeRow> run_dims(const LayeredGraph& g, const WordSpace& ws, const std::vector<NcPoly>& generators,
                                const std::vector<std::uint64_t>& graded, const VerifyLimits& limits,
                                Reducer* reducer, const std::string& label, std::vector<Failure>& failures) {
  TruncatedSpan span(g, ws, generators, limits);
  std::vector<DegreeRow> rows;
  std::size_t basis_total = 0;
  for (int d = 0; d < static_cast<int>(ws.by_level.size()); ++d) {
    span.extend_to(d);
    basis_total += graded[d];
    DegreeRow row;
    row.degree = d;
    row.dimT = ws.cumulative[d];
    row.dimR = span.rank();
    row.dimA = row.dimT - row.dimR;
    row.basisCount = basis_total;
    row.graded = graded[d];
    row.pass = row.dimA == row.basisCount;
    if (!row.pass)
      failures.push_back({d, label + ": dimA = " + std::to_string(row.dimA) + " but basisCount = " +
                                 std::to_string(row.basisCount)});
    if (reducer) {
      for (const Word& w : ws.by_level[d]) {
        const NcPoly word = NcPoly::word(g, w);
        const NcPoly diff = word - to_poly(g, reducer->normal_form(word));
        if (diff.is_zero() || span.contains(diff)) continue;
        row.pass = false;
        failures.push_back({d, label + ": word " + render_word(g, w) +
                                   " is not congruent to the expansion of its normal form"});
        break;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<NcPoly> polys_of(std::vector<RelationGen> gens) {
  std::vector<NcPoly> out;
  out.reserve(gens.size());
  for (auto& r : gens) out.push_back(std::move(r.poly));
  return out;
}

DimReport finish(std::vector<DegreeRow> rows, std::vector<Failure> failures) {
  DimReport report;
  report.rows = std::move(rows);
  report.pass = failures.empty();
  if (!failures.empty()) {
    const auto first = std::min_element(failures.begin(), failures.end(),
                                        [](const Failure& a, const Failure& b) { return a.degree < b.degree; });
    report.failure_degree = first->degree;
    report.counterexample = "degree " + std::to_string(first->degree) + ", " + first->message;
  }
  return report;
}

}  // namespace

std::vector<PairSeq> enumerate_basis(const LayeredGraph& g, int max_level) {
  check_max_level(max_level);
  const auto pairs = all_pairs(g);
  std::vector<PairSeq> out;
  PairSeq cur;
  std::function<void(int)> extend = [&](int level) {
    out.push_back(cur);
    for (const auto& p : pairs) {
      const int l = pair_level(g, p);
      if (level + l > max_level) continue;
      if (!cur.empty() && g.composable(cur.pairs.back().vertex, cur.pairs.back().mult, p.vertex, p.mult)) continue;
      cur.pairs.push_back(p);
      extend(level + l);
      cur.pairs.pop_back();
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(), [&](const PairSeq& a, const PairSeq& b) { return graded_seq_less(g, a, b); });
  return out;
}

std::vector<std::uint64_t> hilbert_series(const LayeredGraph& g, int max_level) {
  check_max_level(max_level);
  const auto pairs = all_pairs(g);
  const std::size_t n = pairs.size();
  std::vector<int> level(n);
  std::vector<std::vector<std::size_t>> followers(n);
  for (std::size_t i = 0; i < n; ++i) {
    level[i] = pair_level(g, pairs[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (!g.composable(pairs[i].vertex, pairs[i].mult, pairs[j].vertex, pairs[j].mult)) followers[i].push_back(j);
  }
  // starting[d][i]: basis sequences of level d whose first pair is pairs[i].
  std::vector<std::vector<std::uint64_t>> starting(static_cast<std::size_t>(max_level) + 1,
                                                   std::vector<std::uint64_t>(n, 0));
  std::vector<std::uint64_t> out(static_cast<std::size_t>(max_level) + 1, 0);
  out[0] = 1;
  for (int d = 1; d <= max_level; ++d) {
    for (std::size_t i = 0; i < n; ++i) {
      const int rest = d - level[i];
      if (rest < 0) continue;
      std::uint64_t c = rest == 0 ? 1 : 0;
      if (rest > 0)
        for (std::size_t j : followers[i]) c += starting[rest][j];
      starting[d][i] = c;
      out[d] += c;
    }
  }
  return out;
}

DimReport brute_force_dims(const LayeredGraph& g, int max_level, const std::vector<NcPoly>& generators,
                           const VerifyLimits& limits) {
  check_max_level(max_level);
  const WordSpace ws = build_words(g, max_level, limits);
  const auto graded = hilbert_series(g, max_level);
  std::vector<Failure> failures;
  auto rows = run_dims(g, ws, generators, graded, limits, nullptr, "generators", failures);
  return finish(std::move(rows), std::move(failures));
}

DimReport brute_force_dims(const LayeredGraph& g, int max_level, GeneratorChoice choice, const VerifyLimits& limits) {
  const auto gens = choice == GeneratorChoice::Reduced ? polys_of(reduced_relations(g))
                                                       : polys_of(path_pair_relations(g));
  return brute_force_dims(g, max_level, gens, limits);
}

DimReport verify_basis(const LayeredGraph& g, int max_level, const VerifyOptions& options) {
  check_max_level(max_level);
  const WordSpace ws = build_words(g, max_level, options.limits);
  const auto graded = hilbert_series(g, max_level);
  std::vector<Failure> failures;

  const auto reduced = options.reduced_override ? *options.reduced_override : polys_of(reduced_relations(g));
  Reducer reducer(g);
  auto rows = run_dims(g, ws, reduced, graded, options.limits, &reducer, "reduced generators", failures);

  const auto compare = [&](const std::vector<DegreeRow>& other, const std::string& label) {
    for (std::size_t d = 0; d < rows.size(); ++d) {
      if (other[d].dimR == rows[d].dimR) continue;
      rows[d].pass = false;
      failures.push_back({static_cast<int>(d), label + " give dimR = " + std::to_string(other[d].dimR) +
                                                   " against " + std::to_string(rows[d].dimR)});
    }
    for (std::size_t d = 0; d < rows.size(); ++d)
      if (!other[d].pass) rows[d].pass = false;
  };

  if (options.check_path_pairs) {
    const auto gens = polys_of(path_pair_relations(g));
    compare(run_dims(g, ws, gens, graded, options.limits, nullptr, "path-pair generators", failures),
            "path-pair generators");
  }
  if (options.check_alternate_chosen) {
    const LayeredGraph alt = g.with_alternate_chosen();
    const auto gens = polys_of(reduced_relations(alt));
    Reducer alt_reducer(alt);
    compare(run_dims(alt, ws, gens, graded, options.limits, &alt_reducer, "alternate chosen map", failures),
            "alternate chosen map");
  }
  return finish(std::move(rows), std::move(failures));
}

std::string render_table(const DimReport& report) {
  const std::vector<std::string> header{"degree", "dimT", "dimR", "dimA", "basisCount", "status"};
  std::vector<std::vector<std::string>> cells{header};
  for (const auto& r : report.rows)
    cells.push_back({std::to_string(r.degree), std::to_string(r.dimT), std::to_string(r.dimR),
                     std::to_string(r.dimA), std::to_string(r.basisCount), r.pass ? "ok" : "FAIL"});
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      if (i + 1 == line.size()) {
        out << line[i];
      } else {
        out << std::string(width[i] - line[i].size(), ' ') << line[i];
      }
    }
    out << '\n';
  }
  if (!report.counterexample.empty()) out << "counterexample: " << report.counterexample << '\n';
  out << (report.pass ? "pass" : "fail") << '\n';
  return out.str();
}

std::string render_tsv(const DimReport& report) {
  std::ostringstream out;
  for (const auto& r : report.rows)
    out << r.degree << '\t' << r.dimT << '\t' << r.dimR << '\t' << r.dimA << '\t' << r.basisCount << '\t'
        << (r.pass ? "pass" : "fail") << '\n';
  return out.str();
}

}  // namespace pathalg
