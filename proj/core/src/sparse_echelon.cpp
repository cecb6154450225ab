#include "pathalg/sparse_echelon.hpp"

#include <algorithm>

namespace pathalg {

namespace {

void make_primitive(SparseRowEchelon::Row& row) {
  if (row.empty()) return;
  mpz_class content = 0;
  for (const auto& [col, v] : row) {
    content = gcd(content, v);
    if (content == 1) break;
  }
  if (sgn(row.front().second) < 0) content = -content;
  if (content == 1) return;
  for (auto& [col, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
}

// a * x - b * y, dropping zeros.
SparseRowEchelon::Row combine(const mpz_class& a, const SparseRowEchelon::Row& x, const mpz_class& b,
                              const SparseRowEchelon::Row& y) {
  SparseRowEchelon::Row out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      mpz_class v = a * x[i].second - b * y[j].second;
      if (sgn(v) != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRowEchelon::Row SparseRowEchelon::integerize(RationalRow row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  mpz_class denom = 1;
  for (const auto& [col, v] : row) denom = lcm(denom, v.get_den());
  Row out;
  out.reserve(row.size());
  for (const auto& [col, v] : row) {
    if (sgn(v) == 0) continue;
    if (!out.empty() && out.back().first == col) {
      out.back().second += v.get_num() * (denom / v.get_den());
      if (sgn(out.back().second) == 0) out.pop_back();
      continue;
    }
    out.emplace_back(col, v.get_num() * (denom / v.get_den()));
  }
  return out;
}

SparseRowEchelon::Row SparseRowEchelon::reduce(Row row) const {
  make_primitive(row);
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    const Row& pivot = it->second;
    const mpz_class g = gcd(pivot.front().second, row.front().second);
    row = combine(pivot.front().second / g, row, row.front().second / g, pivot);
    make_primitive(row);
  }
  return row;
}

bool SparseRowEchelon::insert(Row row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const std::size_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

bool SparseRowEchelon::contains(Row row) const { return reduce(std::move(row)).empty(); }

}  // namespace pathalg
