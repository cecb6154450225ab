#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "pathalg/ncpoly.hpp"

namespace pathalg {

/// Integer row echelon form built one row at a time with fraction-free
/// elimination. Rows are sparse (column, value) lists sorted by column; each
/// stored row is primitive with a positive leading entry, so the result does
/// not depend on anything but the insertion order.
class SparseRowEchelon {
 public:
  using Row = std::vector<std::pair<std::size_t, mpz_class>>;
  using RationalRow = std::vector<std::pair<std::size_t, Scalar>>;

  /// Clears denominators by their lcm. Input need not be sorted.
  static Row integerize(RationalRow row);

  /// Returns true iff the row was independent of the stored rows.
  bool insert(Row row);
  bool contains(Row row) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  Row reduce(Row row) const;

  std::map<std::size_t, Row> pivots_;
};

}  // namespace pathalg
