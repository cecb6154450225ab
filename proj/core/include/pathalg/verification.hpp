#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathalg/graph.hpp"
#include "pathalg/ncpoly.hpp"
#include "pathalg/pairs.hpp"

namespace pathalg {

enum class GeneratorChoice { Reduced, PathPairs };

struct VerifyLimits {
  /// Cap on dim T(E)_d, the number of words of level <= d.
  std::size_t max_words = 200000;
  /// Cap on the number of products u*g*w generated across all degrees.
  std::size_t max_rows = 5000000;
};

struct DegreeRow {
  int degree = 0;
  std::size_t dimT = 0;
  std::size_t dimR = 0;
  std::size_t dimA = 0;
  /// Basis sequences of level <= degree.
  std::size_t basisCount = 0;
  /// Basis sequences of level exactly degree.
  std::size_t graded = 0;
  bool pass = false;
};

struct DimReport {
  std::vector<DegreeRow> rows;
  bool pass = false;
  std::optional<int> failure_degree;
  std::string counterexample;
};

/// Every basis sequence of level <= max_level, in graded order.
std::vector<PairSeq> enumerate_basis(const LayeredGraph& g, int max_level);

/// Number of basis sequences of each level 0..max_level. Counted by dynamic
/// programming on the last pair, without listing the sequences.
std::vector<std::uint64_t> hilbert_series(const LayeredGraph& g, int max_level);

/// Dimensions of the truncated quotients, from the exact rank of the span of
/// all products u*g*w of level <= d. Throws BoundTooLarge.
DimReport brute_force_dims(const LayeredGraph& g, int max_level, GeneratorChoice choice, const VerifyLimits& limits = {});
DimReport brute_force_dims(const LayeredGraph& g, int max_level, const std::vector<NcPoly>& generators,
                           const VerifyLimits& limits = {});

struct VerifyOptions {
  VerifyLimits limits;
  /// Replaces the reduced generators of the primary graph (fault injection).
  std::optional<std::vector<NcPoly>> reduced_override;
  bool check_path_pairs = true;
  bool check_alternate_chosen = true;
};

/// Compares the basis count with the brute-force dimension for the reduced
/// generators, the path-pair generators and the reduced generators of the
/// alternate chosen-edge map. Also checks that every word w of level <= d
/// satisfies w - to_poly(normal_form(w)) in the truncated span, for both
/// chosen-edge maps. The report rows describe the primary generators.
DimReport verify_basis(const LayeredGraph& g, int max_level, const VerifyOptions& options = {});

/// Aligned table ending in a "pass" or "fail" line.
std::string render_table(const DimReport& report);
/// One "degree\tdimT\tdimR\tdimA\tbasisCount\tstatus" line per degree.
std::string render_tsv(const DimReport& report);

}  // namespace pathalg
