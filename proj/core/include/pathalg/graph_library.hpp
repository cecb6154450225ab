#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pathalg/graph.hpp"

namespace pathalg {

/// Parameter limits for the built-in families.
struct LibraryLimits {
  static constexpr int kBooleanMaxN = 6;
  static constexpr int kPartitionMaxN = 5;
  static constexpr int kSubspaceMaxN = 4;
};

/// Hasse graph of the subsets of {1..n}: vertex "{1,3}" has level 2, and the
/// edge "x13_2" runs from {1,2,3} down to {1,3}. Throws LimitExceeded.
LayeredGraph boolean_lattice(int n);

/// v0 <- v1 <- ... <- vn with edges c1..cn.
LayeredGraph chain(int n);

/// Set partitions of {1..n} ordered by refinement, the finest partition at
/// level 0. Vertex ids list blocks by smallest element ("12|3"); an edge runs
/// from a partition to each partition obtained by splitting one block in two.
LayeredGraph partition_lattice(int n);

/// Subspaces of F_q^n, q in {2,3}, level = dimension. Vertex ids are the
/// reduced row echelon basis, rows separated by '|': "<>", "<10|01>".
LayeredGraph subspace_lattice(int q, int n);

enum class Family { Boolean, Chain, Partition, Subspace, File };

struct GeneratorSpec {
  Family family = Family::Boolean;
  int n = 0;
  int q = 2;
  std::filesystem::path file;
};

LayeredGraph generate(const GeneratorSpec& spec);

/// Line-oriented text format:
///   vertex <id> <level>
///   edge <id> <tail-id> <head-id>
///   chosen <vertex-id> <edge-id>
/// '#' starts a comment line. Throws ParseError (with line number), then any
/// validation error.
RawGraph parse_raw_graph(std::string_view text);
LayeredGraph parse_graph(std::string_view text);
LayeredGraph load_graph(const std::filesystem::path& path);

/// Writes every vertex, edge and chosen entry; parse_graph(save_graph(g)) == g.
std::string save_graph(const LayeredGraph& g);
void save_graph(const LayeredGraph& g, const std::filesystem::path& path);

}  // namespace pathalg
