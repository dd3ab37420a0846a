#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ellab/fiber_config.hpp"

namespace ellab {

/// Primes for which a semi-stable configuration can admit an isogeny.
inline constexpr std::array<int, 3> kIsogenyPrimes = {2, 3, 5};

/// Quotient by a p-torsion section: fibers at `divided` (0-based positions)
/// go from I_n to I_{n/p}, every other fiber from I_n to I_{pn}.
struct IsogenyMove {
  int p = 0;
  std::vector<std::size_t> divided;
  FiberConfig source;
  FiberConfig target;

  friend bool operator==(const IsogenyMove&, const IsogenyMove&) = default;
};

/// The sum H of the divided indices forced by (12 - H) p + H / p = 12, i.e.
/// H = 12p / (p + 1).  Defined for p in {2, 3, 5, 11}; empty otherwise.
std::optional<int> halved_sum(int p);

/// Checks the index transformation, the halved sum and the target total.
bool is_valid_move(const IsogenyMove& move);

/// Every subset D of p-divisible positions summing to halved_sum(p), with no
/// check on the target.  Ordered by D.
std::vector<IsogenyMove> enumerate_moves(const FiberConfig& config, int p);

/// enumerate_moves restricted to admissible targets, and to configurations
/// not excluded from 2-torsion when p = 2.  A superset of the isogenies that
/// are geometrically realized.
std::vector<IsogenyMove> candidate_moves(const FiberConfig& config, int p);

/// The move back, dividing the complementary positions.
IsogenyMove dual_move(const IsogenyMove& move);

enum class ClosureMode { Combinatorial, CatalogGated };

std::string_view to_string(ClosureMode mode);
ClosureMode parse_closure_mode(std::string_view text);

/// Isogeny class of a configuration over fixed base points.
///
/// nodes[0] is the configuration the closure started from; the remaining
/// nodes follow in descending lexicographic order of their index tuples.
/// Edges come in dual pairs and are sorted by (from, to, p, divided).
struct IsogenyGraph {
  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    IsogenyMove move;
  };

  std::vector<FiberConfig> nodes;
  std::vector<Edge> edges;
  ClosureMode mode = ClosureMode::Combinatorial;

  std::optional<std::size_t> find(const std::vector<int>& indices) const;
  /// Shortest move sequence from nodes[0]; ties go to the earliest edge.
  std::vector<IsogenyMove> path_from_root(std::size_t to) const;
  std::vector<std::size_t> distances_from_root() const;
};

/// Breadth-first closure under candidate_moves over kIsogenyPrimes.  In
/// CatalogGated mode nodes outside catalog_class are dropped whenever the
/// start partition is covered by the class tables.
IsogenyGraph closure(const FiberConfig& config, ClosureMode mode);

/// The positioned rows of the table column containing `config`, carried over
/// to its base points.  Equal indices are matched in order of occurrence.
/// Same ordering as IsogenyGraph::nodes.  Throws NotInCatalog.
std::vector<FiberConfig> catalog_class(const FiberConfig& config);

/// 0-based positions of `config` that correspond to the catalog's
/// distinguished fibers (e.g. the good I_2 of 6,2,2,1,1); empty if none.
std::vector<std::size_t> distinguished_positions(const FiberConfig& config);

/// A move between two rows of the same table column.
struct TableEdge {
  std::size_t column = 0;
  std::size_t from_row = 0;
  std::size_t to_row = 0;
  int p = 0;
  std::vector<std::size_t> divided;
};

/// Every ordered pair of rows within a column related by a prime move.
const std::vector<TableEdge>& table_edges();

/// Whether some row with this partition has a p-edge in the tables.
bool table_lists_move(const Partition& partition, int p);

/// Rows for display.  A graph whose nodes are exactly a table column comes
/// out in that column's row order so it diffs cleanly against the table; any
/// other graph in node order.
std::vector<std::vector<int>> display_rows(const IsogenyGraph& graph);

/// One configuration per line, in display_rows order.
std::string to_tsv(const IsogenyGraph& graph);

/// Columns side by side, tab separated, blank cells for short columns.
std::string class_table_tsv(const std::vector<std::vector<std::vector<int>>>& columns);

}  // namespace ellab
