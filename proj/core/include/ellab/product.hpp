#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellab/fiber_config.hpp"
#include "ellab/isogeny.hpp"

namespace ellab {

enum class Side { Left, Right };

std::string_view to_string(Side side);

struct LoggedMove {
  Side side = Side::Left;
  IsogenyMove move;

  friend bool operator==(const LoggedMove&, const LoggedMove&) = default;
};

/// Fiber product S1 x_P1 S2 recorded as paired indices over the union of the
/// singular points of both factors; 0 stands for a smooth fiber.
class ProductDiagram {
 public:
  using Pair = std::pair<int, int>;

  ProductDiagram(std::vector<std::string> points, std::vector<Pair> pairs,
                 std::vector<LoggedMove> log = {});
  /// Points labeled P1..Ps.
  explicit ProductDiagram(std::vector<Pair> pairs);

  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  const std::vector<LoggedMove>& log() const noexcept { return log_; }

  /// Number of points singular for at least one factor.
  std::size_t singular_count() const noexcept { return pairs_.size(); }

  /// The factor on `side`, restricted to the points where it is singular.
  FiberConfig projection(Side side) const;
  /// Diagram positions of the projection's entries.
  std::vector<std::size_t> support(Side side) const;

  ProductDiagram swapped() const;
  ProductDiagram with_points(std::vector<std::string> points) const;
  ProductDiagram without_log() const;

  /// Equality of points and pairs; the log is ignored.
  bool same_fibers(const ProductDiagram& other) const;

  friend bool operator==(const ProductDiagram&, const ProductDiagram&) = default;

 private:
  void validate() const;

  std::vector<std::string> points_;
  std::vector<Pair> pairs_;
  std::vector<LoggedMove> log_;
};

/// Places c2 over c1's base.  `alignment` maps c2 labels onto c1 labels;
/// unmapped c2 labels are identified with equal c1 labels, or appended as new
/// points.  Throws ConflictingLabels for non-injective or dangling maps.
ProductDiagram make_product(const FiberConfig& left, const FiberConfig& right,
                            const std::map<std::string, std::string>& alignment = {});

/// Points where both factors are singular.
int common_singular_count(const ProductDiagram& d);

/// No fiber I_0 x I_n or I_n x I_0 with n >= 2.
bool meets_rigidity_criterion(const ProductDiagram& d);

/// Replaces one factor by the target of `move`, whose source must equal that
/// factor's projection index tuple (SideMismatch otherwise).
ProductDiagram apply_move(const ProductDiagram& d, Side side, const IsogenyMove& move);

/// A pair of isogenous representatives of the two factors, over the same
/// points, with the moves that reach it.
struct FactorPair {
  ProductDiagram diagram;
  std::vector<LoggedMove> path;
};

/// Every combination of catalog-class representatives of the two factors,
/// in search priority order: fewer moves first, then the sequence of
/// per-point (max, min) pairs descending, then left and right tuples
/// descending.  The order commutes with swapping the factors.
/// Throws NotInCatalog when a factor is not admissible.
std::vector<FactorPair> ordered_factor_pairs(const ProductDiagram& d);

struct PartnerSearch {
  std::optional<FactorPair> partner;
  std::size_t candidates_examined = 0;
  /// Both factors lie in the same isogeny class.
  bool factors_isogenous = false;
};

PartnerSearch search_rigid_partner(const ProductDiagram& d);

/// First rigid diagram isogenous to `d` factorwise, with its move path.
std::optional<FactorPair> find_rigid_partner(const ProductDiagram& d);

/// Two rows separated by " / ", `_` for smooth: "4,4,2,1,1 / 6,2,_,3,1".
ProductDiagram parse_diagram(std::string_view text);
std::string format_diagram_inline(const ProductDiagram& d);
/// Two right-aligned rows, one column per point.
std::string format_diagram_rows(const ProductDiagram& d);

}  // namespace ellab
