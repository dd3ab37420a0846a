#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ellab/product.hpp"

namespace ellab {

/// Data for the fiberwise Kummer quotient of a fiber product.
///
/// `node_count` is the number of nodes of the fixed curve C.  The degree
/// lists are the branch-quartic component degrees of each factor.
/// `i2_node_induced` is keyed by diagram position and must cover exactly the
/// points whose pair is (2, 0) or (0, 2): true when the I_2 comes from a node
/// of the quartic, false for a double tangent.
struct KummerInput {
  ProductDiagram diagram;
  int node_count = 0;
  std::vector<int> left_degrees;
  std::vector<int> right_degrees;
  std::map<std::size_t, bool> i2_node_induced;
};

enum class Rationality { Forced, Undetermined, Impossible };

std::string_view to_string(Rationality r);

struct KummerReport {
  std::vector<int> fixed_counts;
  int euler = 0;
  int node_count = 0;
  std::pair<int, int> component_interval{0, 0};
  Rationality rationality = Rationality::Undetermined;
  bool equisingular_zero = false;
  bool transversal_zero = false;
  bool rigid = false;

  friend bool operator==(const KummerReport&, const KummerReport&) = default;
};

/// Fixed points of the fiberwise involution x -> -x on one elliptic fiber:
/// 4 on smooth and even I_n fibers, 3 on odd I_n fibers.
int factor_fixed_points(int index);

/// Fixed points on the product fiber over a point with indices (a, b).
int fiber_fixed_points(int a, int b);

/// Euler number of the resolved fixed curve:
/// e = 16 (2 - s) + sum of per-point fixed counts + nodes.
int branch_curve_euler(const KummerInput& input);

/// Each pair of quartic components with degrees (d1, d2) contributes between
/// 1 and gcd(d1, d2) components to the intersection of the two cones.
std::pair<int, int> component_interval(std::span<const int> left_degrees,
                                       std::span<const int> right_degrees);

/// e <= 2c with equality iff every component is rational.
Rationality rationality_verdict(int euler, int c_min, int c_max);

/// Points with pair (2, 0) or (0, 2).
std::vector<std::size_t> i2_smooth_points(const ProductDiagram& d);

/// True iff every I_2 x I_0 point is node-induced.  Throws MissingFlag.
bool equisingular_zero(const KummerInput& input);

KummerReport kummer_rigidity(const KummerInput& input);

/// Node count 2 for diagrams whose fixed-count multiset is {16,16,16,9,9}
/// or {16,12,12,9,9}; no value for anything else.
std::optional<int> default_node_count(const ProductDiagram& d);

}  // namespace ellab
