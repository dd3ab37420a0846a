#include "ellab/kummer.hpp"

#include <algorithm>
#include <numeric>

#include "ellab/error.hpp"

namespace ellab {

namespace {

constexpr int kSmoothFixedPoints = 16;

void check_degrees(std::span<const int> degrees, const char* side) {
  const int sum = std::accumulate(degrees.begin(), degrees.end(), 0);
  if (sum != 4 || std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 1; })) {
    throw Error(ErrorCode::MalformedInput,
                std::string(side) + " branch component degrees must be positive and sum to 4");
  }
}

}  // namespace

std::string_view to_string(Rationality r) {
  switch (r) {
    case Rationality::Forced: return "Forced";
    case Rationality::Undetermined: return "Undetermined";
    case Rationality::Impossible: return "Impossible";
  }
  return "?";
}

int factor_fixed_points(int index) { return (index % 2 == 0) ? 4 : 3; }

int fiber_fixed_points(int a, int b) { return factor_fixed_points(a) * factor_fixed_points(b); }

int branch_curve_euler(const KummerInput& input) {
  const auto& pairs = input.diagram.pairs();
  int e = kSmoothFixedPoints * (2 - static_cast<int>(pairs.size()));
  for (auto [a, b] : pairs) e += fiber_fixed_points(a, b);
  return e + input.node_count;
}

std::pair<int, int> component_interval(std::span<const int> left_degrees,
                                       std::span<const int> right_degrees) {
  check_degrees(left_degrees, "left");
  check_degrees(right_degrees, "right");
  int lo = 0;
  int hi = 0;
  for (int d1 : left_degrees) {
    for (int d2 : right_degrees) {
      lo += 1;
      hi += std::gcd(d1, d2);
    }
  }
  return {lo, hi};
}

Rationality rationality_verdict(int euler, int c_min, int c_max) {
  if (c_min < 1 || c_max < c_min) {
    throw Error(ErrorCode::MalformedInput, "component interval must satisfy 1 <= c_min <= c_max");
  }
  if (euler % 2 != 0 || euler > 2 * c_max) return Rationality::Impossible;
  if (euler == 2 * c_max) return Rationality::Forced;
  return Rationality::Undetermined;
}

std::vector<std::size_t> i2_smooth_points(const ProductDiagram& d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.pairs().size(); ++i) {
    const auto [a, b] = d.pairs()[i];
    if ((a == 2 && b == 0) || (a == 0 && b == 2)) out.push_back(i);
  }
  return out;
}

bool equisingular_zero(const KummerInput& input) {
  bool all_nodes = true;
  for (std::size_t pos : i2_smooth_points(input.diagram)) {
    auto it = input.i2_node_induced.find(pos);
    if (it == input.i2_node_induced.end()) {
      throw Error(ErrorCode::MissingFlag, "no node/double-tangent flag for I2 x I0 point " +
                                              input.diagram.points()[pos]);
    }
    all_nodes = all_nodes && it->second;
  }
  return all_nodes;
}

KummerReport kummer_rigidity(const KummerInput& input) {
  if (input.node_count < 0) throw Error(ErrorCode::MalformedInput, "node count must be non-negative");
  const auto expected = i2_smooth_points(input.diagram);
  for (const auto& [pos, flag] : input.i2_node_induced) {
    if (std::find(expected.begin(), expected.end(), pos) == expected.end()) {
      throw Error(ErrorCode::MalformedInput,
                  "node flag given for position " + std::to_string(pos + 1) + ", which is not I2 x I0");
    }
  }

  KummerReport report;
  for (auto [a, b] : input.diagram.pairs()) report.fixed_counts.push_back(fiber_fixed_points(a, b));
  report.euler = branch_curve_euler(input);
  report.node_count = input.node_count;
  report.component_interval = component_interval(input.left_degrees, input.right_degrees);
  report.rationality = rationality_verdict(report.euler, report.component_interval.first,
                                           report.component_interval.second);
  report.equisingular_zero = equisingular_zero(input);
  report.transversal_zero = report.rationality == Rationality::Forced;
  report.rigid = report.equisingular_zero && report.transversal_zero;
  return report;
}

std::optional<int> default_node_count(const ProductDiagram& d) {
  std::vector<int> counts;
  for (auto [a, b] : d.pairs()) counts.push_back(fiber_fixed_points(a, b));
  std::sort(counts.begin(), counts.end(), std::greater<>());
  static const std::vector<int> kNodalPatternA = {16, 16, 16, 9, 9};
  static const std::vector<int> kNodalPatternB = {16, 12, 12, 9, 9};
  if (counts == kNodalPatternA || counts == kNodalPatternB) return 2;
  return std::nullopt;
}

}  // namespace ellab
