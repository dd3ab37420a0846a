#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ellab {

/// Total Euler number of the singular fibers of a rational elliptic surface.
inline constexpr int kIndexSum = 12;
inline constexpr std::size_t kMinFibers = 4;

/// Fiber indices sorted in descending order; positions discarded.
using Partition = std::vector<int>;

/// Semi-stable singular fibers I_{k_1}, ..., I_{k_n} over labeled base points.
///
/// The labels are opaque; only their identity matters when two
/// configurations are placed over a common base.  Construction validates the
/// index sum, the fiber count and label uniqueness.
class FiberConfig {
 public:
  FiberConfig(std::vector<std::string> labels, std::vector<int> indices);

  /// Labels P1..Pn.
  static FiberConfig with_default_labels(std::vector<int> indices);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<int>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  int operator[](std::size_t i) const { return indices_[i]; }

  /// Same base points, new indices.
  FiberConfig with_indices(std::vector<int> indices) const;

  bool has_default_labels() const;

  friend bool operator==(const FiberConfig&, const FiberConfig&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<int> indices_;
};

std::vector<std::string> default_labels(std::size_t n, std::string_view prefix = "P");

/// Accepts the compact digit form ("3333"), the CSV form ("9,1,1,1") and a
/// labeled CSV form ("A=9,B=1,C=1,D=1").
FiberConfig parse_config(std::string_view text);

/// Inverse of parse_config: digit form when labels are default and every
/// index is a single digit, CSV otherwise, labeled CSV for custom labels.
std::string render_config(const FiberConfig& config);

/// Digit form when all entries are single digits, else comma separated.
std::string compact_indices(const std::vector<int>& indices);

Partition partition_of(const FiberConfig& config);
Partition partition_of(std::vector<int> indices);

/// Descending lexicographic comparison of index tuples.
bool lex_greater(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace ellab
