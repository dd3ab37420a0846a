#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ellab/fiber_config.hpp"

namespace ellab {

enum class Admissibility { Admissible, NotAdmissible, UnknownBeyondCatalog };

std::string_view to_string(Admissibility a);

/// Classified fiber counts.  Partitions with more fibers than this are
/// reported as UnknownBeyondCatalog.
inline constexpr std::size_t kMaxCatalogFibers = 5;

/// One column of an isogeny class table: positioned rows over a fixed set of
/// base points, first row being the class heading.
struct ClassColumn {
  std::vector<std::vector<int>> rows;

  const std::vector<int>& heading() const { return rows.front(); }
};

/// Classes of rational elliptic surfaces with four singular fibers.
std::span<const ClassColumn> four_fiber_classes();
/// Classes of rational elliptic surfaces with five singular fibers.
std::span<const ClassColumn> five_fiber_classes();
/// Four-fiber columns followed by five-fiber columns.
std::span<const ClassColumn> all_classes();

/// The column whose rows contain a configuration with this partition.
const ClassColumn* class_column_of(const Partition& partition);

/// SumNot12 when the entries do not add up to 12.
Admissibility admissible(const Partition& partition);

/// Surface model data attached to a catalog partition.
///
/// `degrees` are the plane-curve degrees of the components of the branch
/// quartic, for the model where the fibration is the pencil of lines through
/// a point off the quartic.  `distinguished` holds 1-based positions in the
/// descending partition (the I_2 of 6,2,2,1,1 that maps to I_1 under the
/// 2-isogeny).
struct CatalogEntry {
  Partition partition;
  std::optional<std::string> group;
  std::optional<std::string> quartic;
  std::optional<std::vector<int>> degrees;
  std::optional<bool> i2_node_induced;
  std::optional<std::vector<int>> distinguished;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

class Catalog {
 public:
  explicit Catalog(std::vector<CatalogEntry> entries);

  /// Compiled-in catalog covering every admissible partition.
  static const Catalog& embedded();

  /// Embedded catalog, or the JSON file named by ELLAB_CATALOG when set.
  static Catalog from_environment();

  static Catalog from_json(const nlohmann::json& doc);
  static Catalog parse(std::string_view json_text);

  nlohmann::json to_json() const;
  /// Canonical text: sorted keys, two-space indent, trailing newline.
  std::string dump() const;

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  std::optional<CatalogEntry> lookup(Partition partition) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// Lookup in the embedded catalog.
std::optional<CatalogEntry> catalog_lookup(const Partition& partition);

}  // namespace ellab
