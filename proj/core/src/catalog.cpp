#include "ellab/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ellab/error.hpp"

namespace ellab {

namespace {

std::vector<int> digits(std::string_view s) {
  std::vector<int> out;
  for (char c : s) out.push_back(c - '0');
  return out;
}

ClassColumn column(std::initializer_list<std::string_view> rows) {
  ClassColumn col;
  for (auto r : rows) col.rows.push_back(digits(r));
  return col;
}

const std::vector<ClassColumn>& class_tables() {
  static const std::vector<ClassColumn> tables = {
      column({"3333", "9111", "1911", "1191", "1119"}),
      column({"4422", "2244", "8211", "2811", "1182", "1128"}),
      column({"6231", "2613", "3162", "1326"}),
      column({"5511", "1155"}),
      column({"33321", "11163"}),
      column({"44211", "22422", "11811", "11244"}),
      column({"62211", "31422"}),
      column({"54111"}),
      column({"53211"}),
      column({"72111"}),
  };
  return tables;
}

constexpr std::size_t kFourFiberColumns = 4;

CatalogEntry entry(std::string_view partition) {
  CatalogEntry e;
  e.partition = digits(partition);
  return e;
}

CatalogEntry surface(std::string_view partition, std::string group, std::string quartic,
                     std::vector<int> degrees) {
  CatalogEntry e = entry(partition);
  e.group = std::move(group);
  e.quartic = std::move(quartic);
  e.degrees = std::move(degrees);
  return e;
}

std::vector<CatalogEntry> embedded_entries() {
  std::vector<CatalogEntry> out;
  out.push_back(surface("3333", "Gamma(3)", "(x+t)(x^3-3tx^2+4z^3)", {3, 1}));
  out.push_back(surface("4422", "Gamma1(4) cap Gamma(2)", "(x+t+z)(x+t-z)(x-t+z)(x-t-z)",
                        {1, 1, 1, 1}));
  out.push_back(surface("5511", "Gamma1(5)", "x(x^3-2x^2(z+t)+x(z^2+6zt+t^2)-4tz^2)", {3, 1}));
  out.push_back(surface("6321", "Gamma1(6)", "(x-z)(x-t+2z)(x^2+t^2-z^2)", {2, 1, 1}));
  out.push_back(surface("8211", "Gamma0(8) cap Gamma1(4)", "(x+z)(x-z)(x^2+t^2-z^2)", {2, 1, 1}));
  out.push_back(surface("9111", "Gamma0(9) cap Gamma1(3)", "(x+z)(x^3-3tx^2+4z^3)", {3, 1}));

  // Five-fiber models: nodal cubic plus a line, or a conic plus two lines.
  // Their I_2 fibers come from nodes of the branch quartic.
  CatalogEntry e33321 = entry("33321");
  e33321.degrees = {3, 1};
  e33321.i2_node_induced = true;
  out.push_back(e33321);
  out.push_back(entry("63111"));
  CatalogEntry e44211 = entry("44211");
  e44211.degrees = {2, 1, 1};
  e44211.i2_node_induced = true;
  out.push_back(e44211);
  out.push_back(entry("42222"));
  out.push_back(entry("81111"));
  CatalogEntry e62211 = entry("62211");
  e62211.degrees = {2, 1, 1};
  e62211.i2_node_induced = true;
  e62211.distinguished = std::vector<int>{2};
  out.push_back(e62211);
  out.push_back(entry("43221"));
  out.push_back(entry("54111"));
  out.push_back(entry("53211"));
  out.push_back(entry("72111"));
  return out;
}

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> optional_field(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

void validate(const CatalogEntry& e) {
  const int sum = std::accumulate(e.partition.begin(), e.partition.end(), 0);
  if (sum != kIndexSum) {
    throw Error(ErrorCode::SumNot12, "catalog partition " + compact_indices(e.partition) +
                                         " sums to " + std::to_string(sum));
  }
  if (!std::is_sorted(e.partition.begin(), e.partition.end(), std::greater<>())) {
    throw Error(ErrorCode::MalformedInput,
                "catalog partition " + compact_indices(e.partition) + " is not sorted descending");
  }
  if (e.degrees) {
    const int deg = std::accumulate(e.degrees->begin(), e.degrees->end(), 0);
    if (deg != 4 || std::any_of(e.degrees->begin(), e.degrees->end(), [](int d) { return d < 1; })) {
      throw Error(ErrorCode::MalformedInput,
                  "branch component degrees of " + compact_indices(e.partition) + " must be positive and sum to 4");
    }
  }
  if (e.distinguished) {
    for (int pos : *e.distinguished) {
      if (pos < 1 || pos > static_cast<int>(e.partition.size())) {
        throw Error(ErrorCode::MalformedInput, "distinguished position out of range");
      }
    }
  }
}

}  // namespace

std::string_view to_string(Admissibility a) {
  switch (a) {
    case Admissibility::Admissible: return "Admissible";
    case Admissibility::NotAdmissible: return "NotAdmissible";
    case Admissibility::UnknownBeyondCatalog: return "UnknownBeyondCatalog";
  }
  return "?";
}

std::span<const ClassColumn> four_fiber_classes() {
  return std::span(class_tables()).first(kFourFiberColumns);
}

std::span<const ClassColumn> five_fiber_classes() {
  return std::span(class_tables()).subspan(kFourFiberColumns);
}

std::span<const ClassColumn> all_classes() { return class_tables(); }

const ClassColumn* class_column_of(const Partition& partition) {
  const Partition key = partition_of(partition);
  for (const auto& col : class_tables()) {
    for (const auto& row : col.rows) {
      if (partition_of(row) == key) return &col;
    }
  }
  return nullptr;
}

Admissibility admissible(const Partition& partition) {
  const int sum = std::accumulate(partition.begin(), partition.end(), 0);
  if (sum != kIndexSum) {
    throw Error(ErrorCode::SumNot12, "partition sums to " + std::to_string(sum));
  }
  if (partition.size() > kMaxCatalogFibers) return Admissibility::UnknownBeyondCatalog;
  return class_column_of(partition) ? Admissibility::Admissible : Admissibility::NotAdmissible;
}

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) validate(e);
}

const Catalog& Catalog::embedded() {
  static const Catalog catalog(embedded_entries());
  return catalog;
}

Catalog Catalog::from_environment() {
  const char* path = std::getenv("ELLAB_CATALOG");
  if (path == nullptr || *path == '\0') return embedded();
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, std::string("cannot read ELLAB_CATALOG file ") + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

Catalog Catalog::parse(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error(ErrorCode::MalformedInput, std::string("catalog JSON: ") + ex.what());
  }
  return from_json(doc);
}

Catalog Catalog::from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw Error(ErrorCode::MalformedInput, "catalog JSON must be an array");
  std::vector<CatalogEntry> entries;
  try {
    for (const auto& obj : doc) {
      CatalogEntry e;
      e.partition = obj.at("partition").get<std::vector<int>>();
      e.group = optional_field<std::string>(obj, "group");
      e.quartic = optional_field<std::string>(obj, "quartic");
      e.degrees = optional_field<std::vector<int>>(obj, "degrees");
      e.i2_node_induced = optional_field<bool>(obj, "i2_node_induced");
      e.distinguished = optional_field<std::vector<int>>(obj, "distinguished");
      entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::MalformedInput, std::string("catalog JSON: ") + ex.what());
  }
  return Catalog(std::move(entries));
}

nlohmann::json Catalog::to_json() const {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& e : entries_) {
    doc.push_back({
        {"partition", e.partition},
        {"group", optional_json(e.group)},
        {"quartic", optional_json(e.quartic)},
        {"degrees", optional_json(e.degrees)},
        {"i2_node_induced", optional_json(e.i2_node_induced)},
        {"distinguished", optional_json(e.distinguished)},
    });
  }
  return doc;
}

std::string Catalog::dump() const { return to_json().dump(2) + "\n"; }

std::optional<CatalogEntry> Catalog::lookup(Partition partition) const {
  partition = partition_of(std::move(partition));
  for (const auto& e : entries_) {
    if (e.partition == partition) return e;
  }
  return std::nullopt;
}

std::optional<CatalogEntry> catalog_lookup(const Partition& partition) {
  return Catalog::embedded().lookup(partition);
}

}  // namespace ellab
