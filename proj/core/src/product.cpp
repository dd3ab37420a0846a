#include "ellab/product.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <tuple>

#include "ellab/catalog.hpp"
#include "ellab/error.hpp"

namespace ellab {

namespace {

int side_value(const ProductDiagram::Pair& pair, Side side) {
  return side == Side::Left ? pair.first : pair.second;
}

int& side_value(ProductDiagram::Pair& pair, Side side) {
  return side == Side::Left ? pair.first : pair.second;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_row(std::string_view row) {
  row = trim(row);
  std::vector<std::string_view> cells;
  if (row.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(row[i]))) cells.push_back(row.substr(i, 1));
    }
  } else {
    std::size_t start = 0;
    while (start <= row.size()) {
      const std::size_t comma = std::min(row.find(',', start), row.size());
      cells.push_back(trim(row.substr(start, comma - start)));
      start = comma + 1;
    }
  }
  std::vector<int> out;
  for (auto cell : cells) {
    if (cell == "_") {
      out.push_back(0);
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() || v < 0) {
      throw Error(ErrorCode::MalformedInput, "bad diagram cell '" + std::string(cell) + "'");
    }
    out.push_back(v);
  }
  return out;
}

using PairSeq = std::vector<ProductDiagram::Pair>;

bool rigid_pairs(const PairSeq& pairs) {
  return std::none_of(pairs.begin(), pairs.end(), [](const auto& p) {
    return (p.first == 0 && p.second >= 2) || (p.second == 0 && p.first >= 2);
  });
}

PairSeq unordered_pairs(const PairSeq& pairs) {
  PairSeq out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.emplace_back(std::max(a, b), std::min(a, b));
  return out;
}

PairSeq flipped(const PairSeq& pairs) {
  PairSeq out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.emplace_back(b, a);
  return out;
}

}  // namespace

std::string_view to_string(Side side) { return side == Side::Left ? "left" : "right"; }

ProductDiagram::ProductDiagram(std::vector<std::string> points, std::vector<Pair> pairs,
                               std::vector<LoggedMove> log)
    : points_(std::move(points)), pairs_(std::move(pairs)), log_(std::move(log)) {
  validate();
}

void ProductDiagram::validate() const {
  if (points_.size() != pairs_.size()) {
    throw Error(ErrorCode::MalformedInput, "diagram point count differs from pair count");
  }
  std::set<std::string_view> seen;
  for (const auto& p : points_) {
    if (p.empty() || !seen.insert(p).second) {
      throw Error(ErrorCode::MalformedInput, "diagram point labels must be distinct and non-empty");
    }
  }
  for (auto [a, b] : pairs_) {
    if (a < 0 || b < 0) throw Error(ErrorCode::MalformedInput, "negative fiber index in diagram");
    if (a == 0 && b == 0) {
      throw Error(ErrorCode::MalformedInput, "diagram point smooth on both factors");
    }
  }
  // Validates both factors.
  (void)projection(Side::Left);
  (void)projection(Side::Right);
}

ProductDiagram::ProductDiagram(std::vector<Pair> pairs)
    : points_(default_labels(pairs.size())), pairs_(std::move(pairs)) {
  validate();
}

std::vector<std::size_t> ProductDiagram::support(Side side) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (side_value(pairs_[i], side) > 0) out.push_back(i);
  }
  return out;
}

FiberConfig ProductDiagram::projection(Side side) const {
  std::vector<std::string> labels;
  std::vector<int> indices;
  for (std::size_t i : support(side)) {
    labels.push_back(points_[i]);
    indices.push_back(side_value(pairs_[i], side));
  }
  return FiberConfig(std::move(labels), std::move(indices));
}

ProductDiagram ProductDiagram::swapped() const {
  std::vector<LoggedMove> log = log_;
  for (auto& entry : log) entry.side = entry.side == Side::Left ? Side::Right : Side::Left;
  return ProductDiagram(points_, flipped(pairs_), std::move(log));
}

ProductDiagram ProductDiagram::with_points(std::vector<std::string> points) const {
  return ProductDiagram(std::move(points), pairs_);
}

ProductDiagram ProductDiagram::without_log() const { return ProductDiagram(points_, pairs_); }

bool ProductDiagram::same_fibers(const ProductDiagram& other) const {
  return points_ == other.points_ && pairs_ == other.pairs_;
}

ProductDiagram make_product(const FiberConfig& left, const FiberConfig& right,
                            const std::map<std::string, std::string>& alignment) {
  const auto& left_labels = left.labels();
  const auto is_left_label = [&](const std::string& l) {
    return std::find(left_labels.begin(), left_labels.end(), l) != left_labels.end();
  };
  for (const auto& [from, to] : alignment) {
    if (std::find(right.labels().begin(), right.labels().end(), from) == right.labels().end()) {
      throw Error(ErrorCode::ConflictingLabels, "alignment names unknown right point '" + from + "'");
    }
    if (!is_left_label(to)) {
      throw Error(ErrorCode::ConflictingLabels, "alignment target '" + to + "' is not a left point");
    }
  }

  std::vector<std::string> right_effective;
  std::set<std::string> taken;
  for (const auto& label : right.labels()) {
    auto it = alignment.find(label);
    std::string effective = it != alignment.end() ? it->second : label;
    if (!taken.insert(effective).second) {
      throw Error(ErrorCode::ConflictingLabels, "two right points land on '" + effective + "'");
    }
    right_effective.push_back(std::move(effective));
  }

  std::vector<std::string> points = left_labels;
  std::vector<ProductDiagram::Pair> pairs;
  for (int k : left.indices()) pairs.emplace_back(k, 0);
  for (std::size_t j = 0; j < right.size(); ++j) {
    auto it = std::find(points.begin(), points.end(), right_effective[j]);
    if (it != points.end()) {
      pairs[static_cast<std::size_t>(it - points.begin())].second = right[j];
    } else {
      points.push_back(right_effective[j]);
      pairs.emplace_back(0, right[j]);
    }
  }
  return ProductDiagram(std::move(points), std::move(pairs));
}

int common_singular_count(const ProductDiagram& d) {
  return static_cast<int>(std::count_if(d.pairs().begin(), d.pairs().end(),
                                        [](const auto& p) { return p.first > 0 && p.second > 0; }));
}

bool meets_rigidity_criterion(const ProductDiagram& d) { return rigid_pairs(d.pairs()); }

ProductDiagram apply_move(const ProductDiagram& d, Side side, const IsogenyMove& move) {
  const FiberConfig factor = d.projection(side);
  if (factor != move.source) {
    throw Error(ErrorCode::SideMismatch, "move source " + render_config(move.source) +
                                             " does not match " + std::string(to_string(side)) +
                                             " factor " + render_config(factor));
  }
  auto pairs = d.pairs();
  const auto support = d.support(side);
  for (std::size_t k = 0; k < support.size(); ++k) side_value(pairs[support[k]], side) = move.target[k];
  auto log = d.log();
  log.push_back({side, move});
  return ProductDiagram(d.points(), std::move(pairs), std::move(log));
}

namespace {

/// A representative pair before its move path is replayed onto the diagram.
struct RankedCandidate {
  std::size_t moves;
  PairSeq unordered;
  PairSeq oriented_max;
  PairSeq oriented;
  std::size_t left_node;
  std::size_t right_node;
};

struct Ranking {
  ProductDiagram base;
  IsogenyGraph left;
  IsogenyGraph right;
  std::vector<RankedCandidate> order;
};

Ranking rank_factor_pairs(const ProductDiagram& d) {
  const FiberConfig left = d.projection(Side::Left);
  const FiberConfig right = d.projection(Side::Right);
  for (const auto* f : {&left, &right}) {
    if (admissible(partition_of(*f)) != Admissibility::Admissible) {
      throw Error(ErrorCode::NotInCatalog,
                  "factor " + compact_indices(f->indices()) + " is not an admissible catalog configuration");
    }
  }
  Ranking r{d.without_log(), closure(left, ClosureMode::CatalogGated),
            closure(right, ClosureMode::CatalogGated), {}};
  const auto ldist = r.left.distances_from_root();
  const auto rdist = r.right.distances_from_root();
  const auto lsupport = d.support(Side::Left);
  const auto rsupport = d.support(Side::Right);

  for (std::size_t i = 0; i < r.left.nodes.size(); ++i) {
    for (std::size_t j = 0; j < r.right.nodes.size(); ++j) {
      PairSeq seq = r.base.pairs();
      for (std::size_t k = 0; k < lsupport.size(); ++k) seq[lsupport[k]].first = r.left.nodes[i][k];
      for (std::size_t k = 0; k < rsupport.size(); ++k) seq[rsupport[k]].second = r.right.nodes[j][k];
      r.order.push_back({ldist[i] + rdist[j], unordered_pairs(seq), std::max(seq, flipped(seq)), seq, i, j});
    }
  }
  std::sort(r.order.begin(), r.order.end(), [](const RankedCandidate& a, const RankedCandidate& b) {
    if (a.moves != b.moves) return a.moves < b.moves;
    return std::tie(b.unordered, b.oriented_max, b.oriented) <
           std::tie(a.unordered, a.oriented_max, a.oriented);
  });
  return r;
}

FactorPair materialize(const Ranking& r, const RankedCandidate& c) {
  FactorPair out{r.base, {}};
  for (const auto& m : r.left.path_from_root(c.left_node)) {
    out.diagram = apply_move(out.diagram, Side::Left, m);
    out.path.push_back({Side::Left, m});
  }
  for (const auto& m : r.right.path_from_root(c.right_node)) {
    out.diagram = apply_move(out.diagram, Side::Right, m);
    out.path.push_back({Side::Right, m});
  }
  return out;
}

}  // namespace

std::vector<FactorPair> ordered_factor_pairs(const ProductDiagram& d) {
  const Ranking r = rank_factor_pairs(d);
  std::vector<FactorPair> out;
  out.reserve(r.order.size());
  for (const auto& c : r.order) out.push_back(materialize(r, c));
  return out;
}

PartnerSearch search_rigid_partner(const ProductDiagram& d) {
  PartnerSearch result;
  const Ranking r = rank_factor_pairs(d);
  result.factors_isogenous = class_column_of(partition_of(d.projection(Side::Left))) ==
                             class_column_of(partition_of(d.projection(Side::Right)));
  for (const auto& c : r.order) {
    ++result.candidates_examined;
    if (rigid_pairs(c.oriented)) {
      result.partner = materialize(r, c);
      break;
    }
  }
  return result;
}

std::optional<FactorPair> find_rigid_partner(const ProductDiagram& d) {
  return search_rigid_partner(d).partner;
}

ProductDiagram parse_diagram(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos) {
    throw Error(ErrorCode::MalformedInput, "diagram needs two rows separated by '/'");
  }
  const auto top = parse_row(text.substr(0, slash));
  const auto bottom = parse_row(text.substr(slash + 1));
  if (top.size() != bottom.size()) {
    throw Error(ErrorCode::MalformedInput, "diagram rows differ in length");
  }
  std::vector<ProductDiagram::Pair> pairs;
  for (std::size_t i = 0; i < top.size(); ++i) pairs.emplace_back(top[i], bottom[i]);
  return ProductDiagram(std::move(pairs));
}

std::string format_diagram_inline(const ProductDiagram& d) {
  std::string top;
  std::string bottom;
  for (std::size_t i = 0; i < d.pairs().size(); ++i) {
    const auto [a, b] = d.pairs()[i];
    if (i > 0) {
      top += ',';
      bottom += ',';
    }
    top += a == 0 ? "_" : std::to_string(a);
    bottom += b == 0 ? "_" : std::to_string(b);
  }
  return top + " / " + bottom;
}

std::string format_diagram_rows(const ProductDiagram& d) {
  std::size_t width = 1;
  for (auto [a, b] : d.pairs()) width = std::max({width, std::to_string(a).size(), std::to_string(b).size()});
  const auto cell = [&](int v) {
    std::string s = v == 0 ? "_" : std::to_string(v);
    return std::string(width - s.size(), ' ') + s;
  };
  std::string top;
  std::string bottom;
  for (std::size_t i = 0; i < d.pairs().size(); ++i) {
    if (i > 0) {
      top += ' ';
      bottom += ' ';
    }
    top += cell(d.pairs()[i].first);
    bottom += cell(d.pairs()[i].second);
  }
  return top + "\n" + bottom + "\n";
}

}  // namespace ellab
