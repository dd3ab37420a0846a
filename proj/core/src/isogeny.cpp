#include "ellab/isogeny.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "ellab/catalog.hpp"
#include "ellab/error.hpp"
#include "ellab/torsion.hpp"

namespace ellab {

namespace {

std::vector<int> move_target(const std::vector<int>& source, int p,
                             const std::vector<std::size_t>& divided) {
  std::vector<int> out(source.size());
  std::size_t d = 0;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (d < divided.size() && divided[d] == i) {
      out[i] = source[i] / p;
      ++d;
    } else {
      out[i] = source[i] * p;
    }
  }
  return out;
}

/// sigma[i] = position in `row` playing the role of position i of `indices`,
/// pairing the k-th occurrence of each value with the k-th occurrence.
std::vector<std::size_t> occurrence_matching(const std::vector<int>& indices,
                                             const std::vector<int>& row) {
  std::map<int, std::vector<std::size_t>> slots;
  for (std::size_t j = 0; j < row.size(); ++j) slots[row[j]].push_back(j);
  std::map<int, std::size_t> used;
  std::vector<std::size_t> sigma(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) sigma[i] = slots.at(indices[i])[used[indices[i]]++];
  return sigma;
}

struct Transport {
  const ClassColumn* column = nullptr;
  std::vector<std::size_t> sigma;
};

Transport transport_for(const FiberConfig& config) {
  const Partition partition = partition_of(config);
  if (admissible(partition) != Admissibility::Admissible) {
    throw Error(ErrorCode::NotInCatalog,
                "partition " + compact_indices(partition) + " is not in the isogeny class tables");
  }
  const ClassColumn* col = class_column_of(partition);
  for (const auto& row : col->rows) {
    if (partition_of(row) == partition) return {col, occurrence_matching(config.indices(), row)};
  }
  throw Error(ErrorCode::NotInCatalog, "no table row for " + compact_indices(partition));
}

bool node_order(const std::vector<int>& a, const std::vector<int>& b) { return lex_greater(a, b); }

}  // namespace

std::optional<int> halved_sum(int p) {
  if (!is_prime(p)) return std::nullopt;
  if ((kIndexSum * p) % (p + 1) != 0) return std::nullopt;
  return kIndexSum * p / (p + 1);
}

bool is_valid_move(const IsogenyMove& move) {
  const auto h = halved_sum(move.p);
  if (!h) return false;
  const auto& src = move.source.indices();
  const auto& dst = move.target.indices();
  if (src.size() != dst.size() || move.source.labels() != move.target.labels()) return false;
  if (!std::is_sorted(move.divided.begin(), move.divided.end()) ||
      std::adjacent_find(move.divided.begin(), move.divided.end()) != move.divided.end()) {
    return false;
  }
  if (!move.divided.empty() && move.divided.back() >= src.size()) return false;
  int divided_sum = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const bool div = std::binary_search(move.divided.begin(), move.divided.end(), i);
    if (div) {
      if (src[i] % move.p != 0 || dst[i] * move.p != src[i]) return false;
      divided_sum += src[i];
    } else if (dst[i] != src[i] * move.p) {
      return false;
    }
  }
  return divided_sum == *h && std::accumulate(dst.begin(), dst.end(), 0) == kIndexSum;
}

std::vector<IsogenyMove> enumerate_moves(const FiberConfig& config, int p) {
  const auto h = halved_sum(p);
  if (!h) return {};
  std::vector<std::size_t> divisible;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (config[i] % p == 0) divisible.push_back(i);
  }

  std::vector<std::vector<std::size_t>> subsets;
  const std::size_t count = divisible.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
    std::vector<std::size_t> d;
    int sum = 0;
    for (std::size_t b = 0; b < count; ++b) {
      if (mask & (std::size_t{1} << b)) {
        d.push_back(divisible[b]);
        sum += config[divisible[b]];
      }
    }
    if (sum == *h) subsets.push_back(std::move(d));
  }
  std::sort(subsets.begin(), subsets.end());

  std::vector<IsogenyMove> moves;
  moves.reserve(subsets.size());
  for (auto& d : subsets) {
    auto target = config.with_indices(move_target(config.indices(), p, d));
    moves.push_back(IsogenyMove{p, std::move(d), config, std::move(target)});
  }
  return moves;
}

std::vector<IsogenyMove> candidate_moves(const FiberConfig& config, int p) {
  if (p == 2 && excludes_two_torsion(config)) return {};
  auto moves = enumerate_moves(config, p);
  std::erase_if(moves, [](const IsogenyMove& m) {
    return admissible(partition_of(m.target)) != Admissibility::Admissible;
  });
  return moves;
}

IsogenyMove dual_move(const IsogenyMove& move) {
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < move.source.size(); ++i) {
    if (!std::binary_search(move.divided.begin(), move.divided.end(), i)) complement.push_back(i);
  }
  return IsogenyMove{move.p, std::move(complement), move.target, move.source};
}

std::string_view to_string(ClosureMode mode) {
  return mode == ClosureMode::Combinatorial ? "combinatorial" : "catalog";
}

ClosureMode parse_closure_mode(std::string_view text) {
  if (text == "combinatorial") return ClosureMode::Combinatorial;
  if (text == "catalog" || text == "catalog-gated") return ClosureMode::CatalogGated;
  throw Error(ErrorCode::MalformedInput, "closure mode must be 'combinatorial' or 'catalog'");
}

std::optional<std::size_t> IsogenyGraph::find(const std::vector<int>& indices) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].indices() == indices) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> IsogenyGraph::distances_from_root() const {
  constexpr auto kUnreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(nodes.size(), kUnreached);
  if (nodes.empty()) return dist;
  std::deque<std::size_t> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& e : edges) {
      if (e.from == u && dist[e.to] == kUnreached) {
        dist[e.to] = dist[u] + 1;
        queue.push_back(e.to);
      }
    }
  }
  return dist;
}

std::vector<IsogenyMove> IsogenyGraph::path_from_root(std::size_t to) const {
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(nodes.size(), kNone);
  std::vector<bool> seen(nodes.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& e = edges[k];
      if (e.from == u && !seen[e.to]) {
        seen[e.to] = true;
        parent_edge[e.to] = k;
        queue.push_back(e.to);
      }
    }
  }
  std::vector<IsogenyMove> path;
  for (std::size_t v = to; v != 0 && parent_edge[v] != kNone; v = edges[parent_edge[v]].from) {
    path.push_back(edges[parent_edge[v]].move);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

IsogenyGraph closure(const FiberConfig& config, ClosureMode mode) {
  std::optional<std::set<std::vector<int>>> allowed;
  if (mode == ClosureMode::CatalogGated &&
      admissible(partition_of(config)) == Admissibility::Admissible) {
    allowed.emplace();
    for (const auto& member : catalog_class(config)) allowed->insert(member.indices());
  }

  std::map<std::vector<int>, FiberConfig> found;
  std::vector<IsogenyMove> moves;
  std::deque<FiberConfig> queue{config};
  found.emplace(config.indices(), config);
  while (!queue.empty()) {
    const FiberConfig current = queue.front();
    queue.pop_front();
    for (int p : kIsogenyPrimes) {
      for (auto& m : candidate_moves(current, p)) {
        if (allowed && !allowed->contains(m.target.indices())) continue;
        if (found.emplace(m.target.indices(), m.target).second) queue.push_back(m.target);
        moves.push_back(std::move(m));
      }
    }
  }

  IsogenyGraph graph;
  graph.mode = mode;
  graph.nodes.push_back(config);
  for (const auto& [key, node] : found) {
    if (key != config.indices()) graph.nodes.push_back(node);
  }
  std::sort(graph.nodes.begin() + 1, graph.nodes.end(),
            [](const FiberConfig& a, const FiberConfig& b) { return node_order(a.indices(), b.indices()); });

  std::map<std::vector<int>, std::size_t> position;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) position[graph.nodes[i].indices()] = i;
  for (auto& m : moves) {
    const std::size_t from = position.at(m.source.indices());
    const std::size_t to = position.at(m.target.indices());
    graph.edges.push_back({from, to, std::move(m)});
  }
  std::sort(graph.edges.begin(), graph.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.to, a.move.p, a.move.divided) <
           std::tie(b.from, b.to, b.move.p, b.move.divided);
  });
  return graph;
}

std::vector<FiberConfig> catalog_class(const FiberConfig& config) {
  const Transport t = transport_for(config);
  std::vector<FiberConfig> members;
  members.push_back(config);
  for (const auto& row : t.column->rows) {
    std::vector<int> carried(config.size());
    for (std::size_t i = 0; i < config.size(); ++i) carried[i] = row[t.sigma[i]];
    if (carried != config.indices()) members.push_back(config.with_indices(std::move(carried)));
  }
  std::sort(members.begin() + 1, members.end(),
            [](const FiberConfig& a, const FiberConfig& b) { return node_order(a.indices(), b.indices()); });
  return members;
}

std::vector<std::size_t> distinguished_positions(const FiberConfig& config) {
  const Partition partition = partition_of(config);
  const auto entry = catalog_lookup(partition);
  if (!entry || !entry->distinguished) return {};
  // Catalog positions refer to the descending partition; map them onto the
  // config with the same occurrence-order matching used by catalog_class.
  const auto sigma = occurrence_matching(config.indices(), partition);
  std::vector<std::size_t> out;
  for (int pos : *entry->distinguished) {
    const auto model_pos = static_cast<std::size_t>(pos - 1);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (sigma[i] == model_pos) out.push_back(i);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<TableEdge>& table_edges() {
  static const std::vector<TableEdge> edges = [] {
    std::vector<TableEdge> out;
    const auto columns = all_classes();
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto& rows = columns[c].rows;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
          if (i == j) continue;
          for (int p : kIsogenyPrimes) {
            std::vector<std::size_t> divided;
            bool related = true;
            for (std::size_t k = 0; k < rows[i].size() && related; ++k) {
              if (rows[i][k] == p * rows[j][k]) {
                divided.push_back(k);
              } else if (rows[j][k] != p * rows[i][k]) {
                related = false;
              }
            }
            if (!related) continue;
            const IsogenyMove m{p, divided, FiberConfig::with_default_labels(rows[i]),
                                FiberConfig::with_default_labels(rows[j])};
            if (is_valid_move(m)) out.push_back({c, i, j, p, std::move(divided)});
          }
        }
      }
    }
    return out;
  }();
  return edges;
}

bool table_lists_move(const Partition& partition, int p) {
  const Partition key = partition_of(partition);
  const auto columns = all_classes();
  for (const auto& e : table_edges()) {
    if (e.p == p && partition_of(columns[e.column].rows[e.from_row]) == key) return true;
  }
  return false;
}

std::vector<std::vector<int>> display_rows(const IsogenyGraph& graph) {
  std::set<std::vector<int>> keys;
  for (const auto& node : graph.nodes) keys.insert(node.indices());
  for (const auto& col : all_classes()) {
    if (std::set<std::vector<int>>(col.rows.begin(), col.rows.end()) == keys) return col.rows;
  }
  std::vector<std::vector<int>> rows;
  for (const auto& node : graph.nodes) rows.push_back(node.indices());
  return rows;
}

std::string to_tsv(const IsogenyGraph& graph) {
  std::string out;
  for (const auto& row : display_rows(graph)) out += compact_indices(row) + "\n";
  return out;
}

std::string class_table_tsv(const std::vector<std::vector<std::vector<int>>>& columns) {
  std::size_t height = 0;
  for (const auto& col : columns) height = std::max(height, col.size());
  std::string out;
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c > 0) out += '\t';
      if (r < columns[c].size()) out += compact_indices(columns[c][r]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace ellab
