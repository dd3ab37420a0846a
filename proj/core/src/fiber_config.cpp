#include "ellab/fiber_config.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

#include "ellab/error.hpp"

namespace ellab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_index(std::string_view token, std::string_view whole) {
  token = trim(token);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::MalformedInput,
                "bad fiber index '" + std::string(token) + "' in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

FiberConfig::FiberConfig(std::vector<std::string> labels, std::vector<int> indices)
    : labels_(std::move(labels)), indices_(std::move(indices)) {
  if (labels_.size() != indices_.size()) {
    throw Error(ErrorCode::MalformedInput, "label count differs from index count");
  }
  for (int k : indices_) {
    if (k < 1) throw Error(ErrorCode::MalformedInput, "fiber indices must be positive");
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw Error(ErrorCode::MalformedInput, "empty point label");
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::MalformedInput, "duplicate point label '" + label + "'");
    }
  }
  if (indices_.size() < kMinFibers) {
    throw Error(ErrorCode::TooFewFibers,
                "need at least 4 singular fibers, got " + std::to_string(indices_.size()));
  }
  const int sum = std::accumulate(indices_.begin(), indices_.end(), 0);
  if (sum != kIndexSum) {
    throw Error(ErrorCode::SumNot12, "fiber indices sum to " + std::to_string(sum));
  }
}

FiberConfig FiberConfig::with_default_labels(std::vector<int> indices) {
  auto labels = default_labels(indices.size());
  return FiberConfig(std::move(labels), std::move(indices));
}

FiberConfig FiberConfig::with_indices(std::vector<int> indices) const {
  return FiberConfig(labels_, std::move(indices));
}

bool FiberConfig::has_default_labels() const { return labels_ == default_labels(size()); }

std::vector<std::string> default_labels(std::size_t n, std::string_view prefix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(i + 1));
  return out;
}

FiberConfig parse_config(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw Error(ErrorCode::MalformedInput, "empty configuration");

  std::vector<int> indices;
  std::vector<std::string> labels;

  if (body.find(',') == std::string_view::npos && body.find('=') == std::string_view::npos) {
    for (char c : body) {
      if (c < '1' || c > '9') {
        throw Error(ErrorCode::MalformedInput,
                    "compact form takes digits 1-9 only; use CSV for '" + std::string(body) + "'");
      }
      indices.push_back(c - '0');
    }
    return FiberConfig::with_default_labels(std::move(indices));
  }

  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = std::min(body.find(',', start), body.size());
    const std::string_view item = trim(body.substr(start, comma - start));
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      indices.push_back(parse_index(item, body));
    } else {
      labels.emplace_back(trim(item.substr(0, eq)));
      indices.push_back(parse_index(item.substr(eq + 1), body));
    }
    start = comma + 1;
  }
  if (!labels.empty() && labels.size() != indices.size()) {
    throw Error(ErrorCode::MalformedInput, "either every entry carries a label or none does");
  }
  if (labels.empty()) return FiberConfig::with_default_labels(std::move(indices));
  return FiberConfig(std::move(labels), std::move(indices));
}

std::string compact_indices(const std::vector<int>& indices) {
  const bool digits = std::all_of(indices.begin(), indices.end(), [](int k) { return k >= 1 && k <= 9; });
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(indices[i]);
  }
  return out;
}

std::string render_config(const FiberConfig& config) {
  if (config.has_default_labels()) return compact_indices(config.indices());
  std::string out;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (i > 0) out += ',';
    out += config.labels()[i] + "=" + std::to_string(config[i]);
  }
  return out;
}

Partition partition_of(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end(), std::greater<>());
  return indices;
}

Partition partition_of(const FiberConfig& config) { return partition_of(config.indices()); }

bool lex_greater(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace ellab
