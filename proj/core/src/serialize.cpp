#include "ellab/serialize.hpp"

#include <algorithm>

#include "ellab/error.hpp"

namespace ellab {

namespace {

nlohmann::json one_based(const std::vector<std::size_t>& positions) {
  nlohmann::json out = nlohmann::json::array();
  for (auto p : positions) out.push_back(p + 1);
  return out;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw Error(ErrorCode::MalformedInput, "side must be 'left' or 'right'");
}

}  // namespace

nlohmann::json to_json(const IsogenyMove& move) {
  return {{"p", move.p},
          {"D", one_based(move.divided)},
          {"from", move.source.indices()},
          {"to", move.target.indices()}};
}

nlohmann::json to_json(const LoggedMove& move) {
  auto j = to_json(move.move);
  j["side"] = std::string(to_string(move.side));
  return j;
}

nlohmann::json to_json(const TorsionStatus& status) {
  nlohmann::json evidence = nlohmann::json::array();
  for (auto p : status.evidence) evidence.push_back(std::string(to_string(p)));
  return {{"answer", std::string(to_string(status.answer))},
          {"provenance", status.provenance ? nlohmann::json(std::string(to_string(*status.provenance)))
                                           : nlohmann::json(nullptr)},
          {"evidence", evidence}};
}

nlohmann::json to_json(const IsogenyGraph& graph) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : graph.nodes) nodes.push_back(n.indices());
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"p", e.move.p}, {"D", one_based(e.move.divided)}, {"from", e.from}, {"to", e.to}});
  }
  return {{"nodes", nodes}, {"edges", edges}, {"mode", std::string(to_string(graph.mode))}};
}

nlohmann::json to_json(const ProductDiagram& diagram) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : diagram.pairs()) pairs.push_back({a, b});
  nlohmann::json log = nlohmann::json::array();
  for (const auto& m : diagram.log()) log.push_back(to_json(m));
  return {{"points", diagram.points()}, {"pairs", pairs}, {"log", log}};
}

nlohmann::json to_json(const KummerReport& report) {
  return {{"fixed_counts", report.fixed_counts},
          {"euler", report.euler},
          {"node_count", report.node_count},
          {"component_interval", {report.component_interval.first, report.component_interval.second}},
          {"rationality", std::string(to_string(report.rationality))},
          {"equisingular_zero", report.equisingular_zero},
          {"transversal_zero", report.transversal_zero},
          {"rigid", report.rigid}};
}

nlohmann::json to_json(const HypothesisCase& hypothesis) {
  nlohmann::json j = {{"case", std::string(to_string(hypothesis.kind))}};
  j["reason"] = hypothesis.reason.empty() ? nlohmann::json(nullptr) : nlohmann::json(hypothesis.reason);
  j["five_fiber_side"] = hypothesis.five_fiber_side
                             ? nlohmann::json(std::string(to_string(*hypothesis.five_fiber_side)))
                             : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const Certificate& certificate) {
  nlohmann::json moves = nlohmann::json::array();
  for (const auto& m : certificate.moves) moves.push_back(to_json(m));
  return {{"kind", std::string(to_string(certificate.kind))},
          {"hypothesis", to_json(certificate.hypothesis)},
          {"partner", certificate.partner ? to_json(*certificate.partner) : nlohmann::json(nullptr)},
          {"kummer_diagram",
           certificate.kummer_diagram ? to_json(*certificate.kummer_diagram) : nlohmann::json(nullptr)},
          {"kummer", certificate.kummer ? to_json(*certificate.kummer) : nlohmann::json(nullptr)},
          {"moves", moves},
          {"reasons", certificate.reasons},
          {"warnings", certificate.warnings},
          {"transcript",
           {{"partner_candidates", certificate.partner_candidates},
            {"kummer_candidates", certificate.kummer_candidates}}}};
}

ProductDiagram diagram_from_json(const nlohmann::json& doc) {
  try {
    auto points = doc.at("points").get<std::vector<std::string>>();
    std::vector<ProductDiagram::Pair> pairs;
    for (const auto& p : doc.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    const ProductDiagram plain(points, pairs);
    std::vector<LoggedMove> log;
    if (auto it = doc.find("log"); it != doc.end()) {
      for (const auto& entry : *it) {
        const Side side = parse_side(entry.at("side").get<std::string>());
        const auto from = entry.at("from").get<std::vector<int>>();
        const auto to = entry.at("to").get<std::vector<int>>();
        auto labels = plain.projection(side).labels();
        if (labels.size() != from.size()) labels = default_labels(from.size());
        std::vector<std::size_t> divided;
        for (const auto& pos : entry.at("D")) divided.push_back(pos.get<std::size_t>() - 1);
        IsogenyMove move{entry.at("p").get<int>(), std::move(divided), FiberConfig(labels, from),
                         FiberConfig(labels, to)};
        if (!is_valid_move(move)) throw Error(ErrorCode::MalformedInput, "invalid move in diagram log");
        log.push_back({side, std::move(move)});
      }
    }
    return ProductDiagram(std::move(points), std::move(pairs), std::move(log));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::MalformedInput, std::string("diagram JSON: ") + ex.what());
  }
}

std::string dump_document(nlohmann::json doc) {
  doc["schema"] = kSchemaVersion;
  return doc.dump(2) + "\n";
}

}  // namespace ellab
