#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ellab/correspondence.hpp"
#include "ellab/isogeny.hpp"
#include "ellab/kummer.hpp"
#include "ellab/product.hpp"
#include "ellab/torsion.hpp"

namespace ellab {

/// Value of the top-level "schema" field of every document the CLI emits.
inline constexpr const char* kSchemaVersion = "ellab/1";

// Positions inside documents ("D", "distinguished") are 1-based; node
// references ("from", "to") are 0-based indices into "nodes".

nlohmann::json to_json(const IsogenyMove& move);
nlohmann::json to_json(const LoggedMove& move);
nlohmann::json to_json(const TorsionStatus& status);
nlohmann::json to_json(const IsogenyGraph& graph);
nlohmann::json to_json(const ProductDiagram& diagram);
nlohmann::json to_json(const KummerReport& report);
nlohmann::json to_json(const HypothesisCase& hypothesis);
nlohmann::json to_json(const Certificate& certificate);

ProductDiagram diagram_from_json(const nlohmann::json& doc);

/// Adds the schema field and dumps with two-space indent and a newline.
std::string dump_document(nlohmann::json doc);

}  // namespace ellab
