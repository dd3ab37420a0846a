#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellab/catalog.hpp"
#include "ellab/kummer.hpp"
#include "ellab/product.hpp"

namespace ellab {

enum class HypothesisKind {
  /// Two four-fiber factors with three common singular fibers.
  TwoBeauville,
  /// A four-fiber and a five-fiber factor with four common singular fibers
  /// and none of the excluded I_0 x I_n fibers.
  BeauvilleFiveFiber,
  NotApplicable,
};

std::string_view to_string(HypothesisKind k);

struct HypothesisCase {
  HypothesisKind kind = HypothesisKind::NotApplicable;
  /// Violated clause for NotApplicable.
  std::string reason;
  /// Side of the five-fiber factor for BeauvilleFiveFiber.
  std::optional<Side> five_fiber_side;
};

/// Throws NotInCatalog when a factor is not admissible.
HypothesisCase classify_hypotheses(const ProductDiagram& d);

enum class CertificateKind { RigidProductPartner, RigidKummer, NotCertified };

std::string_view to_string(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::NotCertified;
  HypothesisCase hypothesis;
  /// Rigid fiber product reached by `moves` (RigidProductPartner).
  std::optional<ProductDiagram> partner;
  /// Diagram whose Kummer quotient is rigid, reached by `moves` (RigidKummer).
  std::optional<ProductDiagram> kummer_diagram;
  std::optional<KummerReport> kummer;
  std::vector<LoggedMove> moves;
  std::vector<std::string> reasons;
  std::vector<std::string> warnings;
  std::size_t partner_candidates = 0;
  std::size_t kummer_candidates = 0;
};

struct CertifyOptions {
  /// Node count of the fixed curve for the input diagram itself; when unset
  /// only the recognized fixed-count patterns get a value.
  std::optional<int> node_count;
  /// Branch-quartic data; the embedded catalog when null.
  const Catalog* catalog = nullptr;
};

/// Rigid fiber-product partner first, then a rigid Kummer fibration on an
/// I_2 x I_0 obstruction of a 3,3,3,2,1 / 4,4,2,1,1 / 6,2,2,1,1 factor.
/// Throws HypothesesNotMet when classify_hypotheses is NotApplicable.
Certificate certify(const ProductDiagram& d, const CertifyOptions& options = {});

}  // namespace ellab
