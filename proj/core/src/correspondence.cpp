#include "ellab/correspondence.hpp"

#include <algorithm>
#include <stdexcept>

#include "ellab/error.hpp"

namespace ellab {

namespace {

const std::vector<Partition>& kummer_five_fiber_partitions() {
  static const std::vector<Partition> p = {{3, 3, 3, 2, 1}, {4, 4, 2, 1, 1}, {6, 2, 2, 1, 1}};
  return p;
}

bool is_kummer_partition(const Partition& p) {
  const auto& list = kummer_five_fiber_partitions();
  return std::find(list.begin(), list.end(), p) != list.end();
}

std::string mixed_name(int n) { return "I0 x I" + std::to_string(n); }

/// Why the Kummer route cannot be evaluated on `d`, or the input it needs.
struct KummerAttempt {
  std::optional<KummerInput> input;
  std::string obstacle;
};

KummerAttempt prepare_kummer(const ProductDiagram& d, Side five_side, std::optional<int> node_count,
                             const Catalog& catalog) {
  const Partition five = partition_of(d.projection(five_side));
  if (!is_kummer_partition(five)) {
    return {std::nullopt, "five-fiber factor " + compact_indices(five) +
                              " is not one of 33321, 44211, 62211"};
  }
  for (auto [a, b] : d.pairs()) {
    const int n = std::max(a, b);
    if ((a == 0 || b == 0) && n >= 3) {
      return {std::nullopt, "fiber " + mixed_name(n) + " is not an I2 x I0 obstruction"};
    }
  }
  const auto i2 = i2_smooth_points(d);
  if (i2.empty()) return {std::nullopt, "no I2 x I0 obstruction"};

  const auto left_entry = catalog.lookup(partition_of(d.projection(Side::Left)));
  const auto right_entry = catalog.lookup(partition_of(d.projection(Side::Right)));
  if (!left_entry || !left_entry->degrees || !right_entry || !right_entry->degrees) {
    return {std::nullopt, "catalog lacks branch component degrees for a factor"};
  }

  KummerInput input{d, 0, *left_entry->degrees, *right_entry->degrees, {}};
  for (std::size_t pos : i2) {
    const auto& entry = d.pairs()[pos].first == 2 ? left_entry : right_entry;
    if (!entry->i2_node_induced) {
      return {std::nullopt, "catalog does not say whether the I2 at " + d.points()[pos] +
                                " is node-induced"};
    }
    input.i2_node_induced[pos] = *entry->i2_node_induced;
  }
  const auto delta = node_count ? node_count : default_node_count(d);
  if (!delta) return {std::nullopt, "node count of the fixed curve unknown; supply it explicitly"};
  input.node_count = *delta;
  return {std::move(input), {}};
}

}  // namespace

std::string_view to_string(HypothesisKind k) {
  switch (k) {
    case HypothesisKind::TwoBeauville: return "TwoBeauville";
    case HypothesisKind::BeauvilleFiveFiber: return "BeauvilleFiveFiber";
    case HypothesisKind::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::RigidProductPartner: return "RigidProductPartner";
    case CertificateKind::RigidKummer: return "RigidKummer";
    case CertificateKind::NotCertified: return "NotCertified";
  }
  return "?";
}

HypothesisCase classify_hypotheses(const ProductDiagram& d) {
  const FiberConfig left = d.projection(Side::Left);
  const FiberConfig right = d.projection(Side::Right);
  for (const auto* f : {&left, &right}) {
    if (admissible(partition_of(*f)) != Admissibility::Admissible) {
      throw Error(ErrorCode::NotInCatalog,
                  "factor " + compact_indices(f->indices()) + " is not an admissible catalog configuration");
    }
  }
  const int common = common_singular_count(d);
  const auto not_applicable = [](std::string why) {
    return HypothesisCase{HypothesisKind::NotApplicable, std::move(why), std::nullopt};
  };

  if (left.size() == 4 && right.size() == 4) {
    if (common != 3) {
      return not_applicable("two four-fiber factors need 3 common singular fibers, found " +
                            std::to_string(common));
    }
    return {HypothesisKind::TwoBeauville, {}, std::nullopt};
  }

  if ((left.size() == 4 && right.size() == 5) || (left.size() == 5 && right.size() == 4)) {
    const Side five_side = left.size() == 5 ? Side::Left : Side::Right;
    if (common != 4) {
      return not_applicable("four- and five-fiber factors need 4 common singular fibers, found " +
                            std::to_string(common));
    }
    const bool five_is_62211 =
        partition_of(d.projection(five_side)) == Partition{6, 2, 2, 1, 1};
    for (auto [a, b] : d.pairs()) {
      if (a != 0 && b != 0) continue;
      const int n = std::max(a, b);
      if (n == 5 || n == 7) return not_applicable(mixed_name(n) + " excluded");
      if (n == 6 && five_is_62211) return not_applicable(mixed_name(6) + " excluded for 62211");
    }
    return {HypothesisKind::BeauvilleFiveFiber, {}, five_side};
  }

  return not_applicable("factor fiber counts must be 4+4 or 4+5, got " +
                        std::to_string(left.size()) + "+" + std::to_string(right.size()));
}

Certificate certify(const ProductDiagram& d, const CertifyOptions& options) {
  const Catalog& catalog = options.catalog ? *options.catalog : Catalog::embedded();
  Certificate cert;
  cert.hypothesis = classify_hypotheses(d);
  if (cert.hypothesis.kind == HypothesisKind::NotApplicable) {
    throw Error(ErrorCode::HypothesesNotMet, cert.hypothesis.reason);
  }

  const PartnerSearch search = search_rigid_partner(d);
  cert.partner_candidates = search.candidates_examined;
  if (search.factors_isogenous) {
    cert.warnings.push_back("factors lie in the same isogeny class");
  }
  if (search.partner) {
    if (!meets_rigidity_criterion(search.partner->diagram)) {
      throw std::logic_error("partner search returned a non-rigid diagram");
    }
    cert.kind = CertificateKind::RigidProductPartner;
    cert.partner = search.partner->diagram;
    cert.moves = search.partner->path;
    return cert;
  }
  cert.reasons.push_back("no rigid fiber-product partner among " +
                         std::to_string(search.candidates_examined) + " representative pairs");

  if (cert.hypothesis.kind != HypothesisKind::BeauvilleFiveFiber) {
    cert.reasons.push_back("Kummer route applies only with a five-fiber factor");
    cert.warnings.push_back("whether exceptions like this one are defined over Q is open");
    return cert;
  }

  const Side five_side = *cert.hypothesis.five_fiber_side;
  std::optional<std::string> first_obstacle;
  for (const auto& candidate : ordered_factor_pairs(d)) {
    const bool is_input = candidate.path.empty();
    auto attempt = prepare_kummer(candidate.diagram, five_side,
                                  is_input ? options.node_count : std::nullopt, catalog);
    if (!attempt.input) {
      if (is_input) first_obstacle = attempt.obstacle;
      continue;
    }
    ++cert.kummer_candidates;
    KummerReport report = kummer_rigidity(*attempt.input);
    if (!report.rigid) {
      if (is_input) first_obstacle = "Kummer fibration of the input is not rigid";
      continue;
    }
    cert.kind = CertificateKind::RigidKummer;
    cert.kummer = std::move(report);
    cert.kummer_diagram = candidate.diagram;
    cert.moves = candidate.path;
    cert.reasons.clear();
    return cert;
  }
  if (first_obstacle) cert.reasons.push_back("Kummer route on the input: " + *first_obstacle);
  cert.reasons.push_back("Kummer route: no rigid fibration among " +
                         std::to_string(cert.kummer_candidates) + " evaluated diagrams");
  cert.warnings.push_back("whether exceptions like this one are defined over Q is open");
  return cert;
}

}  // namespace ellab
