#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ellab/catalog.hpp"
#include "ellab/correspondence.hpp"
#include "ellab/error.hpp"
#include "ellab/isogeny.hpp"
#include "ellab/kummer.hpp"
#include "ellab/product.hpp"
#include "ellab/serialize.hpp"
#include "ellab/torsion.hpp"

namespace ellab::cli {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string describe(const TorsionStatus& s) {
  std::string out(to_string(s.answer));
  if (s.provenance) out += " (" + std::string(to_string(*s.provenance)) + ")";
  return out;
}

std::string describe(const LoggedMove& m) {
  std::vector<int> d;
  for (auto pos : m.move.divided) d.push_back(static_cast<int>(pos + 1));
  return std::string(to_string(m.side)) + " p=" + std::to_string(m.move.p) + " D={" + join(d, ",") +
         "} " + compact_indices(m.move.source.indices()) + " -> " +
         compact_indices(m.move.target.indices());
}

void print_report(std::ostream& out, const KummerReport& r, const std::string& indent = "") {
  out << indent << "fixed_counts: " << join(r.fixed_counts) << "\n"
      << indent << "node_count: " << r.node_count << "\n"
      << indent << "euler: " << r.euler << "\n"
      << indent << "components: " << r.component_interval.first << ".." << r.component_interval.second << "\n"
      << indent << "rationality: " << to_string(r.rationality) << "\n"
      << indent << "equisingular_zero: " << yes_no(r.equisingular_zero) << "\n"
      << indent << "transversal_zero: " << yes_no(r.transversal_zero) << "\n"
      << indent << "rigid: " << yes_no(r.rigid) << "\n";
}

void print_diagram(std::ostream& out, const ProductDiagram& d) {
  std::string points;
  for (const auto& p : d.points()) points += (points.empty() ? "" : " ") + p;
  out << "points: " << points << "\n" << format_diagram_rows(d);
}

ProductDiagram read_diagram(const std::string& arg) {
  if (arg.size() > 5 && arg.ends_with(".json") && std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return diagram_from_json(nlohmann::json::parse(buf.str()));
    } catch (const nlohmann::json::parse_error& ex) {
      throw Error(ErrorCode::MalformedInput, std::string("diagram JSON: ") + ex.what());
    }
  }
  return parse_diagram(arg);
}

std::string catalog_cell(const std::optional<std::string>& v) { return v ? *v : "-"; }
std::string catalog_cell(const std::optional<std::vector<int>>& v) { return v ? join(*v, ",") : "-"; }
std::string catalog_cell(const std::optional<bool>& v) { return v ? yes_no(*v) : "-"; }

int cmd_catalog(const Catalog& catalog, const std::string& query, bool json, std::ostream& out) {
  if (query.empty()) {
    if (json) {
      out << catalog.dump();
      return kExitOk;
    }
    out << "partition\tgroup\tquartic\tdegrees\ti2_node_induced\tdistinguished\n";
    for (const auto& e : catalog.entries()) {
      out << compact_indices(e.partition) << '\t' << catalog_cell(e.group) << '\t'
          << catalog_cell(e.quartic) << '\t' << catalog_cell(e.degrees) << '\t'
          << catalog_cell(e.i2_node_induced) << '\t' << catalog_cell(e.distinguished) << '\n';
    }
    return kExitOk;
  }

  const Partition partition = partition_of(parse_config(query));
  const Admissibility adm = admissible(partition);
  const auto entry = catalog.lookup(partition);
  if (json) {
    nlohmann::json doc = {{"partition", partition}, {"admissibility", std::string(to_string(adm))}};
    doc["entry"] = entry ? Catalog({*entry}).to_json().at(0) : nlohmann::json(nullptr);
    out << dump_document(doc);
  } else {
    out << "partition: " << compact_indices(partition) << "\n"
        << "admissibility: " << to_string(adm) << "\n";
    if (entry) {
      out << "group: " << catalog_cell(entry->group) << "\n"
          << "quartic: " << catalog_cell(entry->quartic) << "\n"
          << "degrees: " << catalog_cell(entry->degrees) << "\n"
          << "i2_node_induced: " << catalog_cell(entry->i2_node_induced) << "\n"
          << "distinguished: " << catalog_cell(entry->distinguished) << "\n";
    }
  }
  return entry ? kExitOk : kExitNegative;
}

int cmd_torsion(const std::string& config_text, std::optional<int> prime, bool json, std::ostream& out) {
  const FiberConfig config = parse_config(config_text);
  std::vector<int> primes;
  if (prime) {
    primes.push_back(*prime);
  } else {
    primes.assign(kIsogenyPrimes.begin(), kIsogenyPrimes.end());
  }
  nlohmann::json doc = {{"config", config.indices()}, {"results", nlohmann::json::array()}};
  for (int p : primes) {
    const TorsionStatus status = torsion_status(config, p);
    if (json) {
      auto j = to_json(status);
      j["p"] = p;
      doc["results"].push_back(j);
    } else if (prime) {
      out << describe(status) << "\n";
    } else {
      out << "p=" << p << '\t' << describe(status) << "\n";
    }
  }
  if (json) out << dump_document(doc);
  return kExitOk;
}

int cmd_class(const std::string& config_text, const std::string& mode_text, const std::string& table,
              bool json, std::ostream& out) {
  if (!table.empty()) {
    std::span<const ClassColumn> cols;
    if (table == "four") {
      cols = four_fiber_classes();
    } else if (table == "five") {
      cols = five_fiber_classes();
    } else {
      throw Error(ErrorCode::MalformedInput, "--table takes 'four' or 'five'");
    }
    const ClosureMode mode = parse_closure_mode(mode_text);
    std::vector<std::vector<std::vector<int>>> columns;
    for (const auto& col : cols) {
      const auto graph = closure(FiberConfig::with_default_labels(col.heading()), mode);
      columns.push_back(display_rows(graph));
    }
    out << class_table_tsv(columns);
    return kExitOk;
  }
  if (config_text.empty()) throw Error(ErrorCode::MalformedInput, "class needs CONFIG or --table");
  const IsogenyGraph graph = closure(parse_config(config_text), parse_closure_mode(mode_text));
  if (json) {
    out << dump_document(to_json(graph));
  } else {
    out << to_tsv(graph);
  }
  return kExitOk;
}

std::map<std::string, std::string> parse_alignment(const std::string& spec, const FiberConfig& left,
                                                   FiberConfig& right) {
  std::vector<std::string> cells;
  std::stringstream ss(spec);
  for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
  if (cells.size() != right.size()) {
    throw Error(ErrorCode::MalformedInput, "--align needs one entry per right fiber (" +
                                               std::to_string(right.size()) + ")");
  }
  // Right points get fresh labels so only the listed positions coincide.
  right = FiberConfig(default_labels(right.size(), "Q"), right.indices());
  std::map<std::string, std::string> alignment;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    if (cells[j] == "_") continue;
    std::size_t pos = 0;
    try {
      pos = std::stoul(cells[j]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedInput, "bad --align entry '" + cells[j] + "'");
    }
    if (pos < 1 || pos > left.size()) {
      throw Error(ErrorCode::MalformedInput, "--align position out of range: " + cells[j]);
    }
    alignment[right.labels()[j]] = left.labels()[pos - 1];
  }
  return alignment;
}

int cmd_product(const std::string& left_text, const std::string& right_text, const std::string& align,
                bool json, std::ostream& out) {
  const FiberConfig left = parse_config(left_text);
  FiberConfig right = parse_config(right_text);
  std::map<std::string, std::string> alignment;
  if (!align.empty()) alignment = parse_alignment(align, left, right);
  const ProductDiagram d = make_product(left, right, alignment);
  if (json) {
    nlohmann::json doc = to_json(d);
    doc["singular_count"] = d.singular_count();
    doc["common_singular_count"] = common_singular_count(d);
    doc["rigid_criterion"] = meets_rigidity_criterion(d);
    out << dump_document(doc);
  } else {
    print_diagram(out, d);
    out << "inline: " << format_diagram_inline(d) << "\n"
        << "singular: " << d.singular_count() << "\n"
        << "common: " << common_singular_count(d) << "\n"
        << "rigid_criterion: " << yes_no(meets_rigidity_criterion(d)) << "\n";
  }
  return kExitOk;
}

int cmd_kummer(const Catalog& catalog, const std::string& diagram_text, std::optional<int> delta,
               const std::vector<std::size_t>& nodes, const std::vector<std::size_t>& tangents, bool json,
               std::ostream& out) {
  const ProductDiagram d = read_diagram(diagram_text);
  KummerInput input{d, 0, {}, {}, {}};
  for (Side side : {Side::Left, Side::Right}) {
    const auto entry = catalog.lookup(partition_of(d.projection(side)));
    if (!entry || !entry->degrees) {
      throw Error(ErrorCode::NotInCatalog, "no branch component degrees for the " +
                                               std::string(to_string(side)) + " factor");
    }
    (side == Side::Left ? input.left_degrees : input.right_degrees) = *entry->degrees;
  }
  for (std::size_t pos : i2_smooth_points(d)) {
    const Side side = d.pairs()[pos].first == 2 ? Side::Left : Side::Right;
    const auto entry = catalog.lookup(partition_of(d.projection(side)));
    if (entry && entry->i2_node_induced) input.i2_node_induced[pos] = *entry->i2_node_induced;
  }
  const auto set_flags = [&](const std::vector<std::size_t>& positions, bool value) {
    for (std::size_t p : positions) {
      if (p < 1 || p > d.pairs().size()) throw Error(ErrorCode::MalformedInput, "point position out of range");
      input.i2_node_induced[p - 1] = value;
    }
  };
  set_flags(nodes, true);
  set_flags(tangents, false);

  if (!delta) delta = default_node_count(d);
  if (!delta) throw Error(ErrorCode::MalformedInput, "node count of the fixed curve unknown; pass --delta");
  input.node_count = *delta;

  const KummerReport report = kummer_rigidity(input);
  if (json) {
    out << dump_document(to_json(report));
  } else {
    print_report(out, report);
  }
  return kExitOk;
}

int cmd_certify(const Catalog& catalog, const std::string& diagram_text, std::optional<int> delta,
                bool json, std::ostream& out) {
  const ProductDiagram d = read_diagram(diagram_text);
  const HypothesisCase hypothesis = classify_hypotheses(d);
  if (hypothesis.kind == HypothesisKind::NotApplicable) {
    if (json) {
      out << dump_document({{"kind", "NotApplicable"}, {"hypothesis", to_json(hypothesis)}});
    } else {
      out << "certificate: none\nhypothesis: NotApplicable\nreason: " << hypothesis.reason << "\n";
    }
    return kExitNegative;
  }
  const Certificate cert = certify(d, CertifyOptions{delta, &catalog});
  if (json) {
    out << dump_document(to_json(cert));
  } else {
    out << "certificate: " << to_string(cert.kind) << "\n"
        << "hypothesis: " << to_string(cert.hypothesis.kind) << "\n";
    for (const auto& m : cert.moves) out << "move: " << describe(m) << "\n";
    if (cert.partner) {
      out << "partner:\n" << format_diagram_rows(*cert.partner);
    }
    if (cert.kummer_diagram) {
      out << "kummer_diagram:\n" << format_diagram_rows(*cert.kummer_diagram);
    }
    if (cert.kummer) print_report(out, *cert.kummer, "  ");
    for (const auto& r : cert.reasons) out << "reason: " << r << "\n";
    for (const auto& w : cert.warnings) out << "warning: " << w << "\n";
    out << "partner_candidates: " << cert.partner_candidates << "\n"
        << "kummer_candidates: " << cert.kummer_candidates << "\n";
  }
  return cert.kind == CertificateKind::NotCertified ? kExitNegative : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isogeny classes, fiber products and rigidity certificates for rational elliptic surfaces",
               "ellab"};
  app.require_subcommand(1);
  bool json = false;

  std::string catalog_query;
  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog entries or query one partition");
  catalog_cmd->add_option("PARTITION", catalog_query, "Partition in digit or CSV form");
  catalog_cmd->add_flag("--json", json, "Emit JSON");

  std::string torsion_config;
  std::optional<int> torsion_prime;
  auto* torsion_cmd = app.add_subcommand("torsion", "Decide existence of a p-torsion section");
  torsion_cmd->add_option("CONFIG", torsion_config, "Fiber configuration")->required();
  torsion_cmd->add_option("-p,--prime", torsion_prime, "Prime (2, 3 or 5); all three when omitted");
  torsion_cmd->add_flag("--json", json, "Emit JSON");

  std::string class_config;
  std::string class_mode = "combinatorial";
  std::string class_table;
  auto* class_cmd = app.add_subcommand("class", "Isogeny class closure of a configuration");
  class_cmd->add_option("CONFIG", class_config, "Fiber configuration");
  class_cmd->add_option("--mode", class_mode, "combinatorial or catalog");
  class_cmd->add_option("--table", class_table, "Print the full class table: four or five");
  class_cmd->add_flag("--json", json, "Emit JSON");

  std::string left_text;
  std::string right_text;
  std::string align;
  auto* product_cmd = app.add_subcommand("product", "Build a fiber product diagram");
  product_cmd->add_option("LEFT", left_text, "Left factor")->required();
  product_cmd->add_option("RIGHT", right_text, "Right factor")->required();
  product_cmd->add_option("--align", align,
                          "Left position (1-based) of each right fiber, '_' for a new point");
  product_cmd->add_flag("--json", json, "Emit JSON");

  std::string diagram_text;
  std::optional<int> delta;
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> tangents;
  auto* kummer_cmd = app.add_subcommand("kummer", "Kummer fibration rigidity report");
  kummer_cmd->add_option("DIAGRAM", diagram_text, "Diagram \"a,b,.. / c,_,..\" or a .json file")->required();
  kummer_cmd->add_option("--delta", delta, "Node count of the fixed curve");
  kummer_cmd->add_option("--node", nodes, "Mark the I2 x I0 point at this position node-induced");
  kummer_cmd->add_option("--tangent", tangents, "Mark the I2 x I0 point at this position a double tangent");
  kummer_cmd->add_flag("--json", json, "Emit JSON");

  auto* certify_cmd = app.add_subcommand("certify", "Certify a correspondence with a rigid threefold");
  certify_cmd->add_option("DIAGRAM", diagram_text, "Diagram \"a,b,.. / c,_,..\" or a .json file")->required();
  certify_cmd->add_option("--delta", delta, "Node count of the fixed curve for the input diagram");
  certify_cmd->add_flag("--json", json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ellab: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (catalog_cmd->parsed()) {
      return cmd_catalog(Catalog::from_environment(), catalog_query, json, out);
    }
    if (torsion_cmd->parsed()) return cmd_torsion(torsion_config, torsion_prime, json, out);
    if (class_cmd->parsed()) return cmd_class(class_config, class_mode, class_table, json, out);
    if (product_cmd->parsed()) return cmd_product(left_text, right_text, align, json, out);
    if (kummer_cmd->parsed()) {
      return cmd_kummer(Catalog::from_environment(), diagram_text, delta, nodes, tangents, json, out);
    }
    if (certify_cmd->parsed()) {
      return cmd_certify(Catalog::from_environment(), diagram_text, delta, json, out);
    }
  } catch (const Error& e) {
    err << "ellab: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ellab::cli
