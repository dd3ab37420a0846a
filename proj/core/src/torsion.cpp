#include "ellab/torsion.hpp"

#include <algorithm>

#include "ellab/catalog.hpp"
#include "ellab/error.hpp"
#include "ellab/isogeny.hpp"

namespace ellab {

namespace {

bool is_quadratic_residue(long value, int p) {
  value %= p;
  for (long x = 1; x < p; ++x) {
    if ((x * x) % p == value) return true;
  }
  return false;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string_view to_string(TorsionAnswer a) {
  switch (a) {
    case TorsionAnswer::Yes: return "Yes";
    case TorsionAnswer::No: return "No";
    case TorsionAnswer::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::SufficientCriterion: return "SufficientCriterion";
    case Provenance::NecessaryCriterion: return "NecessaryCriterion";
    case Provenance::MoveNonexistence: return "MoveNonexistence";
    case Provenance::CatalogTable: return "CatalogTable";
  }
  return "?";
}

bool TorsionStatus::has_yes_evidence() const {
  return std::any_of(evidence.begin(), evidence.end(), [](Provenance p) {
    return p == Provenance::SufficientCriterion || p == Provenance::CatalogTable;
  });
}

bool TorsionStatus::has_no_evidence() const {
  return std::any_of(evidence.begin(), evidence.end(), [](Provenance p) {
    return p == Provenance::NecessaryCriterion || p == Provenance::MoveNonexistence;
  });
}

bool torsion_sufficient(const FiberConfig& config, int p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");

  std::vector<int> coprime;
  std::vector<int> rest;
  for (int k : config.indices()) (k % p == 0 ? rest : coprime).push_back(k);

  if (coprime.size() <= 3) return true;
  // With four or more indices prime to p the four-element set must consist
  // of exactly those, so at most one choice remains.
  if (coprime.size() > 4) return false;

  long product = 1;
  for (int k : coprime) product *= k;

  if (p == 2) {
    if (!std::all_of(rest.begin(), rest.end(), [](int k) { return k % 4 == 0; })) return false;
    const long sign = (config.size() % 2 == 0) ? 1 : -1;
    long others = 1;
    for (int k : rest) others *= (k - 1);
    return mod(sign * product, 8) != mod(others, 8);
  }
  return !is_quadratic_residue(product, p);
}

bool excludes_two_torsion(const FiberConfig& config) {
  const auto odd = std::count_if(config.indices().begin(), config.indices().end(),
                                 [](int k) { return k % 2 != 0; });
  return odd > 4;
}

TorsionStatus torsion_status(const FiberConfig& config, int p) {
  if (std::find(kIsogenyPrimes.begin(), kIsogenyPrimes.end(), p) == kIsogenyPrimes.end()) {
    throw Error(ErrorCode::UnsupportedPrime,
                "torsion is decided for p in {2, 3, 5}, got " + std::to_string(p));
  }

  TorsionStatus status;
  const Partition partition = partition_of(config);

  if (torsion_sufficient(config, p)) status.evidence.push_back(Provenance::SufficientCriterion);
  if (p == 2 && excludes_two_torsion(config)) status.evidence.push_back(Provenance::NecessaryCriterion);

  // A p-torsion section yields a quotient surface over the same base, so its
  // configuration must be one of the raw moves with an admissible target.
  const auto moves = enumerate_moves(config, p);
  const bool no_quotient = std::all_of(moves.begin(), moves.end(), [](const IsogenyMove& m) {
    return admissible(partition_of(m.target)) == Admissibility::NotAdmissible;
  });
  if (no_quotient) status.evidence.push_back(Provenance::MoveNonexistence);

  if (admissible(partition) == Admissibility::Admissible && table_lists_move(partition, p)) {
    status.evidence.push_back(Provenance::CatalogTable);
  }

  const auto fired = [&](Provenance p) {
    return std::find(status.evidence.begin(), status.evidence.end(), p) != status.evidence.end();
  };
  for (Provenance yes : {Provenance::SufficientCriterion, Provenance::CatalogTable}) {
    if (fired(yes)) {
      status.answer = TorsionAnswer::Yes;
      status.provenance = yes;
      return status;
    }
  }
  for (Provenance no : {Provenance::NecessaryCriterion, Provenance::MoveNonexistence}) {
    if (fired(no)) {
      status.answer = TorsionAnswer::No;
      status.provenance = no;
      return status;
    }
  }
  return status;
}

}  // namespace ellab
