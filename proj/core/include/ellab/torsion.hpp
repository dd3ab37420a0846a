#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ellab/fiber_config.hpp"

namespace ellab {

bool is_prime(int n);

enum class TorsionAnswer { Yes, No, Unknown };

enum class Provenance {
  SufficientCriterion,  ///< fiber-index criterion for a p-torsion section
  NecessaryCriterion,   ///< more than four odd indices, so no 2-torsion
  MoveNonexistence,     ///< no admissible quotient configuration exists
  CatalogTable,         ///< the isogeny class tables list a p-isogeny
};

std::string_view to_string(TorsionAnswer a);
std::string_view to_string(Provenance p);

/// Decision for one (configuration, prime) pair.  `provenance` is set for Yes
/// and No; `evidence` lists every argument that fired, in enum order.
struct TorsionStatus {
  TorsionAnswer answer = TorsionAnswer::Unknown;
  std::optional<Provenance> provenance;
  std::vector<Provenance> evidence;

  bool has_yes_evidence() const;
  bool has_no_evidence() const;
};

/// Sufficient condition for a p-torsion section from the fiber indices:
/// either at most three indices are prime to p, or some four indices k1..k4
/// cover all of them and (p = 2) the rest are divisible by 4 with
/// (-1)^n k1k2k3k4 != prod(k_i - 1) mod 8, or (p odd) k1k2k3k4 is a
/// non-residue mod p.  Subsets are quantified existentially.
///
/// Throws NotPrime.
bool torsion_sufficient(const FiberConfig& config, int p);

/// More than four odd indices rule out a two-torsion section.
bool excludes_two_torsion(const FiberConfig& config);

/// Three-valued oracle combining the sufficient criterion, the class tables,
/// the odd-index bound and quotient nonexistence.  Throws UnsupportedPrime for
/// primes outside {2, 3, 5}.
TorsionStatus torsion_status(const FiberConfig& config, int p);

}  // namespace ellab
