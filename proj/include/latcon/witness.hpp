#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/lattice.hpp"
#include "latcon/perspectivity.hpp"
#include "latcon/planar.hpp"

namespace latcon {

// All searches are breadth-first with neighbours visited in input order, so
// witnesses are shortest and reproducible.

// Chain of congruence-perspectivities over non-trivial intervals from p to q.
std::optional<WitnessSequence> cproj_witness(const FiniteLattice& l, PrimeInterval p,
                                             PrimeInterval q);

// Chain of prime-perspectivities from p to q; {p} when p = q.
std::optional<WitnessSequence> pproj_witness(const FiniteLattice& l, PrimeInterval p,
                                             PrimeInterval q);

// Turns a congruence-perspectivity chain ending in an interval that contains
// the prime b into a prime-perspectivity chain from a prime inside the
// chain's first interval to b. Throws InvalidChain.
WitnessSequence cproj_to_pproj(const FiniteLattice& l, const WitnessSequence& chain,
                               PrimeInterval b);

struct N5Extraction {
  N5Witness sublattice;
  PrimeInterval p0;  // con(p0) = con(p)
  PrimeInterval q0;  // con(q0) = con(q)
};

// Requires con(p) to cover con(q) among the join-irreducible congruences.
// Throws NotACoveringPair or InternalContradiction.
N5Extraction n5_witness(const FiniteLattice& l, PrimeInterval p, PrimeInterval q);

// p ↗ r (possibly r = p), then persp_dn / swing steps down to q; items are
// pairwise distinct. Throws NotAnSpsDiagram.
std::optional<WitnessSequence> swing_witness(const PlanarDiagram& d, PrimeInterval p,
                                             PrimeInterval q);

struct Disagreement {
  PrimeInterval p, q;
  bool oracle = false;
  bool cproj = false;
  bool pproj = false;
  std::optional<bool> swing;
  std::string note;
};

struct EquivalenceReport {
  std::size_t pairs = 0;
  bool swing_checked = false;
  std::vector<Disagreement> disagreements;
};

// Compares the congruence oracle with every reachability notion on all
// ordered pairs of distinct primes; also validates each witness found.
EquivalenceReport check_equivalences(const FiniteLattice& l,
                                     const PlanarDiagram* d = nullptr);

struct CornerCheck {
  Corner corner;
  bool collapse_restricts = false;
  bool swing_equivalence = false;
  bool removed_primes = false;

  bool passed() const {
    return collapse_restricts && swing_equivalence && removed_primes;
  }
};

struct CornerReport {
  std::vector<CornerCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
};

// Throws NotAnSpsDiagram or NoCorners.
CornerReport check_corner_preservation(const PlanarDiagram& d);

}  // namespace latcon
