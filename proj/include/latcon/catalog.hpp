#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latcon/lattice.hpp"
#include "latcon/planar.hpp"

namespace latcon {

struct Fixture {
  std::string name;
  FiniteLattice lattice;
  std::optional<PlanarDiagram> diagram;
};

// C2, C3, C2x2, N5, M3, S7, FAN5, GRID3x3. Throws UnknownFixture.
Fixture fixture(std::string_view name);
const std::vector<std::string>& fixture_names();

inline constexpr std::size_t kDefaultEnumerationBound = 8;

// One lattice per isomorphism class with exactly n elements, in a fixed
// order. Elements are named 0, a, b, ..., 1. Throws BoundExceeded.
std::vector<FiniteLattice> enumerate_lattices(std::size_t n,
                                              std::size_t bound = kDefaultEnumerationBound);

// All classes with 1..max_n elements, smallest first.
std::vector<FiniteLattice> lattices_up_to(std::size_t max_n,
                                          std::size_t bound = kDefaultEnumerationBound);

bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

struct CorpusEntry {
  std::string name;
  PlanarDiagram diagram;
};

// SPS fixtures (with their drawn embeddings), then every enumerated SPS
// lattice up to max_n elements not isomorphic to one already listed.
std::vector<CorpusEntry> sps_corpus(std::size_t max_n,
                                    std::size_t bound = kDefaultEnumerationBound);

}  // namespace latcon
