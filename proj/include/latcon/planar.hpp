#pragma once

#include <optional>
#include <vector>

#include "latcon/lattice.hpp"

namespace latcon {

// A lattice with a straight-line drawing: y = rank, x = xpos. Validated on
// construction (graded along covers, distinct xpos per rank, no two cover
// edges meeting outside a shared endpoint).
class PlanarDiagram {
 public:
  static PlanarDiagram build(FiniteLattice lattice, std::vector<long> rank,
                             std::vector<long> xpos);

  const FiniteLattice& lattice() const noexcept { return lattice_; }
  long rank(Elem x) const { return rank_.at(x); }
  long xpos(Elem x) const { return xpos_.at(x); }
  const std::vector<long>& ranks() const noexcept { return rank_; }
  const std::vector<long>& xposes() const noexcept { return xpos_; }

  // Left to right.
  const std::vector<Elem>& lower_covers(Elem x) const { return lower_.at(x); }
  const std::vector<Elem>& upper_covers(Elem x) const { return upper_.at(x); }

  // Slim and semimodular; cached at construction.
  bool sps() const noexcept { return sps_; }

 private:
  PlanarDiagram(FiniteLattice lattice) : lattice_(std::move(lattice)) {}

  FiniteLattice lattice_;
  std::vector<long> rank_, xpos_;
  std::vector<std::vector<Elem>> lower_, upper_;
  bool sps_ = false;
};

inline PlanarDiagram build_diagram(const FiniteLattice& lattice, std::vector<long> rank,
                                   std::vector<long> xpos) {
  return PlanarDiagram::build(lattice, std::move(rank), std::move(xpos));
}

// a∧b ≺ a implies b ≺ a∨b, for all a, b.
bool is_semimodular(const FiniteLattice& lattice);
bool is_slim(const FiniteLattice& lattice);
inline bool is_sps(const PlanarDiagram& diagram) { return diagram.sps(); }

struct Boundaries {
  std::vector<Elem> left;
  std::vector<Elem> right;
};

// Walks left-most (right-most) upper covers from 0 to 1.
Boundaries boundaries(const PlanarDiagram& diagram);

enum class Side { Left, Right };

struct Corner {
  Elem element;
  Side side;
  Elem upper;  // c^*
  Elem lower;  // c_*
  bool operator==(const Corner&) const = default;
};

// Left corners first, each side bottom to top. Throws NotAnSpsDiagram.
std::vector<Corner> corners(const PlanarDiagram& diagram);

// Unique left and right corner, and they are complements.
bool is_rectangular(const PlanarDiagram& diagram);

// The diagram of L - {c} with inherited coordinates. Throws NotACorner.
PlanarDiagram remove_corner(const PlanarDiagram& diagram, Elem c);

// First non-crossing left-to-right order per rank (rank = height), trying
// permutations lexicographically. Empty if the lattice is not graded or no
// order works.
std::optional<PlanarDiagram> find_embedding(const FiniteLattice& lattice);

}  // namespace latcon
