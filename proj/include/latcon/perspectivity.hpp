#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latcon/lattice.hpp"
#include "latcon/planar.hpp"

namespace latcon {

enum class StepKind { PerspUp, PerspDn, CPerspUp, CPerspDn, PPerspUp, PPerspDn, Swing };

std::string_view to_string(StepKind kind) noexcept;
std::optional<StepKind> parse_step_kind(std::string_view text) noexcept;

// items[i] steps[i] items[i+1]. Prime-interval sequences store their items
// as intervals too; the validation mode decides what is allowed.
struct WitnessSequence {
  std::vector<Interval> items;
  std::vector<StepKind> steps;

  bool operator==(const WitnessSequence&) const = default;
};

// [a,b] ↗ [c,d]: a = b∧c and d = b∨c. persp_dn is the converse.
bool persp_up(const FiniteLattice& l, Interval i, Interval j);
bool persp_dn(const FiniteLattice& l, Interval i, Interval j);
bool persp(const FiniteLattice& l, Interval i, Interval j);

// Up: d = b∨c and a ≤ c. Down: c = a∧d and d ≤ b.
bool cpersp_up(const FiniteLattice& l, Interval i, Interval j);
bool cpersp_dn(const FiniteLattice& l, Interval i, Interval j);
bool cpersp(const FiniteLattice& l, Interval i, Interval j);

// Down: 1_q ≤ 1_p, 0_p ∨ 1_q = 1_p, 0_p ∧ 1_q ≤ 0_q. Up is the dual.
// Both hold for p = q.
bool ppersp_dn(const FiniteLattice& l, PrimeInterval p, PrimeInterval q);
bool ppersp_up(const FiniteLattice& l, PrimeInterval p, PrimeInterval q);
bool ppersp(const FiniteLattice& l, PrimeInterval p, PrimeInterval q);

enum class PperspKind { NotRelated, Equal, Perspectivity, N5Established };

struct PperspClass {
  PperspKind kind = PperspKind::NotRelated;
  std::optional<N5Witness> witness;  // set for N5Established
};

// For a downward step the witness is {0_p∧1_q, 0_p, 0_q, 1_q, 0_p∨0_q} as
// (bottom, side, low, high, top); an upward step uses the dual elements.
PperspClass classify_ppersp(const FiniteLattice& l, PrimeInterval p, PrimeInterval q);

// 1_p = 1_q covers at least three elements and 0_q is neither the left-most
// nor the right-most of them. Throws NotAnSpsDiagram.
bool swing(const PlanarDiagram& d, PrimeInterval p, PrimeInterval q);

enum class ChainMode { CProj, PProj, SwingLemma };

struct Validation {
  bool valid = true;
  std::optional<std::size_t> failing_index;  // step index
  std::string reason;

  explicit operator bool() const noexcept { return valid; }
};

Validation validate_sequence(const FiniteLattice& l, const WitnessSequence& w,
                             ChainMode mode);
Validation validate_sequence(const PlanarDiagram& d, const WitnessSequence& w,
                             ChainMode mode);

// Tags each consecutive pair with the first relation that holds, trying the
// candidates in order. Returns false if some pair matches none.
bool tag_steps(const FiniteLattice& l, WitnessSequence& w,
               std::initializer_list<StepKind> candidates);

bool step_holds(const FiniteLattice& l, const PlanarDiagram* d, StepKind kind,
                Interval from, Interval to);

std::string format_sequence(const FiniteLattice& l, const WitnessSequence& w);

}  // namespace latcon
