#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latcon/error.hpp"

namespace latcon {

// Elements are addressed by their position in the input element list.
using Elem = std::size_t;

struct Interval {
  Elem lo = 0;
  Elem hi = 0;

  auto operator<=>(const Interval&) const = default;
};

// A covering pair lo ≺ hi. Kept distinct from Interval so that operations
// which only make sense on coverings say so in their signature.
struct PrimeInterval {
  Elem lo = 0;
  Elem hi = 0;

  auto operator<=>(const PrimeInterval&) const = default;
  operator Interval() const { return {lo, hi}; }
};

// Five elements bottom < low < high < top, bottom < side < top, with side
// incomparable to low and high.
struct N5Witness {
  Elem bottom, side, low, high, top;
  bool operator==(const N5Witness&) const = default;
};

// Antichain {x, y, z} with common pairwise meet bottom and join top.
struct M3Witness {
  Elem bottom, x, y, z, top;
  bool operator==(const M3Witness&) const = default;
};

class FiniteLattice {
 public:
  using Cover = std::pair<std::string, std::string>;

  // Validates that `covers` is the transitive reduction of an order with
  // all binary meets and joins. Throws Error on failure.
  static FiniteLattice from_covers(std::vector<std::string> elements,
                                   const std::vector<Cover>& covers);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(Elem x) const { return ids_.at(x); }

  Elem elem(std::string_view id) const;
  std::optional<Elem> find(std::string_view id) const;

  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  bool leq(Elem x, Elem y) const noexcept { return leq_[x * size() + y] != 0; }
  bool lt(Elem x, Elem y) const noexcept { return x != y && leq(x, y); }
  bool comparable(Elem x, Elem y) const noexcept {
    return leq(x, y) || leq(y, x);
  }
  Elem meet(Elem x, Elem y) const noexcept { return meet_[x * size() + y]; }
  Elem join(Elem x, Elem y) const noexcept { return join_[x * size() + y]; }
  bool covers(Elem lo, Elem hi) const noexcept {
    return cover_[lo * size() + hi] != 0;
  }

  // Checked lookups by id.
  bool leq(std::string_view x, std::string_view y) const {
    return leq(elem(x), elem(y));
  }
  std::string_view meet(std::string_view x, std::string_view y) const {
    return id(meet(elem(x), elem(y)));
  }
  std::string_view join(std::string_view x, std::string_view y) const {
    return id(join(elem(x), elem(y)));
  }

  // Cover pairs in input order.
  const std::vector<PrimeInterval>& prime_intervals() const noexcept {
    return primes_;
  }
  // Neighbours in input element order.
  const std::vector<Elem>& upper_covers(Elem x) const { return upper_.at(x); }
  const std::vector<Elem>& lower_covers(Elem x) const { return lower_.at(x); }

  bool is_prime(Interval i) const noexcept { return covers(i.lo, i.hi); }
  bool contains(Interval outer, Interval inner) const noexcept {
    return leq(outer.lo, inner.lo) && leq(inner.hi, outer.hi);
  }
  PrimeInterval prime(std::string_view lo, std::string_view hi) const;
  Interval interval(std::string_view lo, std::string_view hi) const;

  // Longest chain length inside [lo, hi].
  std::size_t length(Interval i) const;
  // Length of the longest chain from 0 to x.
  std::size_t height(Elem x) const { return height_.at(x); }

  // Same element list and ids, order reversed. An interval [a, b] of this
  // lattice is the interval [b, a] of the dual.
  FiniteLattice dual() const;

  bool operator==(const FiniteLattice& other) const;

 private:
  FiniteLattice() = default;
  void build_tables();

  std::vector<std::string> ids_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<PrimeInterval> primes_;
  std::vector<std::vector<Elem>> upper_, lower_;
  std::vector<std::uint8_t> leq_, cover_;
  std::vector<Elem> meet_, join_, height_;
  Elem bottom_ = 0, top_ = 0;
};

std::string format_interval(const FiniteLattice& lattice, Interval i);

std::optional<M3Witness> find_m3(const FiniteLattice& lattice);
std::optional<N5Witness> find_n5(const FiniteLattice& lattice);

// Checks the defining meet/join equations and distinctness.
bool is_n5(const FiniteLattice& lattice, const N5Witness& w);
bool is_m3(const FiniteLattice& lattice, const M3Witness& w);

}  // namespace latcon
