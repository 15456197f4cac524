#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latcon/lattice.hpp"
#include "latcon/union_find.hpp"

namespace latcon {

// A partition of the element set. Stored canonically: blocks are numbered
// by their least element, elements ascending inside each block, so two
// equal partitions compare equal structurally.
class Congruence {
 public:
  static Congruence equality(std::size_t n);
  static Congruence full(std::size_t n);
  // Any block labelling; relabelled canonically.
  static Congruence from_labels(const std::vector<std::size_t>& labels);
  static Congruence from_union_find(UnionFind& uf);
  static Congruence from_blocks(std::size_t n,
                                const std::vector<std::vector<Elem>>& blocks);

  std::size_t size() const noexcept { return label_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Elem>>& blocks() const noexcept { return blocks_; }
  const std::vector<std::size_t>& labels() const noexcept { return label_; }
  std::size_t block_of(Elem x) const { return label_.at(x); }
  bool same_block(Elem x, Elem y) const { return label_.at(x) == label_.at(y); }

  // Every block of *this lies inside a block of `coarser`.
  bool refines(const Congruence& coarser) const;
  // Finest partition coarser than both.
  Congruence join(const Congruence& other) const;

  bool operator==(const Congruence& o) const { return label_ == o.label_; }
  bool operator<(const Congruence& o) const { return label_ < o.label_; }

 private:
  std::vector<std::size_t> label_;
  std::vector<std::vector<Elem>> blocks_;
};

// Substitution property for meet and join, checked on all pairs.
bool is_congruence(const FiniteLattice& lattice, const Congruence& theta);

// Smallest congruence identifying a and b.
Congruence principal_congruence(const FiniteLattice& lattice, Elem a, Elem b);
Congruence con_prime(const FiniteLattice& lattice, PrimeInterval p);

inline bool collapses(const Congruence& theta, Interval i) {
  return theta.same_block(i.lo, i.hi);
}

struct ConjOrder {
  struct Generator {
    PrimeInterval prime;
    std::size_t congruence;  // index into `congruences`
  };

  std::vector<Generator> generators;      // one per prime, input order
  std::vector<Congruence> congruences;    // distinct con(p), first-seen order
  std::vector<std::uint8_t> leq_table;    // refinement between congruences
  // (lower, upper) pairs of the transitive reduction.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  bool leq(std::size_t i, std::size_t j) const {
    return leq_table[i * congruences.size() + j] != 0;
  }
  bool is_cover(std::size_t lower, std::size_t upper) const;
  std::size_t index_of(PrimeInterval p) const;
};

ConjOrder conj_order(const FiniteLattice& lattice);

inline constexpr std::size_t kDefaultConLBound = 14;

// Every congruence, as joins of subsets of the con(p) plus equality.
// Throws ConLTooLarge above `max_elements`.
std::vector<Congruence> all_congruences(const FiniteLattice& lattice,
                                        std::size_t max_elements = kDefaultConLBound);

// "{0} {a, e1} {b, e3} {e2, 1}"
std::string format_congruence(const FiniteLattice& lattice, const Congruence& theta);

}  // namespace latcon
