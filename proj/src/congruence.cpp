#include "latcon/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace latcon {

Congruence Congruence::from_labels(const std::vector<std::size_t>& labels) {
  Congruence c;
  const std::size_t n = labels.size();
  c.label_.assign(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> map;  // old -> new
  for (Elem x = 0; x < n; ++x) {
    auto it = std::find_if(map.begin(), map.end(),
                           [&](const auto& m) { return m.first == labels[x]; });
    std::size_t id;
    if (it == map.end()) {
      id = c.blocks_.size();
      map.emplace_back(labels[x], id);
      c.blocks_.emplace_back();
    } else {
      id = it->second;
    }
    c.label_[x] = id;
    c.blocks_[id].push_back(x);
  }
  return c;
}

Congruence Congruence::equality(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return from_labels(labels);
}

Congruence Congruence::full(std::size_t n) {
  return from_labels(std::vector<std::size_t>(n, 0));
}

Congruence Congruence::from_union_find(UnionFind& uf) {
  std::vector<std::size_t> labels(uf.size());
  for (std::size_t i = 0; i < uf.size(); ++i) labels[i] = uf.find(i);
  return from_labels(labels);
}

Congruence Congruence::from_blocks(std::size_t n,
                                   const std::vector<std::vector<Elem>>& blocks) {
  UnionFind uf(n);
  for (const auto& b : blocks)
    for (std::size_t i = 1; i < b.size(); ++i) uf.unite(b[0], b[i]);
  return from_union_find(uf);
}

bool Congruence::refines(const Congruence& coarser) const {
  for (const auto& b : blocks_)
    for (Elem x : b)
      if (!coarser.same_block(b.front(), x)) return false;
  return true;
}

Congruence Congruence::join(const Congruence& other) const {
  UnionFind uf(size());
  for (const auto* theta : {this, &other})
    for (const auto& b : theta->blocks_)
      for (Elem x : b) uf.unite(b.front(), x);
  return from_union_find(uf);
}

bool is_congruence(const FiniteLattice& l, const Congruence& theta) {
  const std::size_t n = l.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (!theta.same_block(x, y)) continue;
      for (Elem w = 0; w < n; ++w) {
        if (!theta.same_block(l.meet(x, w), l.meet(y, w)) ||
            !theta.same_block(l.join(x, w), l.join(y, w))) {
          return false;
        }
      }
    }
  }
  return true;
}

Congruence principal_congruence(const FiniteLattice& l, Elem a, Elem b) {
  const std::size_t n = l.size();
  if (a >= n || b >= n) throw Error(Errc::UnknownElement, "index out of range");
  UnionFind uf(n);
  // Each pair on the worklist witnesses one successful merge; the relation
  // generated by those pairs is the current partition, so closing each pair
  // under w ↦ x∧w, x∨w closes the whole partition.
  std::deque<std::pair<Elem, Elem>> work;
  if (uf.unite(a, b)) work.emplace_back(a, b);
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (Elem w = 0; w < n; ++w) {
      Elem m1 = l.meet(x, w), m2 = l.meet(y, w);
      if (uf.unite(m1, m2)) work.emplace_back(m1, m2);
      Elem j1 = l.join(x, w), j2 = l.join(y, w);
      if (uf.unite(j1, j2)) work.emplace_back(j1, j2);
    }
  }
  return Congruence::from_union_find(uf);
}

Congruence con_prime(const FiniteLattice& l, PrimeInterval p) {
  return principal_congruence(l, p.lo, p.hi);
}

bool ConjOrder::is_cover(std::size_t lower, std::size_t upper) const {
  return std::find(covers.begin(), covers.end(), std::make_pair(lower, upper)) !=
         covers.end();
}

std::size_t ConjOrder::index_of(PrimeInterval p) const {
  for (const auto& g : generators)
    if (g.prime == p) return g.congruence;
  throw Error(Errc::NotACoveringPair, "not a prime interval of this lattice");
}

ConjOrder conj_order(const FiniteLattice& l) {
  ConjOrder order;
  for (auto p : l.prime_intervals()) {
    Congruence theta = con_prime(l, p);
    auto it = std::find(order.congruences.begin(), order.congruences.end(), theta);
    std::size_t idx = static_cast<std::size_t>(it - order.congruences.begin());
    if (it == order.congruences.end()) order.congruences.push_back(std::move(theta));
    order.generators.push_back({p, idx});
  }
  const std::size_t k = order.congruences.size();
  order.leq_table.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      order.leq_table[i * k + j] = order.congruences[i].refines(order.congruences[j]);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !order.leq(i, j)) continue;
      bool direct = true;
      for (std::size_t m = 0; m < k && direct; ++m)
        if (m != i && m != j && order.leq(i, m) && order.leq(m, j)) direct = false;
      if (direct) order.covers.emplace_back(i, j);
    }
  }
  return order;
}

std::vector<Congruence> all_congruences(const FiniteLattice& l,
                                        std::size_t max_elements) {
  if (l.size() > max_elements) {
    throw Error(Errc::ConLTooLarge, std::to_string(l.size()) + " elements exceeds " +
                                        std::to_string(max_elements));
  }
  const ConjOrder order = conj_order(l);
  std::set<Congruence> found{Congruence::equality(l.size())};
  std::vector<Congruence> frontier{Congruence::equality(l.size())};
  // Breadth-first closure under joining one more generator.
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto& theta : frontier) {
      for (const auto& gen : order.congruences) {
        Congruence joined = theta.join(gen);
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Congruence> result(found.begin(), found.end());
  std::stable_sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    return a.block_count() > b.block_count();
  });
  return result;
}

std::string format_congruence(const FiniteLattice& l, const Congruence& theta) {
  std::string out;
  for (const auto& block : theta.blocks()) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ", ";
      out += l.id(block[i]);
    }
    out += '}';
  }
  return out;
}

}  // namespace latcon
