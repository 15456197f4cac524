#include "latcon/witness.hpp"

#include <algorithm>
#include <set>

namespace latcon {

namespace {

// Breadth-first search over `nodes`; `step(from, to)` names the relation used
// for an edge, or nullopt when there is none. Nodes in `blocked` are never
// entered.
template <typename StepFn>
std::optional<WitnessSequence> bfs(const std::vector<Interval>& nodes, Interval start,
                                   Interval goal, StepFn step,
                                   const std::vector<Interval>& blocked = {}) {
  auto index_of = [&](Interval i) -> std::optional<std::size_t> {
    auto it = std::find(nodes.begin(), nodes.end(), i);
    if (it == nodes.end()) return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
  };
  const auto s = index_of(start);
  const auto g = index_of(goal);
  if (!s || !g) return std::nullopt;

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(nodes.size(), kNone);
  std::vector<StepKind> via(nodes.size(), StepKind::PerspUp);
  std::vector<bool> seen(nodes.size(), false);
  for (Interval b : blocked)
    if (auto k = index_of(b)) seen[*k] = true;
  seen[*s] = true;

  std::vector<std::size_t> queue{*s};
  for (std::size_t head = 0; head < queue.size() && !seen[*g]; ++head) {
    const std::size_t cur = queue[head];
    for (std::size_t nxt = 0; nxt < nodes.size(); ++nxt) {
      if (seen[nxt]) continue;
      if (auto kind = step(nodes[cur], nodes[nxt])) {
        seen[nxt] = true;
        parent[nxt] = cur;
        via[nxt] = *kind;
        queue.push_back(nxt);
      }
    }
  }
  if (!seen[*g] || (parent[*g] == kNone && *g != *s)) return std::nullopt;

  WitnessSequence w;
  for (std::size_t at = *g; at != kNone; at = parent[at]) {
    w.items.push_back(nodes[at]);
    if (parent[at] != kNone) w.steps.push_back(via[at]);
  }
  std::reverse(w.items.begin(), w.items.end());
  std::reverse(w.steps.begin(), w.steps.end());
  return w;
}

std::vector<Interval> nontrivial_intervals(const FiniteLattice& l) {
  std::vector<Interval> out;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (l.lt(a, b)) out.push_back({a, b});
  return out;
}

std::vector<Interval> prime_nodes(const FiniteLattice& l) {
  return {l.prime_intervals().begin(), l.prime_intervals().end()};
}

Interval flip(Interval i) { return {i.hi, i.lo}; }

[[noreturn]] void contradiction(const std::string& what) {
  throw Error(Errc::InternalContradiction, what);
}

// One congruence-perspectivity step I cpersp_up J with a prime b inside J.
// Returns prime intervals a, ..., b with a inside I, consecutive ones
// prime-perspective, one new item per descent into a shorter interval.
std::vector<Interval> lift_up_step(const FiniteLattice& l, Interval I, Interval J,
                                   PrimeInterval b) {
  if (!cpersp_up(l, I, J) || !l.is_prime(b) || !l.contains(J, b)) {
    contradiction("lift_up_step called outside its precondition");
  }
  std::vector<Interval> tail;  // b_k, ..., b in order of the final chain
  std::vector<Interval> head;
  while (true) {
    J = {b.lo, J.hi};                // 0_b = 0_J
    I = {l.meet(I.hi, J.lo), I.hi};  // 0_I = 1_I ∧ 0_b
    if (l.contains(I, J)) {
      head = {b};
      break;
    }
    if (l.is_prime(I)) {
      head = {I, b};
      break;
    }
    std::optional<Elem> u;
    for (Elem x = 0; x < l.size() && !u; ++x)
      if (l.covers(I.lo, x) && l.lt(x, I.hi)) u = x;
    if (!u) contradiction("non-prime interval without an atom below its top");

    if (l.leq(b.hi, l.join(*u, b.lo))) {
      head = {Interval{I.lo, *u}, b};
      break;
    }
    // u ∨ 0_b is incomparable to 1_b: climb to b1 with b1 ↘ b.
    const Elem floor = l.join(*u, b.lo);
    const Elem top = l.join(*u, b.hi);
    std::optional<Elem> lo1;
    for (Elem x : l.lower_covers(top))
      if (l.leq(floor, x)) {
        lo1 = x;
        break;
      }
    if (!lo1) contradiction("no lower cover of u v 1_b above u v 0_b");
    const PrimeInterval b1{*lo1, top};
    if (!persp_dn(l, b1, b)) contradiction("climbed interval is not perspective down");
    tail.insert(tail.begin(), b);
    I = {*u, I.hi};
    J = {b1.lo, J.hi};
    b = b1;
  }
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

std::vector<Interval> drop_cycles(const std::vector<Interval>& items) {
  std::vector<Interval> out;
  for (Interval i : items) {
    auto it = std::find(out.begin(), out.end(), i);
    if (it != out.end()) {
      out.erase(it + 1, out.end());
    } else {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace

std::optional<WitnessSequence> cproj_witness(const FiniteLattice& l, PrimeInterval p,
                                             PrimeInterval q) {
  if (p == q) return WitnessSequence{{p}, {}};
  return bfs(nontrivial_intervals(l), p, q,
             [&](Interval from, Interval to) -> std::optional<StepKind> {
               if (cpersp_up(l, from, to)) return StepKind::CPerspUp;
               if (cpersp_dn(l, from, to)) return StepKind::CPerspDn;
               return std::nullopt;
             });
}

std::optional<WitnessSequence> pproj_witness(const FiniteLattice& l, PrimeInterval p,
                                             PrimeInterval q) {
  if (p == q) return WitnessSequence{{p}, {}};
  return bfs(prime_nodes(l), p, q,
             [&](Interval from, Interval to) -> std::optional<StepKind> {
               const PrimeInterval a{from.lo, from.hi}, b{to.lo, to.hi};
               if (ppersp_up(l, a, b)) return StepKind::PPerspUp;
               if (ppersp_dn(l, a, b)) return StepKind::PPerspDn;
               return std::nullopt;
             });
}

WitnessSequence cproj_to_pproj(const FiniteLattice& l, const WitnessSequence& chain,
                               PrimeInterval b) {
  if (auto v = validate_sequence(l, chain, ChainMode::CProj); !v) {
    throw Error(Errc::InvalidChain, v.reason);
  }
  if (b.lo >= l.size() || b.hi >= l.size() || !l.is_prime(b) ||
      !l.contains(chain.items.back(), b)) {
    throw Error(Errc::InvalidChain, "target is not a prime inside the last interval");
  }

  std::optional<FiniteLattice> dual;
  std::vector<Interval> seq{b};
  PrimeInterval target = b;
  for (std::size_t k = chain.steps.size(); k-- > 0;) {
    const Interval I = chain.items[k], J = chain.items[k + 1];
    std::vector<Interval> segment;
    if (cpersp_up(l, I, J)) {
      segment = lift_up_step(l, I, J, target);
    } else {
      // A downward step is an upward step of the dual lattice.
      if (!dual) dual = l.dual();
      segment = lift_up_step(*dual, flip(I), flip(J), {target.hi, target.lo});
      for (auto& s : segment) s = flip(s);
    }
    segment.insert(segment.end(), seq.begin() + 1, seq.end());
    seq = std::move(segment);
    target = {seq.front().lo, seq.front().hi};
  }

  WitnessSequence out;
  out.items = drop_cycles(seq);
  if (!tag_steps(l, out, {StepKind::PPerspUp, StepKind::PPerspDn})) {
    contradiction("translated chain has a step that is not a prime-perspectivity");
  }
  return out;
}

N5Extraction n5_witness(const FiniteLattice& l, PrimeInterval p, PrimeInterval q) {
  const ConjOrder order = conj_order(l);
  const std::size_t ip = order.index_of(p), iq = order.index_of(q);
  if (!order.is_cover(iq, ip)) {
    throw Error(Errc::NotACoveringPair, "con" + format_interval(l, p) +
                                            " does not cover con" + format_interval(l, q));
  }
  const auto chain = pproj_witness(l, p, q);
  if (!chain) contradiction("covering pair without a prime-projectivity chain");

  std::vector<std::size_t> cons;
  for (Interval r : chain->items) cons.push_back(order.index_of({r.lo, r.hi}));
  std::optional<std::size_t> k;
  for (std::size_t i = 0; i + 1 < cons.size(); ++i) {
    if (cons[i] != ip && cons[i] != iq) contradiction("chain leaves the covering pair");
    if (cons[i] == ip && cons[i + 1] == iq) {
      if (k) contradiction("congruence changes twice along the chain");
      k = i;
    }
  }
  if (!k) contradiction("congruence never changes along the chain");

  const Interval r0 = chain->items[*k], r1 = chain->items[*k + 1];
  const PrimeInterval p0{r0.lo, r0.hi}, q0{r1.lo, r1.hi};
  const PperspClass cls = classify_ppersp(l, p0, q0);
  if (cls.kind != PperspKind::N5Established) {
    contradiction("critical step " + format_interval(l, p0) + " -> " +
                  format_interval(l, q0) + " is not N5-established");
  }
  return {*cls.witness, p0, q0};
}

std::optional<WitnessSequence> swing_witness(const PlanarDiagram& d, PrimeInterval p,
                                             PrimeInterval q) {
  if (!d.sps()) throw Error(Errc::NotAnSpsDiagram, "swing_witness needs an SPS diagram");
  const FiniteLattice& l = d.lattice();
  if (p == q) return WitnessSequence{{p}, {}};
  const auto nodes = prime_nodes(l);
  auto step = [&](Interval from, Interval to) -> std::optional<StepKind> {
    if (persp_dn(l, from, to)) return StepKind::PerspDn;
    if (swing(d, {from.lo, from.hi}, {to.lo, to.hi})) return StepKind::Swing;
    return std::nullopt;
  };
  for (Interval r : nodes) {
    if (!persp_up(l, p, r)) continue;
    if (r == Interval(p)) {
      if (auto w = bfs(nodes, r, q, step)) return w;
      continue;
    }
    if (auto w = bfs(nodes, r, q, step, {p})) {
      w->items.insert(w->items.begin(), p);
      w->steps.insert(w->steps.begin(), StepKind::PerspUp);
      return w;
    }
  }
  return std::nullopt;
}

EquivalenceReport check_equivalences(const FiniteLattice& l, const PlanarDiagram* d) {
  EquivalenceReport report;
  report.swing_checked = d != nullptr && d->sps();
  const auto& primes = l.prime_intervals();
  std::vector<Congruence> cons;
  for (auto p : primes) cons.push_back(con_prime(l, p));

  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (i == j) continue;
      const PrimeInterval p = primes[i], q = primes[j];
      ++report.pairs;
      Disagreement row;
      row.p = p;
      row.q = q;
      row.oracle = collapses(cons[i], q);
      const auto c = cproj_witness(l, p, q);
      const auto pp = pproj_witness(l, p, q);
      row.cproj = c.has_value();
      row.pproj = pp.has_value();
      bool bad = row.cproj != row.oracle || row.pproj != row.oracle;
      if (c && !validate_sequence(l, *c, ChainMode::CProj)) {
        bad = true;
        row.note += "cproj witness invalid; ";
      }
      if (pp && !validate_sequence(l, *pp, ChainMode::PProj)) {
        bad = true;
        row.note += "pproj witness invalid; ";
      }
      if (report.swing_checked) {
        const auto s = swing_witness(*d, p, q);
        row.swing = s.has_value();
        bad = bad || *row.swing != row.oracle;
        if (s && !validate_sequence(*d, *s, ChainMode::SwingLemma)) {
          bad = true;
          row.note += "swing witness invalid; ";
        }
      }
      if (bad) report.disagreements.push_back(std::move(row));
    }
  }
  return report;
}

CornerReport check_corner_preservation(const PlanarDiagram& d) {
  if (!d.sps()) throw Error(Errc::NotAnSpsDiagram, "corner check needs an SPS diagram");
  const auto found = corners(d);
  if (found.empty()) throw Error(Errc::NoCorners, "diagram has no corners");
  const FiniteLattice& l = d.lattice();

  CornerReport report;
  for (const Corner& c : found) {
    const PlanarDiagram reduced = remove_corner(d, c.element);
    const FiniteLattice& lr = reduced.lattice();
    auto to_full = [&](PrimeInterval p) {
      return PrimeInterval{l.elem(lr.id(p.lo)), l.elem(lr.id(p.hi))};
    };

    CornerCheck check{c};
    check.collapse_restricts = true;
    for (auto p : lr.prime_intervals()) {
      const Congruence small = con_prime(lr, p);
      const Congruence big = con_prime(l, to_full(p));
      for (auto q : lr.prime_intervals())
        if (collapses(small, q) != collapses(big, to_full(q)))
          check.collapse_restricts = false;
    }

    const EquivalenceReport eq = check_equivalences(lr, &reduced);
    check.swing_equivalence = eq.swing_checked && eq.disagreements.empty();

    std::set<std::pair<std::string, std::string>> lost;
    for (auto p : l.prime_intervals()) lost.emplace(l.id(p.lo), l.id(p.hi));
    bool subset = true;
    for (auto p : lr.prime_intervals())
      subset = lost.erase({lr.id(p.lo), lr.id(p.hi)}) == 1 && subset;
    const std::set<std::pair<std::string, std::string>> expected{
        {l.id(c.lower), l.id(c.element)}, {l.id(c.element), l.id(c.upper)}};
    check.removed_primes = subset && lost == expected;

    report.checks.push_back(check);
  }
  return report;
}

}  // namespace latcon
