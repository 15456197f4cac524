#include "latcon/perspectivity.hpp"

#include <algorithm>

namespace latcon {

namespace {

constexpr std::pair<StepKind, std::string_view> kStepNames[] = {
    {StepKind::PerspUp, "persp_up"},   {StepKind::PerspDn, "persp_dn"},
    {StepKind::CPerspUp, "cpersp_up"}, {StepKind::CPerspDn, "cpersp_dn"},
    {StepKind::PPerspUp, "ppersp_up"}, {StepKind::PPerspDn, "ppersp_dn"},
    {StepKind::Swing, "swing"},
};

Validation fail(std::size_t index, std::string reason) {
  return {false, index, std::move(reason)};
}

Validation validate(const FiniteLattice& l, const PlanarDiagram* d,
                    const WitnessSequence& w, ChainMode mode) {
  if (w.items.empty()) return fail(0, "empty sequence");
  if (w.steps.size() + 1 != w.items.size()) return fail(0, "step count mismatch");

  const bool primes_only = mode != ChainMode::CProj;
  for (std::size_t i = 0; i < w.items.size(); ++i) {
    const Interval it = w.items[i];
    const std::size_t at = i == 0 ? 0 : i - 1;
    if (it.lo >= l.size() || it.hi >= l.size()) return fail(at, "unknown element");
    if (!l.leq(it.lo, it.hi)) return fail(at, "item is not an interval");
    if (primes_only && !l.is_prime(it)) return fail(at, "item is not prime");
    // Congruence chains may revisit an interval; prime sequences may not.
    for (std::size_t j = 0; primes_only && j < i; ++j)
      if (w.items[j] == it) return fail(at, "repeated item " + format_interval(l, it));
  }

  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const StepKind k = w.steps[i];
    bool allowed = false;
    switch (mode) {
      case ChainMode::CProj:
        allowed = k == StepKind::CPerspUp || k == StepKind::CPerspDn;
        break;
      case ChainMode::PProj:
        allowed = k == StepKind::PPerspUp || k == StepKind::PPerspDn;
        break;
      case ChainMode::SwingLemma:
        allowed = k == StepKind::PerspDn || k == StepKind::Swing ||
                  (i == 0 && k == StepKind::PerspUp);
        break;
    }
    if (!allowed) {
      return fail(i, std::string("step kind ") + std::string(to_string(k)) +
                         " not allowed here");
    }
    if (!step_holds(l, d, k, w.items[i], w.items[i + 1])) {
      return fail(i, std::string(to_string(k)) + " fails between " +
                         format_interval(l, w.items[i]) + " and " +
                         format_interval(l, w.items[i + 1]));
    }
  }

  if (mode == ChainMode::SwingLemma) {
    const std::size_t start = !w.steps.empty() && w.steps[0] == StepKind::PerspUp ? 1 : 0;
    for (std::size_t i = start; i + 1 < w.items.size(); ++i) {
      if (!l.leq(w.items[i + 1].hi, w.items[i].hi)) return fail(i, "tops increase");
    }
  }
  return {};
}

}  // namespace

std::string_view to_string(StepKind kind) noexcept {
  for (const auto& [k, name] : kStepNames)
    if (k == kind) return name;
  return "?";
}

std::optional<StepKind> parse_step_kind(std::string_view text) noexcept {
  for (const auto& [k, name] : kStepNames)
    if (name == text) return k;
  return std::nullopt;
}

bool persp_up(const FiniteLattice& l, Interval i, Interval j) {
  return i.lo == l.meet(i.hi, j.lo) && j.hi == l.join(i.hi, j.lo);
}

bool persp_dn(const FiniteLattice& l, Interval i, Interval j) {
  return persp_up(l, j, i);
}

bool persp(const FiniteLattice& l, Interval i, Interval j) {
  return persp_up(l, i, j) || persp_dn(l, i, j);
}

bool cpersp_up(const FiniteLattice& l, Interval i, Interval j) {
  return j.hi == l.join(i.hi, j.lo) && l.leq(i.lo, j.lo);
}

bool cpersp_dn(const FiniteLattice& l, Interval i, Interval j) {
  return j.lo == l.meet(i.lo, j.hi) && l.leq(j.hi, i.hi);
}

bool cpersp(const FiniteLattice& l, Interval i, Interval j) {
  return cpersp_up(l, i, j) || cpersp_dn(l, i, j);
}

bool ppersp_dn(const FiniteLattice& l, PrimeInterval p, PrimeInterval q) {
  return l.leq(q.hi, p.hi) && l.join(p.lo, q.hi) == p.hi &&
         l.leq(l.meet(p.lo, q.hi), q.lo);
}

bool ppersp_up(const FiniteLattice& l, PrimeInterval p, PrimeInterval q) {
  return l.leq(p.lo, q.lo) && l.meet(p.hi, q.lo) == p.lo &&
         l.leq(q.hi, l.join(p.hi, q.lo));
}

bool ppersp(const FiniteLattice& l, PrimeInterval p, PrimeInterval q) {
  return ppersp_dn(l, p, q) || ppersp_up(l, p, q);
}

PperspClass classify_ppersp(const FiniteLattice& l, PrimeInterval p, PrimeInterval q) {
  if (p == q) return {PperspKind::Equal, std::nullopt};
  const bool down = ppersp_dn(l, p, q);
  if (!down && !ppersp_up(l, p, q)) return {};
  if (persp(l, p, q)) return {PperspKind::Perspectivity, std::nullopt};
  const N5Witness w =
      down ? N5Witness{l.meet(p.lo, q.hi), p.lo, q.lo, q.hi, l.join(p.lo, q.lo)}
           : N5Witness{l.meet(p.hi, q.hi), p.hi, q.lo, q.hi, l.join(p.hi, q.lo)};
  if (!is_n5(l, w)) {
    throw Error(Errc::InternalContradiction,
                "prime-perspectivity " + format_interval(l, p) + " -> " +
                    format_interval(l, q) + " without an N5");
  }
  return {PperspKind::N5Established, w};
}

bool swing(const PlanarDiagram& d, PrimeInterval p, PrimeInterval q) {
  if (!d.sps()) throw Error(Errc::NotAnSpsDiagram, "swing needs an SPS diagram");
  if (p.hi != q.hi) return false;
  const auto& below = d.lower_covers(p.hi);
  if (below.size() < 3) return false;
  return q.lo != below.front() && q.lo != below.back();
}

bool step_holds(const FiniteLattice& l, const PlanarDiagram* d, StepKind kind,
                Interval from, Interval to) {
  const PrimeInterval p{from.lo, from.hi}, q{to.lo, to.hi};
  const bool primes = l.is_prime(from) && l.is_prime(to);
  switch (kind) {
    case StepKind::PerspUp: return persp_up(l, from, to);
    case StepKind::PerspDn: return persp_dn(l, from, to);
    case StepKind::CPerspUp: return cpersp_up(l, from, to);
    case StepKind::CPerspDn: return cpersp_dn(l, from, to);
    case StepKind::PPerspUp: return primes && ppersp_up(l, p, q);
    case StepKind::PPerspDn: return primes && ppersp_dn(l, p, q);
    case StepKind::Swing: return d != nullptr && primes && swing(*d, p, q);
  }
  return false;
}

Validation validate_sequence(const FiniteLattice& l, const WitnessSequence& w,
                             ChainMode mode) {
  return validate(l, nullptr, w, mode);
}

Validation validate_sequence(const PlanarDiagram& d, const WitnessSequence& w,
                             ChainMode mode) {
  return validate(d.lattice(), &d, w, mode);
}

bool tag_steps(const FiniteLattice& l, WitnessSequence& w,
               std::initializer_list<StepKind> candidates) {
  w.steps.clear();
  for (std::size_t i = 0; i + 1 < w.items.size(); ++i) {
    auto it = std::find_if(candidates.begin(), candidates.end(), [&](StepKind k) {
      return step_holds(l, nullptr, k, w.items[i], w.items[i + 1]);
    });
    if (it == candidates.end()) return false;
    w.steps.push_back(*it);
  }
  return true;
}

std::string format_sequence(const FiniteLattice& l, const WitnessSequence& w) {
  std::string out;
  for (std::size_t i = 0; i < w.items.size(); ++i) {
    if (i) out += " " + std::string(to_string(w.steps[i - 1])) + " ";
    out += format_interval(l, w.items[i]);
  }
  return out;
}

}  // namespace latcon
