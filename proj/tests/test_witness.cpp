#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "latcon/catalog.hpp"
#include "latcon/congruence.hpp"
#include "latcon/error.hpp"
#include "latcon/witness.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {

bool collapses_by_oracle(const FiniteLattice& l, PrimeInterval p, PrimeInterval q) {
  const auto labels = oracle::naive_closure(l, p.lo, p.hi);
  return labels[q.lo] == labels[q.hi];
}

bool pairwise_distinct(const WitnessSequence& w) {
  return std::set<Interval>(w.items.begin(), w.items.end()).size() == w.items.size();
}

}  // namespace

TEST_CASE("pproj witness in N5") {
  const auto l = fixture("N5").lattice;
  const auto w = pproj_witness(l, l.prime("o", "a"), l.prime("a", "b"));
  REQUIRE(w);
  CHECK(format_sequence(l, *w) == "[o, a] ppersp_up [c, i] ppersp_dn [a, b]");
  CHECK(validate_sequence(l, *w, ChainMode::PProj));
  CHECK_FALSE(pproj_witness(l, l.prime("a", "b"), l.prime("o", "a")));

  const auto self = pproj_witness(l, l.prime("o", "a"), l.prime("o", "a"));
  REQUIRE(self);
  CHECK(self->items.size() == 1);
}

TEST_CASE("cproj witness in N5") {
  const auto l = fixture("N5").lattice;
  const auto w = cproj_witness(l, l.prime("o", "a"), l.prime("a", "b"));
  REQUIRE(w);
  CHECK(validate_sequence(l, *w, ChainMode::CProj));
  CHECK(w->items.front() == Interval(l.prime("o", "a")));
  CHECK(l.contains(w->items.back(), l.prime("a", "b")));
  CHECK_FALSE(cproj_witness(l, l.prime("a", "b"), l.prime("c", "i")));
}

TEST_CASE("witness presence follows the closure oracle on all lattices up to 6") {
  for (const auto& l : lattices_up_to(6))
    for (auto p : l.prime_intervals())
      for (auto q : l.prime_intervals()) {
        if (p == q) continue;
        const bool want = collapses_by_oracle(l, p, q);
        const auto c = cproj_witness(l, p, q);
        const auto pp = pproj_witness(l, p, q);
        CHECK(c.has_value() == want);
        CHECK(pp.has_value() == want);
        if (c) CHECK(validate_sequence(l, *c, ChainMode::CProj));
        if (pp) {
          CHECK(validate_sequence(l, *pp, ChainMode::PProj));
          CHECK(pairwise_distinct(*pp));
        }
      }
}

TEST_CASE("cproj to pproj translation") {
  const auto l = fixture("N5").lattice;
  // [o, a] → [c, i] → [o, b] contains [a, b].
  WitnessSequence chain{{l.interval("o", "a"), l.interval("c", "i"), l.interval("o", "b")},
                        {StepKind::CPerspUp, StepKind::CPerspDn}};
  const auto out = cproj_to_pproj(l, chain, l.prime("a", "b"));
  CHECK(validate_sequence(l, out, ChainMode::PProj));
  CHECK(out.items.back() == Interval(l.prime("a", "b")));
  CHECK(l.contains(chain.items.front(), out.items.front()));
  CHECK(l.is_prime(out.items.front()));
  const std::size_t bound = 1 + l.length(chain.items[0]) + l.length(chain.items[1]) +
                            l.length(chain.items[2]);
  CHECK(out.items.size() <= bound);
}

TEST_CASE("cproj to pproj on every single-step chain up to 6 elements") {
  for (const auto& l : lattices_up_to(6)) {
    for (Elem a = 0; a < l.size(); ++a)
      for (Elem b = 0; b < l.size(); ++b)
        for (Elem c = 0; c < l.size(); ++c)
          for (Elem d = 0; d < l.size(); ++d) {
            if (!l.lt(a, b) || !l.lt(c, d)) continue;
            for (StepKind k : {StepKind::CPerspUp, StepKind::CPerspDn}) {
              if (!step_holds(l, nullptr, k, {a, b}, {c, d})) continue;
              WitnessSequence chain{{{a, b}, {c, d}}, {k}};
              for (auto q : l.prime_intervals()) {
                if (!l.contains({c, d}, q)) continue;
                const auto out = cproj_to_pproj(l, chain, q);
                CHECK(validate_sequence(l, out, ChainMode::PProj));
                CHECK(out.items.back() == Interval(q));
                CHECK(l.contains({a, b}, out.items.front()));
                CHECK(out.items.size() <= 1 + l.length({a, b}) + l.length({c, d}));
              }
            }
          }
  }
}

TEST_CASE("cproj to pproj rejects broken chains") {
  const auto l = fixture("N5").lattice;
  WitnessSequence chain{{l.interval("a", "b"), l.interval("c", "i")}, {StepKind::CPerspUp}};
  try {
    cproj_to_pproj(l, chain, l.prime("c", "i"));
    FAIL("expected InvalidChain");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidChain);
  }
  WitnessSequence ok{{l.interval("o", "a"), l.interval("c", "i")}, {StepKind::CPerspUp}};
  try {
    cproj_to_pproj(l, ok, l.prime("a", "b"));  // [a, b] is not inside [c, i]
    FAIL("expected InvalidChain");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidChain);
  }
}

TEST_CASE("N5 extraction") {
  const auto l = fixture("N5").lattice;
  const auto x = n5_witness(l, l.prime("o", "a"), l.prime("a", "b"));
  CHECK(oracle::n5_equations(l, x.sublattice));
  CHECK(x.sublattice ==
        N5Witness{l.elem("o"), l.elem("c"), l.elem("a"), l.elem("b"), l.elem("i")});
  CHECK(x.p0 == l.prime("c", "i"));
  CHECK(x.q0 == l.prime("a", "b"));
  try {
    n5_witness(l, l.prime("o", "a"), l.prime("o", "c"));
    FAIL("expected NotACoveringPair");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotACoveringPair);
  }
}

TEST_CASE("swing witness in S7") {
  const auto d = *fixture("S7").diagram;
  const auto& l = d.lattice();
  const auto w = swing_witness(d, l.prime("0", "a"), l.prime("b", "e3"));
  REQUIRE(w);
  CHECK(format_sequence(l, *w) == "[0, a] persp_up [e3, 1] swing [e2, 1] persp_dn [b, e3]");
  CHECK(validate_sequence(d, *w, ChainMode::SwingLemma));
  CHECK_FALSE(swing_witness(d, l.prime("e1", "1"), l.prime("0", "a")));
}

TEST_CASE("swing witness presence follows the oracle on fixtures") {
  for (const char* name : {"S7", "FAN5", "GRID3x3", "C2x2"}) {
    const auto f = fixture(name);
    const auto& d = *f.diagram;
    const auto& l = d.lattice();
    for (auto p : l.prime_intervals())
      for (auto q : l.prime_intervals()) {
        if (p == q) continue;
        const auto w = swing_witness(d, p, q);
        CHECK(w.has_value() == collapses_by_oracle(l, p, q));
        if (w) {
          CHECK(validate_sequence(d, *w, ChainMode::SwingLemma));
          CHECK(pairwise_distinct(*w));
        }
      }
  }
}

TEST_CASE("check_equivalences reports nothing on fixtures") {
  for (const auto& name : fixture_names()) {
    const auto f = fixture(name);
    const auto report = check_equivalences(f.lattice, f.diagram ? &*f.diagram : nullptr);
    CHECK(report.disagreements.empty());
    const std::size_t k = f.lattice.prime_intervals().size();
    CHECK(report.pairs == k * (k - 1));
    CHECK(report.swing_checked == (f.diagram && f.diagram->sps()));
  }
}

TEST_CASE("corner preservation") {
  const auto d = *fixture("GRID3x3").diagram;
  const auto report = check_corner_preservation(d);
  CHECK(report.checks.size() == 2);
  CHECK(report.passed());
  try {
    check_corner_preservation(*fixture("M3").diagram);
    FAIL("expected NotAnSpsDiagram");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAnSpsDiagram);
  }
  try {
    check_corner_preservation(*fixture("FAN5").diagram);
    FAIL("expected NoCorners");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoCorners);
  }
}
