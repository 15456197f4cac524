#include "latcon/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "latcon/catalog.hpp"
#include "latcon/congruence.hpp"
#include "latcon/dot.hpp"
#include "latcon/text_format.hpp"
#include "latcon/witness.hpp"

namespace latcon::cli {

namespace {

struct Input {
  std::string path;
  std::string fixture;
};

struct Loaded {
  std::string name;
  FiniteLattice lattice;
  std::optional<PlanarDiagram> diagram;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* file = cmd->add_option("--in", in.path, "Lattice file");
  auto* fix = cmd->add_option("--fixture", in.fixture, "Built-in fixture name");
  file->excludes(fix);
}

Loaded load(const Input& in) {
  if (!in.fixture.empty()) {
    Fixture f = fixture(in.fixture);
    return {f.name, std::move(f.lattice), std::move(f.diagram)};
  }
  if (in.path.empty()) throw Error(Errc::SyntaxError, "one of --in or --fixture is required");
  std::ifstream file(in.path);
  if (!file) throw Error(Errc::SyntaxError, "cannot open " + in.path);
  std::stringstream buf;
  buf << file.rdbuf();
  const LatticeDocument doc = parse_document(buf.str());
  return {doc.name, to_lattice(doc), to_diagram(doc)};
}

PrimeInterval prime_arg(const FiniteLattice& l, const std::vector<std::string>& ends) {
  return l.prime(ends.at(0), ends.at(1));
}

void print_sequence(std::ostream& out, const FiniteLattice& l, const WitnessSequence& w) {
  out << w.items.size() << " items: " << format_sequence(l, w) << "\n";
}

std::string format_n5(const FiniteLattice& l, const N5Witness& w) {
  return "{" + l.id(w.bottom) + ", " + l.id(w.side) + ", " + l.id(w.low) + ", " +
         l.id(w.high) + ", " + l.id(w.top) + "}";
}

const PlanarDiagram& require_sps(const Loaded& in) {
  if (!in.diagram) throw Error(Errc::NotAnSpsDiagram, in.name + " has no embed lines");
  if (!in.diagram->sps()) throw Error(Errc::NotAnSpsDiagram, in.name + " is not slim semimodular");
  return *in.diagram;
}

int cmd_validate(const Input& in, std::ostream& out) {
  const Loaded l = load(in);
  out << "VALID lattice " << l.name << ": " << l.lattice.size() << " elements, "
      << l.lattice.prime_intervals().size() << " prime intervals";
  if (l.diagram) out << ", planar diagram";
  out << "\n";
  return kOk;
}

int cmd_info(const Input& in, std::ostream& out) {
  const Loaded ld = load(in);
  const FiniteLattice& l = ld.lattice;
  out << "lattice " << ld.name << "\n";
  out << "elements " << l.size() << " (0 = " << l.id(l.bottom()) << ", 1 = " << l.id(l.top())
      << ")\n";
  out << "prime intervals " << l.prime_intervals().size() << ":";
  for (auto p : l.prime_intervals()) out << " " << format_interval(l, p);
  out << "\n";
  out << "length " << l.length({l.bottom(), l.top()}) << "\n";
  out << "semimodular " << (is_semimodular(l) ? "yes" : "no") << "\n";
  out << "slim " << (is_slim(l) ? "yes" : "no") << "\n";
  if (auto n5 = find_n5(l)) out << "N5 " << format_n5(l, *n5) << "\n";
  if (ld.diagram) {
    const PlanarDiagram& d = *ld.diagram;
    out << "sps " << (d.sps() ? "yes" : "no") << "\n";
    if (d.sps()) {
      const Boundaries b = boundaries(d);
      auto chain = [&](const std::vector<Elem>& c) {
        std::string s;
        for (Elem x : c) s += (s.empty() ? "" : " ") + l.id(x);
        return s;
      };
      out << "left boundary " << chain(b.left) << "\n";
      out << "right boundary " << chain(b.right) << "\n";
      out << "corners";
      for (const Corner& c : corners(d))
        out << " " << l.id(c.element) << (c.side == Side::Left ? "(left)" : "(right)");
      out << "\nrectangular " << (is_rectangular(d) ? "yes" : "no") << "\n";
    }
  }
  return kOk;
}

int cmd_con(const Input& in, const std::vector<std::string>& p, std::ostream& out) {
  const Loaded ld = load(in);
  const FiniteLattice& l = ld.lattice;
  const Congruence theta = principal_congruence(l, l.elem(p.at(0)), l.elem(p.at(1)));
  out << format_congruence(l, theta) << "\n";
  return kOk;
}

int cmd_conj(const Input& in, std::ostream& out) {
  const Loaded ld = load(in);
  const FiniteLattice& l = ld.lattice;
  const ConjOrder order = conj_order(l);
  for (std::size_t i = 0; i < order.congruences.size(); ++i) {
    out << "J" << i << " " << format_congruence(l, order.congruences[i]) << " <- ";
    bool first = true;
    for (const auto& g : order.generators) {
      if (g.congruence != i) continue;
      out << (first ? "" : " ") << format_interval(l, g.prime);
      first = false;
    }
    out << "\n";
  }
  for (auto [lo, hi] : order.covers) out << "J" << lo << " < J" << hi << "\n";
  return kOk;
}

int cmd_witness(const std::string& kind, const Input& in, const std::vector<std::string>& p,
                const std::vector<std::string>& q, std::ostream& out) {
  const Loaded ld = load(in);
  const FiniteLattice& l = ld.lattice;
  const PrimeInterval pp = prime_arg(l, p), qq = prime_arg(l, q);

  if (kind == "n5") {
    try {
      const N5Extraction x = n5_witness(l, pp, qq);
      out << "N5 " << format_n5(l, x.sublattice) << "\n";
      out << "p0 " << format_interval(l, x.p0) << "\n";
      out << "q0 " << format_interval(l, x.q0) << "\n";
      const bool ok = is_n5(l, x.sublattice) && con_prime(l, x.p0) == con_prime(l, pp) &&
                      con_prime(l, x.q0) == con_prime(l, qq);
      out << (ok ? "VALID" : "INVALID") << "\n";
      return ok ? kOk : kNegative;
    } catch (const Error& e) {
      if (e.code() != Errc::NotACoveringPair) throw;
      out << "NOT A COVERING PAIR\n";
      return kNegative;
    }
  }

  std::optional<WitnessSequence> w;
  Validation v;
  if (kind == "pproj") {
    w = pproj_witness(l, pp, qq);
    if (w) v = validate_sequence(l, *w, ChainMode::PProj);
  } else if (kind == "cproj") {
    w = cproj_witness(l, pp, qq);
    if (w) v = validate_sequence(l, *w, ChainMode::CProj);
  } else {
    const PlanarDiagram& d = require_sps(ld);
    w = swing_witness(d, pp, qq);
    if (w) v = validate_sequence(d, *w, ChainMode::SwingLemma);
  }
  if (!w) {
    out << "NOT COLLAPSED\n";
    return kNegative;
  }
  print_sequence(out, l, *w);
  if (!v) {
    out << "INVALID at step " << v.failing_index.value_or(0) << ": " << v.reason << "\n";
    return kNegative;
  }
  out << "VALID\n";
  return kOk;
}

int cmd_check_lemmas(std::size_t max_n, std::ostream& out) {
  std::size_t total_lattices = 0, total_bad = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto batch = enumerate_lattices(n);
    std::size_t bad = 0, sps = 0;
    for (const FiniteLattice& l : batch) {
      std::optional<PlanarDiagram> d;
      if (is_slim(l) && is_semimodular(l)) d = find_embedding(l);
      if (d) ++sps;
      bad += check_equivalences(l, d ? &*d : nullptr).disagreements.size();
    }
    out << "n=" << n << " (" << sps << " SPS): " << bad << " disagreements over "
        << batch.size() << " lattices\n";
    total_lattices += batch.size();
    total_bad += bad;
  }
  out << "total: " << total_bad << " disagreements over " << total_lattices << " lattices\n";
  return total_bad == 0 ? kOk : kNegative;
}

int cmd_check_corners(const Input& in, std::ostream& out) {
  const Loaded ld = load(in);
  const PlanarDiagram& d = require_sps(ld);
  const FiniteLattice& l = d.lattice();
  CornerReport report;
  try {
    report = check_corner_preservation(d);
  } catch (const Error& e) {
    if (e.code() != Errc::NoCorners) throw;
    out << "NO CORNERS\n";
    return kNegative;
  }
  auto mark = [](bool ok) { return ok ? "ok" : "FAILED"; };
  for (const auto& c : report.checks) {
    out << "corner " << l.id(c.corner.element)
        << (c.corner.side == Side::Left ? " (left)" : " (right)")
        << ": collapse-restriction " << mark(c.collapse_restricts) << ", swing-equivalence "
        << mark(c.swing_equivalence) << ", removed-primes " << mark(c.removed_primes) << "\n";
  }
  out << (report.passed() ? "PASSED" : "FAILED") << "\n";
  return report.passed() ? kOk : kNegative;
}

int cmd_enumerate(std::size_t n, bool sps_only, std::ostream& out) {
  const auto batch = enumerate_lattices(n);
  std::size_t emitted = 0;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const FiniteLattice& l = batch[i];
    const std::string name = "L" + std::to_string(n) + "." + std::to_string(i);
    if (!sps_only) {
      out << format_document(to_document(name, l));
      ++emitted;
      continue;
    }
    if (!is_slim(l) || !is_semimodular(l)) continue;
    if (auto d = find_embedding(l)) {
      out << format_document(to_document(name, l, &*d));
      ++emitted;
    }
  }
  out << "# " << emitted << " lattices\n";
  return kOk;
}

int cmd_export_dot(const Input& in, const std::string& kind, const std::vector<std::string>& p,
                   const std::vector<std::string>& q, std::ostream& out) {
  const Loaded ld = load(in);
  const FiniteLattice& l = ld.lattice;
  std::vector<PrimeInterval> bold;
  if (!kind.empty()) {
    if (p.size() != 2 || q.size() != 2) {
      throw Error(Errc::SyntaxError, "--highlight-witness needs --p and --q");
    }
    const PrimeInterval pp = prime_arg(l, p), qq = prime_arg(l, q);
    std::optional<WitnessSequence> w;
    if (kind == "pproj") {
      w = pproj_witness(l, pp, qq);
    } else {
      w = swing_witness(require_sps(ld), pp, qq);
    }
    if (w)
      for (Interval i : w->items) bold.push_back({i.lo, i.hi});
  }
  out << to_dot(ld.name, l, ld.diagram ? &*ld.diagram : nullptr, bold);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite lattice congruences, prime-perspectivities and swings", "latcon"};
  app.require_subcommand(1);

  Input in;
  std::vector<std::string> p, q;
  std::string kind, highlight;
  std::size_t max_n = 6, n = 0;
  bool sps_only = false;
  std::string fixture_name;

  auto* validate = app.add_subcommand("validate", "Check that a file describes a lattice");
  add_input(validate, in);
  auto* info = app.add_subcommand("info", "Sizes, prime intervals and SPS properties");
  add_input(info, in);
  auto* con = app.add_subcommand("con", "Blocks of the congruence generated by a pair");
  add_input(con, in);
  con->add_option("--p", p, "Pair to collapse")->expected(2)->required();
  auto* conj = app.add_subcommand("conj", "Order of join-irreducible congruences");
  add_input(conj, in);

  auto* witness = app.add_subcommand("witness", "Search and validate a witness sequence");
  witness->add_option("kind", kind, "pproj, cproj, swing or n5")
      ->required()
      ->check(CLI::IsMember({"pproj", "cproj", "swing", "n5"}));
  add_input(witness, in);
  witness->add_option("--p", p, "Source prime interval")->expected(2)->required();
  witness->add_option("--q", q, "Target prime interval")->expected(2)->required();

  auto* check = app.add_subcommand("check", "Exhaustive harnesses");
  check->require_subcommand(1);
  auto* lemmas = check->add_subcommand("lemmas", "Collapse vs witness search on all small lattices");
  lemmas->add_option("--max-n", max_n, "Largest lattice size")->check(CLI::Range(1, 8));
  auto* corner_cmd = check->add_subcommand("corners", "Corner removal preserves collapses and swings");
  add_input(corner_cmd, in);

  auto* enumerate = app.add_subcommand("enumerate", "List lattices with n elements");
  enumerate->add_option("--n", n, "Number of elements")->required()->check(CLI::Range(1, 8));
  enumerate->add_flag("--sps", sps_only, "Only slim semimodular lattices, with an embedding");

  auto* dot = app.add_subcommand("export-dot", "Graphviz output");
  add_input(dot, in);
  dot->add_option("--highlight-witness", highlight, "Bold the covers of a pproj or swing witness")
      ->check(CLI::IsMember({"pproj", "swing"}));
  dot->add_option("--p", p)->expected(2);
  dot->add_option("--q", q)->expected(2);

  auto* exp = app.add_subcommand("export-fixture", "Print a built-in fixture in the text format");
  exp->add_option("name", fixture_name)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(in, out);
    if (*info) return cmd_info(in, out);
    if (*con) return cmd_con(in, p, out);
    if (*conj) return cmd_conj(in, out);
    if (*witness) return cmd_witness(kind, in, p, q, out);
    if (*lemmas) return cmd_check_lemmas(max_n, out);
    if (*corner_cmd) return cmd_check_corners(in, out);
    if (*enumerate) return cmd_enumerate(n, sps_only, out);
    if (*dot) return cmd_export_dot(in, highlight, p, q, out);
    if (*exp) {
      const Fixture f = fixture(fixture_name);
      out << format_document(
          to_document(f.name, f.lattice, f.diagram ? &*f.diagram : nullptr));
      return kOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace latcon::cli
