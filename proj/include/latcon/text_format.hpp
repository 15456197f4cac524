#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latcon/lattice.hpp"
#include "latcon/planar.hpp"

namespace latcon {

// Line-oriented lattice files:
//
//   # comment
//   lattice S7
//   elements 0 a b e1 e2 e3 1
//   cover 0 a
//   embed a 1 -1        (optional; id rank xpos)
//   end
//
// Only syntax is checked here; semantic errors surface when the document is
// turned into a lattice or diagram.
struct EmbedLine {
  std::string id;
  long rank = 0;
  long xpos = 0;

  bool operator==(const EmbedLine&) const = default;
};

struct LatticeDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<FiniteLattice::Cover> covers;
  std::vector<EmbedLine> embed;

  bool operator==(const LatticeDocument&) const = default;
};

std::vector<LatticeDocument> parse_documents(std::string_view text);
// Exactly one document. Throws SyntaxError.
LatticeDocument parse_document(std::string_view text);

// Canonical text: covers in input order, embed lines in element order.
std::string format_document(const LatticeDocument& doc);

FiniteLattice to_lattice(const LatticeDocument& doc);
// Empty when the document has no embed lines; throws if only some elements
// are embedded.
std::optional<PlanarDiagram> to_diagram(const LatticeDocument& doc);

LatticeDocument to_document(std::string name, const FiniteLattice& lattice,
                            const PlanarDiagram* diagram = nullptr);

}  // namespace latcon
