#include "latcon/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace latcon {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
  throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

long parse_long(const std::string& s, std::size_t line) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) syntax(line, "expected integer, got '" + s + "'");
  return v;
}

}  // namespace

std::vector<LatticeDocument> parse_documents(std::string_view text) {
  std::vector<LatticeDocument> docs;
  std::optional<LatticeDocument> open;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "lattice") {
      if (open) syntax(line_no, "'lattice' before 'end' of previous document");
      if (tok.size() != 2) syntax(line_no, "expected 'lattice <name>'");
      open.emplace();
      open->name = tok[1];
      continue;
    }
    if (!open) syntax(line_no, "'" + kw + "' outside a lattice block");
    if (kw == "elements") {
      open->elements.insert(open->elements.end(), tok.begin() + 1, tok.end());
    } else if (kw == "cover") {
      if (tok.size() != 3) syntax(line_no, "expected 'cover <lo> <hi>'");
      open->covers.emplace_back(tok[1], tok[2]);
    } else if (kw == "embed") {
      if (tok.size() != 4) syntax(line_no, "expected 'embed <id> <rank> <xpos>'");
      open->embed.push_back({tok[1], parse_long(tok[2], line_no), parse_long(tok[3], line_no)});
    } else if (kw == "end") {
      if (tok.size() != 1) syntax(line_no, "unexpected tokens after 'end'");
      docs.push_back(std::move(*open));
      open.reset();
    } else {
      syntax(line_no, "unknown keyword '" + kw + "'");
    }
  }
  if (open) syntax(line_no, "missing 'end'");
  return docs;
}

LatticeDocument parse_document(std::string_view text) {
  auto docs = parse_documents(text);
  if (docs.size() != 1) {
    throw Error(Errc::SyntaxError,
                "expected one lattice, found " + std::to_string(docs.size()));
  }
  return std::move(docs.front());
}

std::string format_document(const LatticeDocument& doc) {
  std::string out = "lattice " + doc.name + "\nelements";
  for (const auto& e : doc.elements) out += " " + e;
  out += "\n";
  for (const auto& [lo, hi] : doc.covers) out += "cover " + lo + " " + hi + "\n";
  auto embed = doc.embed;
  auto pos = [&](const EmbedLine& e) {
    return std::find(doc.elements.begin(), doc.elements.end(), e.id) - doc.elements.begin();
  };
  std::stable_sort(embed.begin(), embed.end(),
                   [&](const EmbedLine& a, const EmbedLine& b) { return pos(a) < pos(b); });
  for (const auto& e : embed) {
    out += "embed " + e.id + " " + std::to_string(e.rank) + " " + std::to_string(e.xpos) + "\n";
  }
  out += "end\n";
  return out;
}

FiniteLattice to_lattice(const LatticeDocument& doc) {
  return FiniteLattice::from_covers(doc.elements, doc.covers);
}

std::optional<PlanarDiagram> to_diagram(const LatticeDocument& doc) {
  if (doc.embed.empty()) return std::nullopt;
  FiniteLattice l = to_lattice(doc);
  std::vector<long> rank(l.size(), 0), xpos(l.size(), 0);
  std::vector<bool> set(l.size(), false);
  for (const auto& e : doc.embed) {
    const Elem x = l.elem(e.id);
    if (set[x]) throw Error(Errc::DuplicateXpos, "element embedded twice: " + e.id);
    set[x] = true;
    rank[x] = e.rank;
    xpos[x] = e.xpos;
  }
  for (Elem x = 0; x < l.size(); ++x)
    if (!set[x]) throw Error(Errc::NotGraded, "no embed line for " + l.id(x));
  return PlanarDiagram::build(std::move(l), std::move(rank), std::move(xpos));
}

LatticeDocument to_document(std::string name, const FiniteLattice& l,
                            const PlanarDiagram* d) {
  LatticeDocument doc;
  doc.name = std::move(name);
  doc.elements = l.ids();
  for (auto p : l.prime_intervals()) doc.covers.emplace_back(l.id(p.lo), l.id(p.hi));
  if (d) {
    for (Elem x = 0; x < l.size(); ++x) doc.embed.push_back({l.id(x), d->rank(x), d->xpos(x)});
  }
  return doc;
}

}  // namespace latcon
