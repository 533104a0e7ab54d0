#include "latrep/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace latrep {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text, std::string_view source) {
  std::vector<Line> lines;
  int number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  if (lines.empty()) {
    throw parse_error(std::string(source) + ": no content");
  }
  return lines;
}

[[noreturn]] void fail(std::string_view source, int line, const std::string& msg) {
  throw parse_error(std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

struct OrderBody {
  std::string name;
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> pairs;
};

OrderBody parse_order_body(std::string_view text, std::string_view header,
                           std::string_view source) {
  auto lines = tokenize(text, source);
  OrderBody body;
  if (lines[0].tokens[0] != header || lines[0].tokens.size() != 2) {
    fail(source, lines[0].number, "expected '" + std::string(header) + " <name>'");
  }
  body.name = lines[0].tokens[1];
  bool have_elems = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens[0] == "elems") {
      if (have_elems) fail(source, l.number, "duplicate elems line");
      if (l.tokens.size() < 2) fail(source, l.number, "elems line needs at least one element");
      body.elems.assign(l.tokens.begin() + 1, l.tokens.end());
      have_elems = true;
    } else if (l.tokens[0] == "le") {
      if (l.tokens.size() != 3) fail(source, l.number, "expected 'le <a> <b>'");
      body.pairs.emplace_back(l.tokens[1], l.tokens[2]);
    } else {
      fail(source, l.number, "unknown directive '" + l.tokens[0] + "'");
    }
  }
  if (!have_elems) fail(source, lines[0].number, "missing elems line");
  return body;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Mask parse_set(const Poset& p, const std::string& token, std::string_view source, int line) {
  if (token.size() < 2 || token.front() != '{' || token.back() != '}') {
    fail(source, line, "expected a braced set, got '" + token + "'");
  }
  Mask m = 0;
  std::string inner = token.substr(1, token.size() - 2);
  std::istringstream parts(inner);
  std::string name;
  while (std::getline(parts, name, ',')) {
    if (name.empty()) fail(source, line, "empty element in set '" + token + "'");
    auto idx = p.find(name);
    if (!idx) fail(source, line, "unknown element '" + name + "' in set");
    m |= bit(*idx);
  }
  return m;
}

}  // namespace

NamedPoset parse_poset_text(std::string_view text, std::string_view source) {
  OrderBody body = parse_order_body(text, "poset", source);
  return {body.name, Poset::from_pairs(body.elems, body.pairs)};
}

NamedLattice parse_lattice_text(std::string_view text, std::string_view source) {
  OrderBody body = parse_order_body(text, "lattice", source);
  return {body.name, Lattice::from_poset(Poset::from_pairs(body.elems, body.pairs))};
}

NamedOperator parse_operator_text(std::string_view text, const std::filesystem::path& base_dir,
                                  std::string_view source) {
  auto lines = tokenize(text, source);
  if (lines[0].tokens[0] != "monop" || lines[0].tokens.size() != 2) {
    fail(source, lines[0].number, "expected 'monop <name>'");
  }
  std::string name = lines[0].tokens[1];
  std::optional<Poset> carrier;
  std::vector<std::pair<int, std::pair<std::string, std::string>>> raw_assigns;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens[0] == "on") {
      if (l.tokens.size() != 2) fail(source, l.number, "expected 'on <posetfile>'");
      if (carrier) fail(source, l.number, "duplicate on line");
      carrier = read_poset_file(base_dir / l.tokens[1]).poset;
    } else if (l.tokens[0] == "assign") {
      if (l.tokens.size() != 3) fail(source, l.number, "expected 'assign <x> {a,b,...}'");
      raw_assigns.push_back({l.number, {l.tokens[1], l.tokens[2]}});
    } else {
      fail(source, l.number, "unknown directive '" + l.tokens[0] + "'");
    }
  }
  if (!carrier) fail(source, lines[0].number, "missing on line");

  std::vector<Mask> assign(static_cast<std::size_t>(carrier->size()), 0);
  std::vector<char> given(static_cast<std::size_t>(carrier->size()), 0);
  for (const auto& [line, kv] : raw_assigns) {
    auto idx = carrier->find(kv.first);
    if (!idx) fail(source, line, "unknown element '" + kv.first + "'");
    if (given[static_cast<std::size_t>(*idx)]) fail(source, line, "duplicate assign for '" + kv.first + "'");
    given[static_cast<std::size_t>(*idx)] = 1;
    assign[static_cast<std::size_t>(*idx)] = parse_set(*carrier, kv.second, source, line);
  }
  for (int e = 0; e < carrier->size(); ++e) {
    if (!given[static_cast<std::size_t>(e)]) {
      fail(source, lines[0].number, "missing assign for '" + carrier->name(e) + "'");
    }
  }
  return {std::move(name), MonotonicOperator(std::move(*carrier), std::move(assign))};
}

NamedFuzzy parse_fuzzy_text(std::string_view text, const std::filesystem::path& base_dir,
                            std::string_view source) {
  auto lines = tokenize(text, source);
  if (lines[0].tokens[0] != "fuzzy" || lines[0].tokens.size() != 2) {
    fail(source, lines[0].number, "expected 'fuzzy <name>'");
  }
  std::string name = lines[0].tokens[1];
  std::optional<Poset> domain;
  std::optional<Lattice> codomain;
  std::vector<std::pair<int, std::pair<std::string, std::string>>> raw_maps;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens[0] == "domain") {
      if (l.tokens.size() != 2) fail(source, l.number, "expected 'domain <posetfile>'");
      domain = read_poset_file(base_dir / l.tokens[1]).poset;
    } else if (l.tokens[0] == "codomain") {
      if (l.tokens.size() != 2) fail(source, l.number, "expected 'codomain <latticefile>'");
      codomain = read_lattice_file(base_dir / l.tokens[1]).lattice;
    } else if (l.tokens[0] == "map") {
      if (l.tokens.size() != 3) fail(source, l.number, "expected 'map <x> <p>'");
      raw_maps.push_back({l.number, {l.tokens[1], l.tokens[2]}});
    } else {
      fail(source, l.number, "unknown directive '" + l.tokens[0] + "'");
    }
  }
  if (!domain) fail(source, lines[0].number, "missing domain line");
  if (!codomain) fail(source, lines[0].number, "missing codomain line");

  std::vector<int> values(static_cast<std::size_t>(domain->size()), -1);
  for (const auto& [line, kv] : raw_maps) {
    auto x = domain->find(kv.first);
    if (!x) fail(source, line, "unknown domain element '" + kv.first + "'");
    auto p = codomain->order().find(kv.second);
    if (!p) fail(source, line, "unknown codomain element '" + kv.second + "'");
    if (values[static_cast<std::size_t>(*x)] != -1) fail(source, line, "duplicate map for '" + kv.first + "'");
    values[static_cast<std::size_t>(*x)] = *p;
  }
  for (int e = 0; e < domain->size(); ++e) {
    if (values[static_cast<std::size_t>(e)] == -1) {
      fail(source, lines[0].number, "missing map for '" + domain->name(e) + "'");
    }
  }
  return {std::move(name), FuzzyUpSet(std::move(*domain), std::move(*codomain), std::move(values))};
}

NamedPoset read_poset_file(const std::filesystem::path& path) {
  return parse_poset_text(read_text(path), path.string());
}
NamedLattice read_lattice_file(const std::filesystem::path& path) {
  return parse_lattice_text(read_text(path), path.string());
}
NamedOperator read_operator_file(const std::filesystem::path& path) {
  return parse_operator_text(read_text(path), path.parent_path(), path.string());
}
NamedFuzzy read_fuzzy_file(const std::filesystem::path& path) {
  return parse_fuzzy_text(read_text(path), path.parent_path(), path.string());
}

namespace {

void write_order_body(std::ostringstream& out, const Poset& p) {
  out << "elems";
  for (int i = 0; i < p.size(); ++i) out << ' ' << p.name(i);
  out << '\n';
  for (int i = 0; i < p.size(); ++i) {
    for (int j : bits_of(p.covers_up(i))) {
      out << "le " << p.name(i) << ' ' << p.name(j) << '\n';
    }
  }
}

}  // namespace

std::string format_poset(std::string_view name, const Poset& p) {
  std::ostringstream out;
  out << "poset " << name << '\n';
  write_order_body(out, p);
  return out.str();
}

std::string format_lattice(std::string_view name, const Lattice& l) {
  std::ostringstream out;
  out << "lattice " << name << '\n';
  write_order_body(out, l.order());
  return out.str();
}

std::string format_operator(std::string_view name, const MonotonicOperator& g,
                            std::string_view poset_ref) {
  std::ostringstream out;
  out << "monop " << name << '\n';
  out << "on " << poset_ref << '\n';
  for (int e = 0; e < g.carrier().size(); ++e) {
    out << "assign " << g.carrier().name(e) << ' ' << set_label(g.carrier(), g.at(e)) << '\n';
  }
  return out.str();
}

std::string dot_poset(std::string_view graph_name, const Poset& p) {
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (int i = 0; i < p.size(); ++i) {
    out << "  n" << i << " [label=\"" << p.name(i) << "\"];\n";
  }
  for (int i = 0; i < p.size(); ++i) {
    for (int j : bits_of(p.covers_up(i))) {
      out << "  n" << i << " -> n" << j << " [arrowhead=none];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace latrep
