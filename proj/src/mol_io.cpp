#include "moltype/mol_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <tuple>

#include "moltype/errors.hpp"

namespace moltype {

namespace {

// ============================================================================
// Lexical helpers
// ============================================================================

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t pos = 0;
  while (pos < line.size()) {
    const size_t begin = line.find_first_not_of(" \t", pos);
    if (begin == std::string_view::npos) break;
    size_t end = line.find_first_of(" \t", begin);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(begin, end - begin));
    pos = end;
  }
  return tokens;
}

long long parse_int(std::string_view token, int line, int column) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc() || ptr != token.end())
    throw ParseError(line, column, "expected integer, got '" + std::string(token) + "'");
  return value;
}

double parse_double(std::string_view token, int line, int column) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc() || ptr != token.end() || !std::isfinite(value))
    throw ParseError(line, column, "expected finite number, got '" + std::string(token) + "'");
  return value;
}

int column_of(std::string_view line, std::string_view token) {
  return static_cast<int>(token.data() - line.data()) + 1;
}

// ============================================================================
// Shells <-> text
// ============================================================================

// Compact groups describe per-subshell electron totals ("1s2.2s2.2p2", with
// "<n>x" for a shell holding no subshells). A subshell whose orbitals differ
// from the Hund-canonical layout additionally gets an override token
// "<n><kind>{Label:count[@x;y;z][~w*Label+...], ...}" replacing its orbitals.

struct SubshellRef {
  int shell_index;
  SubShellKind kind;
};

const std::optional<SubShell>& subshell_slot(const Shell& shell, SubShellKind kind) {
  switch (kind) {
    case SubShellKind::s: return shell.s;
    case SubShellKind::p: return shell.p;
    case SubShellKind::d: return shell.d;
    default: return shell.f;
  }
}

std::optional<SubShell>& subshell_slot(Shell& shell, SubShellKind kind) {
  switch (kind) {
    case SubShellKind::s: return shell.s;
    case SubShellKind::p: return shell.p;
    case SubShellKind::d: return shell.d;
    default: return shell.f;
  }
}

std::string orbital_token(const Orbital& orbital) {
  std::string out = to_string(orbital.label) + ":" + std::to_string(orbital.electron_count);
  if (orbital.orientation) {
    out += "@" + format_double(orbital.orientation->x) + ";" +
           format_double(orbital.orientation->y) + ";" +
           format_double(orbital.orientation->z);
  }
  if (orbital.hybrid_components) {
    out += "~";
    bool first = true;
    for (const HybridComponent& h : *orbital.hybrid_components) {
      if (!first) out += "+";
      first = false;
      out += format_double(h.weight) + "*" + to_string(h.label);
    }
  }
  return out;
}

void render_shells(const Shells& shells, std::string& compact,
                   std::vector<std::string>& overrides) {
  for (const Shell& shell : shells) {
    bool any = false;
    for (const SubShellKind kind : {SubShellKind::s, SubShellKind::p,
                                    SubShellKind::d, SubShellKind::f}) {
      const auto& sub = subshell_slot(shell, kind);
      if (!sub) continue;
      any = true;
      const int total = total_electrons(*sub);
      if (!compact.empty()) compact += '.';
      compact += std::to_string(shell.n);
      compact += kind_letter(kind);
      compact += std::to_string(total);

      bool canonical = total >= 0 && total <= subshell_capacity(kind) &&
                       *sub == hund_fill(kind, total);
      if (!canonical) {
        std::string token = std::to_string(shell.n);
        token += kind_letter(kind);
        token += '{';
        for (size_t i = 0; i < sub->orbitals.size(); ++i) {
          if (i) token += ',';
          token += orbital_token(sub->orbitals[i]);
        }
        token += '}';
        overrides.push_back(std::move(token));
      }
    }
    if (!any) {
      if (!compact.empty()) compact += '.';
      compact += std::to_string(shell.n);
      compact += 'x';
    }
  }
}

// Cursor over one token for the override mini-grammar.
struct TokenCursor {
  std::string_view token;
  size_t pos = 0;
  int line;
  int column;

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(line, column + static_cast<int>(pos),
                     expected + " in '" + std::string(token) + "'");
  }
  bool done() const { return pos >= token.size(); }
  char peek() const { return done() ? '\0' : token[pos]; }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  int read_int() {
    const size_t begin = pos;
    if (peek() == '-') ++pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos == begin) fail("expected digits");
    return static_cast<int>(parse_int(token.substr(begin, pos - begin), line,
                                      column + static_cast<int>(begin)));
  }
  double read_double() {
    double value = 0.0;
    const auto* first = token.data() + pos;
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first || !std::isfinite(value))
      fail("expected number");
    pos = static_cast<size_t>(ptr - token.data());
    return value;
  }
  std::string_view read_word() {
    const size_t begin = pos;
    while (!done() && std::isalnum(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos == begin) fail("expected name");
    return token.substr(begin, pos - begin);
  }
};

SubShellKind kind_from_letter(char c, int line, int column) {
  switch (c) {
    case 's': return SubShellKind::s;
    case 'p': return SubShellKind::p;
    case 'd': return SubShellKind::d;
    case 'f': return SubShellKind::f;
    default:
      throw ParseError(line, column, std::string("unknown subshell kind '") + c + "'");
  }
}

Orbital parse_orbital(TokenCursor& cur) {
  Orbital orbital;
  const std::string_view name = cur.read_word();
  const auto label = orbital_label_from_string(name);
  if (!label) cur.fail("unknown orbital label '" + std::string(name) + "'");
  orbital.label = *label;
  cur.expect(':');
  orbital.electron_count = cur.read_int();
  if (cur.consume('@')) {
    Coordinate o;
    o.x = cur.read_double();
    cur.expect(';');
    o.y = cur.read_double();
    cur.expect(';');
    o.z = cur.read_double();
    orbital.orientation = o;
  }
  if (cur.consume('~')) {
    std::vector<HybridComponent> components;
    while (!cur.done() && cur.peek() != ',' && cur.peek() != '}') {
      HybridComponent h;
      h.weight = cur.read_double();
      cur.expect('*');
      const std::string_view comp = cur.read_word();
      const auto comp_label = orbital_label_from_string(comp);
      if (!comp_label) cur.fail("unknown orbital label '" + std::string(comp) + "'");
      h.label = *comp_label;
      components.push_back(h);
      if (!cur.consume('+')) break;
    }
    orbital.hybrid_components = std::move(components);
  }
  return orbital;
}

Shells parse_shells_tokens(const std::vector<std::string_view>& tokens,
                           std::string_view line_text, int line) {
  Shells shells;
  // tokens[0] is the compact config.
  {
    const std::string_view compact = tokens[0];
    TokenCursor cur{compact, 0, line, column_of(line_text, compact)};
    while (!cur.done()) {
      const int n = cur.read_int();
      const char letter = cur.peek();
      cur.pos++;
      if (letter == 'x') {
        shells.push_back(Shell{n, {}, {}, {}, {}});
      } else {
        const SubShellKind kind =
            kind_from_letter(letter, line, cur.column + static_cast<int>(cur.pos) - 1);
        const int total = cur.read_int();
        if (total < 0 || total > subshell_capacity(kind))
          cur.fail("electron total out of range");
        const bool reuse = !shells.empty() && shells.back().n == n &&
                           !subshell_slot(shells.back(), kind);
        if (!reuse) shells.push_back(Shell{n, {}, {}, {}, {}});
        subshell_slot(shells.back(), kind) = hund_fill(kind, total);
      }
      if (!cur.done()) cur.expect('.');
    }
  }

  std::set<std::pair<int, int>> overridden;  // (shell index, kind)
  for (size_t t = 1; t < tokens.size(); ++t) {
    TokenCursor cur{tokens[t], 0, line, column_of(line_text, tokens[t])};
    const int n = cur.read_int();
    const SubShellKind kind =
        kind_from_letter(cur.peek(), line, cur.column + static_cast<int>(cur.pos));
    cur.pos++;
    cur.expect('{');
    std::vector<Orbital> orbitals;
    if (cur.peek() != '}') {
      orbitals.push_back(parse_orbital(cur));
      while (cur.consume(',')) orbitals.push_back(parse_orbital(cur));
    }
    cur.expect('}');
    if (!cur.done()) cur.fail("trailing characters");

    bool applied = false;
    for (size_t i = 0; i < shells.size(); ++i) {
      auto& sub = subshell_slot(shells[i], kind);
      if (shells[i].n != n || !sub) continue;
      if (overridden.count({static_cast<int>(i), static_cast<int>(kind)})) continue;
      const int declared = total_electrons(*sub);
      sub->orbitals = orbitals;
      if (total_electrons(*sub) != declared)
        throw Error(Errc::semantic_error,
                    "line " + std::to_string(line) +
                        ": override electron total differs from compact group");
      overridden.insert({static_cast<int>(i), static_cast<int>(kind)});
      applied = true;
      break;
    }
    if (!applied)
      throw Error(Errc::semantic_error,
                  "line " + std::to_string(line) + ": override '" +
                      std::string(tokens[t]) + "' names an absent subshell");
  }
  return shells;
}

// ============================================================================
// Canonical molecule grammar
// ============================================================================

struct LineReader {
  const std::vector<std::string_view>& lines;
  size_t index = 0;   // 0-based position
  int base_line = 1;  // line number of lines[0] in the whole document

  int line_number() const { return base_line + static_cast<int>(index); }
  bool done() const { return index >= lines.size(); }
  std::string_view peek() const { return lines[index]; }
  void skip_blank() {
    while (!done() && is_blank(lines[index])) ++index;
  }
};

Molecule parse_molecule_block(LineReader& reader) {
  reader.skip_blank();
  if (reader.done())
    throw ParseError(reader.line_number(), 1, "expected 'MOLECULE v1'");
  {
    const auto header = tokenize(reader.peek());
    if (header.size() != 2 || header[0] != "MOLECULE" || header[1] != "v1")
      throw ParseError(reader.line_number(), 1, "expected 'MOLECULE v1'");
    ++reader.index;
  }

  std::vector<Atom> atoms;
  std::vector<BondingSystem> systems;
  bool last_atom_has_shells = false;

  enum class Section { atoms, systems, end };
  Section section = Section::atoms;

  while (true) {
    if (reader.done())
      throw ParseError(reader.line_number(), 1, "unterminated molecule, expected 'END'");
    const std::string_view text = reader.peek();
    const int line = reader.line_number();
    const auto tokens = tokenize(text);
    if (tokens.empty())
      throw ParseError(line, 1, "blank line inside molecule block");
    const std::string_view keyword = tokens[0];

    if (keyword == "END") {
      if (tokens.size() != 1)
        throw ParseError(line, column_of(text, tokens[1]), "trailing tokens after END");
      ++reader.index;
      break;
    }

    if (keyword == "ATOM") {
      if (section != Section::atoms)
        throw ParseError(line, 1, "ATOM after SYSTEM section");
      if (tokens.size() != 8)
        throw ParseError(line, 1, "ATOM needs: id symbol Z weight x y z");
      Atom atom;
      atom.atom_id = parse_int(tokens[1], line, column_of(text, tokens[1]));
      const auto symbol = symbol_from_string(tokens[2]);
      if (!symbol)
        throw ParseError(line, column_of(text, tokens[2]),
                         "unknown symbol '" + std::string(tokens[2]) + "'");
      atom.attributes.symbol = *symbol;
      atom.attributes.atomic_number =
          static_cast<int>(parse_int(tokens[3], line, column_of(text, tokens[3])));
      atom.attributes.atomic_weight =
          parse_double(tokens[4], line, column_of(text, tokens[4]));
      atom.coordinate.x = parse_double(tokens[5], line, column_of(text, tokens[5]));
      atom.coordinate.y = parse_double(tokens[6], line, column_of(text, tokens[6]));
      atom.coordinate.z = parse_double(tokens[7], line, column_of(text, tokens[7]));
      atoms.push_back(std::move(atom));
      last_atom_has_shells = false;
      ++reader.index;
      continue;
    }

    if (keyword == "SHELLS") {
      if (section != Section::atoms || atoms.empty())
        throw ParseError(line, 1, "SHELLS without a preceding ATOM");
      if (tokens.size() < 3)
        throw ParseError(line, 1, "SHELLS needs: id compact-config");
      const AtomId id = parse_int(tokens[1], line, column_of(text, tokens[1]));
      if (id != atoms.back().atom_id)
        throw ParseError(line, column_of(text, tokens[1]),
                         "SHELLS id does not match the preceding ATOM");
      if (last_atom_has_shells)
        throw ParseError(line, 1, "duplicate SHELLS line for one atom");
      const std::vector<std::string_view> rest(tokens.begin() + 2, tokens.end());
      atoms.back().shells = parse_shells_tokens(rest, text, line);
      last_atom_has_shells = true;
      ++reader.index;
      continue;
    }

    if (keyword == "SYSTEM") {
      section = Section::systems;
      if (tokens.size() < 3)
        throw ParseError(line, 1, "SYSTEM needs: electrons edge [edge ...]");
      BondingSystem system;
      system.electrons =
          static_cast<int>(parse_int(tokens[1], line, column_of(text, tokens[1])));
      for (size_t t = 2; t < tokens.size(); ++t) {
        const std::string_view token = tokens[t];
        const size_t dash = token.find('-', 1);
        if (dash == std::string_view::npos)
          throw ParseError(line, column_of(text, token),
                           "expected edge 'i-j', got '" + std::string(token) + "'");
        const int col = column_of(text, token);
        const AtomId a = parse_int(token.substr(0, dash), line, col);
        const AtomId b =
            parse_int(token.substr(dash + 1), line, col + static_cast<int>(dash) + 1);
        system.edges.emplace_back(a, b);
      }
      systems.push_back(std::move(system));
      ++reader.index;
      continue;
    }

    throw ParseError(line, 1, "unknown keyword '" + std::string(keyword) + "'");
  }

  return build_molecule(std::move(atoms), std::move(systems));
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::string serialize_molecule(const Molecule& molecule) {
  std::string out = "MOLECULE v1\n";
  for (const Atom& atom : molecule.atoms) {
    out += "ATOM " + std::to_string(atom.atom_id) + " " +
           to_string(atom.attributes.symbol) + " " +
           std::to_string(atom.attributes.atomic_number) + " " +
           format_double(atom.attributes.atomic_weight) + " " +
           format_double(atom.coordinate.x) + " " + format_double(atom.coordinate.y) +
           " " + format_double(atom.coordinate.z) + "\n";
    if (!atom.shells.empty()) {
      std::string compact;
      std::vector<std::string> overrides;
      render_shells(atom.shells, compact, overrides);
      out += "SHELLS " + std::to_string(atom.atom_id) + " " + compact;
      for (const std::string& token : overrides) out += " " + token;
      out += "\n";
    }
  }
  for (const BondingSystem& system : molecule.systems) {
    out += "SYSTEM " + std::to_string(system.electrons);
    for (const Edge& edge : system.edges)
      out += " " + std::to_string(edge.a) + "-" + std::to_string(edge.b);
    out += "\n";
  }
  out += "END\n";
  return out;
}

Molecule parse_molecule(std::string_view text) {
  const auto lines = split_lines(text);
  LineReader reader{lines};
  Molecule molecule = parse_molecule_block(reader);
  reader.skip_blank();
  if (!reader.done())
    throw ParseError(reader.line_number(), 1, "content after END");
  return molecule;
}

// ============================================================================
// Reactions
// ============================================================================

std::string serialize_reaction(const Reaction& reaction) {
  std::string out = "REACTION v1\n";
  out += "RATE " + format_double(reaction.rate) + "\n";
  for (const Condition& condition : reaction.conditions) {
    if (const auto* t = std::get_if<TempCondition>(&condition))
      out += "COND TEMP " + format_double(t->kelvin) + "\n";
    else
      out += "COND PRES " + format_double(std::get<PressureCondition>(condition).atm) + "\n";
  }
  if (reaction.window)
    out += "WINDOW " + format_double(reaction.window->start) + " " +
           format_double(reaction.window->end) + "\n";
  for (const ReactionTerm& term : reaction.reactants)
    out += "REACTANT " + format_double(term.coefficient) + "\n" +
           serialize_molecule(term.molecule);
  for (const ReactionTerm& term : reaction.products)
    out += "PRODUCT " + format_double(term.coefficient) + "\n" +
           serialize_molecule(term.molecule);
  out += "END REACTION\n";
  return out;
}

Reaction parse_reaction(std::string_view text) {
  const auto lines = split_lines(text);
  LineReader reader{lines};
  reader.skip_blank();

  auto expect_tokens = [&](const char* what) {
    if (reader.done()) throw ParseError(reader.line_number(), 1, std::string("expected ") + what);
    return tokenize(reader.peek());
  };

  {
    const auto header = expect_tokens("'REACTION v1'");
    if (header.size() != 2 || header[0] != "REACTION" || header[1] != "v1")
      throw ParseError(reader.line_number(), 1, "expected 'REACTION v1'");
    ++reader.index;
  }

  const auto rate_tokens = expect_tokens("'RATE <value>'");
  if (rate_tokens.size() != 2 || rate_tokens[0] != "RATE")
    throw ParseError(reader.line_number(), 1, "expected 'RATE <value>'");
  const double rate = parse_double(rate_tokens[1], reader.line_number(),
                                   column_of(reader.peek(), rate_tokens[1]));
  ++reader.index;

  std::vector<Condition> conditions;
  std::optional<TimeWindow> window;
  std::vector<ReactionTerm> reactants;
  std::vector<ReactionTerm> products;

  while (true) {
    const auto tokens = expect_tokens("'END REACTION'");
    const int line = reader.line_number();
    const std::string_view text_line = reader.peek();

    if (tokens.size() == 2 && tokens[0] == "END" && tokens[1] == "REACTION") {
      ++reader.index;
      break;
    }
    if (tokens[0] == "COND") {
      if (tokens.size() != 3 || (tokens[1] != "TEMP" && tokens[1] != "PRES"))
        throw ParseError(line, 1, "expected 'COND TEMP <k>' or 'COND PRES <atm>'");
      const double value = parse_double(tokens[2], line, column_of(text_line, tokens[2]));
      if (tokens[1] == "TEMP")
        conditions.push_back(TempCondition{value});
      else
        conditions.push_back(PressureCondition{value});
      ++reader.index;
      continue;
    }
    if (tokens[0] == "WINDOW") {
      if (tokens.size() != 3)
        throw ParseError(line, 1, "expected 'WINDOW <start> <end>'");
      if (window) throw ParseError(line, 1, "duplicate WINDOW");
      window = TimeWindow{parse_double(tokens[1], line, column_of(text_line, tokens[1])),
                          parse_double(tokens[2], line, column_of(text_line, tokens[2]))};
      ++reader.index;
      continue;
    }
    if (tokens[0] == "REACTANT" || tokens[0] == "PRODUCT") {
      if (tokens.size() != 2)
        throw ParseError(line, 1, "expected coefficient");
      ReactionTerm term;
      term.coefficient = parse_double(tokens[1], line, column_of(text_line, tokens[1]));
      ++reader.index;
      term.molecule = parse_molecule_block(reader);
      (tokens[0] == "REACTANT" ? reactants : products).push_back(std::move(term));
      continue;
    }
    throw ParseError(line, 1, "unknown keyword '" + std::string(tokens[0]) + "'");
  }

  reader.skip_blank();
  if (!reader.done())
    throw ParseError(reader.line_number(), 1, "content after END REACTION");
  return make_reaction(std::move(reactants), std::move(products), std::move(conditions),
                       rate, window);
}

// ============================================================================
// SDF / molfile V2000
// ============================================================================

namespace {

std::string_view trim(std::string_view s) {
  const size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string_view field(std::string_view line, size_t pos, size_t width) {
  if (pos >= line.size()) return {};
  return line.substr(pos, std::min(width, line.size() - pos));
}

int fixed_int(std::string_view line, size_t pos, size_t width, const char* what) {
  const std::string_view token = trim(field(line, pos, width));
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (token.empty() || ec != std::errc() || ptr != token.end())
    throw Error(Errc::malformed_counts_line,
                std::string("bad ") + what + " field '" + std::string(token) + "'");
  return value;
}

double fixed_double(std::string_view line, size_t pos, size_t width, const char* what) {
  const std::string_view token = trim(field(line, pos, width));
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (token.empty() || ec != std::errc() || ptr != token.end() || !std::isfinite(value))
    throw Error(Errc::syntax_error,
                std::string("bad ") + what + " field '" + std::string(token) + "'");
  return value;
}

// Core + unshared shells inferred from explicit bonds: each atom's share of a
// system is electrons * incident_edges / (2 * edge_count).
Shells bookkeeping_shells(int z, double bond_contribution,
                          std::vector<std::string>& warnings, int record, int atom_pos) {
  const int core = noble_core_electrons(z);
  const double raw = static_cast<double>(z - core) - bond_contribution;
  double rounded = std::round(raw);
  if (std::abs(raw - rounded) > 1e-9) {
    warnings.push_back("record " + std::to_string(record) + ": atom " +
                       std::to_string(atom_pos) +
                       " has a fractional unshared electron count; rounded");
  }
  if (rounded < 0.0) {
    warnings.push_back("record " + std::to_string(record) + ": atom " +
                       std::to_string(atom_pos) +
                       " is electron-deficient for its bonds; clamped to zero unshared");
    rounded = 0.0;
  }
  return fill_config(core + static_cast<int>(rounded));
}

Molecule parse_sdf_record(const std::vector<std::string_view>& lines, int record,
                          std::vector<std::string>& warnings) {
  if (lines.size() < 4)
    throw Error(Errc::malformed_counts_line, "record too short for a header block");
  const std::string_view counts = lines[3];
  const int natoms = fixed_int(counts, 0, 3, "atom count");
  const int nbonds = fixed_int(counts, 3, 3, "bond count");
  if (natoms < 0 || nbonds < 0)
    throw Error(Errc::malformed_counts_line, "negative counts");
  if (lines.size() < static_cast<size_t>(4 + natoms + nbonds))
    throw Error(Errc::malformed_counts_line, "record shorter than its counts line");

  std::vector<Atom> atoms;
  atoms.reserve(natoms);
  for (int i = 0; i < natoms; ++i) {
    const std::string_view line = lines[4 + i];
    if (line.size() < 34)
      throw Error(Errc::syntax_error,
                  "atom line " + std::to_string(i + 1) + " shorter than fixed columns");
    Atom atom;
    atom.atom_id = i + 1;
    atom.coordinate.x = fixed_double(line, 0, 10, "x");
    atom.coordinate.y = fixed_double(line, 10, 10, "y");
    atom.coordinate.z = fixed_double(line, 20, 10, "z");
    const std::string_view symbol = trim(field(line, 31, 3));
    const auto parsed = symbol_from_string(symbol);
    if (!parsed)
      throw Error(Errc::unsupported_symbol,
                  "unsupported element '" + std::string(symbol) + "'");
    atom.attributes = element_attributes(*parsed);
    atoms.push_back(std::move(atom));
  }

  std::vector<BondingSystem> systems;
  std::vector<Edge> aromatic_edges;
  for (int i = 0; i < nbonds; ++i) {
    const std::string_view line = lines[4 + natoms + i];
    const int a = fixed_int(line, 0, 3, "bond atom");
    const int b = fixed_int(line, 3, 3, "bond atom");
    const int type = fixed_int(line, 6, 3, "bond type");
    if (a < 1 || a > natoms || b < 1 || b > natoms)
      throw Error(Errc::dangling_edge,
                  "bond line " + std::to_string(i + 1) + " references a missing atom");
    const Edge edge(a, b);
    switch (type) {
      case 1:
      case 2:
      case 3:
        systems.push_back({2 * type, {edge}});
        break;
      case 4:
        systems.push_back({2, {edge}});
        aromatic_edges.push_back(edge);
        break;
      default:
        throw Error(Errc::unsupported_bond_type,
                    "bond type " + std::to_string(type) + " is not supported");
    }
  }

  bool saw_m_end = false;
  for (size_t i = 4 + natoms + nbonds; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (trim(line) == "M  END" || trim(line) == "M END") {
      saw_m_end = true;
      break;
    }
    if (!is_blank(line))
      warnings.push_back("record " + std::to_string(record) + ": ignored property line '" +
                         std::string(trim(field(line, 0, 6))) + "'");
  }
  if (!saw_m_end)
    warnings.push_back("record " + std::to_string(record) + ": missing 'M  END'");

  // Connected components of aromatic edges become delocalized systems.
  if (!aromatic_edges.empty()) {
    std::map<AtomId, AtomId> parent;
    auto find = [&](AtomId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Edge& edge : aromatic_edges) {
      parent.try_emplace(edge.a, edge.a);
      parent.try_emplace(edge.b, edge.b);
      parent[find(edge.a)] = find(edge.b);
    }
    std::map<AtomId, BondingSystem> components;
    std::map<AtomId, std::set<AtomId>> members;
    for (const Edge& edge : aromatic_edges) {
      const AtomId root = find(edge.a);
      components[root].edges.push_back(edge);
      members[root].insert(edge.a);
      members[root].insert(edge.b);
    }
    for (auto& [root, system] : components) {
      const auto& atoms_in = members[root];
      system.electrons = static_cast<int>(atoms_in.size());
      std::map<AtomId, int> degree;
      for (const Edge& edge : system.edges) {
        ++degree[edge.a];
        ++degree[edge.b];
      }
      const bool six_ring = atoms_in.size() == 6 && system.edges.size() == 6 &&
                            std::all_of(degree.begin(), degree.end(),
                                        [](const auto& d) { return d.second == 2; });
      if (!six_ring)
        warnings.push_back("record " + std::to_string(record) +
                           ": aromatic component is not a six-membered ring");
      systems.push_back(std::move(system));
    }
  }

  std::map<AtomId, double> contribution;
  for (const BondingSystem& system : systems) {
    const double per_incidence =
        static_cast<double>(system.electrons) / (2.0 * static_cast<double>(system.edges.size()));
    for (const Edge& edge : system.edges) {
      contribution[edge.a] += per_incidence;
      contribution[edge.b] += per_incidence;
    }
  }
  for (Atom& atom : atoms)
    atom.shells = bookkeeping_shells(atom.attributes.atomic_number,
                                     contribution[atom.atom_id], warnings, record,
                                     static_cast<int>(atom.atom_id));

  return build_molecule(std::move(atoms), std::move(systems));
}

}  // namespace

SdfParse parse_sdf(std::string_view text) {
  SdfParse out;
  const auto lines = split_lines(text);

  std::vector<std::vector<std::string_view>> records;
  std::vector<std::string_view> current;
  for (const std::string_view line : lines) {
    if (line.substr(0, 4) == "$$$$") {
      records.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(line);
    }
  }
  records.push_back(std::move(current));

  int index = 0;
  for (const auto& record : records) {
    const bool empty = std::all_of(record.begin(), record.end(), is_blank);
    if (empty) continue;
    ++index;
    try {
      out.molecules.push_back(parse_sdf_record(record, index, out.warnings));
    } catch (const Error& e) {
      out.errors.push_back({index, e.what()});
    }
  }
  return out;
}

std::string write_sdf(const std::vector<Molecule>& molecules) {
  std::string out;
  char buffer[128];
  for (const Molecule& molecule : molecules) {
    std::map<AtomId, int> position;
    for (size_t i = 0; i < molecule.atoms.size(); ++i)
      position[molecule.atoms[i].atom_id] = static_cast<int>(i) + 1;

    // Pair each delocalized system with consumable sigma partners; leftovers
    // must be plain 2/4/6-electron bonds.
    std::vector<bool> consumed(molecule.systems.size(), false);
    struct BondLine {
      int a, b, type;
      bool operator<(const BondLine& o) const {
        return std::tie(a, b, type) < std::tie(o.a, o.b, o.type);
      }
    };
    std::vector<BondLine> bonds;

    for (size_t s = 0; s < molecule.systems.size(); ++s) {
      const BondingSystem& system = molecule.systems[s];
      if (!system.delocalized()) continue;
      std::set<AtomId> atoms_in;
      for (const Edge& edge : system.edges) {
        atoms_in.insert(edge.a);
        atoms_in.insert(edge.b);
      }
      if (system.electrons != static_cast<int>(atoms_in.size()))
        throw Error(Errc::conversion_unsupported,
                    "delocalized system does not match the aromatic pattern");
      for (const Edge& edge : system.edges) {
        bool found = false;
        for (size_t t = 0; t < molecule.systems.size(); ++t) {
          const BondingSystem& sigma = molecule.systems[t];
          if (consumed[t] || sigma.delocalized() || sigma.electrons != 2) continue;
          if (sigma.edges.front() != edge) continue;
          consumed[t] = true;
          found = true;
          break;
        }
        if (!found)
          throw Error(Errc::conversion_unsupported,
                      "delocalized edge lacks a sigma partner");
        bonds.push_back({position.at(edge.a), position.at(edge.b), 4});
      }
      consumed[s] = true;
    }

    for (size_t s = 0; s < molecule.systems.size(); ++s) {
      if (consumed[s] || molecule.systems[s].delocalized()) continue;
      const BondingSystem& system = molecule.systems[s];
      if (system.electrons != 2 && system.electrons != 4 && system.electrons != 6)
        throw Error(Errc::conversion_unsupported,
                    "bond of " + std::to_string(system.electrons) +
                        " electrons has no molfile type");
      const Edge& edge = system.edges.front();
      bonds.push_back({position.at(edge.a), position.at(edge.b), system.electrons / 2});
    }
    std::sort(bonds.begin(), bonds.end());

    out += "\n  moltype\n\n";
    std::snprintf(buffer, sizeof buffer, "%3d%3d  0  0  0  0  0  0  0  0999 V2000\n",
                  static_cast<int>(molecule.atoms.size()), static_cast<int>(bonds.size()));
    out += buffer;
    for (const Atom& atom : molecule.atoms) {
      const Coordinate& c = atom.coordinate;
      if (std::abs(c.x) >= 1e5 || std::abs(c.y) >= 1e5 || std::abs(c.z) >= 1e5)
        throw Error(Errc::conversion_unsupported,
                    "coordinate exceeds molfile fixed-width columns");
      std::snprintf(buffer, sizeof buffer,
                    "%10.4f%10.4f%10.4f %-3s 0  0  0  0  0  0  0  0  0  0  0  0\n",
                    c.x, c.y, c.z, to_string(atom.attributes.symbol).c_str());
      out += buffer;
    }
    for (const BondLine& bond : bonds) {
      std::snprintf(buffer, sizeof buffer, "%3d%3d%3d  0\n", bond.a, bond.b, bond.type);
      out += buffer;
    }
    out += "M  END\n$$$$\n";
  }
  return out;
}

// ============================================================================
// Ring construction
// ============================================================================

std::vector<BondingSystem> ring_systems(const std::vector<AtomId>& ids,
                                        int sigma_electrons, int pi_electrons) {
  if (ids.size() < 3)
    throw Error(Errc::too_few_atoms, "a ring needs at least three atoms");
  if (std::set<AtomId>(ids.begin(), ids.end()).size() != ids.size())
    throw Error(Errc::duplicate_ids, "ring ids must be distinct");
  if (sigma_electrons < 1)
    throw Error(Errc::nonpositive_electrons, "sigma electrons must be positive");
  if (pi_electrons < 0)
    throw Error(Errc::nonpositive_electrons, "pi electrons must be non-negative");

  std::vector<BondingSystem> out;
  std::vector<Edge> ring_edges;
  for (size_t i = 0; i < ids.size(); ++i) {
    const Edge edge(ids[i], ids[(i + 1) % ids.size()]);
    out.push_back({sigma_electrons, {edge}});
    ring_edges.push_back(edge);
  }
  if (pi_electrons > 0) out.push_back({pi_electrons, std::move(ring_edges)});
  return out;
}

}  // namespace moltype
