#ifndef MOLTYPE_MOL_CORE_HPP
#define MOLTYPE_MOL_CORE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "moltype/coordinate.hpp"
#include "moltype/elements.hpp"
#include "moltype/orbitals.hpp"
#include "moltype/rational.hpp"

namespace moltype {

using AtomId = std::int64_t;  // positive, unique within a molecule

// ============================================================================
// Types
// ============================================================================

struct Atom {
  AtomId atom_id = 0;
  ElementAttributes attributes{};
  Coordinate coordinate{};
  Shells shells;  // in-molecule convention: core + unshared electrons

  bool operator==(const Atom&) const = default;
};

// Unordered pair of distinct atom ids, stored normalized (a < b).
struct Edge {
  Edge(AtomId i, AtomId j);

  AtomId a;
  AtomId b;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& edge);

// One bonding relationship: a shared-electron count spread over one edge
// (localized bond) or several edges (delocalized system).
struct BondingSystem {
  int electrons = 0;
  std::vector<Edge> edges;  // sorted, duplicate-free

  bool delocalized() const { return edges.size() > 1; }
  bool operator==(const BondingSystem&) const = default;
};

struct Molecule {
  std::vector<Atom> atoms;             // ascending atom_id
  std::vector<BondingSystem> systems;  // sorted by (electrons, edges)

  bool operator==(const Molecule&) const = default;
};

// ============================================================================
// Construction
// ============================================================================

// Validates and canonicalizes: atoms sorted by id, each system's edges
// sorted, systems sorted by (electrons, edge list). Throws Error on
// duplicate ids, non-positive ids, non-finite coordinates, self loops,
// duplicate edges, empty or non-positive systems, and dangling edges.
Molecule build_molecule(std::vector<Atom> atoms, std::vector<BondingSystem> systems);

// ============================================================================
// Queries
// ============================================================================

const Atom& atom_by_id(const Molecule& molecule, AtomId id);
bool has_atom(const Molecule& molecule, AtomId id);

// Dietz-style constitution: vertices (unshared electrons, id, symbol) plus
// the multiset of (electrons, edge set) bonding systems.
struct DietzVertex {
  int unshared_electrons = 0;
  AtomId atom_id = 0;
  AtomicSymbol symbol = AtomicSymbol::H;

  bool operator==(const DietzVertex&) const = default;
  auto operator<=>(const DietzVertex&) const = default;
};

struct DietzConstitution {
  std::vector<DietzVertex> vertices;   // ascending atom_id
  std::vector<BondingSystem> systems;  // canonical order

  bool operator==(const DietzConstitution&) const = default;
};

DietzConstitution dietz_constitution(const Molecule& molecule);

// Two-line rendering "V = {...}\nB = {...}" matching the constitution model's
// set notation.
std::string to_string(const DietzConstitution& constitution);

// Electrons in shells beyond the noble-gas core, clamped at zero.
int unshared_valence_electrons(const Atom& atom);

// Exact fractional bond order between two atoms: for every system containing
// edge {i,j}, electrons / (2 * edge count), summed. Zero for non-bonded
// pairs. Throws UnknownAtom for ids outside the molecule.
Rational bond_order(const Molecule& molecule, AtomId i, AtomId j);

std::set<AtomId> neighbors(const Molecule& molecule, AtomId id);

// ============================================================================
// Value-preserving updates
// ============================================================================

Molecule update_coordinate(const Molecule& molecule, AtomId id, const Coordinate& position);

// Applies a bijective id renaming. The mapping's domain must be exactly the
// molecule's id set and its image duplicate-free.
Molecule relabel_atoms(const Molecule& molecule, const std::map<AtomId, AtomId>& mapping);

// ============================================================================
// Lint
// ============================================================================

// Non-fatal findings for structurally valid but suspicious molecules, e.g. a
// delocalized system whose edges do not form a connected subgraph.
std::vector<std::string> lint_molecule(const Molecule& molecule);

}  // namespace moltype

#endif
