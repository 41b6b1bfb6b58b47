#include "moltype/mol_core.hpp"

#include <algorithm>

#include "moltype/errors.hpp"

namespace moltype {

// ============================================================================
// Edges
// ============================================================================

Edge::Edge(AtomId i, AtomId j) : a(std::min(i, j)), b(std::max(i, j)) {
  if (i == j)
    throw Error(Errc::self_loop, "self loop on atom " + std::to_string(i));
}

std::string to_string(const Edge& edge) {
  return "{" + std::to_string(edge.a) + "," + std::to_string(edge.b) + "}";
}

// ============================================================================
// Construction
// ============================================================================

Molecule build_molecule(std::vector<Atom> atoms, std::vector<BondingSystem> systems) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.atom_id < y.atom_id; });

  std::set<AtomId> ids;
  for (const Atom& atom : atoms) {
    if (atom.atom_id < 1)
      throw Error(Errc::bad_atom_id, "atom id must be positive, got " +
                                         std::to_string(atom.atom_id));
    if (!ids.insert(atom.atom_id).second)
      throw Error(Errc::duplicate_atom_id,
                  "duplicate atom id " + std::to_string(atom.atom_id));
    if (!is_finite(atom.coordinate))
      throw Error(Errc::nonfinite_coordinate, "non-finite coordinate on atom " +
                                                  std::to_string(atom.atom_id));
  }

  for (size_t s = 0; s < systems.size(); ++s) {
    BondingSystem& system = systems[s];
    const std::string where = "system " + std::to_string(s);
    if (system.electrons < 1)
      throw Error(Errc::nonpositive_electrons, where + ": electrons must be positive");
    if (system.edges.empty())
      throw Error(Errc::empty_system, where + ": no edges");
    std::sort(system.edges.begin(), system.edges.end());
    if (std::adjacent_find(system.edges.begin(), system.edges.end()) != system.edges.end())
      throw Error(Errc::duplicate_edge, where + ": duplicate edge");
    for (const Edge& edge : system.edges)
      if (!ids.count(edge.a) || !ids.count(edge.b))
        throw Error(Errc::dangling_edge,
                    where + ": edge " + to_string(edge) + " references a missing atom");
  }

  std::sort(systems.begin(), systems.end(),
            [](const BondingSystem& x, const BondingSystem& y) {
              if (x.electrons != y.electrons) return x.electrons < y.electrons;
              return x.edges < y.edges;
            });

  return Molecule{std::move(atoms), std::move(systems)};
}

// ============================================================================
// Queries
// ============================================================================

bool has_atom(const Molecule& molecule, AtomId id) {
  const auto it = std::lower_bound(
      molecule.atoms.begin(), molecule.atoms.end(), id,
      [](const Atom& atom, AtomId value) { return atom.atom_id < value; });
  return it != molecule.atoms.end() && it->atom_id == id;
}

const Atom& atom_by_id(const Molecule& molecule, AtomId id) {
  const auto it = std::lower_bound(
      molecule.atoms.begin(), molecule.atoms.end(), id,
      [](const Atom& atom, AtomId value) { return atom.atom_id < value; });
  if (it == molecule.atoms.end() || it->atom_id != id)
    throw Error(Errc::unknown_atom, "no atom with id " + std::to_string(id));
  return *it;
}

int unshared_valence_electrons(const Atom& atom) {
  const int beyond_core = total_electrons(atom.shells) -
                          noble_core_electrons(atom.attributes.atomic_number);
  return beyond_core > 0 ? beyond_core : 0;
}

DietzConstitution dietz_constitution(const Molecule& molecule) {
  DietzConstitution out;
  out.vertices.reserve(molecule.atoms.size());
  for (const Atom& atom : molecule.atoms)
    out.vertices.push_back(
        {unshared_valence_electrons(atom), atom.atom_id, atom.attributes.symbol});
  out.systems = molecule.systems;
  return out;
}

std::string to_string(const DietzConstitution& constitution) {
  std::string v = "V = {";
  for (size_t i = 0; i < constitution.vertices.size(); ++i) {
    const DietzVertex& vert = constitution.vertices[i];
    if (i) v += ", ";
    v += "(" + std::to_string(vert.unshared_electrons) + "," +
         std::to_string(vert.atom_id) + "," + to_string(vert.symbol) + ")";
  }
  v += "}";

  std::string b = "B = {";
  for (size_t i = 0; i < constitution.systems.size(); ++i) {
    const BondingSystem& system = constitution.systems[i];
    if (i) b += ", ";
    b += "(" + std::to_string(system.electrons) + ", {";
    for (size_t e = 0; e < system.edges.size(); ++e) {
      if (e) b += ", ";
      b += to_string(system.edges[e]);
    }
    b += "})";
  }
  b += "}";
  return v + "\n" + b;
}

Rational bond_order(const Molecule& molecule, AtomId i, AtomId j) {
  atom_by_id(molecule, i);
  atom_by_id(molecule, j);
  const Edge edge(i, j);
  Rational order;
  for (const BondingSystem& system : molecule.systems)
    if (std::binary_search(system.edges.begin(), system.edges.end(), edge))
      order += Rational(system.electrons, 2 * static_cast<std::int64_t>(system.edges.size()));
  return order;
}

std::set<AtomId> neighbors(const Molecule& molecule, AtomId id) {
  atom_by_id(molecule, id);
  std::set<AtomId> out;
  for (const BondingSystem& system : molecule.systems)
    for (const Edge& edge : system.edges) {
      if (edge.a == id) out.insert(edge.b);
      if (edge.b == id) out.insert(edge.a);
    }
  return out;
}

// ============================================================================
// Value-preserving updates
// ============================================================================

Molecule update_coordinate(const Molecule& molecule, AtomId id, const Coordinate& position) {
  atom_by_id(molecule, id);
  if (!is_finite(position))
    throw Error(Errc::nonfinite_coordinate, "non-finite coordinate");
  Molecule out = molecule;
  for (Atom& atom : out.atoms)
    if (atom.atom_id == id) atom.coordinate = position;
  return out;
}

Molecule relabel_atoms(const Molecule& molecule, const std::map<AtomId, AtomId>& mapping) {
  if (mapping.size() != molecule.atoms.size())
    throw Error(Errc::domain_mismatch, "mapping size differs from atom count");
  std::set<AtomId> image;
  for (const auto& [from, to] : mapping) {
    if (!has_atom(molecule, from))
      throw Error(Errc::domain_mismatch,
                  "mapping names absent atom " + std::to_string(from));
    if (to < 1)
      throw Error(Errc::bad_atom_id, "mapped id must be positive");
    if (!image.insert(to).second)
      throw Error(Errc::not_a_bijection,
                  "two atoms mapped to id " + std::to_string(to));
  }

  std::vector<Atom> atoms = molecule.atoms;
  for (Atom& atom : atoms) atom.atom_id = mapping.at(atom.atom_id);
  std::vector<BondingSystem> systems = molecule.systems;
  for (BondingSystem& system : systems)
    for (Edge& edge : system.edges) edge = Edge(mapping.at(edge.a), mapping.at(edge.b));
  return build_molecule(std::move(atoms), std::move(systems));
}

// ============================================================================
// Lint
// ============================================================================

std::vector<std::string> lint_molecule(const Molecule& molecule) {
  std::vector<std::string> out;
  for (size_t s = 0; s < molecule.systems.size(); ++s) {
    const BondingSystem& system = molecule.systems[s];
    if (!system.delocalized()) continue;

    std::map<AtomId, AtomId> parent;
    auto find = [&](AtomId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Edge& edge : system.edges) {
      parent.try_emplace(edge.a, edge.a);
      parent.try_emplace(edge.b, edge.b);
      parent[find(edge.a)] = find(edge.b);
    }
    std::set<AtomId> roots;
    for (const auto& [id, _] : parent) roots.insert(find(id));
    if (roots.size() > 1)
      out.push_back("system " + std::to_string(s) +
                    ": delocalized edges are not connected");
  }
  return out;
}

}  // namespace moltype
