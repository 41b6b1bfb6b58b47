#ifndef MOLTYPE_TESTS_FIXTURES_HPP
#define MOLTYPE_TESTS_FIXTURES_HPP

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "moltype/geometry.hpp"
#include "moltype/mol_core.hpp"
#include "moltype/mol_io.hpp"
#include "moltype/orbitals.hpp"

namespace fixtures {

inline moltype::Atom make_atom(moltype::AtomId id, moltype::AtomicSymbol symbol,
                               moltype::Coordinate coordinate,
                               moltype::Shells shells = {}) {
  return {id, moltype::element_attributes(symbol), coordinate, std::move(shells)};
}

// H2: two hydrogens 0.74 apart sharing one 2-electron system.
inline moltype::Molecule h2() {
  using moltype::AtomicSymbol;
  return moltype::build_molecule(
      {make_atom(1, AtomicSymbol::H, {0.0, 0.0, 0.0}),
       make_atom(2, AtomicSymbol::H, {0.0, 0.0, 0.74})},
      {{2, {moltype::Edge(1, 2)}}});
}

// Water with experimental-ish geometry; oxygen keeps core + 4 unshared
// electrons (1s2.2s2.2p2 as bookkeeping shells).
inline moltype::Molecule water() {
  using moltype::AtomicSymbol;
  return moltype::build_molecule(
      {make_atom(1, AtomicSymbol::O, {0.0, 0.0, 0.0}, moltype::fill_config(6)),
       make_atom(2, AtomicSymbol::H, {0.9572, 0.0, 0.0}),
       make_atom(3, AtomicSymbol::H, {-0.24, 0.9266, 0.0})},
      {{2, {moltype::Edge(1, 2)}}, {2, {moltype::Edge(1, 3)}}});
}

namespace detail {

inline moltype::Molecule benzene_from_coordinates(
    const std::vector<moltype::Coordinate>& carbons,
    const std::vector<moltype::Coordinate>& hydrogens) {
  using moltype::AtomicSymbol;
  std::vector<moltype::Atom> atoms;
  std::vector<moltype::BondingSystem> systems;
  for (int k = 0; k < 6; ++k) {
    atoms.push_back(
        make_atom(k + 1, AtomicSymbol::C, carbons[k], moltype::fill_config(2)));
    atoms.push_back(make_atom(k + 7, AtomicSymbol::H, hydrogens[k]));
    systems.push_back({2, {moltype::Edge(k + 1, k == 5 ? 1 : k + 2)}});
    systems.push_back({2, {moltype::Edge(k + 1, k + 7)}});
  }
  systems.push_back(
      {6,
       {moltype::Edge(1, 2), moltype::Edge(2, 3), moltype::Edge(3, 4),
        moltype::Edge(4, 5), moltype::Edge(5, 6), moltype::Edge(6, 1)}});
  return moltype::build_molecule(std::move(atoms), std::move(systems));
}

}  // namespace detail

// Benzene with the 4-decimal literature coordinates: carbons 1..6 around the
// ring, hydrogens 7..12, one 6-electron pi system over the ring edges.
inline moltype::Molecule benzene() {
  return detail::benzene_from_coordinates(
      {{0.0, 1.3948, 0.0},
       {1.2079, 0.6974, 0.0},
       {1.2079, -0.6974, 0.0},
       {0.0, -1.3948, 0.0},
       {-1.2079, -0.6974, 0.0},
       {-1.2079, 0.6974, 0.0}},
      {{0.0, 2.4732, 0.0},
       {2.1431, 1.2366, 0.0},
       {2.1431, -1.2366, 0.0},
       {0.0, -2.4732, 0.0},
       {-2.1431, -1.2366, 0.0},
       {-2.1431, 1.2366, 0.0}});
}

// Exactly D6h-symmetric benzene: both rings generated from machine-precision
// trig so a pi/3 rotation about z maps the point set onto itself to rounding
// error. The 4-decimal fixture above misses that by ~1e-3.
inline moltype::Molecule benzene_hexagonal() {
  const double rc = 1.3948;
  const double rh = 2.4732;
  std::vector<moltype::Coordinate> carbons;
  std::vector<moltype::Coordinate> hydrogens;
  const double pi = std::acos(-1.0);
  for (int k = 0; k < 6; ++k) {
    const double theta = pi / 2.0 - k * pi / 3.0;
    carbons.push_back({rc * std::cos(theta), rc * std::sin(theta), 0.0});
    hydrogens.push_back({rh * std::cos(theta), rh * std::sin(theta), 0.0});
  }
  return detail::benzene_from_coordinates(carbons, hydrogens);
}

// O2 with a 4-electron double bond; each oxygen keeps 6 bookkeeping
// electrons (core 2 + unshared 4).
inline moltype::Molecule o2() {
  using moltype::AtomicSymbol;
  return moltype::build_molecule(
      {make_atom(1, AtomicSymbol::O, {0.0, 0.0, 0.0}, moltype::fill_config(6)),
       make_atom(2, AtomicSymbol::O, {0.0, 0.0, 1.21}, moltype::fill_config(6))},
      {{4, {moltype::Edge(1, 2)}}});
}

inline std::string fixture_path(const std::string& name) {
  return std::string(MOLTYPE_FIXTURES_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string read_fixture(const std::string& name) {
  return read_file(fixture_path(name));
}

}  // namespace fixtures

#endif
