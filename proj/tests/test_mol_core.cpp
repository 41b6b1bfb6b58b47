#include "doctest.h"

#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "moltype/errors.hpp"
#include "moltype/mol_core.hpp"
#include "moltype/orbitals.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace moltype;
using fixtures::make_atom;

namespace {

Errc code_of(const std::function<void()>& op) {
  try {
    op();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::bad_atom_id;
}

}  // namespace

TEST_CASE("hydrogen constitution matches the two-vertex multigraph") {
  const Molecule m = fixtures::h2();
  const DietzConstitution c = dietz_constitution(m);

  REQUIRE(c.vertices.size() == 2);
  CHECK(c.vertices[0] == DietzVertex{0, 1, AtomicSymbol::H});
  CHECK(c.vertices[1] == DietzVertex{0, 2, AtomicSymbol::H});
  REQUIRE(c.systems.size() == 1);
  CHECK(c.systems[0].electrons == 2);
  CHECK(c.systems[0].edges == std::vector<Edge>{Edge(1, 2)});
  CHECK_FALSE(c.systems[0].delocalized());

  CHECK(to_string(c) == "V = {(0,1,H), (0,2,H)}\nB = {(2, {{1,2}})}");
}

TEST_CASE("benzene constitution separates sigma skeleton from the pi system") {
  const Molecule m = fixtures::benzene();
  const DietzConstitution c = dietz_constitution(m);

  REQUIRE(c.vertices.size() == 12);
  for (const DietzVertex& v : c.vertices) CHECK(v.unshared_electrons == 0);
  for (int i = 0; i < 6; ++i) CHECK(c.vertices[i].symbol == AtomicSymbol::C);
  for (int i = 6; i < 12; ++i) CHECK(c.vertices[i].symbol == AtomicSymbol::H);

  REQUIRE(c.systems.size() == 13);
  int localized = 0;
  for (const BondingSystem& system : c.systems)
    if (!system.delocalized()) {
      CHECK(system.electrons == 2);
      ++localized;
    }
  CHECK(localized == 12);
  const BondingSystem& pi = c.systems.back();
  CHECK(pi.electrons == 6);
  CHECK(pi.edges.size() == 6);
  CHECK(pi.edges == std::vector<Edge>{Edge(1, 2), Edge(1, 6), Edge(2, 3), Edge(3, 4),
                                      Edge(4, 5), Edge(5, 6)});
  CHECK(net_charge(m) == 0);
}

TEST_CASE("build_molecule canonicalizes member order") {
  const Molecule a = build_molecule(
      {make_atom(2, AtomicSymbol::H, {0, 0, 0.74}), make_atom(1, AtomicSymbol::H, {0, 0, 0})},
      {{2, {Edge(2, 1)}}});
  CHECK(a == fixtures::h2());

  const Molecule scrambled = build_molecule(
      {make_atom(3, AtomicSymbol::O, {1, 0, 0}), make_atom(1, AtomicSymbol::C, {0, 0, 0}),
       make_atom(2, AtomicSymbol::C, {0.5, 0, 0})},
      {{4, {Edge(2, 3)}}, {2, {Edge(1, 2)}}, {2, {Edge(2, 3)}}});
  CHECK(scrambled.atoms[0].atom_id == 1);
  CHECK(scrambled.atoms[2].atom_id == 3);
  CHECK(scrambled.systems[0].electrons == 2);
  CHECK(scrambled.systems[0].edges.front() == Edge(1, 2));
  CHECK(scrambled.systems[1].electrons == 2);
  CHECK(scrambled.systems[1].edges.front() == Edge(2, 3));
  CHECK(scrambled.systems[2].electrons == 4);
}

TEST_CASE("build_molecule rejects each invariant breach") {
  const auto h = [](AtomId id) { return make_atom(id, AtomicSymbol::H, {0, 0, 0}); };
  const auto h_at = [](AtomId id, double z) {
    return make_atom(id, AtomicSymbol::H, {0, 0, z});
  };

  CHECK(code_of([&] { build_molecule({h(0)}, {}); }) == Errc::bad_atom_id);
  CHECK(code_of([&] { build_molecule({h(-3)}, {}); }) == Errc::bad_atom_id);
  CHECK(code_of([&] { build_molecule({h(1), h(1)}, {}); }) == Errc::duplicate_atom_id);
  CHECK_THROWS_AS(Edge(2, 2), Error);
  CHECK(code_of([&] {
          build_molecule({h(1), h_at(2, 1.0)}, {{2, {Edge(1, 2), Edge(2, 1)}}});
        }) == Errc::duplicate_edge);
  CHECK(code_of([&] { build_molecule({h(1), h_at(2, 1.0)}, {{2, {}}}); }) ==
        Errc::empty_system);
  CHECK(code_of([&] { build_molecule({h(1), h_at(2, 1.0)}, {{0, {Edge(1, 2)}}}); }) ==
        Errc::nonpositive_electrons);
  CHECK(code_of([&] { build_molecule({h(1), h_at(2, 1.0)}, {{-2, {Edge(1, 2)}}}); }) ==
        Errc::nonpositive_electrons);
  CHECK(code_of([&] { build_molecule({h(1), h_at(2, 1.0)}, {{2, {Edge(1, 3)}}}); }) ==
        Errc::dangling_edge);
  CHECK(code_of([&] {
          build_molecule({make_atom(1, AtomicSymbol::H,
                                    {std::numeric_limits<double>::infinity(), 0, 0})},
                         {});
        }) == Errc::nonfinite_coordinate);
  CHECK(code_of([&] {
          build_molecule({make_atom(1, AtomicSymbol::H,
                                    {0, std::nan(""), 0})},
                         {});
        }) == Errc::nonfinite_coordinate);
}

TEST_CASE("bond orders are exact fractions") {
  const Molecule benzene = fixtures::benzene();

  CHECK(bond_order(fixtures::h2(), 1, 2) == Rational(1));
  CHECK(bond_order(benzene, 1, 2) == Rational(3, 2));
  CHECK(bond_order(benzene, 2, 1) == Rational(3, 2));
  CHECK(bond_order(benzene, 1, 7) == Rational(1));
  CHECK(bond_order(benzene, 1, 3) == Rational(0));
  CHECK(bond_order(benzene, 1, 4) == Rational(0));
  CHECK(bond_order(benzene, 7, 8) == Rational(0));
  CHECK(bond_order(benzene, 1, 2).str() == "3/2");

  CHECK(bond_order(fixtures::o2(), 1, 2) == Rational(2));

  CHECK_THROWS_AS(bond_order(benzene, 1, 99), Error);
  CHECK_THROWS_AS(bond_order(benzene, 99, 1), Error);
}

TEST_CASE("bond orders agree with a brute-force fraction oracle") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const Molecule m = oracles::random_molecule(rng);
    for (size_t i = 0; i < m.atoms.size(); ++i)
      for (size_t j = i + 1; j < m.atoms.size(); ++j) {
        const AtomId a = m.atoms[i].atom_id;
        const AtomId b = m.atoms[j].atom_id;
        const Rational got = bond_order(m, a, b);
        const oracles::Fraction expected = oracles::bond_order_oracle(m, a, b);
        CAPTURE(trial);
        CHECK(got.num() == expected.num);
        CHECK(got.den() == expected.den);
      }
  }
}

TEST_CASE("neighbors collects every edge incidence") {
  const Molecule benzene = fixtures::benzene();
  CHECK(neighbors(benzene, 1) == std::set<AtomId>{2, 6, 7});
  CHECK(neighbors(benzene, 7) == std::set<AtomId>{1});
  CHECK(neighbors(fixtures::water(), 1) == std::set<AtomId>{2, 3});
  CHECK(neighbors(fixtures::water(), 2) == std::set<AtomId>{1});
  CHECK_THROWS_AS(neighbors(benzene, 42), Error);
}

TEST_CASE("unshared electrons come from shells beyond the core") {
  CHECK(unshared_valence_electrons(atom_by_id(fixtures::water(), 1)) == 4);
  CHECK(unshared_valence_electrons(atom_by_id(fixtures::water(), 2)) == 0);
  CHECK(unshared_valence_electrons(atom_by_id(fixtures::benzene(), 1)) == 0);

  // An isolated ground-state carbon keeps all four valence electrons.
  const Atom carbon = make_atom(1, AtomicSymbol::C, {0, 0, 0}, ground_state_config(6));
  CHECK(unshared_valence_electrons(carbon) == 4);

  // Fewer shell electrons than the core clamps at zero.
  const Atom bare = make_atom(1, AtomicSymbol::C, {0, 0, 0}, fill_config(1));
  CHECK(unshared_valence_electrons(bare) == 0);
}

TEST_CASE("net charge counts protons against all held electrons") {
  const Molecule cation = build_molecule(
      {make_atom(1, AtomicSymbol::C, {0, 0, 0}, fill_config(5))}, {});
  CHECK(net_charge(cation) == 1);

  const Molecule anion = build_molecule(
      {make_atom(1, AtomicSymbol::Cl, {0, 0, 0}, fill_config(18))}, {});
  CHECK(net_charge(anion) == -1);

  CHECK(net_charge(fixtures::h2()) == 0);
  CHECK(net_charge(fixtures::water()) == 0);
  CHECK(net_charge(fixtures::o2()) == 0);
}

TEST_CASE("update_coordinate is persistent") {
  const Molecule water = fixtures::water();
  const Molecule moved = update_coordinate(water, 2, {1.0, 1.0, 1.0});
  CHECK(atom_by_id(moved, 2).coordinate == Coordinate{1.0, 1.0, 1.0});
  CHECK(atom_by_id(water, 2).coordinate == Coordinate{0.9572, 0.0, 0.0});
  CHECK(atom_by_id(moved, 1).coordinate == atom_by_id(water, 1).coordinate);
  CHECK(moved.systems == water.systems);

  CHECK_THROWS_AS(update_coordinate(water, 9, {0, 0, 0}), Error);
  CHECK(code_of([&] {
          update_coordinate(water, 1, {std::numeric_limits<double>::quiet_NaN(), 0, 0});
        }) == Errc::nonfinite_coordinate);
}

TEST_CASE("relabeling atoms preserves structure") {
  const Molecule benzene = fixtures::benzene();

  std::map<AtomId, AtomId> identity;
  for (const Atom& atom : benzene.atoms) identity[atom.atom_id] = atom.atom_id;
  CHECK(relabel_atoms(benzene, identity) == benzene);

  // Rotate carbon labels one step around the ring, hydrogens along.
  std::map<AtomId, AtomId> rotate;
  for (AtomId id = 1; id <= 6; ++id) rotate[id] = id == 6 ? 1 : id + 1;
  for (AtomId id = 7; id <= 12; ++id) rotate[id] = id == 12 ? 7 : id + 1;
  const Molecule rotated = relabel_atoms(benzene, rotate);

  CHECK(rotated.atoms.size() == benzene.atoms.size());
  CHECK(bond_order(rotated, 2, 3) == Rational(3, 2));
  CHECK(bond_order(rotated, 2, 8) == Rational(1));
  CHECK(atom_by_id(rotated, 2).coordinate == atom_by_id(benzene, 1).coordinate);
  CHECK(dietz_constitution(rotated).systems.size() == 13);

  // Bond orders are invariant under the renaming.
  for (const Atom& a : benzene.atoms)
    for (const Atom& b : benzene.atoms) {
      if (a.atom_id >= b.atom_id) continue;
      CHECK(bond_order(benzene, a.atom_id, b.atom_id) ==
            bond_order(rotated, rotate.at(a.atom_id), rotate.at(b.atom_id)));
    }
}

TEST_CASE("relabeling rejects non-bijective or mismatched mappings") {
  const Molecule water = fixtures::water();

  CHECK(code_of([&] { relabel_atoms(water, {{1, 5}, {2, 6}}); }) == Errc::domain_mismatch);
  CHECK(code_of([&] { relabel_atoms(water, {{1, 5}, {2, 6}, {9, 7}}); }) ==
        Errc::domain_mismatch);
  CHECK(code_of([&] { relabel_atoms(water, {{1, 5}, {2, 5}, {3, 6}}); }) ==
        Errc::not_a_bijection);
  CHECK(code_of([&] { relabel_atoms(water, {{1, 0}, {2, 5}, {3, 6}}); }) ==
        Errc::bad_atom_id);

  // Swapping two ids is a legal bijection.
  const Molecule swapped = relabel_atoms(water, {{1, 3}, {2, 2}, {3, 1}});
  CHECK(atom_by_id(swapped, 3).attributes.symbol == AtomicSymbol::O);
  CHECK(bond_order(swapped, 3, 2) == Rational(1));
}

TEST_CASE("lint flags disconnected delocalized systems") {
  const Molecule ok = fixtures::benzene();
  CHECK(lint_molecule(ok).empty());

  const Molecule split = build_molecule(
      {make_atom(1, AtomicSymbol::C, {0, 0, 0}), make_atom(2, AtomicSymbol::C, {1, 0, 0}),
       make_atom(3, AtomicSymbol::C, {2, 0, 0}), make_atom(4, AtomicSymbol::C, {3, 0, 0})},
      {{4, {Edge(1, 2), Edge(3, 4)}}});
  const auto findings = lint_molecule(split);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].find("not connected") != std::string::npos);
}

TEST_CASE("atom lookup is by id, not position") {
  std::mt19937_64 rng(7);
  const Molecule sparse = build_molecule(
      {make_atom(10, AtomicSymbol::C, {0, 0, 0}), make_atom(20, AtomicSymbol::N, {1, 0, 0}),
       make_atom(30, AtomicSymbol::O, {2, 0, 0})},
      {{2, {Edge(10, 30)}}});
  CHECK(atom_by_id(sparse, 20).attributes.symbol == AtomicSymbol::N);
  CHECK(has_atom(sparse, 30));
  CHECK_FALSE(has_atom(sparse, 3));
  CHECK(bond_order(sparse, 10, 30) == Rational(1));
  CHECK_THROWS_AS(atom_by_id(sparse, 15), Error);
}
