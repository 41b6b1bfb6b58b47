#include "doctest.h"

#include <map>

#include "moltype/errors.hpp"
#include "moltype/orbitals.hpp"
#include "support/oracles.hpp"

using namespace moltype;

namespace {

// Counts singly and doubly occupied orbitals across every subshell.
std::map<int, int> occupancy_histogram(const Shells& shells) {
  std::map<int, int> counts;
  for (const Shell& shell : shells)
    for (const auto* sub : {&shell.s, &shell.p, &shell.d, &shell.f}) {
      if (!sub->has_value()) continue;
      for (const Orbital& orbital : (*sub)->orbitals) ++counts[orbital.electron_count];
    }
  return counts;
}

}  // namespace

TEST_CASE("ground state configurations match the hand transcription") {
  for (int z = 1; z <= 36; ++z) {
    const Shells shells = ground_state_config(z);
    CAPTURE(z);
    CHECK(compact_config(shells) == oracles::kGroundStateCompact[z - 1]);
    CHECK(total_electrons(shells) == z);
    CHECK(validate_shells(shells).empty());
  }
}

TEST_CASE("ground state rejects atomic numbers outside the table") {
  CHECK_THROWS_AS(ground_state_config(0), Error);
  CHECK_THROWS_AS(ground_state_config(-1), Error);
  CHECK_THROWS_AS(ground_state_config(37), Error);
  try {
    ground_state_config(37);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_z);
  }
}

TEST_CASE("hund filling maximizes singly occupied orbitals") {
  for (const SubShellKind kind :
       {SubShellKind::s, SubShellKind::p, SubShellKind::d, SubShellKind::f}) {
    const int orbitals = subshell_capacity(kind) / 2;
    for (int e = 0; e <= subshell_capacity(kind); ++e) {
      const SubShell sub = hund_fill(kind, e);
      CAPTURE(static_cast<int>(kind));
      CAPTURE(e);
      int singles = 0, total = 0;
      for (const Orbital& orbital : sub.orbitals) {
        CHECK(orbital.electron_count >= 1);
        CHECK(orbital.electron_count <= 2);
        if (orbital.electron_count == 1) ++singles;
        total += orbital.electron_count;
      }
      CHECK(total == e);
      CHECK(singles == oracles::max_unpaired_oracle(e, orbitals));
      CHECK(static_cast<int>(sub.orbitals.size()) == std::min(e, orbitals));
    }
  }
  CHECK_THROWS_AS(hund_fill(SubShellKind::p, 7), Error);
  CHECK_THROWS_AS(hund_fill(SubShellKind::s, -1), Error);
}

TEST_CASE("hund filling pairs up in declaration order") {
  const SubShell p4 = hund_fill(SubShellKind::p, 4);
  REQUIRE(p4.orbitals.size() == 3);
  CHECK(p4.orbitals[0].label == OrbitalLabel::Px);
  CHECK(p4.orbitals[0].electron_count == 2);
  CHECK(p4.orbitals[1].label == OrbitalLabel::Py);
  CHECK(p4.orbitals[1].electron_count == 1);
  CHECK(p4.orbitals[2].label == OrbitalLabel::Pz);
  CHECK(p4.orbitals[2].electron_count == 1);
}

TEST_CASE("carbon ground state has two unpaired p electrons on axes") {
  const Shells carbon = ground_state_config(6);
  CHECK(compact_config(carbon) == "1s2.2s2.2p2");
  REQUIRE(carbon.size() == 2);
  REQUIRE(carbon[1].p.has_value());
  const auto& p = carbon[1].p->orbitals;
  REQUIRE(p.size() == 2);
  CHECK(p[0].label == OrbitalLabel::Px);
  CHECK(p[0].electron_count == 1);
  CHECK(p[0].orientation == Coordinate{1.0, 0.0, 0.0});
  CHECK(p[1].label == OrbitalLabel::Py);
  CHECK(p[1].electron_count == 1);
  CHECK(p[1].orientation == Coordinate{0.0, 1.0, 0.0});
  CHECK_FALSE(p[0].hybrid_components.has_value());

  const auto histogram = occupancy_histogram(carbon);
  CHECK(histogram.at(1) == 2);
  CHECK(histogram.at(2) == 2);
}

TEST_CASE("s orbitals never carry an orientation") {
  for (int z = 1; z <= 36; ++z)
    for (const Shell& shell : ground_state_config(z)) {
      if (!shell.s) continue;
      for (const Orbital& orbital : shell.s->orbitals)
        CHECK_FALSE(orbital.orientation.has_value());
    }
  CHECK(default_orientation(OrbitalLabel::S) == std::nullopt);
  CHECK(default_orientation(OrbitalLabel::Pz) == Coordinate{0.0, 0.0, 1.0});
  CHECK(default_orientation(OrbitalLabel::Dxy) == std::nullopt);
}

TEST_CASE("fill_config covers bookkeeping range and empty counts") {
  CHECK(fill_config(0).empty());
  CHECK(compact_config(fill_config(6)) == "1s2.2s2.2p2");
  CHECK(total_electrons(fill_config(53)) == 53);
  CHECK(total_electrons(fill_config(86)) == 86);
  CHECK(validate_shells(fill_config(53)).empty());
  CHECK_THROWS_AS(fill_config(87), Error);
  CHECK_THROWS_AS(fill_config(-1), Error);
}

TEST_CASE("validate_shells flags each rule") {
  auto single = [](Shell shell) { return Shells{shell}; };

  SUBCASE("pauli") {
    // Three electrons in one s orbital also overflow the subshell, so both
    // rules fire.
    Shell shell{1, SubShell{{{OrbitalLabel::S, 3, {}, {}}}}, {}, {}, {}};
    const auto violations = validate_shells(single(shell));
    REQUIRE(violations.size() == 2);
    bool pauli = false;
    bool capacity = false;
    for (const auto& v : violations) {
      if (v.rule == Violation::Rule::PauliExceeded) pauli = true;
      if (v.rule == Violation::Rule::CapacityExceeded) capacity = true;
    }
    CHECK(pauli);
    CHECK(capacity);
  }
  SUBCASE("negative electron count") {
    Shell shell{1, SubShell{{{OrbitalLabel::S, -1, {}, {}}}}, {}, {}, {}};
    const auto violations = validate_shells(single(shell));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == Violation::Rule::NegativeElectronCount);
  }
  SUBCASE("subshell below its first shell") {
    Shell shell{1, {}, SubShell{{{OrbitalLabel::Px, 1, {}, {}}}}, {}, {}};
    const auto violations = validate_shells(single(shell));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == Violation::Rule::SubshellBeforeAllowedN);
  }
  SUBCASE("duplicate label") {
    Shell shell{2, {},
                SubShell{{{OrbitalLabel::Px, 1, {}, {}}, {OrbitalLabel::Px, 1, {}, {}}}},
                {}, {}};
    const auto violations = validate_shells(single(shell));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == Violation::Rule::DuplicateLabel);
  }
  SUBCASE("oriented s orbital") {
    Shell shell{1, SubShell{{{OrbitalLabel::S, 1, Coordinate{0, 0, 1}, {}}}}, {}, {}, {}};
    const auto violations = validate_shells(single(shell));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == Violation::Rule::OrientedSOrbital);
  }
  SUBCASE("bad hybrid norm") {
    Shell shell{1,
                SubShell{{{OrbitalLabel::S, 1, {},
                           std::vector<HybridComponent>{{0.5, OrbitalLabel::S}}}}},
                {}, {}, {}};
    const auto violations = validate_shells(single(shell));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == Violation::Rule::BadHybridNorm);
  }
  SUBCASE("wrong kind in a slot") {
    Shell shell{2, SubShell{{{OrbitalLabel::Px, 1, {}, {}}}}, {}, {}, {}};
    const auto violations = validate_shells(single(shell));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == Violation::Rule::WrongKindLabel);
  }
  SUBCASE("capacity by orbital count") {
    Shell shell{2, {},
                SubShell{{{OrbitalLabel::Px, 1, {}, {}},
                          {OrbitalLabel::Py, 1, {}, {}},
                          {OrbitalLabel::Pz, 1, {}, {}},
                          {OrbitalLabel::Px, 1, {}, {}}}},
                {}, {}};
    const auto violations = validate_shells(single(shell));
    bool capacity = false;
    for (const auto& v : violations)
      if (v.rule == Violation::Rule::CapacityExceeded) capacity = true;
    CHECK(capacity);
  }
  SUBCASE("non-monotonic shells") {
    const Shells shells = {Shell{2, {}, {}, {}, {}}, Shell{1, {}, {}, {}, {}}};
    const auto violations = validate_shells(shells);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == Violation::Rule::NonMonotonicShells);
  }
  SUBCASE("n below one") {
    const auto violations = validate_shells({Shell{0, {}, {}, {}, {}}});
    REQUIRE_FALSE(violations.empty());
    CHECK(violations[0].rule == Violation::Rule::NonMonotonicShells);
  }
  SUBCASE("valid hybrid passes") {
    std::vector<HybridComponent> mix = {{0.5, OrbitalLabel::S},
                                        {0.5, OrbitalLabel::Px},
                                        {0.5, OrbitalLabel::Py},
                                        {0.5, OrbitalLabel::Pz}};
    Shell shell{2, SubShell{{{OrbitalLabel::S, 2, {}, mix}}}, {}, {}, {}};
    CHECK(validate_shells(single(shell)).empty());
  }
}

TEST_CASE("compact rendering walks shells in declaration order") {
  CHECK(compact_config({}) == "");
  CHECK(compact_config({Shell{1, {}, {}, {}, {}}}) == "1x");
  const Shells mixed = {Shell{1, hund_fill(SubShellKind::s, 2), {}, {}, {}},
                        Shell{2, {}, {}, {}, {}}};
  CHECK(compact_config(mixed) == "1s2.2x");
}

TEST_CASE("orbital labels map to kinds and text") {
  CHECK(kind_of(OrbitalLabel::S) == SubShellKind::s);
  CHECK(kind_of(OrbitalLabel::Pz) == SubShellKind::p);
  CHECK(kind_of(OrbitalLabel::Dz2) == SubShellKind::d);
  CHECK(kind_of(OrbitalLabel::Fxyz) == SubShellKind::f);
  for (const SubShellKind kind :
       {SubShellKind::s, SubShellKind::p, SubShellKind::d, SubShellKind::f}) {
    const auto& labels = labels_of_kind(kind);
    CHECK(static_cast<int>(labels.size()) == subshell_capacity(kind) / 2);
    for (const OrbitalLabel label : labels) {
      CHECK(kind_of(label) == kind);
      CHECK(orbital_label_from_string(to_string(label)) == label);
    }
  }
  CHECK_FALSE(orbital_label_from_string("Pq").has_value());
}
