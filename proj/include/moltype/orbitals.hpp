#ifndef MOLTYPE_ORBITALS_HPP
#define MOLTYPE_ORBITALS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moltype/coordinate.hpp"

namespace moltype {

struct Molecule;

// ============================================================================
// Types
// ============================================================================

enum class SubShellKind { s, p, d, f };

enum class OrbitalLabel {
  S,
  Px,
  Py,
  Pz,
  Dxy,
  Dyz,
  Dxz,
  Dx2y2,
  Dz2,
  Fxxx,
  Fxxy,
  Fxxz,
  Fxyy,
  Fxyz,
  Fxzz,
  Fzzz,
};

struct HybridComponent {
  double weight = 0.0;
  OrbitalLabel label = OrbitalLabel::S;

  bool operator==(const HybridComponent&) const = default;
};

struct Orbital {
  OrbitalLabel label = OrbitalLabel::S;
  int electron_count = 0;  // 0..2
  std::optional<Coordinate> orientation;  // absent for S
  std::optional<std::vector<HybridComponent>> hybrid_components;

  bool operator==(const Orbital&) const = default;
};

struct SubShell {
  std::vector<Orbital> orbitals;

  bool operator==(const SubShell&) const = default;
};

struct Shell {
  int n = 1;
  std::optional<SubShell> s;
  std::optional<SubShell> p;
  std::optional<SubShell> d;
  std::optional<SubShell> f;

  bool operator==(const Shell&) const = default;
};

// Ordered by strictly increasing principal quantum number.
using Shells = std::vector<Shell>;

// ============================================================================
// Label helpers
// ============================================================================

SubShellKind kind_of(OrbitalLabel label);
std::string to_string(OrbitalLabel label);
std::optional<OrbitalLabel> orbital_label_from_string(std::string_view token);
char kind_letter(SubShellKind kind);
int subshell_capacity(SubShellKind kind);  // electrons: s 2, p 6, d 10, f 14
int min_shell_for(SubShellKind kind);      // s 1, p 2, d 3, f 4

// Default spatial orientation for a label: axis unit vectors for p orbitals,
// absent for everything else.
std::optional<Coordinate> default_orientation(OrbitalLabel label);

// All labels of one kind, in fill order (Px, Py, Pz, ...).
const std::vector<OrbitalLabel>& labels_of_kind(SubShellKind kind);

// ============================================================================
// Validation
// ============================================================================

struct Violation {
  enum class Rule {
    PauliExceeded,          // orbital holds more than two electrons
    CapacityExceeded,       // subshell over orbital or electron capacity
    SubshellBeforeAllowedN, // e.g. a p subshell in shell n=1
    DuplicateLabel,         // same orbital label twice in one subshell
    OrientedSOrbital,       // s orbitals carry no orientation
    BadHybridNorm,          // sum of squared weights differs from 1
    WrongKindLabel,         // label kind does not match its subshell slot
    NonMonotonicShells,     // shell n values not strictly increasing, or n < 1
    NegativeElectronCount,
  };

  Rule rule;
  std::string where;

  bool operator==(const Violation&) const = default;
};

std::string to_string(Violation::Rule rule);

// Total check; never throws. Empty result means the shells are well formed.
std::vector<Violation> validate_shells(const Shells& shells);

// ============================================================================
// Construction and counting
// ============================================================================

// Aufbau ground state for 1 <= z <= 36 (Madelung order, Hund filling).
Shells ground_state_config(int z);

// Like ground_state_config but for a raw electron count 0..86; used for
// in-molecule bookkeeping shells (core + unshared electrons).
Shells fill_config(int electrons);

int total_electrons(const Shells& shells);
int total_electrons(const SubShell& subshell);

// Compact rendering, e.g. "1s2.2s2.2p2"; empty shells render as "1x".
std::string compact_config(const Shells& shells);

// Hund-canonical occupancy of one subshell: singly occupy labels in fill
// order, then pair; orbitals carry default orientations and no hybrids.
SubShell hund_fill(SubShellKind kind, int electrons);

// Formal charge bookkeeping: sum of atomic numbers minus all electrons held
// in shells or bonding systems.
int net_charge(const Molecule& molecule);

}  // namespace moltype

#endif
