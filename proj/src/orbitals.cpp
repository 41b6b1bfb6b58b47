#include "moltype/orbitals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "moltype/errors.hpp"
#include "moltype/mol_core.hpp"

namespace moltype {

namespace {

struct LabelEntry {
  OrbitalLabel label;
  const char* name;
  SubShellKind kind;
};

constexpr std::array<LabelEntry, 16> kLabels = {{
    {OrbitalLabel::S, "S", SubShellKind::s},
    {OrbitalLabel::Px, "Px", SubShellKind::p},
    {OrbitalLabel::Py, "Py", SubShellKind::p},
    {OrbitalLabel::Pz, "Pz", SubShellKind::p},
    {OrbitalLabel::Dxy, "Dxy", SubShellKind::d},
    {OrbitalLabel::Dyz, "Dyz", SubShellKind::d},
    {OrbitalLabel::Dxz, "Dxz", SubShellKind::d},
    {OrbitalLabel::Dx2y2, "Dx2y2", SubShellKind::d},
    {OrbitalLabel::Dz2, "Dz2", SubShellKind::d},
    {OrbitalLabel::Fxxx, "Fxxx", SubShellKind::f},
    {OrbitalLabel::Fxxy, "Fxxy", SubShellKind::f},
    {OrbitalLabel::Fxxz, "Fxxz", SubShellKind::f},
    {OrbitalLabel::Fxyy, "Fxyy", SubShellKind::f},
    {OrbitalLabel::Fxyz, "Fxyz", SubShellKind::f},
    {OrbitalLabel::Fxzz, "Fxzz", SubShellKind::f},
    {OrbitalLabel::Fzzz, "Fzzz", SubShellKind::f},
}};

const LabelEntry& entry(OrbitalLabel label) {
  return kLabels[static_cast<size_t>(label)];
}

constexpr int kSubshellKinds = 4;

const std::optional<SubShell>& slot(const Shell& shell, SubShellKind kind) {
  switch (kind) {
    case SubShellKind::s: return shell.s;
    case SubShellKind::p: return shell.p;
    case SubShellKind::d: return shell.d;
    default: return shell.f;
  }
}

std::optional<SubShell>& slot(Shell& shell, SubShellKind kind) {
  switch (kind) {
    case SubShellKind::s: return shell.s;
    case SubShellKind::p: return shell.p;
    case SubShellKind::d: return shell.d;
    default: return shell.f;
  }
}

std::string subshell_location(int n, SubShellKind kind) {
  return std::string("shell ") + std::to_string(n) + kind_letter(kind);
}

}  // namespace

// ============================================================================
// Label helpers
// ============================================================================

SubShellKind kind_of(OrbitalLabel label) { return entry(label).kind; }

std::string to_string(OrbitalLabel label) { return entry(label).name; }

std::optional<OrbitalLabel> orbital_label_from_string(std::string_view token) {
  for (const auto& e : kLabels)
    if (token == e.name) return e.label;
  return std::nullopt;
}

char kind_letter(SubShellKind kind) {
  switch (kind) {
    case SubShellKind::s: return 's';
    case SubShellKind::p: return 'p';
    case SubShellKind::d: return 'd';
    default: return 'f';
  }
}

int subshell_capacity(SubShellKind kind) {
  switch (kind) {
    case SubShellKind::s: return 2;
    case SubShellKind::p: return 6;
    case SubShellKind::d: return 10;
    default: return 14;
  }
}

int min_shell_for(SubShellKind kind) {
  return static_cast<int>(kind) + 1;
}

std::optional<Coordinate> default_orientation(OrbitalLabel label) {
  switch (label) {
    case OrbitalLabel::Px: return Coordinate{1.0, 0.0, 0.0};
    case OrbitalLabel::Py: return Coordinate{0.0, 1.0, 0.0};
    case OrbitalLabel::Pz: return Coordinate{0.0, 0.0, 1.0};
    default: return std::nullopt;
  }
}

const std::vector<OrbitalLabel>& labels_of_kind(SubShellKind kind) {
  static const std::vector<OrbitalLabel> by_kind[kSubshellKinds] = {
      {OrbitalLabel::S},
      {OrbitalLabel::Px, OrbitalLabel::Py, OrbitalLabel::Pz},
      {OrbitalLabel::Dxy, OrbitalLabel::Dyz, OrbitalLabel::Dxz,
       OrbitalLabel::Dx2y2, OrbitalLabel::Dz2},
      {OrbitalLabel::Fxxx, OrbitalLabel::Fxxy, OrbitalLabel::Fxxz,
       OrbitalLabel::Fxyy, OrbitalLabel::Fxyz, OrbitalLabel::Fxzz,
       OrbitalLabel::Fzzz},
  };
  return by_kind[static_cast<int>(kind)];
}

// ============================================================================
// Validation
// ============================================================================

std::string to_string(Violation::Rule rule) {
  switch (rule) {
    case Violation::Rule::PauliExceeded: return "PauliExceeded";
    case Violation::Rule::CapacityExceeded: return "CapacityExceeded";
    case Violation::Rule::SubshellBeforeAllowedN: return "SubshellBeforeAllowedN";
    case Violation::Rule::DuplicateLabel: return "DuplicateLabel";
    case Violation::Rule::OrientedSOrbital: return "OrientedSOrbital";
    case Violation::Rule::BadHybridNorm: return "BadHybridNorm";
    case Violation::Rule::WrongKindLabel: return "WrongKindLabel";
    case Violation::Rule::NonMonotonicShells: return "NonMonotonicShells";
    default: return "NegativeElectronCount";
  }
}

std::vector<Violation> validate_shells(const Shells& shells) {
  std::vector<Violation> out;
  int previous_n = 0;
  for (const Shell& shell : shells) {
    if (shell.n < 1 || shell.n <= previous_n)
      out.push_back({Violation::Rule::NonMonotonicShells,
                     "shell " + std::to_string(shell.n)});
    previous_n = shell.n;

    for (int k = 0; k < kSubshellKinds; ++k) {
      const auto kind = static_cast<SubShellKind>(k);
      const auto& sub = slot(shell, kind);
      if (!sub) continue;
      const std::string loc = subshell_location(shell.n, kind);

      if (shell.n < min_shell_for(kind))
        out.push_back({Violation::Rule::SubshellBeforeAllowedN, loc});

      const int capacity = subshell_capacity(kind);
      if (static_cast<int>(sub->orbitals.size()) > capacity / 2 ||
          total_electrons(*sub) > capacity)
        out.push_back({Violation::Rule::CapacityExceeded, loc});

      std::vector<OrbitalLabel> seen;
      for (const Orbital& orb : sub->orbitals) {
        const std::string orb_loc = loc + " " + to_string(orb.label);
        if (orb.electron_count > 2)
          out.push_back({Violation::Rule::PauliExceeded, orb_loc});
        if (orb.electron_count < 0)
          out.push_back({Violation::Rule::NegativeElectronCount, orb_loc});
        if (kind_of(orb.label) != kind)
          out.push_back({Violation::Rule::WrongKindLabel, orb_loc});
        if (std::find(seen.begin(), seen.end(), orb.label) != seen.end())
          out.push_back({Violation::Rule::DuplicateLabel, orb_loc});
        seen.push_back(orb.label);
        if (orb.label == OrbitalLabel::S && orb.orientation)
          out.push_back({Violation::Rule::OrientedSOrbital, orb_loc});
        if (orb.hybrid_components) {
          double norm = 0.0;
          for (const HybridComponent& h : *orb.hybrid_components)
            norm += h.weight * h.weight;
          if (std::abs(norm - 1.0) > 1e-9)
            out.push_back({Violation::Rule::BadHybridNorm, orb_loc});
        }
      }
    }
  }
  return out;
}

// ============================================================================
// Construction and counting
// ============================================================================

SubShell hund_fill(SubShellKind kind, int electrons) {
  const int capacity = subshell_capacity(kind);
  if (electrons < 0 || electrons > capacity)
    throw Error(Errc::unsupported_z, "subshell electron count out of range");
  const auto& order = labels_of_kind(kind);
  const int orbital_count = capacity / 2;
  SubShell sub;
  for (int i = 0; i < orbital_count; ++i) {
    int count = 0;
    if (electrons > orbital_count)
      count = 1 + (i < electrons - orbital_count ? 1 : 0);
    else if (i < electrons)
      count = 1;
    if (count == 0) continue;
    sub.orbitals.push_back({order[i], count, default_orientation(order[i]), std::nullopt});
  }
  return sub;
}

Shells fill_config(int electrons) {
  if (electrons < 0 || electrons > 86)
    throw Error(Errc::unsupported_z, "electron count outside 0..86");
  static constexpr struct { int n; SubShellKind kind; } kMadelung[] = {
      {1, SubShellKind::s}, {2, SubShellKind::s}, {2, SubShellKind::p},
      {3, SubShellKind::s}, {3, SubShellKind::p}, {4, SubShellKind::s},
      {3, SubShellKind::d}, {4, SubShellKind::p}, {5, SubShellKind::s},
      {4, SubShellKind::d}, {5, SubShellKind::p}, {6, SubShellKind::s},
      {4, SubShellKind::f}, {5, SubShellKind::d}, {6, SubShellKind::p},
  };

  std::map<int, Shell> by_n;
  int remaining = electrons;
  for (const auto& step : kMadelung) {
    if (remaining == 0) break;
    const int take = std::min(remaining, subshell_capacity(step.kind));
    remaining -= take;
    Shell& shell = by_n.try_emplace(step.n, Shell{step.n, {}, {}, {}, {}}).first->second;
    slot(shell, step.kind) = hund_fill(step.kind, take);
  }

  Shells out;
  for (auto& [n, shell] : by_n) out.push_back(std::move(shell));
  return out;
}

Shells ground_state_config(int z) {
  if (z < 1 || z > 36)
    throw Error(Errc::unsupported_z, "atomic number outside 1..36");
  return fill_config(z);
}

int total_electrons(const SubShell& subshell) {
  int sum = 0;
  for (const Orbital& orb : subshell.orbitals) sum += orb.electron_count;
  return sum;
}

int total_electrons(const Shells& shells) {
  int sum = 0;
  for (const Shell& shell : shells)
    for (const auto* sub : {&shell.s, &shell.p, &shell.d, &shell.f})
      if (*sub) sum += total_electrons(**sub);
  return sum;
}

std::string compact_config(const Shells& shells) {
  std::string out;
  for (const Shell& shell : shells) {
    bool any = false;
    for (int k = 0; k < kSubshellKinds; ++k) {
      const auto kind = static_cast<SubShellKind>(k);
      const auto& sub = slot(shell, kind);
      if (!sub) continue;
      any = true;
      if (!out.empty()) out += '.';
      out += std::to_string(shell.n);
      out += kind_letter(kind);
      out += std::to_string(total_electrons(*sub));
    }
    if (!any) {
      if (!out.empty()) out += '.';
      out += std::to_string(shell.n);
      out += 'x';
    }
  }
  return out;
}

int net_charge(const Molecule& molecule) {
  int charge = 0;
  for (const Atom& atom : molecule.atoms)
    charge += atom.attributes.atomic_number - total_electrons(atom.shells);
  for (const BondingSystem& system : molecule.systems)
    charge -= system.electrons;
  return charge;
}

}  // namespace moltype
