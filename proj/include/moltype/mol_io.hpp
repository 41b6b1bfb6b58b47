#ifndef MOLTYPE_MOL_IO_HPP
#define MOLTYPE_MOL_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "moltype/mol_core.hpp"
#include "moltype/reactions.hpp"

namespace moltype {

// ============================================================================
// Canonical text format
// ============================================================================
//
//   MOLECULE v1
//   ATOM <id> <symbol> <Z> <weight> <x> <y> <z>
//   SHELLS <id> <compact-config> [<subshell-override> ...]   (optional)
//   SYSTEM <electrons> <i-j> [<i-j> ...]
//   END
//
// Atoms ascend by id, a SHELLS line follows its atom, systems are sorted by
// (electrons, edge list). Floats use shortest round-trip decimals; output is
// UTF-8 with LF endings. Serializing the same molecule twice is
// byte-identical, and parse(serialize(m)) == m.

std::string serialize_molecule(const Molecule& molecule);

// Strict: tolerates surrounding whitespace, nothing else. Throws ParseError
// (with line and column) on grammar violations and Error on semantic ones.
Molecule parse_molecule(std::string_view text);

// Shortest decimal rendering that parses back to the identical double.
std::string format_double(double value);

// ============================================================================
// Reactions
// ============================================================================
//
//   REACTION v1
//   RATE <r>
//   COND TEMP <kelvin> | COND PRES <atm>                     (repeatable)
//   WINDOW <start> <end>                                     (optional)
//   REACTANT <coefficient> followed by a molecule block
//   PRODUCT <coefficient> followed by a molecule block
//   END REACTION

std::string serialize_reaction(const Reaction& reaction);
Reaction parse_reaction(std::string_view text);

// ============================================================================
// SDF / molfile V2000
// ============================================================================

struct SdfRecordError {
  int record = 0;  // 1-based position in the file
  std::string message;

  bool operator==(const SdfRecordError&) const = default;
};

struct SdfParse {
  std::vector<Molecule> molecules;
  std::vector<SdfRecordError> errors;  // records that failed, independently
  std::vector<std::string> warnings;
};

// Reads every record of an SDF (or a bare molfile). Bond types 1/2/3 become
// localized systems of 2/4/6 electrons. Type 4 edges each contribute a
// 2-electron sigma system, and every connected component of type-4 edges
// becomes one delocalized system carrying as many electrons as it has atoms
// (flagged when the component is not a six-membered ring). Shells hold core
// plus unshared electrons inferred from the explicit bonds.
SdfParse parse_sdf(std::string_view text);

// Inverse where representable: localized 2/4/6-electron systems map to bond
// types 1/2/3; a delocalized system whose electron count equals its atom
// count and whose edges all carry a parallel sigma system maps back to type
// 4 edges. Anything else throws ConversionUnsupported. Coordinates are
// truncated to molfile's fixed 4-decimal columns.
std::string write_sdf(const std::vector<Molecule>& molecules);

// ============================================================================
// Ring construction
// ============================================================================

// Consecutive-edge sigma systems around the cycle, plus one delocalized
// pi system over all ring edges when pi_electrons > 0.
std::vector<BondingSystem> ring_systems(const std::vector<AtomId>& ids,
                                        int sigma_electrons = 2,
                                        int pi_electrons = 0);

}  // namespace moltype

#endif
