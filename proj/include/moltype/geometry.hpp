#ifndef MOLTYPE_GEOMETRY_HPP
#define MOLTYPE_GEOMETRY_HPP

#include "moltype/mol_core.hpp"

namespace moltype {

// ============================================================================
// Distances and internal coordinates
// ============================================================================

double euclidean_distance(const Coordinate& a, const Coordinate& b);

// Symmetric Hausdorff distance between the two atom point sets. Throws
// EmptyMolecule when either side has no atoms.
double hausdorff_distance(const Molecule& a, const Molecule& b);

double bond_length(const Molecule& molecule, AtomId i, AtomId j);

// Angle at j in radians, [0, pi]. Throws DegenerateGeometry when either arm
// has zero length.
double bond_angle(const Molecule& molecule, AtomId i, AtomId j, AtomId k);

// Signed torsion i-j-k-l in radians, (-pi, pi], right-handed about j->k.
double dihedral_angle(const Molecule& molecule, AtomId i, AtomId j, AtomId k, AtomId l);

// ============================================================================
// Rigid rotations (axis-angle about the origin)
// ============================================================================

struct RigidRotation {
  Coordinate axis{0.0, 0.0, 0.0};  // unit vector; zero only for the identity
  double angle = 0.0;              // radians

  bool operator==(const RigidRotation&) const = default;
};

RigidRotation rot_identity();

// Normalizes the axis; a zero axis is only accepted together with angle 0.
RigidRotation make_rotation(const Coordinate& axis, double angle);

// Group operations: composition applies b first, then a.
RigidRotation rot_mul(const RigidRotation& a, const RigidRotation& b);
RigidRotation rot_inv(const RigidRotation& r);

Coordinate rotate_point(const RigidRotation& r, const Coordinate& point);

// Rotates every atom coordinate about the origin; constitution and shells
// are untouched.
Molecule apply_rotation(const Molecule& molecule, const RigidRotation& r);

}  // namespace moltype

#endif
