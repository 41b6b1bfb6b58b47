#include "moltype/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "moltype/errors.hpp"

namespace moltype {

namespace {

constexpr double kBranchEps = 1e-12;

Coordinate sub(const Coordinate& a, const Coordinate& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

double dot(const Coordinate& a, const Coordinate& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

Coordinate cross(const Coordinate& a, const Coordinate& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const Coordinate& a) { return std::sqrt(dot(a, a)); }

double directed_hausdorff(const Molecule& from, const Molecule& to) {
  double worst = 0.0;
  for (const Atom& a : from.atoms) {
    double best = std::numeric_limits<double>::infinity();
    for (const Atom& b : to.atoms)
      best = std::min(best, euclidean_distance(a.coordinate, b.coordinate));
    worst = std::max(worst, best);
  }
  return worst;
}

struct Quaternion {
  double w, x, y, z;
};

Quaternion to_quaternion(const RigidRotation& r) {
  const double half = 0.5 * r.angle;
  const double s = std::sin(half);
  return {std::cos(half), s * r.axis.x, s * r.axis.y, s * r.axis.z};
}

Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

RigidRotation from_quaternion(Quaternion q) {
  double s = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  double w = q.w;
  if (w < 0.0) {  // keep the short representative
    w = -w;
    q.x = -q.x;
    q.y = -q.y;
    q.z = -q.z;
  }
  if (s < kBranchEps) return rot_identity();
  const double angle = 2.0 * std::atan2(s, w);
  return RigidRotation{{q.x / s, q.y / s, q.z / s}, angle};
}

}  // namespace

// ============================================================================
// Distances and internal coordinates
// ============================================================================

double euclidean_distance(const Coordinate& a, const Coordinate& b) {
  const Coordinate d = sub(a, b);
  return norm(d);
}

double hausdorff_distance(const Molecule& a, const Molecule& b) {
  if (a.atoms.empty() || b.atoms.empty())
    throw Error(Errc::empty_molecule, "hausdorff distance needs non-empty molecules");
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double bond_length(const Molecule& molecule, AtomId i, AtomId j) {
  return euclidean_distance(atom_by_id(molecule, i).coordinate,
                            atom_by_id(molecule, j).coordinate);
}

double bond_angle(const Molecule& molecule, AtomId i, AtomId j, AtomId k) {
  const Coordinate u = sub(atom_by_id(molecule, i).coordinate,
                           atom_by_id(molecule, j).coordinate);
  const Coordinate w = sub(atom_by_id(molecule, k).coordinate,
                           atom_by_id(molecule, j).coordinate);
  const double nu = norm(u);
  const double nw = norm(w);
  if (nu == 0.0 || nw == 0.0)
    throw Error(Errc::degenerate_geometry, "zero-length arm in bond angle");
  const double c = std::clamp(dot(u, w) / (nu * nw), -1.0, 1.0);
  return std::acos(c);
}

double dihedral_angle(const Molecule& molecule, AtomId i, AtomId j, AtomId k, AtomId l) {
  const Coordinate pi = atom_by_id(molecule, i).coordinate;
  const Coordinate pj = atom_by_id(molecule, j).coordinate;
  const Coordinate pk = atom_by_id(molecule, k).coordinate;
  const Coordinate pl = atom_by_id(molecule, l).coordinate;
  const Coordinate b1 = sub(pj, pi);
  const Coordinate b2 = sub(pk, pj);
  const Coordinate b3 = sub(pl, pk);
  const Coordinate n1 = cross(b1, b2);
  const Coordinate n2 = cross(b2, b3);
  if (norm(n1) < kBranchEps || norm(n2) < kBranchEps)
    throw Error(Errc::degenerate_geometry, "collinear atoms in dihedral");
  return std::atan2(norm(b2) * dot(b1, n2), dot(n1, n2));
}

// ============================================================================
// Rigid rotations
// ============================================================================

RigidRotation rot_identity() { return RigidRotation{{0.0, 0.0, 0.0}, 0.0}; }

RigidRotation make_rotation(const Coordinate& axis, double angle) {
  if (!is_finite(axis) || !std::isfinite(angle))
    throw Error(Errc::bad_axis, "non-finite rotation");
  const double n = norm(axis);
  if (n < kBranchEps) {
    if (angle != 0.0)
      throw Error(Errc::bad_axis, "zero axis with non-zero angle");
    return rot_identity();
  }
  return RigidRotation{{axis.x / n, axis.y / n, axis.z / n}, angle};
}

RigidRotation rot_mul(const RigidRotation& a, const RigidRotation& b) {
  return from_quaternion(mul(to_quaternion(a), to_quaternion(b)));
}

RigidRotation rot_inv(const RigidRotation& r) {
  return RigidRotation{r.axis, -r.angle};
}

Coordinate rotate_point(const RigidRotation& r, const Coordinate& point) {
  const Coordinate& k = r.axis;
  if (norm(k) < kBranchEps) return point;
  const double c = std::cos(r.angle);
  const double s = std::sin(r.angle);
  const Coordinate kxv = cross(k, point);
  const double kv = dot(k, point);
  return {point.x * c + kxv.x * s + k.x * kv * (1.0 - c),
          point.y * c + kxv.y * s + k.y * kv * (1.0 - c),
          point.z * c + kxv.z * s + k.z * kv * (1.0 - c)};
}

Molecule apply_rotation(const Molecule& molecule, const RigidRotation& r) {
  Molecule out = molecule;
  for (Atom& atom : out.atoms) atom.coordinate = rotate_point(r, atom.coordinate);
  return out;
}

}  // namespace moltype
