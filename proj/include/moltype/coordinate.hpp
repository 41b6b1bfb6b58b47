#ifndef MOLTYPE_COORDINATE_HPP
#define MOLTYPE_COORDINATE_HPP

#include <cmath>

namespace moltype {

// Position or direction in Cartesian 3-space (angstroms for atom positions).
struct Coordinate {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const Coordinate&) const = default;
};

inline bool is_finite(const Coordinate& c) {
  return std::isfinite(c.x) && std::isfinite(c.y) && std::isfinite(c.z);
}

}  // namespace moltype

#endif
