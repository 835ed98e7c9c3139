#pragma once

#include <ostream>

#include "crown.hpp"

namespace hcrown {

inline constexpr int kRoundTripDigits = 17;

/// One vertex per line, header absV,absZ,t, row-major in the (|Z|, t) grid.
inline void write_mesh_csv(std::ostream& os, const BoundaryMesh& mesh) {
  os.precision(kRoundTripDigits);
  os << "absV,absZ,t\n";
  for (const auto& v : mesh.vertices) os << v[0] << ',' << v[1] << ',' << v[2] << '\n';
}

/// Wavefront OBJ with x = |V|, y = |Z|, z = t.
inline void write_mesh_obj(std::ostream& os, const BoundaryMesh& mesh) {
  os.precision(kRoundTripDigits);
  os << "# boundary surface, " << mesh.resolution << "x" << mesh.resolution << " grid\n";
  for (const auto& v : mesh.vertices) os << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const auto& f : mesh.faces) os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

}  // namespace hcrown
