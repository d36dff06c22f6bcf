#ifndef EQUIPROJ_FAMILIES_HPP
#define EQUIPROJ_FAMILIES_HPP

#include <vector>

#include "equiproj/polytope.hpp"

namespace equiproj {

// Standard test and demo solids with exact rational coordinates.

/// m points in convex position on the unit circle of the xy-plane, spread
/// roughly evenly through the rational parametrization of the circle.
std::vector<Vec3> circle_polygon(int m);

/// Prism over circle_polygon(m) with height 1 along z.
Polytope3 prism(int m);

/// Pyramid over circle_polygon(m) with apex (0, 0, 1).
Polytope3 pyramid(int m);

/// conv{(1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1)}.
Polytope3 regular_tetrahedron();

/// [0,1]^3.
Polytope3 unit_cube();

/// Pyritohedron: (+-1,+-1,+-1) plus the cyclic permutations of
/// (0, +-(1 + h), +-(1 - h^2)). A dodecahedron with planar pentagonal faces
/// for every 0 < h < 1; h = 1/phi gives the regular one.
Polytope3 pyritohedron(const Rat& h);

}  // namespace equiproj

#endif  // EQUIPROJ_FAMILIES_HPP
