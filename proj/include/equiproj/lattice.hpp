#ifndef EQUIPROJ_LATTICE_HPP
#define EQUIPROJ_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "equiproj/polytope.hpp"

namespace equiproj {

inline constexpr std::size_t kDefaultIsomorphismBudget = 20'000'000;

/// True iff the face lattices of p and q are isomorphic.
///
/// Polytopes of dimension < 3 are compared by dimension and vertex count. For
/// 3-polytopes the boundary map (vertices, edges and facet cycles) is encoded
/// by a breadth-first traversal started at an oriented flag; p is encoded once
/// and every flag of q, in both orientations, is tried against it. Throws
/// ResourceLimit once more than `node_budget` traversal steps were spent.
bool face_lattice_isomorphic(const Polytope3& p, const Polytope3& q,
                             std::size_t node_budget = kDefaultIsomorphismBudget);

/// Lexicographically smallest traversal code over all flags of a 3-polytope.
/// Equal codes mean isomorphic face lattices. Cost is quadratic in the edge
/// count.
std::vector<std::uint32_t> canonical_code(const Polytope3& p);

}  // namespace equiproj

#endif  // EQUIPROJ_LATTICE_HPP
