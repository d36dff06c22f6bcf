#ifndef EQUIPROJ_CONES_HPP
#define EQUIPROJ_CONES_HPP

#include <vector>

#include "equiproj/polytope.hpp"

namespace equiproj {

/// Projective direction of an edge: primitive integer vector whose first
/// nonzero coordinate is positive.
class EdgeDirection {
public:
    /// Canonicalizes any nonzero vector; throws PreconditionError on zero.
    static EdgeDirection of(const Vec3& v);

    const Vec3& dir() const { return dir_; }

    friend bool operator==(const EdgeDirection& a, const EdgeDirection& b) { return a.dir_ == b.dir_; }
    friend bool operator<(const EdgeDirection& a, const EdgeDirection& b) { return a.dir_ < b.dir_; }

private:
    explicit EdgeDirection(Vec3 d) : dir_(std::move(d)) {}
    Vec3 dir_;
};

/// Closed circular arc in the plane orthogonal to an edge direction u, from
/// `start` counterclockwise to `end`. Rays are primitive integer vectors and
/// counterclockwise refers to the basis returned by plane_basis(u).
struct Arc {
    Vec3 start;
    Vec3 end;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// C_P(u): union of the two-dimensional normal cones of P inside u-perp,
/// stored as its maximal arcs sorted by start angle.
struct AggregatedCone {
    EdgeDirection direction;
    bool full_plane = false;
    std::vector<Arc> arcs;

    /// Maximal arcs of the closure of the complement (empty when full).
    std::vector<Arc> complement() const;
    /// The cone -C.
    AggregatedCone negated() const;

    friend bool operator==(const AggregatedCone& a, const AggregatedCone& b) {
        return a.direction == b.direction && a.full_plane == b.full_plane && a.arcs == b.arcs;
    }
};

enum class Multiplicity : int { One = 1, Two = 2 };

/// One canonical direction per parallel class of edges, sorted.
std::vector<EdgeDirection> edge_directions(const Polytope3& p);

bool has_edge_direction(const Polytope3& p, const EdgeDirection& u);

/// Throws PreconditionError if u is not an edge direction of p.
AggregatedCone aggregated_cone(const Polytope3& p, const EdgeDirection& u);

/// Builds the cone spanned by a union of closed arcs in u-perp, merging arcs
/// that overlap or share a boundary ray.
AggregatedCone cone_from_arcs(const EdgeDirection& u, const std::vector<Arc>& pieces);

/// Union of two aggregated cones at the same direction.
AggregatedCone unite(const AggregatedCone& a, const AggregatedCone& b);

/// inner is a subset of outer (same direction).
bool contains(const AggregatedCone& outer, const AggregatedCone& inner);

/// C and the relative interior of -C partition u-perp. Always false for the
/// full plane.
bool cone_is_partition_with_opposite(const AggregatedCone& c);

/// Angular measure bookkeeping: arcs of C and of its complement, glued in
/// circular order, close up into one full turn with no overlap.
bool arcs_close_full_turn(const AggregatedCone& c);

Multiplicity multiplicity(const Polytope3& p, const EdgeDirection& u);

/// Sum of multiplicities over all edge directions.
int kappa(const Polytope3& p);

/// (w . b1, w . b2) for the plane_basis (b1, b2) of u. A positive rescaling
/// of each axis, so rays keep their circular order.
std::pair<Rat, Rat> plane_coordinates(const EdgeDirection& u, const Vec3& w);

}  // namespace equiproj

#endif  // EQUIPROJ_CONES_HPP
